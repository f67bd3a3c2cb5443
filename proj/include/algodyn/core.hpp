#pragma once

#include "algodyn/action.hpp"
#include "algodyn/array_ops.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace algodyn {

/// Why a step was refused. Kept distinct so a front end can grey out a
/// guarded action but reject a malformed one.
enum class StepError { guard_failed, malformed_action };

inline std::string_view to_string(StepError e) {
    return e == StepError::guard_failed ? "guard_failed" : "malformed_action";
}

/// Visited-state count passed a configured cap.
class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A machine offered more than one action where a single `next` was expected.
class not_automated : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Deterministic transition system over state type `S`.
///
/// `actions_of` lists the syntactically well-formed actions at a state (the
/// index bounds of each action kind). `step_fn` is only consulted for those
/// actions and returns nothing when the guard is false. Observations are
/// always the array component, so the view map is fixed to `SortArray`.
template <class S>
struct Machine {
    std::string id;
    std::function<S(const SortArray&)> initial_of;
    std::function<std::vector<Action>(const S&)> actions_of;
    std::function<std::optional<S>(const S&, const Action&)> step_fn;
    std::function<SortArray(const S&)> view_of;
    bool input_enabled = false;
};

template <class S>
class StepOutcome {
public:
    StepOutcome(S s) : value_(std::move(s)) {}
    StepOutcome(StepError e) : value_(e) {}

    [[nodiscard]] bool ok() const { return value_.index() == 0; }
    explicit operator bool() const { return ok(); }
    [[nodiscard]] const S& state() const { return std::get<0>(value_); }
    [[nodiscard]] StepError error() const { return std::get<1>(value_); }

private:
    std::variant<S, StepError> value_;
};

template <class S>
bool well_formed(const Machine<S>& m, const S& s, const Action& a) {
    auto acts = m.actions_of(s);
    return std::find(acts.begin(), acts.end(), a) != acts.end();
}

template <class S>
StepOutcome<S> step(const Machine<S>& m, const S& s, const Action& a) {
    if (!well_formed(m, s, a))
        return StepError::malformed_action;
    if (auto next = m.step_fn(s, a))
        return std::move(*next);
    return StepError::guard_failed;
}

/// Well-formed actions whose guard holds at `s`.
template <class S>
std::vector<Action> enabled(const Machine<S>& m, const S& s) {
    std::vector<Action> out;
    for (auto& a : m.actions_of(s))
        if (m.step_fn(s, a))
            out.push_back(a);
    return out;
}

template <class S>
bool is_terminal(const Machine<S>& m, const S& s) {
    for (auto& a : m.actions_of(s))
        if (m.step_fn(s, a))
            return false;
    return true;
}

template <class S>
struct RunStep {
    Action action;
    S state;
    bool operator==(const RunStep&) const = default;
};

/// Initial state plus linked (action, resulting state) steps.
template <class S>
struct Run {
    std::string machine_id;
    S initial;
    std::vector<RunStep<S>> steps;

    [[nodiscard]] const S& last() const { return steps.empty() ? initial : steps.back().state; }

    [[nodiscard]] std::vector<S> trajectory() const {
        std::vector<S> xs;
        xs.reserve(steps.size() + 1);
        xs.push_back(initial);
        for (auto& st : steps)
            xs.push_back(st.state);
        return xs;
    }

    [[nodiscard]] std::vector<Action> actions() const {
        std::vector<Action> as;
        as.reserve(steps.size());
        for (auto& st : steps)
            as.push_back(st.action);
        return as;
    }
};

using Trace = std::vector<SortArray>;

struct RunFailure {
    std::size_t step_index;
    StepError error;
};

template <class S>
struct ApplyResult {
    Run<S> run;                        // prefix executed before any failure
    std::optional<RunFailure> failure;

    [[nodiscard]] bool ok() const { return !failure; }
};

/// Execute `actions` from `s0`; stops at the first refused step.
template <class S>
ApplyResult<S> apply_run(const Machine<S>& m, S s0, const std::vector<Action>& actions) {
    ApplyResult<S> result{Run<S>{m.id, std::move(s0), {}}, std::nullopt};
    for (std::size_t k = 0; k < actions.size(); ++k) {
        auto out = step(m, result.run.last(), actions[k]);
        if (!out) {
            result.failure = RunFailure{k, out.error()};
            break;
        }
        result.run.steps.push_back({actions[k], out.state()});
    }
    return result;
}

template <class S>
Trace trace_of(const Run<S>& r, const Machine<S>& m) {
    Trace t;
    t.reserve(r.steps.size() + 1);
    t.push_back(m.view_of(r.initial));
    for (auto& st : r.steps)
        t.push_back(m.view_of(st.state));
    return t;
}

/// Drop consecutive repeated observations.
inline Trace collapse_stutter(const Trace& t) {
    Trace out;
    for (auto& v : t)
        if (out.empty() || out.back() != v)
            out.push_back(v);
    return out;
}

/// Extension in which every well-formed action is total: a failed guard
/// becomes a self-loop. The id gains a trailing `!`.
template <class S>
Machine<S> input_enabled(Machine<S> m) {
    if (m.input_enabled)
        return m;
    m.id += "!";
    m.input_enabled = true;
    m.step_fn = [base = std::move(m.step_fn)](const S& s, const Action& a) -> std::optional<S> {
        if (auto next = base(s, a))
            return next;
        return s;
    };
    return m;
}

/// Follow the unique enabled action until a terminal state. Throws
/// `not_automated` if a state offers a choice and `budget_exceeded` after
/// `max_steps` without termination.
template <class S>
Run<S> auto_run(const Machine<S>& m, S s0, std::size_t max_steps = 1'000'000) {
    Run<S> r{m.id, std::move(s0), {}};
    for (;;) {
        auto en = enabled(m, r.last());
        if (en.empty())
            return r;
        if (en.size() > 1)
            throw not_automated(m.id + " offers " + std::to_string(en.size()) + " actions");
        if (r.steps.size() == max_steps)
            throw budget_exceeded(m.id + " did not terminate within " + std::to_string(max_steps) + " steps");
        auto next = *m.step_fn(r.last(), en.front());
        r.steps.push_back({en.front(), std::move(next)});
    }
}

struct Transition {
    std::size_t from;
    Action action;
    std::size_t to;
};

template <class S>
struct Exploration {
    std::vector<S> states;             // discovery order; states[0] is the root
    std::vector<std::size_t> depth;    // BFS depth of each state
    std::vector<Transition> transitions;
    bool fixpoint = false;             // true iff nothing lies beyond the bound

    [[nodiscard]] bool truncated() const { return !fixpoint; }
};

/// Breadth-first reachability from `s0` along enabled actions, up to
/// `depth_bound` steps. `fixpoint` reports whether the frontier at the bound
/// still had undiscovered successors.
template <class S>
Exploration<S> explore(const Machine<S>& m, const S& s0, std::size_t depth_bound,
                       std::size_t max_states = 1'000'000) {
    Exploration<S> ex;
    std::map<S, std::size_t> index;
    auto discover = [&](const S& s, std::size_t d) -> std::pair<std::size_t, bool> {
        auto [it, fresh] = index.emplace(s, ex.states.size());
        if (fresh) {
            if (ex.states.size() == max_states)
                throw budget_exceeded("explore visited more than " + std::to_string(max_states) + " states");
            ex.states.push_back(s);
            ex.depth.push_back(d);
        }
        return {it->second, fresh};
    };

    discover(s0, 0);
    std::deque<std::size_t> queue{0};
    bool beyond_bound = false;
    while (!queue.empty()) {
        std::size_t at = queue.front();
        queue.pop_front();
        std::size_t d = ex.depth[at];
        S here = ex.states[at];
        for (auto& a : m.actions_of(here)) {
            auto next = m.step_fn(here, a);
            if (!next)
                continue;
            if (d == depth_bound) {
                if (auto known = index.find(*next); known != index.end())
                    ex.transitions.push_back({at, a, known->second});
                else
                    beyond_bound = true;
                continue;
            }
            auto [to, fresh] = discover(*next, d + 1);
            ex.transitions.push_back({at, a, to});
            if (fresh)
                queue.push_back(to);
        }
    }
    ex.fixpoint = !beyond_bound;
    return ex;
}

} // namespace algodyn
