#pragma once

#include "algodyn/machines.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace algodyn {

/// B5-like state: array, sweep index, boundary.
template <class S>
concept SweepState = requires(const S& s) {
    { s.array } -> std::convertible_to<SortArray>;
    { s.index } -> std::convertible_to<int>;
    { s.boundary } -> std::convertible_to<int>;
};

// ---------------------------------------------------------------------------
// Invariant
//
// Empty ranges: a segment with at most one element is sorted, and a
// quantification over an empty index set holds.

/// a_i is the maximum of a[0..i].
template <SweepState S>
bool inv1(const S& s) {
    const auto& a = s.array;
    if (a.empty())
        return true;
    if (s.index < 0 || static_cast<std::size_t>(s.index) >= a.size())
        return false;
    return *std::max_element(a.begin(), a.begin() + s.index + 1) == a[s.index];
}

/// a[b..n-1] is sorted.
template <SweepState S>
bool inv2(const S& s) {
    const auto& a = s.array;
    auto from = static_cast<std::size_t>(std::max(s.boundary, 0));
    if (from >= a.size())
        return true;
    return std::is_sorted(a.begin() + static_cast<std::ptrdiff_t>(from), a.end());
}

/// Every a[j], j < b, is at most every a[k], b <= k <= n-1.
template <SweepState S>
bool inv3(const S& s) {
    const auto& a = s.array;
    auto split = static_cast<std::size_t>(std::clamp(s.boundary, 0, static_cast<int>(a.size())));
    if (split == 0 || split == a.size())
        return true;
    int left_max = *std::max_element(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(split));
    int right_min = *std::min_element(a.begin() + static_cast<std::ptrdiff_t>(split), a.end());
    return left_max <= right_min;
}

template <SweepState S>
bool inv(const S& s) {
    return inv1(s) && inv2(s) && inv3(s);
}

/// Termination measure (b, b - i), compared lexicographically.
struct Measure {
    int boundary = 0;
    int remaining = 0;
    auto operator<=>(const Measure&) const = default;
};

template <SweepState S>
Measure measure_of(const S& s) {
    return {s.boundary, s.boundary - s.index};
}

inline std::string to_string(const Measure& m) {
    return "(" + std::to_string(m.boundary) + ", " + std::to_string(m.remaining) + ")";
}

// ---------------------------------------------------------------------------
// Reports

struct Counterexample {
    Run<AnyState> run;          // replayable witness
    std::size_t state_index = 0; // offending trajectory position
    std::string detail;
};

struct CheckReport {
    std::string property;
    std::string instance;
    std::size_t n = 0;
    std::vector<int> domain;
    std::size_t depth = 0;
    std::size_t cases = 0;
    bool pass = true;
    std::optional<Counterexample> counterexample;

    void fail(Run<AnyState> run, std::size_t at, std::string why) {
        if (!pass)
            return;
        pass = false;
        counterexample = Counterexample{std::move(run), at, std::move(why)};
    }
};

template <class S>
Run<AnyState> erase_run(const Run<S>& r) {
    Run<AnyState> out{r.machine_id, AnyState{r.initial}, {}};
    out.steps.reserve(r.steps.size());
    for (auto& st : r.steps)
        out.steps.push_back({st.action, AnyState{st.state}});
    return out;
}

inline Run<AnyState> erase_run(const Run<AnyState>& r) { return r; }

/// INV at every trajectory state, and every array a permutation of the first.
template <SweepState S>
CheckReport check_invariant(const Run<S>& run) {
    CheckReport rep;
    rep.property = "invariant";
    rep.instance = run.machine_id + " run from " + to_string(run.initial.array);
    rep.n = run.initial.array.size();
    auto xs = run.trajectory();
    for (std::size_t k = 0; k < xs.size(); ++k) {
        ++rep.cases;
        const auto& s = xs[k];
        if (!inv1(s))
            rep.fail(erase_run(run), k, "INV1 violated");
        else if (!inv2(s))
            rep.fail(erase_run(run), k, "INV2 violated");
        else if (!inv3(s))
            rep.fail(erase_run(run), k, "INV3 violated");
        else if (!is_permutation(s.array, run.initial.array))
            rep.fail(erase_run(run), k, "array is not a permutation of the initial array");
        if (!rep.pass)
            break;
    }
    return rep;
}

/// The measure strictly decreases on every step.
template <SweepState S>
CheckReport check_measure(const Run<S>& run) {
    CheckReport rep;
    rep.property = "measure";
    rep.instance = run.machine_id + " run from " + to_string(run.initial.array);
    rep.n = run.initial.array.size();
    auto xs = run.trajectory();
    for (std::size_t k = 1; k < xs.size(); ++k) {
        ++rep.cases;
        auto before = measure_of(xs[k - 1]);
        auto after = measure_of(xs[k]);
        if (after.boundary < 0 || after.remaining < 0) {
            rep.fail(erase_run(run), k, "measure " + to_string(after) + " leaves N x N");
            break;
        }
        if (!(after < before)) {
            rep.fail(erase_run(run), k, "measure " + to_string(before) + " -> " + to_string(after) + " does not decrease");
            break;
        }
    }
    return rep;
}

/// How often each `next` rule fired in a run: boundary resets (i = b-1) and
/// sweep increments (i < b-1).
struct ProofCases {
    std::size_t boundary_steps = 0;
    std::size_t sweep_steps = 0;
};

template <SweepState S>
ProofCases proof_cases(const Run<S>& run) {
    ProofCases pc;
    const S* prev = &run.initial;
    for (auto& st : run.steps) {
        if (prev->index == prev->boundary - 1)
            ++pc.boundary_steps;
        else
            ++pc.sweep_steps;
        prev = &st.state;
    }
    return pc;
}

/// Check a single B5 transition against the shape each proof case derives
/// for it. Returns a description of the first mismatch.
inline std::optional<std::string> check_transition_case(const B5State& pre, const B5State& post) {
    const auto& a = pre.array;
    const auto& b = post.array;
    int i = pre.index;
    if (i == pre.boundary - 1) {
        if (!(post == B5State{a, 0, pre.boundary - 1}))
            return "boundary case: expected (a, 0, b-1)";
        return std::nullopt;
    }
    if (i < pre.boundary - 1) {
        auto n = static_cast<int>(a.size());
        if (i + 1 >= n || post.index != i + 1 || post.boundary != pre.boundary)
            return "sweep case: expected (order(a, i, i+1), i+1, b)";
        if (b[i] != std::min(a[i], a[i + 1]) || b[i + 1] != std::max(a[i], a[i + 1]))
            return "sweep case: positions i, i+1 are not (min, max)";
        if (!std::equal(a.begin(), a.begin() + i, b.begin()))
            return "sweep case: prefix a[0..i-1] changed";
        if (!std::equal(a.begin() + i + 2, a.end(), b.begin() + i + 2))
            return "sweep case: suffix past i+1 changed";
        if (inv1(pre) && !(b[i + 1] == *std::max_element(b.begin(), b.begin() + i + 2)))
            return "sweep case: a'[i+1] is not max(a'[0..i+1])";
        return std::nullopt;
    }
    return "index beyond boundary";
}

// ---------------------------------------------------------------------------
// Refinement

struct Stutter {
    bool operator==(const Stutter&) const = default;
};

/// Image of a lower step in the upper machine: an action, or no move.
using Refined = std::variant<Action, Stutter>;

class unmapped_action : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Translates each step of a lower machine into an upper-machine action.
/// Looks only at the step itself (pre-state, action, post-state).
struct RefinementMap {
    std::string lower_id;
    std::string upper_id;
    std::function<Refined(const AnyState& pre, const Action& a, const AnyState& post)> translate;
};

inline Refined refine_step(const RefinementMap& map, const AnyState& pre, const Action& a, const AnyState& post) {
    return map.translate(pre, a, post);
}

namespace detail {

[[noreturn]] inline void unmapped(const RefinementMap& m, const Action& a) {
    throw unmapped_action(m.lower_id + " -> " + m.upper_id + ": no rule for " + to_string(a));
}

template <class S>
const S& state_as(const AnyState& s, const RefinementMap& m, const Action& a) {
    auto* x = std::get_if<S>(&s);
    if (!x)
        unmapped(m, a);
    return *x;
}

template <class S>
RefinementMap next_to_bubble(std::string lower) {
    RefinementMap m{std::move(lower), "B4", {}};
    m.translate = [m](const AnyState& pre, const Action& a, const AnyState&) -> Refined {
        if (!std::holds_alternative<act::Next>(a))
            unmapped(m, a);
        const auto& s = state_as<S>(pre, m, a);
        if (s.index < s.boundary - 1)
            return Action{act::Inc{}};
        if (s.index == s.boundary - 1)
            return Action{act::Reset{}};
        unmapped(m, a);
    };
    return m;
}

} // namespace detail

/// The refinement maps of the inclusion chain, keyed by machine id.
/// Supported pairs: B5->B4, B5D->B4, B4->B3!, B3->B2!, B3!->B2!, B2->B1!, B2!->B1!.
inline RefinementMap refinement_map(std::string_view lower, std::string_view upper) {
    if (lower == "B5" && upper == "B4")
        return detail::next_to_bubble<B5State>("B5");
    if (lower == "B5D" && upper == "B4")
        return detail::next_to_bubble<B5DState>("B5D");
    if (lower == "B4" && upper == "B3!") {
        RefinementMap m{"B4", "B3!", {}};
        m.translate = [m](const AnyState& pre, const Action& a, const AnyState&) -> Refined {
            const auto& s = detail::state_as<B4State>(pre, m, a);
            if (std::holds_alternative<act::Reset>(a))
                return Stutter{};
            if (std::holds_alternative<act::Inc>(a) && s.index >= 0 &&
                s.index + 1 < static_cast<int>(s.array.size()))
                return Action{act::Adj{s.index}};
            detail::unmapped(m, a);
        };
        return m;
    }
    if ((lower == "B3" || lower == "B3!") && upper == "B2!") {
        RefinementMap m{std::string(lower), "B2!", {}};
        m.translate = [m](const AnyState&, const Action& a, const AnyState&) -> Refined {
            if (auto* adj = std::get_if<act::Adj>(&a))
                return Action{act::Order{adj->i, adj->i + 1}};
            detail::unmapped(m, a);
        };
        return m;
    }
    if ((lower == "B2" || lower == "B2!") && upper == "B1!") {
        RefinementMap m{std::string(lower), "B1!", {}};
        m.translate = [m, b2 = machine_b2()](const AnyState& pre, const Action& a, const AnyState&) -> Refined {
            auto* o = std::get_if<act::Order>(&a);
            if (!o)
                detail::unmapped(m, a);
            const auto& s = detail::state_as<ArrayState>(pre, m, a);
            // A refused order in B2! is a self-loop; B1 would still swap.
            if (!b2.step_fn(s, a))
                return Stutter{};
            return Action{act::Swap{o->i, o->j}};
        };
        return m;
    }
    throw unmapped_action("no refinement map from " + std::string(lower) + " to " + std::string(upper));
}

/// Upper-machine state corresponding to a lower state: same array, and the
/// same sweep index when both machines carry one.
inline AnyState project(const AnyState& lower, const Machine<AnyState>& upper) {
    AnyState s = upper.initial_of(array_of(lower));
    if (auto* b4 = std::get_if<B4State>(&s)) {
        std::visit(
            [&](const auto& x) {
                if constexpr (requires { x.index; })
                    b4->index = x.index;
            },
            lower);
    }
    return s;
}

/// Replay the translated actions of `lower` in `upper` and compare the
/// stutter-collapsed view sequences.
inline CheckReport check_inclusion(const Run<AnyState>& lower, const RefinementMap& map,
                                   const Machine<AnyState>& upper) {
    CheckReport rep;
    rep.property = "inclusion " + map.lower_id + " <= " + map.upper_id;
    rep.instance = lower.machine_id + " run from " + to_string(array_of(lower.initial)) + ", " +
                   std::to_string(lower.steps.size()) + " steps";
    rep.n = array_of(lower.initial).size();
    rep.cases = 1;

    Trace lower_views{array_of(lower.initial)};
    AnyState cur = project(lower.initial, upper);
    Trace upper_views{upper.view_of(cur)};
    const AnyState* prev = &lower.initial;
    for (std::size_t k = 0; k < lower.steps.size(); ++k) {
        const auto& st = lower.steps[k];
        Refined r = refine_step(map, *prev, st.action, st.state);
        if (auto* a = std::get_if<Action>(&r)) {
            auto out = step(upper, cur, *a);
            if (!out) {
                rep.fail(lower, k + 1,
                         upper.id + " refused " + to_string(*a) + " (" + std::string(to_string(out.error())) + ")");
                return rep;
            }
            cur = out.state();
        }
        lower_views.push_back(array_of(st.state));
        upper_views.push_back(upper.view_of(cur));
        prev = &st.state;
    }

    auto lo = collapse_stutter(lower_views);
    auto up = collapse_stutter(upper_views);
    if (lo != up) {
        std::size_t k = 0;
        while (k < lo.size() && k < up.size() && lo[k] == up[k])
            ++k;
        rep.fail(lower, k, "stutter-free traces diverge at observation " + std::to_string(k));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Corpora

/// Every array of length n over `domain`, in lexicographic order of positions.
inline std::vector<SortArray> all_arrays(std::size_t n, const std::vector<int>& domain) {
    std::vector<SortArray> out;
    if (domain.empty())
        return n == 0 ? std::vector<SortArray>{SortArray{}} : out;
    std::vector<std::size_t> digit(n, 0);
    for (;;) {
        SortArray a(n);
        for (std::size_t k = 0; k < n; ++k)
            a[k] = domain[digit[k]];
        out.push_back(std::move(a));
        std::size_t k = n;
        while (k > 0 && ++digit[k - 1] == domain.size())
            digit[--k] = 0;
        if (k == 0)
            return out;
    }
}

/// All n! orderings of [1..n].
inline std::vector<SortArray> all_permutations(std::size_t n) {
    SortArray a(n);
    for (std::size_t k = 0; k < n; ++k)
        a[k] = static_cast<int>(k) + 1;
    std::vector<SortArray> out;
    do
        out.push_back(a);
    while (std::next_permutation(a.begin(), a.end()));
    return out;
}

/// Steps B5 takes from (a, 0, n): n(n+1)/2 - 1, and 0 for n = 0.
inline std::size_t b5_run_length(std::size_t n) {
    return n == 0 ? 0 : n * (n + 1) / 2 - 1;
}

// ---------------------------------------------------------------------------
// Exhaustive driver

struct ExhaustiveOptions {
    std::size_t depth = 8;               // bound on interactive run length
    std::size_t budget = 50'000'000;     // cap on visited states
    std::string instance;                // description for the report
    std::size_t n = 0;
    std::vector<int> domain;
};

inline const std::vector<std::string>& property_names() {
    static const std::vector<std::string> names{
        "invariant", "measure", "b2-terminal-sorted", "b5-sorts", "b5d-sorts", "inclusion-chain", "b2-confluent",
    };
    return names;
}

class unknown_property : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

class Budget {
public:
    explicit Budget(std::size_t cap) : cap_(cap) {}
    void spend(std::size_t units = 1) {
        used_ += units;
        if (used_ > cap_)
            throw budget_exceeded("visited more than " + std::to_string(cap_) + " states");
    }
    [[nodiscard]] std::size_t used() const { return used_; }

private:
    std::size_t cap_;
    std::size_t used_ = 0;
};

/// Depth-first enumeration of every run of `m` from `s0`. A run is reported
/// when it reaches a terminal state or `depth` steps. Returning false from
/// `visit` stops the walk.
template <class S, class Visit>
bool for_each_run(const Machine<S>& m, Run<S>& path, std::size_t depth, Budget& budget, Visit&& visit) {
    auto en = enabled(m, path.last());
    bool at_bound = path.steps.size() == depth;
    if (en.empty() || at_bound)
        return visit(path, !en.empty());
    for (auto& a : en) {
        budget.spend();
        path.steps.push_back({a, *m.step_fn(path.last(), a)});
        bool go_on = for_each_run(m, path, depth, budget, visit);
        path.steps.pop_back();
        if (!go_on)
            return false;
    }
    return true;
}

inline void prop_b5_sorts(CheckReport& rep, const std::vector<SortArray>& corpus, Budget& budget) {
    auto m = machine_b5();
    for (auto& a : corpus) {
        auto run = auto_run(m, m.initial_of(a));
        budget.spend(run.steps.size() + 1);
        ++rep.cases;
        const auto& last = run.last().array;
        if (!sortedness(last))
            rep.fail(erase_run(run), run.steps.size(), "terminal array is not sorted");
        else if (!is_permutation(last, a))
            rep.fail(erase_run(run), run.steps.size(), "terminal array is not a permutation of the input");
        else if (run.steps.size() != b5_run_length(a.size()))
            rep.fail(erase_run(run), run.steps.size(),
                     "took " + std::to_string(run.steps.size()) + " steps, expected " +
                         std::to_string(b5_run_length(a.size())));
        if (!rep.pass)
            return;
    }
}

inline void prop_b5d_sorts(CheckReport& rep, const std::vector<SortArray>& corpus, Budget& budget) {
    auto m5 = machine_b5();
    auto md = machine_b5d();
    for (auto& a : corpus) {
        auto run = auto_run(md, md.initial_of(a));
        auto base = auto_run(m5, m5.initial_of(a));
        budget.spend(run.steps.size() + base.steps.size() + 2);
        ++rep.cases;
        const auto& last = run.last().array;
        auto k = run.steps.size();
        if (!sortedness(last) || !is_permutation(last, a))
            rep.fail(erase_run(run), k, "terminal array is not the sorted input");
        else if (k > base.steps.size())
            rep.fail(erase_run(run), k, "early-exit run is longer than B5's");
        else if (a.size() >= 2 && sortedness(a) && k != a.size())
            rep.fail(erase_run(run), k, "sorted input took " + std::to_string(k) + " steps, expected n");
        if (!rep.pass)
            return;
    }
}

inline void prop_invariant(CheckReport& rep, const std::vector<SortArray>& corpus, Budget& budget) {
    auto m5 = machine_b5();
    auto md = machine_b5d();
    for (auto& a : corpus) {
        auto run = auto_run(m5, m5.initial_of(a));
        budget.spend(run.steps.size() + 1);
        rep.cases += run.steps.size() + 1;
        auto r = check_invariant(run);
        if (!r.pass) {
            rep.fail(r.counterexample->run, r.counterexample->state_index, r.counterexample->detail);
            return;
        }
        const B5State* prev = &run.initial;
        for (std::size_t k = 0; k < run.steps.size(); ++k) {
            if (auto why = check_transition_case(*prev, run.steps[k].state)) {
                rep.fail(erase_run(run), k + 1, *why);
                return;
            }
            prev = &run.steps[k].state;
        }
        auto pc = proof_cases(run);
        if (a.size() >= 2 && (pc.boundary_steps == 0 || pc.sweep_steps == 0)) {
            rep.fail(erase_run(run), 0, "a proof case was not exercised");
            return;
        }
        auto drun = auto_run(md, md.initial_of(a));
        budget.spend(drun.steps.size() + 1);
        auto rd = check_invariant(drun);
        if (!rd.pass) {
            rep.fail(rd.counterexample->run, rd.counterexample->state_index, rd.counterexample->detail);
            return;
        }
    }
}

inline void prop_measure(CheckReport& rep, const std::vector<SortArray>& corpus, Budget& budget) {
    auto m5 = machine_b5();
    auto md = machine_b5d();
    for (auto& a : corpus) {
        auto run = auto_run(m5, m5.initial_of(a));
        auto drun = auto_run(md, md.initial_of(a));
        budget.spend(run.steps.size() + drun.steps.size() + 2);
        rep.cases += run.steps.size() + drun.steps.size();
        auto r5 = check_measure(run);
        auto rd = check_measure(drun);
        for (auto* r : {&r5, &rd}) {
            if (!r->pass) {
                rep.fail(r->counterexample->run, r->counterexample->state_index, r->counterexample->detail);
                return;
            }
        }
        if (drun.steps.size() > b5_run_length(a.size())) {
            rep.fail(erase_run(drun), drun.steps.size(), "run exceeds n(n+1)/2 - 1 steps");
            return;
        }
    }
}

/// Shared walk for b2-terminal-sorted and b2-confluent.
inline void prop_b2(CheckReport& rep, const std::vector<SortArray>& corpus, std::size_t depth, Budget& budget,
                    bool confluence) {
    auto m = machine_b2();
    for (auto& a : corpus) {
        SortArray expected = a;
        std::sort(expected.begin(), expected.end());
        std::optional<SortArray> first_outcome;
        Run<ArrayState> path{m.id, m.initial_of(a), {}};
        for_each_run(m, path, depth, budget, [&](const Run<ArrayState>& r, bool truncated) {
            ++rep.cases;
            if (truncated) {
                rep.fail(erase_run(r), r.steps.size(), "run still enabled at depth bound");
                return false;
            }
            auto xs = r.trajectory();
            for (std::size_t k = 1; k < xs.size(); ++k) {
                if (inversions(xs[k].array) >= inversions(xs[k - 1].array)) {
                    rep.fail(erase_run(r), k, "step does not decrease inversions");
                    return false;
                }
            }
            const auto& last = r.last().array;
            if (confluence) {
                if (!first_outcome)
                    first_outcome = last;
                if (last != *first_outcome) {
                    rep.fail(erase_run(r), r.steps.size(),
                             "maximal runs end at " + to_string(*first_outcome) + " and " + to_string(last));
                    return false;
                }
            }
            if (last != expected) {
                rep.fail(erase_run(r), r.steps.size(), "terminal array " + to_string(last) + " is not sorted input");
                return false;
            }
            return true;
        });
        if (!rep.pass)
            return;
    }
}

template <class S>
void check_level(CheckReport& rep, const Machine<S>& lower, const SortArray& a, const RefinementMap& map,
                 const Machine<AnyState>& upper, std::size_t depth, Budget& budget) {
    Run<S> path{lower.id, lower.initial_of(a), {}};
    for_each_run(lower, path, depth, budget, [&](const Run<S>& r, bool) {
        ++rep.cases;
        auto res = check_inclusion(erase_run(r), map, upper);
        if (!res.pass) {
            res.counterexample->detail = res.property + ": " + res.counterexample->detail;
            rep.fail(res.counterexample->run, res.counterexample->state_index, res.counterexample->detail);
            return false;
        }
        return true;
    });
}

inline void prop_inclusion_chain(CheckReport& rep, const std::vector<SortArray>& corpus, std::size_t depth,
                                 Budget& budget) {
    auto b4 = make_machine("B4");
    auto b3e = make_machine("B3!");
    auto b2e = make_machine("B2!");
    auto b1e = make_machine("B1!");
    auto map54 = refinement_map("B5", "B4");
    auto map5d4 = refinement_map("B5D", "B4");
    auto map43 = refinement_map("B4", "B3!");
    auto map32 = refinement_map("B3!", "B2!");
    auto map21 = refinement_map("B2!", "B1!");
    // Automated levels run to termination; the depth bound applies to the
    // interactive ones.
    constexpr std::size_t unbounded = static_cast<std::size_t>(-1);
    for (auto& a : corpus) {
        check_level(rep, machine_b5(), a, map54, b4, unbounded, budget);
        if (rep.pass)
            check_level(rep, machine_b5d(), a, map5d4, b4, unbounded, budget);
        if (rep.pass)
            check_level(rep, machine_b4(), a, map43, b3e, depth, budget);
        if (rep.pass)
            check_level(rep, input_enabled(machine_b3()), a, map32, b2e, depth, budget);
        if (rep.pass)
            check_level(rep, input_enabled(machine_b2()), a, map21, b1e, depth, budget);
        if (!rep.pass)
            return;
    }
}

} // namespace detail

/// Run a named property over every array of `corpus`. Throws
/// `unknown_property` for an unrecognised name and `budget_exceeded` when
/// the visited-state cap is passed.
inline CheckReport exhaustive_property(std::string_view property, const std::vector<SortArray>& corpus,
                                       const ExhaustiveOptions& opts = {}) {
    CheckReport rep;
    rep.property = std::string(property);
    rep.instance = opts.instance.empty() ? std::to_string(corpus.size()) + " arrays" : opts.instance;
    rep.n = opts.n;
    rep.domain = opts.domain;
    rep.depth = opts.depth;
    detail::Budget budget(opts.budget);
    if (property == "b5-sorts")
        detail::prop_b5_sorts(rep, corpus, budget);
    else if (property == "b5d-sorts")
        detail::prop_b5d_sorts(rep, corpus, budget);
    else if (property == "invariant")
        detail::prop_invariant(rep, corpus, budget);
    else if (property == "measure")
        detail::prop_measure(rep, corpus, budget);
    else if (property == "b2-terminal-sorted")
        detail::prop_b2(rep, corpus, opts.depth, budget, false);
    else if (property == "b2-confluent")
        detail::prop_b2(rep, corpus, opts.depth, budget, true);
    else if (property == "inclusion-chain")
        detail::prop_inclusion_chain(rep, corpus, opts.depth, budget);
    else
        throw unknown_property("unknown property '" + std::string(property) + "'");
    return rep;
}

/// Same, over all arrays in `domain`^n.
inline CheckReport exhaustive_property(std::string_view property, std::size_t n, const std::vector<int>& domain,
                                       std::size_t depth, std::size_t budget = 50'000'000) {
    ExhaustiveOptions opts;
    opts.depth = depth;
    opts.budget = budget;
    opts.n = n;
    opts.domain = domain;
    std::string dom;
    for (std::size_t k = 0; k < domain.size(); ++k)
        dom += (k ? "," : "") + std::to_string(domain[k]);
    opts.instance = "n=" + std::to_string(n) + " domain={" + dom + "} depth=" + std::to_string(depth);
    return exhaustive_property(property, all_arrays(n, domain), opts);
}

} // namespace algodyn
