#pragma once

#include "algodyn/machines.hpp"
#include "algodyn/verify.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace algodyn {

using json = nlohmann::json;

/// Malformed JSON document: bad action, state, or run log.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int runlog_version = 1;

// ---------------------------------------------------------------------------
// Actions and states

inline json to_json(const Action& a) {
    json j{{"kind", std::string(kind_of(a))}};
    std::visit(
        [&](const auto& x) {
            if constexpr (requires { x.j; }) {
                j["i"] = x.i;
                j["j"] = x.j;
            } else if constexpr (requires { x.i; }) {
                j["i"] = x.i;
            }
        },
        a);
    return j;
}

namespace detail {
inline int int_field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_number_integer())
        throw parse_error(std::string("missing integer field '") + key + "'");
    return it->get<int>();
}

inline SortArray int_array(const json& j, const char* what) {
    if (!j.is_array())
        throw parse_error(std::string(what) + " must be an array of integers");
    SortArray a;
    a.reserve(j.size());
    for (auto& v : j) {
        if (!v.is_number_integer())
            throw parse_error(std::string(what) + " must be an array of integers");
        a.push_back(v.get<int>());
    }
    return a;
}
} // namespace detail

inline Action action_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw parse_error("action must be an object with a string 'kind'");
    auto kind = j["kind"].get<std::string>();
    if (kind == "swap")
        return act::Swap{detail::int_field(j, "i"), detail::int_field(j, "j")};
    if (kind == "order")
        return act::Order{detail::int_field(j, "i"), detail::int_field(j, "j")};
    if (kind == "adj")
        return act::Adj{detail::int_field(j, "i")};
    if (kind == "inc")
        return act::Inc{};
    if (kind == "reset")
        return act::Reset{};
    if (kind == "next")
        return act::Next{};
    throw parse_error("unknown action kind '" + kind + "'");
}

inline json to_json(const AnyState& s) {
    return std::visit(
        [](const auto& x) {
            json j{{"array", x.array}};
            if constexpr (requires { x.index; })
                j["i"] = x.index;
            if constexpr (requires { x.boundary; })
                j["b"] = x.boundary;
            if constexpr (requires { x.dirty; })
                j["dirty"] = x.dirty;
            return j;
        },
        s);
}

/// Decode a state of the machine named `machine_id` (a trailing `!` is ignored).
inline AnyState state_from_json(const json& j, std::string_view machine_id) {
    if (!j.is_object() || !j.contains("array"))
        throw parse_error("state must be an object with an 'array'");
    auto a = detail::int_array(j["array"], "state.array");
    std::string_view base = machine_id;
    if (!base.empty() && base.back() == '!')
        base.remove_suffix(1);
    if (base == "B1" || base == "B2" || base == "B3")
        return ArrayState{std::move(a)};
    if (base == "B4")
        return B4State{std::move(a), detail::int_field(j, "i")};
    if (base == "B5")
        return B5State{std::move(a), detail::int_field(j, "i"), detail::int_field(j, "b")};
    if (base == "B5D") {
        auto it = j.find("dirty");
        if (it == j.end() || !it->is_boolean())
            throw parse_error("missing boolean field 'dirty'");
        return B5DState{std::move(a), detail::int_field(j, "i"), detail::int_field(j, "b"), it->get<bool>()};
    }
    throw unknown_machine("unknown machine '" + std::string(machine_id) + "'");
}

inline json steps_to_json(const std::vector<RunStep<AnyState>>& steps) {
    json out = json::array();
    for (auto& st : steps)
        out.push_back({{"action", to_json(st.action)}, {"state", to_json(st.state)}});
    return out;
}

// ---------------------------------------------------------------------------
// Run logs

/// Persisted run: machine, initial array, and every (action, state) step.
struct RunLog {
    std::string machine;
    SortArray initial;
    std::vector<RunStep<AnyState>> steps;
    std::optional<json> reports;
};

inline RunLog runlog_of(const Run<AnyState>& run) {
    return RunLog{run.machine_id, array_of(run.initial), run.steps, std::nullopt};
}

inline json to_json(const RunLog& log) {
    json j{{"version", runlog_version},
           {"machine", log.machine},
           {"initial", log.initial},
           {"steps", steps_to_json(log.steps)}};
    if (log.reports)
        j["reports"] = *log.reports;
    return j;
}

inline RunLog runlog_from_json(const json& j) {
    if (!j.is_object())
        throw parse_error("run log must be a JSON object");
    auto v = j.find("version");
    if (v == j.end() || !v->is_number_integer())
        throw parse_error("run log has no version");
    if (v->get<int>() != runlog_version)
        throw parse_error("unsupported run log version " + v->dump());
    if (!j.contains("machine") || !j["machine"].is_string())
        throw parse_error("run log has no machine id");
    RunLog log;
    log.machine = j["machine"].get<std::string>();
    if (!j.contains("initial"))
        throw parse_error("run log has no initial array");
    log.initial = detail::int_array(j["initial"], "initial");
    if (!j.contains("steps") || !j["steps"].is_array())
        throw parse_error("run log has no steps array");
    for (auto& st : j["steps"]) {
        if (!st.is_object() || !st.contains("action") || !st.contains("state"))
            throw parse_error("each step needs 'action' and 'state'");
        log.steps.push_back({action_from_json(st["action"]), state_from_json(st["state"], log.machine)});
    }
    if (auto r = j.find("reports"); r != j.end())
        log.reports = *r;
    return log;
}

inline RunLog parse_runlog(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    return runlog_from_json(j);
}

inline std::string dump_runlog(const RunLog& log) {
    return to_json(log).dump(2) + "\n";
}

struct ReplayVerdict {
    bool ok = true;
    std::optional<std::size_t> divergence; // index of the first step that disagrees
    std::string detail;
};

/// Re-execute the log's actions from the machine's initial state and compare
/// every recorded state.
inline ReplayVerdict replay(const RunLog& log) {
    auto m = make_machine(log.machine);
    AnyState cur = m.initial_of(log.initial);
    for (std::size_t k = 0; k < log.steps.size(); ++k) {
        auto out = step(m, cur, log.steps[k].action);
        if (!out)
            return {false, k, to_string(log.steps[k].action) + " refused: " + std::string(to_string(out.error()))};
        if (!(out.state() == log.steps[k].state))
            return {false, k, "recorded state " + to_json(log.steps[k].state).dump() + " differs from replayed " +
                                  to_json(out.state()).dump()};
        cur = out.state();
    }
    return {};
}

// ---------------------------------------------------------------------------
// Reports

inline json to_json(const CheckReport& r) {
    json j{{"property", r.property},
           {"instance", r.instance},
           {"n", r.n},
           {"domain", r.domain},
           {"depth", r.depth},
           {"cases", r.cases},
           {"verdict", r.pass ? "pass" : "fail"}};
    if (r.counterexample) {
        j["counterexample"] = {{"run", to_json(runlog_of(r.counterexample->run))},
                               {"state_index", r.counterexample->state_index},
                               {"detail", r.counterexample->detail}};
    }
    return j;
}

} // namespace algodyn
