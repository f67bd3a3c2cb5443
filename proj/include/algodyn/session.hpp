#pragma once

#include "algodyn/serialize.hpp"
#include "algodyn/verify.hpp"

#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace algodyn {

/// Transport-neutral request: the HTTP binding and the tests both feed this.
struct Request {
    std::string method;
    std::string path;
    std::string body;
    std::map<std::string, std::string> query;
};

struct Response {
    int status = 200;
    json body;
};

/// In-memory sessions over the machine catalogue. Requests on one session
/// are serialised by that session's lock; distinct sessions proceed in
/// parallel. Session ids are sequential ("s1", "s2", ...), so a fresh
/// service answers an identical request sequence identically.
class SessionService {
public:
    using Clock = std::chrono::steady_clock;

    struct Options {
        std::chrono::milliseconds ttl = std::chrono::minutes(30);
        std::function<Clock::time_point()> now = [] { return Clock::now(); };
    };

    SessionService() : SessionService(Options{}) {}
    explicit SessionService(Options opts) : opts_(std::move(opts)) {}

    Response handle(const Request& req) {
        expire_idle();
        auto parts = split_path(req.path);
        try {
            if (parts.size() == 1 && parts[0] == "machines" && req.method == "GET")
                return {200, catalog()};
            if (parts.size() == 1 && parts[0] == "sessions" && req.method == "POST")
                return create(parse_body(req.body));
            if (parts.size() >= 2 && parts[0] == "sessions") {
                auto session = find(parts[1]);
                if (!session)
                    return error(404, "unknown_session", "no session '" + parts[1] + "'");
                std::lock_guard lock(session->mutex);
                session->last_access = opts_.now();
                if (parts.size() == 2 && req.method == "GET")
                    return {200, describe(*session)};
                if (parts.size() == 3 && parts[2] == "act" && req.method == "POST") {
                    auto checks = req.query.find("checks");
                    return act(*session, parse_body(req.body), checks != req.query.end() && checks->second == "1");
                }
                if (parts.size() == 3 && parts[2] == "undo" && req.method == "POST")
                    return undo(*session);
            }
        } catch (const parse_error& e) {
            return error(400, "bad_request", e.what());
        }
        return error(404, "not_found", req.method + " " + req.path);
    }

    /// Drop sessions idle for longer than the configured TTL.
    void expire_idle() {
        auto now = opts_.now();
        std::lock_guard lock(mutex_);
        for (auto it = sessions_.begin(); it != sessions_.end();) {
            std::unique_lock session_lock(it->second->mutex, std::try_to_lock);
            if (session_lock.owns_lock() && now - it->second->last_access > opts_.ttl)
                it = sessions_.erase(it);
            else
                ++it;
        }
    }

    [[nodiscard]] std::size_t session_count() const {
        std::lock_guard lock(mutex_);
        return sessions_.size();
    }

    /// GET /machines payload.
    static json catalog() {
        json out = json::array();
        for (auto& base : base_machine_ids()) {
            for (bool ext : {false, true}) {
                auto m = make_machine(ext ? base + "!" : base);
                json actions = json::array();
                for (auto& [kind, params] : action_schema(base))
                    actions.push_back({{"kind", kind}, {"params", params}});
                out.push_back({{"id", m.id},
                               {"automated", is_automated_id(m.id)},
                               {"input_enabled", m.input_enabled},
                               {"actions", actions},
                               {"state_fields", state_fields(base)}});
            }
        }
        return out;
    }

private:
    struct Session {
        std::string id;
        Machine<AnyState> machine;
        Run<AnyState> history;
        Clock::time_point last_access;
        std::mutex mutex;
    };

    static std::vector<std::pair<std::string, json>> action_schema(const std::string& base) {
        if (base == "B1")
            return {{"swap", json::array({"i", "j"})}};
        if (base == "B2")
            return {{"order", json::array({"i", "j"})}};
        if (base == "B3")
            return {{"adj", json::array({"i"})}};
        if (base == "B4")
            return {{"inc", json::array()}, {"reset", json::array()}};
        return {{"next", json::array()}};
    }

    static json state_fields(const std::string& base) {
        if (base == "B4")
            return json::array({"array", "i"});
        if (base == "B5")
            return json::array({"array", "i", "b"});
        if (base == "B5D")
            return json::array({"array", "i", "b", "dirty"});
        return json::array({"array"});
    }

    static std::vector<std::string> split_path(std::string_view path) {
        std::vector<std::string> out;
        std::size_t at = 0;
        while (at < path.size()) {
            auto slash = path.find('/', at);
            if (slash == std::string_view::npos)
                slash = path.size();
            if (slash > at)
                out.emplace_back(path.substr(at, slash - at));
            at = slash + 1;
        }
        return out;
    }

    static json parse_body(const std::string& body) {
        try {
            auto j = json::parse(body);
            if (!j.is_object())
                throw parse_error("request body must be a JSON object");
            return j;
        } catch (const json::parse_error& e) {
            throw parse_error(std::string("invalid JSON: ") + e.what());
        }
    }

    static Response error(int status, std::string_view code, std::string message) {
        return {status, json{{"error", code}, {"message", std::move(message)}}};
    }

    static json actions_json(const std::vector<Action>& acts) {
        json out = json::array();
        for (auto& a : acts)
            out.push_back(to_json(a));
        return out;
    }

    static json current(const Session& s) {
        const auto& state = s.history.last();
        auto en = enabled(s.machine, state);
        return json{{"state", to_json(state)},
                    {"enabled", actions_json(en)},
                    {"terminal", en.empty()},
                    {"steps", s.history.steps.size()}};
    }

    static json checks_of(const Session& s) {
        const auto& state = s.history.last();
        json c{{"permutation", is_permutation(array_of(state), array_of(s.history.initial))},
               {"sorted", sortedness(array_of(state))},
               {"inversions", inversions(array_of(state))}};
        std::visit(
            [&](const auto& x) {
                if constexpr (SweepState<std::decay_t<decltype(x)>>) {
                    c["inv1"] = inv1(x);
                    c["inv2"] = inv2(x);
                    c["inv3"] = inv3(x);
                    c["inv"] = inv(x);
                    auto m = measure_of(x);
                    c["measure"] = json::array({m.boundary, m.remaining});
                }
            },
            state);
        return c;
    }

    static json describe(const Session& s) {
        json j = current(s);
        j["session_id"] = s.id;
        j["machine"] = s.machine.id;
        j["initial"] = to_json(s.history.initial);
        j["history"] = steps_to_json(s.history.steps);
        return j;
    }

    std::shared_ptr<Session> find(const std::string& id) {
        std::lock_guard lock(mutex_);
        auto it = sessions_.find(id);
        return it == sessions_.end() ? nullptr : it->second;
    }

    Response create(const json& body) {
        if (!body.contains("machine") || !body["machine"].is_string())
            throw parse_error("'machine' must be a string");
        if (!body.contains("array"))
            throw parse_error("'array' is required");
        auto array = detail::int_array(body["array"], "array");
        Machine<AnyState> m;
        try {
            m = make_machine(body["machine"].get<std::string>());
        } catch (const unknown_machine& e) {
            return error(400, "unknown_machine", e.what());
        }
        auto session = std::make_shared<Session>();
        session->machine = std::move(m);
        session->history = Run<AnyState>{session->machine.id, session->machine.initial_of(array), {}};
        session->last_access = opts_.now();
        {
            std::lock_guard lock(mutex_);
            session->id = "s" + std::to_string(++next_id_);
            sessions_.emplace(session->id, session);
        }
        json j = current(*session);
        j["session_id"] = session->id;
        j["machine"] = session->machine.id;
        return {201, j};
    }

    Response act(Session& s, const json& body, bool with_checks) {
        if (!body.contains("action"))
            throw parse_error("'action' is required");
        Action a = action_from_json(body["action"]);
        auto out = step(s.machine, s.history.last(), a);
        if (!out) {
            if (out.error() == StepError::guard_failed)
                return error(409, "guard_failed", to_string(a) + " is not enabled");
            return error(422, "malformed_action", to_string(a) + " is not an action of " + s.machine.id);
        }
        s.history.steps.push_back({a, out.state()});
        json j = current(s);
        j["step_index"] = s.history.steps.size() - 1;
        if (with_checks)
            j["checks"] = checks_of(s);
        return {200, j};
    }

    Response undo(Session& s) {
        if (s.history.steps.empty())
            return error(409, "nothing_to_undo", "session is at its initial state");
        s.history.steps.pop_back();
        return {200, current(s)};
    }

    Options opts_;
    mutable std::mutex mutex_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    std::size_t next_id_ = 0;
};

} // namespace algodyn
