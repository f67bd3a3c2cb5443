#pragma once

#include "algodyn/http_server.hpp"
#include "algodyn/render.hpp"
#include "algodyn/serialize.hpp"
#include "algodyn/session.hpp"
#include "algodyn/verify.hpp"

#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace algodyn::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failed = 1;       // property failed, or bad usage
inline constexpr int step_error = 2;   // guard failed or malformed action
inline constexpr int bad_input = 3;    // unknown machine, unreadable or mismatched log
inline constexpr int budget = 4;
inline constexpr int divergence = 5;
} // namespace exit_code

/// `8,6,7,4` -> {8, 6, 7, 4}. Empty text is the empty array.
inline std::optional<SortArray> parse_array(const std::string& text) {
    SortArray out;
    if (text.empty())
        return out;
    std::size_t at = 0;
    for (;;) {
        auto comma = text.find(',', at);
        auto piece = std::string_view(text).substr(at, comma == std::string::npos ? std::string::npos : comma - at);
        auto v = detail::parse_int(piece);
        if (!v)
            return std::nullopt;
        out.push_back(*v);
        if (comma == std::string::npos)
            return out;
        at = comma + 1;
    }
}

/// `0..3` (inclusive range) or `0,1,2`.
inline std::optional<std::vector<int>> parse_domain(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos)
        return parse_array(text);
    auto lo = detail::parse_int(std::string_view(text).substr(0, dots));
    auto hi = detail::parse_int(std::string_view(text).substr(dots + 2));
    if (!lo || !hi || *lo > *hi)
        return std::nullopt;
    std::vector<int> out;
    for (int v = *lo; v <= *hi; ++v)
        out.push_back(v);
    return out;
}

struct RunArgs {
    std::string machine;
    std::string array;
    std::vector<std::string> actions;
    bool automatic = false;
    bool compare = false;
    std::string out_path;
};

inline int do_run(const RunArgs& args, std::ostream& out, std::ostream& err) {
    Machine<AnyState> m;
    try {
        m = make_machine(args.machine);
    } catch (const unknown_machine& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::bad_input;
    }
    auto array = parse_array(args.array);
    if (!array) {
        err << "error: --array expects comma-separated integers\n";
        return exit_code::failed;
    }
    if (args.automatic && !is_automated_id(m.id)) {
        err << "error: --auto needs an automated machine (B5 or B5D)\n";
        return exit_code::failed;
    }
    if (args.automatic && !args.actions.empty()) {
        err << "error: --auto and --act are exclusive\n";
        return exit_code::failed;
    }

    Run<AnyState> run;
    std::optional<RunFailure> failure;
    std::vector<Action> actions;
    if (args.automatic) {
        run = auto_run(m, m.initial_of(*array));
    } else {
        for (auto& text : args.actions) {
            auto a = parse_action(text);
            if (!a) {
                err << "error: cannot parse action '" << text << "'\n";
                return exit_code::failed;
            }
            actions.push_back(*a);
        }
        auto res = apply_run(m, m.initial_of(*array), actions);
        run = std::move(res.run);
        failure = res.failure;
    }

    out << render_table(run, args.compare && !failure);
    if (failure) {
        err << "error: " << to_string(failure->error) << " at step " << failure->step_index << " ("
            << to_string(actions[failure->step_index]) << ")\n";
        return exit_code::step_error;
    }
    out << "final: " << to_string(array_of(run.last())) << " after " << run.steps.size()
        << (run.steps.size() == 1 ? " step" : " steps")
        << (is_terminal(m, run.last()) ? " (terminal)" : "") << "\n";

    if (!args.out_path.empty()) {
        std::ofstream file(args.out_path);
        file << dump_runlog(runlog_of(run));
        if (!file) {
            err << "error: cannot write " << args.out_path << "\n";
            return exit_code::failed;
        }
    }
    return exit_code::ok;
}

struct VerifyArgs {
    std::string property;
    std::size_t n = 3;
    std::string domain = "0..2";
    std::size_t depth = 8;
    std::size_t budget = 50'000'000;
    std::string report_path;
};

inline int do_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    auto domain = parse_domain(args.domain);
    if (!domain) {
        err << "error: --domain expects lo..hi or a comma-separated list\n";
        return exit_code::failed;
    }
    CheckReport rep;
    try {
        rep = exhaustive_property(args.property, args.n, *domain, args.depth, args.budget);
    } catch (const unknown_property& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::failed;
    } catch (const budget_exceeded& e) {
        err << "error: budget exceeded: " << e.what() << "\n";
        return exit_code::budget;
    }
    out << rep.property << " [" << rep.instance << "]: " << (rep.pass ? "pass" : "fail") << " (" << rep.cases
        << " cases)\n";
    if (rep.counterexample)
        out << "  counterexample at state " << rep.counterexample->state_index << ": " << rep.counterexample->detail
            << "\n";
    if (!args.report_path.empty()) {
        std::ofstream file(args.report_path);
        file << to_json(rep).dump(2) << "\n";
        if (!file) {
            err << "error: cannot write " << args.report_path << "\n";
            return exit_code::failed;
        }
    }
    return rep.pass ? exit_code::ok : exit_code::failed;
}

inline int do_replay(const std::string& path, std::ostream& out, std::ostream& err) {
    std::ifstream file(path);
    if (!file) {
        err << "error: cannot read " << path << "\n";
        return exit_code::bad_input;
    }
    std::stringstream text;
    text << file.rdbuf();
    ReplayVerdict verdict;
    try {
        verdict = replay(parse_runlog(text.str()));
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::bad_input;
    } catch (const unknown_machine& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::bad_input;
    }
    if (!verdict.ok) {
        out << "diverged at step " << *verdict.divergence << ": " << verdict.detail << "\n";
        return exit_code::divergence;
    }
    out << "replay ok\n";
    return exit_code::ok;
}

struct ServeArgs {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::string static_dir;
    long ttl_seconds = 1800;
};

inline HttpFrontend* active_frontend = nullptr;

inline int do_serve(const ServeArgs& args, std::ostream& out, std::ostream& err) {
    SessionService::Options opts;
    opts.ttl = std::chrono::seconds(args.ttl_seconds);
    SessionService service(opts);
    HttpFrontend http(service);
    if (!args.static_dir.empty() && !http.mount_static(args.static_dir)) {
        err << "error: cannot serve static directory " << args.static_dir << "\n";
        return exit_code::failed;
    }
    int port = http.bind(args.host, args.port);
    if (port < 0) {
        err << "error: cannot bind " << args.host << ":" << args.port << "\n";
        return exit_code::failed;
    }
    out << "listening on http://" << args.host << ":" << port << std::endl;
    active_frontend = &http;
    std::signal(SIGINT, [](int) {
        if (active_frontend)
            active_frontend->stop();
    });
    http.listen();
    active_frontend = nullptr;
    return exit_code::ok;
}

/// Entry point shared by the executable and the tests.
inline int main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Bubblesort transition-system lab"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "Execute a run and print its step table");
    run->add_option("machine", run_args.machine, "B1 B2 B3 B4 B5 B5D, optional ! suffix")->required();
    run->add_option("--array", run_args.array, "Initial array, e.g. 8,6,7,4")->required();
    run->add_option("--act", run_args.actions, "swap:i,j | order:i,j | adj:i | inc | reset | next")
        ->delimiter('\0')
        ->take_all();
    run->add_flag("--auto", run_args.automatic, "Follow next to termination (B5, B5D)");
    run->add_flag("--compare", run_args.compare, "Add one action column per machine down to B1");
    run->add_option("--out", run_args.out_path, "Write the run log here");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Check a property over every array of a small domain");
    verify->add_option("property", verify_args.property)
        ->required()
        ->check(CLI::IsMember(property_names()));
    verify->add_option("--n", verify_args.n, "Array length");
    verify->add_option("--domain", verify_args.domain, "Values, lo..hi or a,b,c");
    verify->add_option("--depth", verify_args.depth, "Bound on interactive run length");
    verify->add_option("--budget", verify_args.budget, "Cap on visited states");
    verify->add_option("--report", verify_args.report_path, "Write the JSON report here");

    std::string replay_path;
    auto* replay_cmd = app.add_subcommand("replay", "Re-execute a run log and compare every state");
    replay_cmd->add_option("runlog", replay_path)->required();

    ServeArgs serve_args;
    auto* serve = app.add_subcommand("serve", "Serve the session protocol over HTTP");
    serve->add_option("--port", serve_args.port);
    serve->add_option("--host", serve_args.host);
    serve->add_option("--static", serve_args.static_dir, "Directory of browser assets");
    serve->add_option("--ttl", serve_args.ttl_seconds, "Idle session lifetime in seconds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::failed;
    }

    if (*run)
        return do_run(run_args, out, err);
    if (*verify)
        return do_verify(verify_args, out, err);
    if (*replay_cmd)
        return do_replay(replay_path, out, err);
    return do_serve(serve_args, out, err);
}

} // namespace algodyn::cli
