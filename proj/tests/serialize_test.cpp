#include "algodyn/render.hpp"
#include "algodyn/serialize.hpp"

#include <gtest/gtest.h>

using namespace algodyn;

namespace {

Run<AnyState> b5_table_run() {
    auto m = make_machine("B5");
    return auto_run(m, m.initial_of({8, 6, 7, 4}));
}

} // namespace

TEST(ActionJson, WireShapes) {
    EXPECT_EQ(to_json(Action{act::Swap{0, 3}}), json::parse(R"({"kind":"swap","i":0,"j":3})"));
    EXPECT_EQ(to_json(Action{act::Order{1, 2}}), json::parse(R"({"kind":"order","i":1,"j":2})"));
    EXPECT_EQ(to_json(Action{act::Adj{1}}), json::parse(R"({"kind":"adj","i":1})"));
    EXPECT_EQ(to_json(Action{act::Inc{}}), json::parse(R"({"kind":"inc"})"));
    EXPECT_EQ(to_json(Action{act::Reset{}}), json::parse(R"({"kind":"reset"})"));
    EXPECT_EQ(to_json(Action{act::Next{}}), json::parse(R"({"kind":"next"})"));
}

TEST(ActionJson, RoundTripsAndRejects) {
    for (Action a : {Action{act::Swap{0, 3}}, Action{act::Order{1, 2}}, Action{act::Adj{2}}, Action{act::Inc{}},
                     Action{act::Reset{}}, Action{act::Next{}}})
        EXPECT_EQ(action_from_json(to_json(a)), a);
    EXPECT_THROW(action_from_json(json::parse(R"({"kind":"swap","i":0})")), parse_error);
    EXPECT_THROW(action_from_json(json::parse(R"({"kind":"jump"})")), parse_error);
    EXPECT_THROW(action_from_json(json::parse(R"([1,2])")), parse_error);
    EXPECT_THROW(action_from_json(json::parse(R"({"kind":"adj","i":"1"})")), parse_error);
}

TEST(ActionText, CommandLineSpelling) {
    EXPECT_EQ(parse_action("swap:0,3"), (Action{act::Swap{0, 3}}));
    EXPECT_EQ(parse_action("order:1,2"), (Action{act::Order{1, 2}}));
    EXPECT_EQ(parse_action("adj:2"), (Action{act::Adj{2}}));
    EXPECT_EQ(parse_action("inc"), (Action{act::Inc{}}));
    EXPECT_EQ(parse_action("reset"), (Action{act::Reset{}}));
    EXPECT_EQ(parse_action("next"), (Action{act::Next{}}));
    EXPECT_FALSE(parse_action("swap:0"));
    EXPECT_FALSE(parse_action("swap:a,b"));
    EXPECT_FALSE(parse_action("inc:1"));
    EXPECT_FALSE(parse_action("adj:"));
    EXPECT_FALSE(parse_action("hop"));
    EXPECT_EQ(to_string(Action{act::Swap{0, 3}}), "swap(0,3)");
    EXPECT_EQ(to_string(Action{act::Adj{1}}), "adj(1)");
    EXPECT_EQ(to_string(Action{act::Next{}}), "next");
}

TEST(StateJson, WireShapes) {
    EXPECT_EQ(to_json(AnyState{ArrayState{{8, 6}}}), json::parse(R"({"array":[8,6]})"));
    EXPECT_EQ(to_json(AnyState{B4State{{6, 8, 7, 4}, 1}}), json::parse(R"({"array":[6,8,7,4],"i":1})"));
    EXPECT_EQ(to_json(AnyState{B5State{{4, 6}, 0, 1}}), json::parse(R"({"array":[4,6],"i":0,"b":1})"));
    EXPECT_EQ(to_json(AnyState{B5DState{{4, 6}, 1, 2, true}}),
              json::parse(R"({"array":[4,6],"i":1,"b":2,"dirty":true})"));
}

TEST(StateJson, DecodesPerMachine) {
    EXPECT_EQ(state_from_json(json::parse(R"({"array":[1,2]})"), "B2!"), (AnyState{ArrayState{{1, 2}}}));
    EXPECT_EQ(state_from_json(json::parse(R"({"array":[1,2],"i":1})"), "B4"), (AnyState{B4State{{1, 2}, 1}}));
    EXPECT_THROW(state_from_json(json::parse(R"({"array":[1,2]})"), "B5"), parse_error);
    EXPECT_THROW(state_from_json(json::parse(R"({"array":[1,"x"]})"), "B1"), parse_error);
    EXPECT_THROW(state_from_json(json::parse(R"({"array":[1]})"), "B7"), unknown_machine);
}

TEST(RunLog, FileLayout) {
    auto m = make_machine("B1");
    auto res = apply_run(m, m.initial_of({8, 6, 7, 4}), {act::Swap{0, 3}});
    auto j = to_json(runlog_of(res.run));
    EXPECT_EQ(j, json::parse(R"({
        "version": 1, "machine": "B1", "initial": [8,6,7,4],
        "steps": [{"action": {"kind":"swap","i":0,"j":3}, "state": {"array":[4,6,7,8]}}]
    })"));
}

// Every run produced by a deterministic sweep over machines, inputs and
// action scripts serialises, parses back to the same text, and replays.
TEST(RunLog, RoundTripProperty) {
    std::size_t logs = 0;
    for (auto& id : base_machine_ids()) {
        for (const char* suffix : {"", "!"}) {
            auto m = make_machine(id + suffix);
            for (auto& a : all_arrays(3, {0, 1, 2})) {
                algodyn::Run<AnyState> run{m.id, m.initial_of(a), {}};
                // Take the k-th well-formed action at step k, cycling.
                for (std::size_t k = 0; k < 6; ++k) {
                    auto acts = m.input_enabled ? m.actions_of(run.last()) : enabled(m, run.last());
                    if (acts.empty())
                        break;
                    auto& pick = acts[k % acts.size()];
                    run.steps.push_back({pick, step(m, run.last(), pick).state()});
                }
                auto text = dump_runlog(runlog_of(run));
                auto back = parse_runlog(text);
                EXPECT_EQ(dump_runlog(back), text);
                EXPECT_TRUE(replay(back).ok) << text;
                ++logs;
            }
        }
    }
    EXPECT_EQ(logs, 12u * 27u);
}

TEST(RunLog, ReportsCarriedThrough) {
    auto log = runlog_of(b5_table_run());
    log.reports = json::array({to_json(check_invariant(auto_run(machine_b5(), machine_b5().initial_of({2, 1}))))});
    auto back = parse_runlog(dump_runlog(log));
    ASSERT_TRUE(back.reports);
    EXPECT_EQ((*back.reports)[0]["verdict"], "pass");
}

TEST(RunLog, RejectsBadDocuments) {
    EXPECT_THROW(parse_runlog("{"), parse_error);
    EXPECT_THROW(parse_runlog(R"({"version":2,"machine":"B1","initial":[1],"steps":[]})"), parse_error);
    EXPECT_THROW(parse_runlog(R"({"machine":"B1","initial":[1],"steps":[]})"), parse_error);
    EXPECT_THROW(parse_runlog(R"({"version":1,"initial":[1],"steps":[]})"), parse_error);
    EXPECT_THROW(parse_runlog(R"({"version":1,"machine":"B1","initial":[1],"steps":[{"action":{"kind":"inc"}}]})"),
                 parse_error);
}

TEST(Replay, EditedArrayElementDiverges) {
    auto log = runlog_of(b5_table_run());
    std::get<B5State>(log.steps[4].state).array[0] = 99;
    auto v = replay(log);
    EXPECT_FALSE(v.ok);
    EXPECT_EQ(v.divergence, 4u);
}

TEST(Replay, RefusedActionDiverges) {
    auto log = runlog_of(b5_table_run());
    log.steps.push_back({act::Next{}, log.steps.back().state});
    auto v = replay(log);
    EXPECT_FALSE(v.ok);
    EXPECT_EQ(v.divergence, 9u);
}

TEST(Replay, UnknownMachine) {
    RunLog log{"B9", {1}, {}, std::nullopt};
    EXPECT_THROW(replay(log), unknown_machine);
}

TEST(ReportJson, PassAndFail) {
    auto ok = to_json(exhaustive_property("b5-sorts", 2, {0, 1}, 0));
    EXPECT_EQ(ok["verdict"], "pass");
    EXPECT_EQ(ok["cases"], 4);
    EXPECT_FALSE(ok.contains("counterexample"));

    auto run = auto_run(machine_b5(), machine_b5().initial_of({8, 6, 7, 4}));
    run.steps[0].state.index = 3;
    auto bad = to_json(check_invariant(run));
    EXPECT_EQ(bad["verdict"], "fail");
    EXPECT_EQ(bad["counterexample"]["state_index"], 1);
    // The witness is a run log: it parses and, being corrupted, fails replay.
    auto witness = runlog_from_json(bad["counterexample"]["run"]);
    EXPECT_EQ(replay(witness).divergence, 0u);
}

TEST(Render, TableOneCompareColumns) {
    auto cols = compare_columns(b5_table_run());
    ASSERT_EQ(cols.machines, (std::vector<std::string>{"B5", "B4", "B3", "B2", "B1"}));
    auto text = [&](std::size_t c) {
        std::vector<std::string> out;
        for (auto& cell : cols.cells[c])
            out.push_back(cell ? to_string(*cell) : "");
        return out;
    };
    EXPECT_EQ(text(1), (std::vector<std::string>{"inc", "inc", "inc", "reset", "inc", "inc", "reset", "inc", "reset"}));
    EXPECT_EQ(text(2), (std::vector<std::string>{"adj(0)", "adj(1)", "adj(2)", "", "", "adj(1)", "", "adj(0)", ""}));
    EXPECT_EQ(text(3), (std::vector<std::string>{"order(0,1)", "order(1,2)", "order(2,3)", "", "", "order(1,2)", "",
                                                 "order(0,1)", ""}));
    EXPECT_EQ(text(4), (std::vector<std::string>{"swap(0,1)", "swap(1,2)", "swap(2,3)", "", "", "swap(1,2)", "",
                                                 "swap(0,1)", ""}));
}

TEST(Render, StateAndCursor) {
    EXPECT_EQ(format_state(B5State{{8, 6, 7, 4}, 0, 4}), "[8, 6, 7, 4], 0, 4");
    EXPECT_EQ(format_state(B4State{{4, 6}, 1}), "[4, 6], 1");
    EXPECT_EQ(format_state(ArrayState{{1}}), "[1]");
    EXPECT_EQ(cursor_of(B5State{{6, 7, 4, 8}, 1, 3}), ".^.|.");
    EXPECT_EQ(cursor_of(B4State{{6, 7}, 1}), ".^");
    EXPECT_EQ(cursor_of(ArrayState{{6, 7}}), "");
}

TEST(Render, PlainTableRows) {
    auto table = render_table(b5_table_run());
    EXPECT_NE(table.find("[8, 6, 7, 4], 0, 4"), std::string::npos);
    EXPECT_NE(table.find("[4, 6, 7, 8], 0, 1"), std::string::npos);
    std::size_t lines = std::count(table.begin(), table.end(), '\n');
    EXPECT_EQ(lines, 11u);
}
