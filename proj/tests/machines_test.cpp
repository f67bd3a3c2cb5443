#include "algodyn/machines.hpp"
#include "algodyn/verify.hpp"

#include <gtest/gtest.h>

using namespace algodyn;

namespace {

// Straight-line bubblesort with an explicit while loop, recording (a, i, b)
// before every iteration. Independent of the machine definitions.
std::vector<B5State> bubblesort_states(SortArray a) {
    int n = static_cast<int>(a.size());
    int i = 0;
    int b = n;
    std::vector<B5State> out{{a, i, b}};
    while (b > 1) {
        if (i < b - 1) {
            if (a[i] > a[i + 1])
                std::swap(a[i], a[i + 1]);
            ++i;
        } else {
            i = 0;
            --b;
        }
        out.push_back({a, i, b});
    }
    return out;
}

const std::vector<B5State> table_one{
    {{8, 6, 7, 4}, 0, 4}, {{6, 8, 7, 4}, 1, 4}, {{6, 7, 8, 4}, 2, 4}, {{6, 7, 4, 8}, 3, 4},
    {{6, 7, 4, 8}, 0, 3}, {{6, 7, 4, 8}, 1, 3}, {{6, 4, 7, 8}, 2, 3}, {{6, 4, 7, 8}, 0, 2},
    {{4, 6, 7, 8}, 1, 2}, {{4, 6, 7, 8}, 0, 1},
};

} // namespace

TEST(B1, SwapAndInvolution) {
    auto m = machine_b1();
    EXPECT_EQ(step(m, ArrayState{{8, 6, 7, 4}}, act::Swap{0, 3}).state().array, (SortArray{4, 6, 7, 8}));
    for (auto& a : all_arrays(3, {0, 1, 2}))
        for (auto& act : m.actions_of(ArrayState{a})) {
            auto once = *m.step_fn(ArrayState{a}, act);
            EXPECT_EQ(*m.step_fn(once, act), ArrayState{a});
        }
}

TEST(B1, SingleElementHasNoActions) {
    EXPECT_TRUE(enabled(machine_b1(), ArrayState{{7}}).empty());
    EXPECT_TRUE(enabled(machine_b1(), ArrayState{{}}).empty());
}

TEST(B2, EnabledPairsAreInversions) {
    auto en = enabled(machine_b2(), ArrayState{{8, 6, 7, 4}});
    std::vector<Action> expected{act::Order{0, 1}, act::Order{0, 2}, act::Order{0, 3}, act::Order{1, 3},
                                 act::Order{2, 3}};
    EXPECT_EQ(en, expected);
    EXPECT_TRUE(enabled(machine_b2(), ArrayState{{4, 6, 7, 8}}).empty());
    EXPECT_EQ(step(machine_b2(), ArrayState{{8, 6}}, act::Order{0, 1}).state().array, (SortArray{6, 8}));
}

TEST(B2, EqualElementsNeverSwap) {
    EXPECT_EQ(step(machine_b2(), ArrayState{{5, 5}}, act::Order{0, 1}).error(), StepError::guard_failed);
}

TEST(B3, AdjacentOrdering) {
    auto m = machine_b3();
    EXPECT_EQ(step(m, ArrayState{{8, 6, 7, 4}}, act::Adj{0}).state().array, (SortArray{6, 8, 7, 4}));
    EXPECT_EQ(step(m, ArrayState{{6, 8, 7, 4}}, act::Adj{1}).state().array, (SortArray{6, 7, 8, 4}));
    EXPECT_TRUE(enabled(m, ArrayState{{1, 2, 3}}).empty());
    EXPECT_EQ(step(m, ArrayState{{1, 2, 3}}, act::Adj{2}).error(), StepError::malformed_action);
}

TEST(B2B3, TerminalIffSorted) {
    for (auto& a : all_arrays(4, {0, 1, 2, 3})) {
        EXPECT_EQ(is_terminal(machine_b2(), ArrayState{a}), sortedness(a)) << to_string(a);
        EXPECT_EQ(is_terminal(machine_b3(), ArrayState{a}), sortedness(a)) << to_string(a);
    }
}

TEST(B2B3, StepsDecreaseInversions) {
    for (auto& a : all_arrays(4, {0, 1, 2, 3})) {
        for (auto& act : enabled(machine_b2(), ArrayState{a}))
            EXPECT_LT(inversions(machine_b2().step_fn(ArrayState{a}, act)->array), inversions(a));
        for (auto& act : enabled(machine_b3(), ArrayState{a}))
            EXPECT_EQ(inversions(machine_b3().step_fn(ArrayState{a}, act)->array) + 1, inversions(a));
    }
}

TEST(B4, IncAndReset) {
    auto m = machine_b4();
    EXPECT_EQ(step(m, B4State{{8, 6, 7, 4}, 0}, act::Inc{}).state(), (B4State{{6, 8, 7, 4}, 1}));
    EXPECT_EQ(step(m, B4State{{6, 7, 4, 8}, 3}, act::Reset{}).state(), (B4State{{6, 7, 4, 8}, 0}));
    EXPECT_EQ(step(m, B4State{{4, 6}, 1}, act::Inc{}).error(), StepError::guard_failed);
}

TEST(B4, ResetAtZeroIsSelfLoop) {
    auto m = machine_b4();
    B4State s{{3, 1, 2}, 0};
    EXPECT_EQ(step(m, s, act::Reset{}).state(), s);
}

TEST(B4, SweepCarriesRunningMaximum) {
    auto m = machine_b4();
    for (auto& a : all_arrays(4, {0, 1, 2, 3})) {
        B4State s{a, 0};
        for (int k = 1; k <= 3; ++k) {
            s = step(m, s, act::Inc{}).state();
            EXPECT_EQ(s.array[k], *std::max_element(a.begin(), a.begin() + k + 1));
        }
    }
}

TEST(B5, StepExamples) {
    auto m = machine_b5();
    EXPECT_EQ(step(m, B5State{{6, 7, 4, 8}, 3, 4}, act::Next{}).state(), (B5State{{6, 7, 4, 8}, 0, 3}));
    EXPECT_EQ(step(m, B5State{{8, 6, 7, 4}, 0, 4}, act::Next{}).state(), (B5State{{6, 8, 7, 4}, 1, 4}));
    EXPECT_TRUE(enabled(m, B5State{{4, 6, 7, 8}, 0, 1}).empty());
    EXPECT_EQ(step(m, B5State{{4, 6, 7, 8}, 0, 1}, act::Next{}).error(), StepError::guard_failed);
}

TEST(B5, InitialStateAndSmallArrays) {
    auto m = machine_b5();
    EXPECT_EQ(m.initial_of({8, 6, 7, 4}), (B5State{{8, 6, 7, 4}, 0, 4}));
    EXPECT_TRUE(is_terminal(m, m.initial_of({5})));
    EXPECT_TRUE(is_terminal(m, m.initial_of({})));
}

TEST(B5, TableOneTrajectory) {
    auto m = machine_b5();
    auto run = auto_run(m, m.initial_of({8, 6, 7, 4}));
    EXPECT_EQ(run.trajectory(), table_one);
}

TEST(B5, MatchesImperativeBubblesort) {
    auto m = machine_b5();
    std::vector<SortArray> corpus = all_arrays(4, {0, 1, 2, 3});
    for (auto& p : all_permutations(5))
        corpus.push_back(p);
    for (auto& a : corpus)
        EXPECT_EQ(auto_run(m, m.initial_of(a)).trajectory(), bubblesort_states(a)) << to_string(a);
}

TEST(B5, RunLengthClosedForm) {
    auto m = machine_b5();
    for (std::size_t n = 0; n <= 7; ++n) {
        SortArray a(n);
        for (std::size_t k = 0; k < n; ++k)
            a[k] = static_cast<int>(n - k);
        auto run = auto_run(m, m.initial_of(a));
        EXPECT_EQ(run.steps.size(), b5_run_length(n)) << n;
        EXPECT_EQ(run.steps.size(), bubblesort_states(a).size() - 1);
    }
    EXPECT_EQ(b5_run_length(4), 9u);
}

TEST(B5D, SortedInputTakesNSteps) {
    auto m = machine_b5d();
    auto run = auto_run(m, m.initial_of({1, 2, 3, 4}));
    std::vector<B5DState> expected{
        {{1, 2, 3, 4}, 0, 4, false}, {{1, 2, 3, 4}, 1, 4, false}, {{1, 2, 3, 4}, 2, 4, false},
        {{1, 2, 3, 4}, 3, 4, false}, {{1, 2, 3, 4}, 0, 1, false},
    };
    EXPECT_EQ(run.trajectory(), expected);
    EXPECT_EQ(auto_run(m, m.initial_of({1, 2, 3})).steps.size(), 3u);
    EXPECT_EQ(auto_run(m, m.initial_of({4, 9})).steps.size(), 2u);
}

TEST(B5D, TwoElementSwap) {
    auto m = machine_b5d();
    auto run = auto_run(m, m.initial_of({2, 1}));
    std::vector<B5DState> expected{{{2, 1}, 0, 2, false}, {{1, 2}, 1, 2, true}, {{1, 2}, 0, 1, false}};
    EXPECT_EQ(run.trajectory(), expected);
}

TEST(B5D, ThreeElementHandTrace) {
    auto m = machine_b5d();
    auto run = auto_run(m, m.initial_of({3, 1, 2}));
    std::vector<B5DState> expected{
        {{3, 1, 2}, 0, 3, false}, {{1, 3, 2}, 1, 3, true}, {{1, 2, 3}, 2, 3, true},
        {{1, 2, 3}, 0, 2, false}, {{1, 2, 3}, 1, 2, false}, {{1, 2, 3}, 0, 1, false},
    };
    EXPECT_EQ(run.trajectory(), expected);
}

TEST(B5D, TinyInputsStartTerminal) {
    auto m = machine_b5d();
    EXPECT_TRUE(is_terminal(m, m.initial_of({})));
    EXPECT_TRUE(is_terminal(m, m.initial_of({3})));
}

TEST(B5D, NeverSlowerThanB5) {
    for (auto& a : all_arrays(4, {0, 1, 2, 3})) {
        auto d = auto_run(machine_b5d(), machine_b5d().initial_of(a));
        auto b = auto_run(machine_b5(), machine_b5().initial_of(a));
        EXPECT_LE(d.steps.size(), b.steps.size());
        EXPECT_TRUE(sortedness(d.last().array));
    }
}

TEST(Permutation, EveryStepPreservesMultiset) {
    for (auto& id : base_machine_ids()) {
        auto m = make_machine(id);
        for (auto& a : all_arrays(3, {0, 1, 2})) {
            auto ex = explore(m, m.initial_of(a), 10);
            for (auto& t : ex.transitions)
                EXPECT_TRUE(is_permutation(array_of(ex.states[t.to]), array_of(ex.states[t.from])));
        }
    }
}

TEST(Registry, Identifiers) {
    for (auto& id : base_machine_ids()) {
        EXPECT_EQ(make_machine(id).id, id);
        EXPECT_EQ(make_machine(id + "!").id, id + "!");
        EXPECT_TRUE(make_machine(id + "!").input_enabled);
    }
    EXPECT_THROW(make_machine("B6"), unknown_machine);
    EXPECT_THROW(make_machine(""), unknown_machine);
    EXPECT_THROW(make_machine("B5!!"), unknown_machine);
    EXPECT_TRUE(is_automated_id("B5"));
    EXPECT_TRUE(is_automated_id("B5D"));
    EXPECT_FALSE(is_automated_id("B4"));
}

TEST(Registry, ErasedStateOfWrongShapeIsMalformed) {
    auto m = make_machine("B4");
    EXPECT_EQ(step(m, AnyState{ArrayState{{1, 2}}}, act::Inc{}).error(), StepError::malformed_action);
}
