#include "algodyn/array_ops.hpp"
#include "algodyn/verify.hpp"

#include <gtest/gtest.h>

using namespace algodyn;

TEST(SwapPrim, ExchangesTwoPositions) {
    EXPECT_EQ(swap_prim({8, 6, 7, 4}, 0, 3), (SortArray{4, 6, 7, 8}));
    EXPECT_EQ(swap_prim({8, 6, 7, 4}, 1, 2), (SortArray{8, 7, 6, 4}));
    EXPECT_EQ(swap_prim({5, 5}, 0, 1), (SortArray{5, 5}));
}

TEST(SwapPrim, RejectsBadIndices) {
    EXPECT_THROW(swap_prim({8, 6, 7, 4}, 3, 0), malformed_indices);
    EXPECT_THROW(swap_prim({8, 6, 7, 4}, 2, 2), malformed_indices);
    EXPECT_THROW(swap_prim({8, 6, 7, 4}, 1, 4), malformed_indices);
    EXPECT_THROW(swap_prim({8, 6, 7, 4}, -1, 2), malformed_indices);
}

TEST(OrderPrim, PlacesMinThenMax) {
    EXPECT_EQ(order_prim({8, 6}, 0, 1), (SortArray{6, 8}));
    EXPECT_EQ(order_prim({6, 8}, 0, 1), (SortArray{6, 8}));
    EXPECT_EQ(order_prim({6, 7, 4, 8}, 1, 2), (SortArray{6, 4, 7, 8}));
    EXPECT_THROW(order_prim({6, 8}, 1, 0), malformed_indices);
}

TEST(OrderPrim, OnlyTouchesTheTwoPositions) {
    for (auto& a : all_arrays(4, {0, 1, 2})) {
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                auto b = order_prim(a, i, j);
                EXPECT_EQ(b[i], std::min(a[i], a[j]));
                EXPECT_EQ(b[j], std::max(a[i], a[j]));
                for (int k = 0; k < 4; ++k)
                    if (k != i && k != j)
                        EXPECT_EQ(b[k], a[k]);
                EXPECT_TRUE(is_permutation(b, a));
            }
        }
    }
}

TEST(Predicates, Sortedness) {
    EXPECT_TRUE(sortedness({4, 6, 7, 8}));
    EXPECT_TRUE(sortedness({}));
    EXPECT_TRUE(sortedness({3, 3}));
    EXPECT_FALSE(sortedness({8, 6, 7, 4}));
}

TEST(Predicates, IsPermutation) {
    EXPECT_TRUE(is_permutation({6, 8, 7, 4}, {8, 6, 7, 4}));
    EXPECT_FALSE(is_permutation({6, 6, 7, 4}, {8, 6, 7, 4}));
    EXPECT_FALSE(is_permutation({6, 8, 7}, {8, 6, 7, 4}));
}

TEST(Predicates, InversionsMatchPairCount) {
    EXPECT_EQ(inversions({8, 6, 7, 4}), 5u);
    EXPECT_EQ(inversions({4, 6, 7, 8}), 0u);
    EXPECT_EQ(inversions({3, 2, 1}), 3u);
    EXPECT_EQ(inversions({1, 1}), 0u);
}

TEST(Predicates, InversionsVanishExactlyWhenSorted) {
    for (auto& a : all_arrays(4, {0, 1, 2, 3}))
        EXPECT_EQ(inversions(a) == 0, sortedness(a)) << to_string(a);
}

TEST(Format, Array) {
    EXPECT_EQ(to_string(SortArray{8, 6, 7, 4}), "[8, 6, 7, 4]");
    EXPECT_EQ(to_string(SortArray{}), "[]");
}
