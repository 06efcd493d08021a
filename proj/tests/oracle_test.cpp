#include <gtest/gtest.h>

#include <algorithm>

#include "popbranch/oracle.hpp"
#include "test_support.hpp"

namespace popbranch {
namespace {

std::vector<std::vector<EdgeIndex>> as_vectors(const std::vector<Arborescence>& trees) {
    std::vector<std::vector<EdgeIndex>> out;
    for (const Arborescence& a : trees) out.emplace_back(a.in_edges().begin(), a.in_edges().end());
    std::sort(out.begin(), out.end());
    return out;
}

TEST(Enumerate, Counts) {
    EXPECT_EQ(enumerate_arborescences(augment(testing::pair_instance())).size(), 2u);
    EXPECT_EQ(enumerate_arborescences(augment(testing::cycle3_instance(1, 1, 1))).size(), 7u);
    AugmentedDigraph single = augment(testing::make_instance({{"v", 1}}, {}));
    auto trees = enumerate_arborescences(single);
    ASSERT_EQ(trees.size(), 1u);
    EXPECT_EQ(trees[0].in_edge(0), single.root_edge(0));
}

TEST(Enumerate, MatchesProductEnumeration) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        AugmentedDigraph d = augment(testing::random_instance({1 + seed % 6, 0.5, 1, 0.0, false, seed}));
        EXPECT_EQ(as_vectors(enumerate_arborescences(d)), testing::naive_arborescences(d)) << "seed " << seed;
    }
}

TEST(Enumerate, CapIsEnforced) {
    AugmentedDigraph d = augment(testing::cycle3_instance(1, 1, 1));
    EXPECT_THROW(enumerate_arborescences(d, 6), CapExceeded);
    EXPECT_NO_THROW(enumerate_arborescences(d, 7));
}

TEST(MinCost, Examples) {
    AugmentedDigraph d = augment(testing::pair_instance());
    Arborescence a = testing::tree(d, {{"r", "a"}, {"a", "b"}});
    EXPECT_EQ(min_cost_arborescence(d, cost_vector(d, a)).cost, 2);
    std::vector<Weight> zero(d.graph().edge_count(), 0);
    EXPECT_EQ(min_cost_arborescence(d, zero).cost, 0);
}

TEST(MinCost, MatchesExhaustiveMinimum) {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        AugmentedDigraph d = augment(testing::random_instance({1 + seed % 8, 0.3 + 0.1 * (seed % 4), 5, 0.3, false, seed}));
        auto all = enumerate_arborescences(d);
        const Arborescence& reference = all[seed % all.size()];
        std::vector<Weight> costs = cost_vector(d, reference);
        MinCostArborescence best = min_cost_arborescence(d, costs);
        Weight expected = std::numeric_limits<Weight>::max();
        for (const Arborescence& a : all) expected = std::min(expected, total_cost(d, reference, a));
        EXPECT_EQ(best.cost, expected) << "seed " << seed;
        EXPECT_EQ(total_cost(d, reference, best.arborescence), best.cost);
    }
}

TEST(IsPopularExact, Examples) {
    AugmentedDigraph pair = augment(testing::pair_instance());
    EXPECT_TRUE(is_popular_exact(pair, testing::tree(pair, {{"r", "a"}, {"a", "b"}})).popular);
    PopularityVerdict direct = is_popular_exact(pair, testing::tree(pair, {{"r", "a"}, {"r", "b"}}));
    EXPECT_FALSE(direct.popular);
    ASSERT_TRUE(direct.witness.has_value());
    EXPECT_EQ(*direct.witness, testing::tree(pair, {{"r", "a"}, {"a", "b"}}));

    AugmentedDigraph cycle = augment(testing::cycle3_instance(3, 2, 2));
    PopularityVerdict rooted_a = is_popular_exact(cycle, testing::tree(cycle, {{"r", "a"}, {"a", "b"}, {"b", "c"}}));
    EXPECT_FALSE(rooted_a.popular);
    ASSERT_TRUE(rooted_a.witness.has_value());
    EXPECT_GT(testing::naive_delta(cycle, rooted_a.witness->in_edges(),
                                   testing::tree(cycle, {{"r", "a"}, {"a", "b"}, {"b", "c"}}).in_edges()),
              0);
}

TEST(BrutePopularSet, Examples) {
    AugmentedDigraph pair = augment(testing::pair_instance());
    auto pair_set = brute_popular_set(pair);
    ASSERT_EQ(pair_set.size(), 1u);
    EXPECT_EQ(pair_set[0], testing::tree(pair, {{"r", "a"}, {"a", "b"}}));

    AugmentedDigraph uniform = augment(testing::cycle3_instance(1, 1, 1));
    std::vector<Arborescence> expected{testing::tree(uniform, {{"r", "a"}, {"a", "b"}, {"b", "c"}}),
                                       testing::tree(uniform, {{"r", "b"}, {"b", "c"}, {"c", "a"}}),
                                       testing::tree(uniform, {{"r", "c"}, {"c", "a"}, {"a", "b"}})};
    EXPECT_EQ(as_vectors(brute_popular_set(uniform)), as_vectors(expected));

    AugmentedDigraph weighted = augment(testing::cycle3_instance(3, 2, 2));
    std::vector<Arborescence> expected_weighted{testing::tree(weighted, {{"r", "b"}, {"b", "c"}, {"c", "a"}}),
                                                testing::tree(weighted, {{"r", "c"}, {"c", "a"}, {"a", "b"}})};
    EXPECT_EQ(as_vectors(brute_popular_set(weighted)), as_vectors(expected_weighted));
}

// Popularity by min-cost agrees with pairwise comparison, both through the
// library and through the product enumeration in test code.
TEST(IsPopularExact, AgreesWithPairwiseComparison) {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        AugmentedDigraph d = augment(testing::random_instance({1 + seed % 6, 0.5, 3, 0.3, false, seed}));
        auto popular = testing::naive_popular(d);
        EXPECT_EQ(as_vectors(brute_popular_set(d)), popular) << "seed " << seed;
        for (const auto& x : testing::naive_arborescences(d)) {
            Arborescence a(d, x);
            PopularityVerdict verdict = is_popular_exact(d, a);
            EXPECT_EQ(verdict.popular, std::binary_search(popular.begin(), popular.end(), x));
            if (verdict.witness) EXPECT_GT(testing::naive_delta(d, verdict.witness->in_edges(), x), 0);
            EXPECT_EQ(verdict.popular, !verdict.witness.has_value());
        }
    }
}

}  // namespace
}  // namespace popbranch
