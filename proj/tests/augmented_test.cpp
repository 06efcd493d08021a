#include <gtest/gtest.h>

#include <random>

#include "popbranch/augmented.hpp"
#include "test_support.hpp"

namespace popbranch {
namespace {

using testing::cycle3_instance;
using testing::pair_instance;
using testing::tree;

TEST(Augment, SingleVertexGetsOnlyRootEdge) {
    AugmentedDigraph d = augment(testing::make_instance({{"a", 4}}, {}));
    ASSERT_EQ(d.graph().edge_count(), 1u);
    EXPECT_EQ(d.graph().edge(0).src, d.root());
    EXPECT_EQ(d.graph().edge(0).dst, 0u);
    EXPECT_EQ(d.graph().vertex_label(d.root()), "r");
    EXPECT_EQ(d.total_weight(), 4);
}

TEST(Augment, PairInstance) {
    AugmentedDigraph d = augment(pair_instance());
    const Digraph& g = d.graph();
    EXPECT_EQ(g.edge_count(), 3u);
    EdgeIndex ab = 0, rb = d.root_edge(1);
    EXPECT_EQ(g.edge(d.root_edge(0)).src, d.root());
    EXPECT_EQ(g.edge(rb).src, d.root());
    EXPECT_TRUE(dominates(g, ab, rb));
    EXPECT_TRUE(d.is_root_edge(rb));
    EXPECT_FALSE(d.is_root_edge(ab));
}

TEST(Augment, EdgeCountIsInstanceEdgesPlusVertices) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Digraph g = testing::random_instance({1 + seed % 8, 0.5, 2, 0.2, false, seed});
        AugmentedDigraph d = augment(g);
        EXPECT_EQ(d.graph().edge_count(), g.edge_count() + g.vertex_count());
        EXPECT_EQ(d.graph().vertex_count(), g.vertex_count() + 1);
        EXPECT_TRUE(d.graph().in_edges(d.root()).empty());
    }
}

TEST(Arborescence, RejectsCyclesAndForeignEdges) {
    AugmentedDigraph d = augment(cycle3_instance(1, 1, 1));
    EXPECT_THROW(Arborescence(d, {2, 0, 1}), InvalidArborescence);
    EXPECT_THROW(Arborescence(d, {0, 0, 1}), InvalidArborescence);
    EXPECT_THROW(Arborescence(d, {3, 0}), InvalidArborescence);
    EXPECT_NO_THROW(Arborescence(d, {d.root_edge(0), 0, 1}));
    EXPECT_TRUE(arborescence_defect(d, std::vector<EdgeIndex>{2, 0, 1}).has_value());
}

TEST(EdgeCost, Examples) {
    AugmentedDigraph d = augment(pair_instance());
    Arborescence via_a = tree(d, {{"r", "a"}, {"a", "b"}});
    Arborescence direct = tree(d, {{"r", "a"}, {"r", "b"}});
    for (EdgeIndex e : via_a.in_edges()) EXPECT_EQ(edge_cost(d, via_a, e), d.weight(d.graph().edge(e).dst));
    EXPECT_EQ(edge_cost(d, via_a, d.root_edge(1)), 2);
    EXPECT_EQ(edge_cost(d, direct, 0), 0);
}

TEST(EdgeCost, RangeAndRootEdges) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        AugmentedDigraph d = augment(testing::random_instance({6, 0.4, 5, 0.3, false, seed}));
        auto all = testing::naive_arborescences(d);
        Arborescence a(d, all[seed % all.size()]);
        std::vector<Weight> costs = cost_vector(d, a);
        for (EdgeIndex e = 0; e < d.graph().edge_count(); ++e) {
            Weight w = d.weight(d.graph().edge(e).dst);
            EXPECT_TRUE(costs[e] == 0 || costs[e] == w || costs[e] == 2 * w);
            EXPECT_EQ(costs[e], edge_cost(d, a, e));
            if (d.is_root_edge(e)) EXPECT_NE(costs[e], 0);
        }
    }
}

TEST(DeltaW, Examples) {
    AugmentedDigraph pair = augment(pair_instance());
    Arborescence via_a = tree(pair, {{"r", "a"}, {"a", "b"}});
    Arborescence direct = tree(pair, {{"r", "a"}, {"r", "b"}});
    EXPECT_EQ(delta_w(pair, via_a, via_a), 0);
    EXPECT_EQ(delta_w(pair, via_a, direct), 1);

    AugmentedDigraph cycle = augment(cycle3_instance(3, 2, 2));
    Arborescence rooted_b = tree(cycle, {{"r", "b"}, {"b", "c"}, {"c", "a"}});
    Arborescence rooted_a = tree(cycle, {{"r", "a"}, {"a", "b"}, {"b", "c"}});
    EXPECT_EQ(delta_w(cycle, rooted_b, rooted_a), 1);
    EXPECT_EQ(delta_w(cycle, rooted_b, rooted_a), testing::naive_delta(cycle, rooted_b.in_edges(), rooted_a.in_edges()));
}

TEST(TotalCost, Examples) {
    AugmentedDigraph d = augment(pair_instance());
    Arborescence via_a = tree(d, {{"r", "a"}, {"a", "b"}});
    Arborescence direct = tree(d, {{"r", "a"}, {"r", "b"}});
    EXPECT_EQ(total_cost(d, via_a, via_a), 2);
    EXPECT_EQ(total_cost(d, via_a, direct), 3);
    EXPECT_EQ(total_cost(d, via_a, direct), total_cost(d, via_a, via_a) + delta_w(d, via_a, direct));
}

TEST(TotalCost, IdentityAndAntisymmetryExhaustively) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        AugmentedDigraph d = augment(testing::random_instance({1 + seed % 5, 0.5, 4, 0.3, false, seed}));
        auto all = testing::naive_arborescences(d);
        for (const auto& x : all) {
            Arborescence a(d, x);
            EXPECT_EQ(total_cost(d, a, a), d.total_weight());
            for (const auto& y : all) {
                Arborescence b(d, y);
                Weight delta = delta_w(d, a, b);
                EXPECT_EQ(delta, testing::naive_delta(d, x, y));
                EXPECT_EQ(delta, -delta_w(d, b, a));
                EXPECT_EQ(total_cost(d, a, b), d.total_weight() + delta);
            }
        }
    }
}

TEST(WeightAssumption, Examples) {
    WeightAssumption ok = check_weight_assumption(cycle3_instance(3, 2, 2));
    EXPECT_TRUE(ok.holds);
    EXPECT_FALSE(ok.violation.has_value());

    WeightAssumption bad = check_weight_assumption(cycle3_instance(3, 1, 1));
    ASSERT_FALSE(bad.holds);
    EXPECT_EQ(bad.violation->s, 1u);
    EXPECT_EQ(bad.violation->t, 2u);
    EXPECT_EQ(bad.violation->u, 0u);

    for (Weight k : {1, 2, 7}) EXPECT_TRUE(check_weight_assumption(cycle3_instance(k, k, k)).holds);
}

TEST(WeightAssumption, AgreesWithAllTriples) {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 500; ++round) {
        std::vector<Weight> w(rng() % 6 + 1);
        for (Weight& x : w) x = static_cast<Weight>(rng() % 6 + 1);
        bool holds = true;
        for (std::size_t s = 0; s < w.size(); ++s)
            for (std::size_t t = 0; t < w.size(); ++t)
                for (std::size_t u = 0; u < w.size(); ++u)
                    if (s != t && s != u && t != u && w[s] + w[t] <= w[u]) holds = false;
        WeightAssumption check = check_weight_assumption(w);
        EXPECT_EQ(check.holds, holds);
        if (!holds) {
            const WeightTriple& t = *check.violation;
            EXPECT_LE(w[t.s] + w[t.t], w[t.u]);
        }
    }
}

}  // namespace
}  // namespace popbranch
