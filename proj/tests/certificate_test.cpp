#include <gtest/gtest.h>

#include "popbranch/certificate.hpp"
#include "popbranch/oracle.hpp"
#include "popbranch/solver.hpp"
#include "test_support.hpp"

namespace popbranch {
namespace {

struct Solved {
    AugmentedDigraph d;
    PopularFound found;
};

Solved solved(const Digraph& g) {
    AugmentedDigraph d = augment(g);
    SolveOutcome outcome = solve(d);
    return {d, std::get<PopularFound>(outcome)};
}

const DualSet* owned_by(const DualSolution& y, VertexIndex owner) {
    for (const DualSet& s : y.sets)
        if (s.owner == owner) return &s;
    return nullptr;
}

TEST(BuildDual, PairInstance) {
    auto [d, found] = solved(testing::pair_instance());
    ASSERT_EQ(found.certificate.sets.size(), 2u);
    EXPECT_EQ(owned_by(found.certificate, 0)->members, VertexSet{0});
    EXPECT_EQ(owned_by(found.certificate, 1)->members, VertexSet{1});
    for (const DualSet& s : found.certificate.sets) EXPECT_EQ(s.value, 1);
    EXPECT_EQ(found.certificate.objective(), 2);
    EXPECT_TRUE(verify_feasible(d, found.arborescence, found.certificate).ok());
    EXPECT_TRUE(verify_popularity(d, found.arborescence, found.certificate, &found.family).ok());
}

TEST(BuildDual, WeightedCycle) {
    auto [d, found] = solved(testing::cycle3_instance(3, 2, 2));
    const DualSolution& y = found.certificate;
    ASSERT_EQ(y.sets.size(), 3u);
    EXPECT_EQ(owned_by(y, 1)->members, (VertexSet{0, 1, 2}));
    EXPECT_EQ(owned_by(y, 1)->value, 2);
    EXPECT_EQ(owned_by(y, 0)->members, VertexSet{0});
    EXPECT_EQ(owned_by(y, 0)->value, 3);
    EXPECT_EQ(owned_by(y, 2)->members, VertexSet{2});
    EXPECT_EQ(owned_by(y, 2)->value, 2);
    EXPECT_EQ(y.objective(), 7);

    std::vector<Weight> load = edge_loads(d, y);
    EXPECT_EQ(load[d.root_edge(2)], 4);
    EXPECT_EQ(edge_cost(d, found.arborescence, d.root_edge(2)), 4);
    EXPECT_TRUE(verify_feasible(d, found.arborescence, y).ok());
    EXPECT_TRUE(verify_popularity(d, found.arborescence, y, &found.family).ok());
}

TEST(BuildDual, IsolatedVerticesGetSingletons) {
    auto [d, found] = solved(testing::make_instance({{"a", 2}, {"b", 3}, {"c", 4}}, {}));
    for (VertexIndex v = 0; v < 3; ++v) {
        EXPECT_EQ(owned_by(found.certificate, v)->members, VertexSet{v});
        EXPECT_EQ(owned_by(found.certificate, v)->value, d.weight(v));
    }
}

TEST(VerifyFeasible, ZeroDualIsFeasible) {
    AugmentedDigraph d = augment(testing::cycle3_instance(3, 2, 2));
    Arborescence a = testing::tree(d, {{"r", "b"}, {"b", "c"}, {"c", "a"}});
    DualSolution zero{{{VertexSet{0, 1, 2}, 0, 1}, {VertexSet{0}, 0, 0}}};
    EXPECT_TRUE(verify_feasible(d, a, zero).ok());
    EXPECT_EQ(zero.objective(), 0);
}

TEST(VerifyPopularity, PerturbedCertificateFails) {
    auto [d, found] = solved(testing::cycle3_instance(3, 2, 2));
    DualSolution y = found.certificate;
    for (DualSet& s : y.sets)
        if (s.members.size() == 3) s.value = 3;
    EXPECT_EQ(y.objective(), 8);

    VerificationReport popular = verify_popularity(d, found.arborescence, y);
    EXPECT_FALSE(popular.ok());
    EXPECT_FALSE(popular.find("objective_equals_total_weight")->passed);

    VerificationReport feasible = verify_feasible(d, found.arborescence, y);
    EXPECT_FALSE(feasible.ok());
    bool saw_rb = false;
    for (const EdgeViolation& v : feasible.edge_violations)
        if (v.edge == d.root_edge(1)) {
            saw_rb = true;
            EXPECT_EQ(v.load, 3);
            EXPECT_EQ(v.cost, 2);
            EXPECT_EQ(v.slack(), -1);
        }
    EXPECT_TRUE(saw_rb);
}

TEST(VerifyPopularity, ThreeNestedSetsFailTwoLayerCheck) {
    AugmentedDigraph d = augment(testing::make_instance({{"t", 1}, {"u", 1}, {"v", 1}}, {}));
    Arborescence a = testing::tree(d, {{"r", "t"}, {"r", "u"}, {"r", "v"}});
    DualSolution y{{{VertexSet{0, 1, 2}, 1, 0}, {VertexSet{1, 2}, 1, 1}, {VertexSet{2}, 1, 2}}};
    VerificationReport report = verify_popularity(d, a, y);
    EXPECT_FALSE(report.find("at_most_two_sets_per_vertex")->passed);
    EXPECT_TRUE(report.find("laminar")->passed);
}

TEST(IsLaminarPairwise, Examples) {
    EXPECT_TRUE(is_laminar_pairwise({{0, 1, 2}, {0}, {1, 2}, {3}}));
    EXPECT_FALSE(is_laminar_pairwise({{0, 1}, {1, 2}}));
}

// The objective check passes exactly when the tree is popular, for every
// arborescence paired with the solver's certificate shape.
TEST(Certificate, SolverCertificatesPassAndAgreeWithOracle) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GenParams params{1 + seed % 7, 0.2 + 0.25 * (seed % 3), 4, 0.3, true, seed};
        AugmentedDigraph d = augment(testing::random_instance(params));
        SolveOutcome outcome = solve(d);
        const auto* found = std::get_if<PopularFound>(&outcome);
        if (!found) continue;
        EXPECT_TRUE(found->certificate_verified);
        EXPECT_TRUE(verify_feasible(d, found->arborescence, found->certificate).ok()) << "seed " << seed;
        VerificationReport report = verify_popularity(d, found->arborescence, found->certificate, &found->family);
        EXPECT_TRUE(report.ok()) << "seed " << seed << "\n" << report.summary();
        std::vector<VertexSet> sets;
        for (const DualSet& s : found->certificate.sets) sets.push_back(s.members);
        EXPECT_TRUE(is_laminar_pairwise(sets));
        EXPECT_TRUE(is_popular_exact(d, found->arborescence).popular);
    }
}

}  // namespace
}  // namespace popbranch
