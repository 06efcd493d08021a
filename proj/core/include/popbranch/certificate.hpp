#pragma once

// Dual certificates of popularity: a weighted laminar family y over subsets
// of V_G, feasible for the dual of the min-cost arborescence LP under c_A,
// whose objective equals w(V_G).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "popbranch/augmented.hpp"
#include "popbranch/family.hpp"

namespace popbranch {

struct DualSet {
    VertexSet members;
    Weight value;
    // Entry point v with value == w(v).
    VertexIndex owner;

    friend bool operator==(const DualSet&, const DualSet&) = default;
};

struct DualSolution {
    std::vector<DualSet> sets;

    Weight objective() const;

    friend bool operator==(const DualSolution&, const DualSolution&) = default;
};

// Builds y for a solver output: for each maximal set X with |X| >= 2 and
// entry vertex v_X, Y_{v_X} is the strongly connected component containing
// v_X of X under S(X) plus the in-edges of v_X preferred to A*(v_X); every
// other vertex t owns {t}. Each owner's set carries its weight.
DualSolution build_dual(const AugmentedDigraph& d, const MaximalFamily& family, const Arborescence& a);

struct CheckResult {
    std::string name;
    bool passed = true;
    // Non-gating checks are informational and never fail a report.
    bool gating = true;
    std::vector<std::string> details;
};

struct EdgeViolation {
    EdgeIndex edge;
    Weight load;
    Weight cost;

    Weight slack() const { return cost - load; }
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    std::vector<EdgeViolation> edge_violations;

    bool ok() const;
    const CheckResult* find(std::string_view name) const;
    // Human-readable multi-line rendering.
    std::string summary() const;
};

// Sum of y(Y) over support sets Y entered by each edge of D, indexed by edge.
std::vector<Weight> edge_loads(const AugmentedDigraph& d, const DualSolution& y);

// Dual feasibility: nonnegative values, well-formed sets and load(e) <= c_A(e)
// for every edge of D.
VerificationReport verify_feasible(const AugmentedDigraph& d, const Arborescence& a, const DualSolution& y);

// Optimality and structure: objective == w(V_G), one tree edge entering each
// support set, tight load on tree edges, laminarity, at most two support sets
// per vertex, and the owner bijection. With a family, also checks that the
// tree enters each maximal set once, at a minimum-weight bottom vertex.
VerificationReport verify_popularity(const AugmentedDigraph& d, const Arborescence& a, const DualSolution& y,
                                     const MaximalFamily* family = nullptr);

// Pairwise laminarity test. Quadratic; kept for cross-checking.
bool is_laminar_pairwise(const std::vector<VertexSet>& sets);

}  // namespace popbranch
