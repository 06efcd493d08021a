#pragma once

// The rooted digraph D (instance plus root and least-preferred root edges),
// arborescences of D, and the relative cost / popularity margin functions.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "popbranch/graph.hpp"

namespace popbranch {

// D = G + root r + one root edge (r, v) per instance vertex.
//
// Vertex indices 0..n-1 are the instance vertices (same order as G) and n is
// the root. Edge indices 0..m-1 are the instance edges (same order as G) and
// m + v is the root edge into v. A root edge's rank is one worse than the
// worst instance rank at its head.
class AugmentedDigraph {
  public:
    explicit AugmentedDigraph(const Digraph& instance);

    const Digraph& graph() const noexcept { return graph_; }

    VertexIndex root() const noexcept { return static_cast<VertexIndex>(instance_vertices_); }
    // |V_G|
    std::size_t instance_vertex_count() const noexcept { return instance_vertices_; }
    // |E_G|
    std::size_t instance_edge_count() const noexcept { return instance_edges_; }

    bool is_root_edge(EdgeIndex e) const noexcept { return e >= instance_edges_; }
    EdgeIndex root_edge(VertexIndex v) const noexcept { return static_cast<EdgeIndex>(instance_edges_ + v); }

    Weight weight(VertexIndex v) const { return graph_.weight(v); }
    std::span<const Weight> instance_weights() const noexcept {
        return graph_.weights().first(instance_vertices_);
    }
    // w(V_G)
    Weight total_weight() const noexcept { return graph_.total_weight(); }

  private:
    Digraph graph_;
    std::size_t instance_vertices_;
    std::size_t instance_edges_;
};

AugmentedDigraph augment(const Digraph& instance);

class InvalidArborescence : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// r-rooted spanning out-tree of D, stored as v -> A(v).
class Arborescence {
  public:
    // Validates that `in_edge[v]` enters v for every instance vertex and that
    // the edges form an out-tree rooted at r. Throws InvalidArborescence.
    Arborescence(const AugmentedDigraph& d, std::vector<EdgeIndex> in_edge);

    EdgeIndex in_edge(VertexIndex v) const { return in_edge_[v]; }
    std::span<const EdgeIndex> in_edges() const noexcept { return in_edge_; }
    std::size_t size() const noexcept { return in_edge_.size(); }

    // Edge indices sorted ascending.
    EdgeSet edge_set() const;

    friend bool operator==(const Arborescence&, const Arborescence&) = default;

  private:
    std::vector<EdgeIndex> in_edge_;
};

// Returns an explanation if the assignment is not an r-arborescence.
std::optional<std::string> arborescence_defect(const AugmentedDigraph& d, std::span<const EdgeIndex> in_edge);

// c_A(e): 0, w(v) or 2w(v) as e is preferred to, tied with, or worse than A(v).
Weight edge_cost(const AugmentedDigraph& d, const Arborescence& a, EdgeIndex e);

// c_A over every edge of D, indexed by edge.
std::vector<Weight> cost_vector(const AugmentedDigraph& d, const Arborescence& a);

// Weighted count of vertices preferring A over A' minus those preferring A'.
Weight delta_w(const AugmentedDigraph& d, const Arborescence& a, const Arborescence& a_prime);

// c_A(A') = sum of c_A over the edges of A'.
Weight total_cost(const AugmentedDigraph& d, const Arborescence& a, const Arborescence& a_prime);

struct WeightTriple {
    VertexIndex s;
    VertexIndex t;
    VertexIndex u;
};

struct WeightAssumption {
    // Gating verdict: w(s) + w(t) > w(u) for distinct s, t and any u.
    bool holds = true;
    std::optional<WeightTriple> violation;
    // Stricter reading that also allows s == t, i.e. additionally 2 w_min > w_max.
    bool holds_with_repetition = true;
};

// Evaluated over the weights of V_G.
WeightAssumption check_weight_assumption(std::span<const Weight> weights);

inline WeightAssumption check_weight_assumption(const Digraph& instance) {
    return check_weight_assumption(instance.weights());
}

}  // namespace popbranch
