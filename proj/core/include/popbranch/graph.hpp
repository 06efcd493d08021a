#pragma once

// Vertex-weighted digraph with per-head total-preorder edge preferences.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace popbranch {

using VertexIndex = std::uint32_t;
using EdgeIndex = std::uint32_t;
using Weight = std::int64_t;
using Rank = std::int64_t;

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<VertexIndex>;
// Sorted, duplicate-free list of edge indices.
using EdgeSet = std::vector<EdgeIndex>;

inline constexpr std::string_view kRootLabel = "r";

struct Edge {
    VertexIndex src;
    VertexIndex dst;
    Rank rank;
};

enum class GraphErrorCode {
    DuplicateId,
    ReservedId,
    SelfLoop,
    UnknownEndpoint,
    MissingWeight,
    NonpositiveWeight,
    MissingRank,
    NonpositiveRank,
    HeadMismatch,
};

std::string_view to_string(GraphErrorCode code);

// Which input element a validation error refers to.
enum class ElementKind { Vertex, Edge, None };

class GraphError : public std::runtime_error {
  public:
    GraphError(GraphErrorCode code, ElementKind element, std::size_t position, const std::string& what)
        : std::runtime_error(what), code_(code), element_(element), position_(position) {}

    GraphErrorCode code() const noexcept { return code_; }
    ElementKind element() const noexcept { return element_; }
    // Index of the offending element in the input sequence.
    std::size_t position() const noexcept { return position_; }

  private:
    GraphErrorCode code_;
    ElementKind element_;
    std::size_t position_;
};

struct VertexInput {
    std::string id;
    std::optional<Weight> weight;

    friend bool operator==(const VertexInput&, const VertexInput&) = default;
};

struct EdgeInput {
    std::string id;
    std::string src;
    std::string dst;
    std::optional<Rank> rank;

    friend bool operator==(const EdgeInput&, const EdgeInput&) = default;
};

// Immutable digraph. Vertices and edges are indexed densely in ascending id
// order, and every adjacency list is sorted by edge index.
class Digraph {
  public:
    Digraph() = default;

    std::size_t vertex_count() const noexcept { return vertex_labels_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const Edge& edge(EdgeIndex e) const { return edges_[e]; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    Weight weight(VertexIndex v) const { return weights_[v]; }
    std::span<const Weight> weights() const noexcept { return weights_; }
    Rank rank(EdgeIndex e) const { return edges_[e].rank; }

    std::span<const EdgeIndex> in_edges(VertexIndex v) const { return in_[v]; }
    std::span<const EdgeIndex> out_edges(VertexIndex v) const { return out_[v]; }

    const std::string& vertex_label(VertexIndex v) const { return vertex_labels_[v]; }
    const std::string& edge_label(EdgeIndex e) const { return edge_labels_[e]; }

    std::optional<VertexIndex> find_vertex(std::string_view label) const;
    std::optional<EdgeIndex> find_edge(std::string_view label) const;

    // Sum of weights over all vertices.
    Weight total_weight() const noexcept;

    // Assembles a graph from already-validated parts. Edges must be given in
    // their final index order.
    static Digraph from_parts(std::vector<std::string> vertex_labels, std::vector<Weight> weights,
                              std::vector<std::string> edge_labels, std::vector<Edge> edges);

  private:
    std::vector<std::string> vertex_labels_;
    std::vector<Weight> weights_;
    std::vector<std::string> edge_labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeIndex>> in_;
    std::vector<std::vector<EdgeIndex>> out_;
    std::unordered_map<std::string, VertexIndex> vertex_lookup_;
    std::unordered_map<std::string, EdgeIndex> edge_lookup_;
};

// Validates the inputs and builds the graph. Throws GraphError.
Digraph build_digraph(std::span<const VertexInput> vertices, std::span<const EdgeInput> edges);

enum class Preference { FirstPreferred, Indifferent, SecondPreferred };

// Compares two edges entering the same vertex; smaller rank wins.
// Throws GraphError(HeadMismatch) when the heads differ.
Preference compare(const Digraph& graph, EdgeIndex e, EdgeIndex f);

// e strictly preferred to f (same head assumed).
inline bool dominates(const Digraph& graph, EdgeIndex e, EdgeIndex f) {
    return graph.rank(e) < graph.rank(f);
}

// Vertices reachable from `from` using only the given edges (including `from`).
VertexSet reachable_from(const Digraph& graph, std::span<const EdgeIndex> edge_subset, VertexIndex from);

struct SccPartition {
    std::vector<VertexSet> components;
    // Number of subset edges entering each component from another component.
    std::vector<std::size_t> in_degree;
    // Component of each vertex in the input set; -1 for vertices outside it.
    std::vector<std::int32_t> component_of;
};

// Strongly connected components of (vertex_set, edge_subset). Edges with an
// endpoint outside vertex_set are ignored. Components are listed in order of
// their smallest vertex.
SccPartition scc_partition(const Digraph& graph, std::span<const VertexIndex> vertex_set,
                           std::span<const EdgeIndex> edge_subset);

}  // namespace popbranch
