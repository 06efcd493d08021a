#include "popbranch/graph.hpp"

#include <algorithm>
#include <numeric>

namespace popbranch {

std::string_view to_string(GraphErrorCode code) {
    switch (code) {
        case GraphErrorCode::DuplicateId: return "DuplicateId";
        case GraphErrorCode::ReservedId: return "ReservedId";
        case GraphErrorCode::SelfLoop: return "SelfLoop";
        case GraphErrorCode::UnknownEndpoint: return "UnknownEndpoint";
        case GraphErrorCode::MissingWeight: return "MissingWeight";
        case GraphErrorCode::NonpositiveWeight: return "NonpositiveWeight";
        case GraphErrorCode::MissingRank: return "MissingRank";
        case GraphErrorCode::NonpositiveRank: return "NonpositiveRank";
        case GraphErrorCode::HeadMismatch: return "HeadMismatch";
    }
    return "Unknown";
}

std::optional<VertexIndex> Digraph::find_vertex(std::string_view label) const {
    auto it = vertex_lookup_.find(std::string(label));
    if (it == vertex_lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<EdgeIndex> Digraph::find_edge(std::string_view label) const {
    auto it = edge_lookup_.find(std::string(label));
    if (it == edge_lookup_.end()) return std::nullopt;
    return it->second;
}

Weight Digraph::total_weight() const noexcept {
    return std::accumulate(weights_.begin(), weights_.end(), Weight{0});
}

Digraph Digraph::from_parts(std::vector<std::string> vertex_labels, std::vector<Weight> weights,
                            std::vector<std::string> edge_labels, std::vector<Edge> edges) {
    Digraph g;
    g.vertex_labels_ = std::move(vertex_labels);
    g.weights_ = std::move(weights);
    g.edge_labels_ = std::move(edge_labels);
    g.edges_ = std::move(edges);
    g.in_.resize(g.vertex_labels_.size());
    g.out_.resize(g.vertex_labels_.size());
    for (EdgeIndex e = 0; e < g.edges_.size(); ++e) {
        g.in_[g.edges_[e].dst].push_back(e);
        g.out_[g.edges_[e].src].push_back(e);
    }
    for (VertexIndex v = 0; v < g.vertex_labels_.size(); ++v) g.vertex_lookup_.emplace(g.vertex_labels_[v], v);
    // Labels need not be unique here (root edges share one); the first wins.
    for (EdgeIndex e = 0; e < g.edge_labels_.size(); ++e) g.edge_lookup_.emplace(g.edge_labels_[e], e);
    return g;
}

Digraph build_digraph(std::span<const VertexInput> vertices, std::span<const EdgeInput> edges) {
    std::vector<std::size_t> vorder(vertices.size());
    std::iota(vorder.begin(), vorder.end(), std::size_t{0});
    std::stable_sort(vorder.begin(), vorder.end(),
                     [&](std::size_t a, std::size_t b) { return vertices[a].id < vertices[b].id; });

    std::unordered_map<std::string, VertexIndex> index_of;
    std::vector<std::string> labels;
    std::vector<Weight> weights;
    for (std::size_t pos : vorder) {
        const auto& v = vertices[pos];
        if (v.id == kRootLabel)
            throw GraphError(GraphErrorCode::ReservedId, ElementKind::Vertex, pos,
                             "vertex id '" + v.id + "' is reserved for the root");
        if (v.id.empty())
            throw GraphError(GraphErrorCode::DuplicateId, ElementKind::Vertex, pos, "empty vertex id");
        if (!v.weight)
            throw GraphError(GraphErrorCode::MissingWeight, ElementKind::Vertex, pos,
                             "vertex '" + v.id + "' has no weight");
        if (*v.weight < 1)
            throw GraphError(GraphErrorCode::NonpositiveWeight, ElementKind::Vertex, pos,
                             "vertex '" + v.id + "' has weight " + std::to_string(*v.weight));
        if (!index_of.emplace(v.id, static_cast<VertexIndex>(labels.size())).second)
            throw GraphError(GraphErrorCode::DuplicateId, ElementKind::Vertex, pos,
                             "duplicate vertex id '" + v.id + "'");
        labels.push_back(v.id);
        weights.push_back(*v.weight);
    }

    std::vector<std::size_t> eorder(edges.size());
    std::iota(eorder.begin(), eorder.end(), std::size_t{0});
    std::stable_sort(eorder.begin(), eorder.end(),
                     [&](std::size_t a, std::size_t b) { return edges[a].id < edges[b].id; });

    std::vector<std::string> edge_labels;
    std::vector<Edge> built;
    for (std::size_t i = 0; i < eorder.size(); ++i) {
        std::size_t pos = eorder[i];
        const auto& e = edges[pos];
        if (e.id.empty())
            throw GraphError(GraphErrorCode::DuplicateId, ElementKind::Edge, pos, "empty edge id");
        if (i > 0 && edges[eorder[i - 1]].id == e.id)
            throw GraphError(GraphErrorCode::DuplicateId, ElementKind::Edge, pos, "duplicate edge id '" + e.id + "'");
        auto src = index_of.find(e.src);
        auto dst = index_of.find(e.dst);
        if (src == index_of.end())
            throw GraphError(GraphErrorCode::UnknownEndpoint, ElementKind::Edge, pos,
                             "edge '" + e.id + "' has unknown source '" + e.src + "'");
        if (dst == index_of.end())
            throw GraphError(GraphErrorCode::UnknownEndpoint, ElementKind::Edge, pos,
                             "edge '" + e.id + "' has unknown destination '" + e.dst + "'");
        if (src->second == dst->second)
            throw GraphError(GraphErrorCode::SelfLoop, ElementKind::Edge, pos, "edge '" + e.id + "' is a self-loop");
        if (!e.rank)
            throw GraphError(GraphErrorCode::MissingRank, ElementKind::Edge, pos, "edge '" + e.id + "' has no rank");
        if (*e.rank < 1)
            throw GraphError(GraphErrorCode::NonpositiveRank, ElementKind::Edge, pos,
                             "edge '" + e.id + "' has rank " + std::to_string(*e.rank));
        edge_labels.push_back(e.id);
        built.push_back(Edge{src->second, dst->second, *e.rank});
    }
    return Digraph::from_parts(std::move(labels), std::move(weights), std::move(edge_labels), std::move(built));
}

Preference compare(const Digraph& graph, EdgeIndex e, EdgeIndex f) {
    if (graph.edge(e).dst != graph.edge(f).dst)
        throw GraphError(GraphErrorCode::HeadMismatch, ElementKind::Edge, e,
                         "edges '" + graph.edge_label(e) + "' and '" + graph.edge_label(f) +
                             "' enter different vertices");
    Rank a = graph.rank(e);
    Rank b = graph.rank(f);
    if (a < b) return Preference::FirstPreferred;
    if (a > b) return Preference::SecondPreferred;
    return Preference::Indifferent;
}

VertexSet reachable_from(const Digraph& graph, std::span<const EdgeIndex> edge_subset, VertexIndex from) {
    const std::size_t n = graph.vertex_count();
    std::vector<std::vector<VertexIndex>> adj(n);
    for (EdgeIndex e : edge_subset) adj[graph.edge(e).src].push_back(graph.edge(e).dst);

    std::vector<char> seen(n, 0);
    std::vector<VertexIndex> stack{from};
    seen[from] = 1;
    VertexSet result;
    while (!stack.empty()) {
        VertexIndex u = stack.back();
        stack.pop_back();
        result.push_back(u);
        for (VertexIndex w : adj[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

SccPartition scc_partition(const Digraph& graph, std::span<const VertexIndex> vertex_set,
                           std::span<const EdgeIndex> edge_subset) {
    const std::size_t n = graph.vertex_count();
    std::vector<char> member(n, 0);
    for (VertexIndex v : vertex_set) member[v] = 1;

    std::vector<std::vector<VertexIndex>> adj(n);
    for (EdgeIndex e : edge_subset) {
        const Edge& ed = graph.edge(e);
        if (member[ed.src] && member[ed.dst]) adj[ed.src].push_back(ed.dst);
    }

    // Iterative Tarjan.
    constexpr std::int32_t unvisited = -1;
    std::vector<std::int32_t> number(n, unvisited), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<VertexIndex> stack;
    std::vector<std::pair<VertexIndex, std::size_t>> call;
    std::vector<VertexSet> found;
    std::int32_t counter = 0;

    VertexSet sorted(vertex_set.begin(), vertex_set.end());
    std::sort(sorted.begin(), sorted.end());
    for (VertexIndex root : sorted) {
        if (number[root] != unvisited) continue;
        call.emplace_back(root, 0);
        number[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& [v, next] = call.back();
            if (next < adj[v].size()) {
                VertexIndex w = adj[v][next++];
                if (number[w] == unvisited) {
                    number[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], number[w]);
                }
                continue;
            }
            VertexIndex done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == number[done]) {
                VertexSet comp;
                VertexIndex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp.push_back(w);
                } while (w != done);
                std::sort(comp.begin(), comp.end());
                found.push_back(std::move(comp));
            }
        }
    }

    std::sort(found.begin(), found.end(), [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });

    SccPartition result;
    result.component_of.assign(n, -1);
    for (std::size_t c = 0; c < found.size(); ++c)
        for (VertexIndex v : found[c]) result.component_of[v] = static_cast<std::int32_t>(c);
    result.in_degree.assign(found.size(), 0);
    for (EdgeIndex e : edge_subset) {
        const Edge& ed = graph.edge(e);
        if (!member[ed.src] || !member[ed.dst]) continue;
        auto cs = result.component_of[ed.src];
        auto cd = result.component_of[ed.dst];
        if (cs != cd) ++result.in_degree[cd];
    }
    result.components = std::move(found);
    return result;
}

}  // namespace popbranch
