#include "popbranch/augmented.hpp"

#include <algorithm>
#include <numeric>

namespace popbranch {

AugmentedDigraph::AugmentedDigraph(const Digraph& instance)
    : instance_vertices_(instance.vertex_count()), instance_edges_(instance.edge_count()) {
    const std::size_t n = instance.vertex_count();
    const std::size_t m = instance.edge_count();

    std::vector<std::string> vertex_labels;
    std::vector<Weight> weights;
    vertex_labels.reserve(n + 1);
    weights.reserve(n + 1);
    for (VertexIndex v = 0; v < n; ++v) {
        vertex_labels.push_back(instance.vertex_label(v));
        weights.push_back(instance.weight(v));
    }
    vertex_labels.emplace_back(kRootLabel);
    weights.push_back(0);

    std::vector<Rank> worst(n, 0);
    std::vector<std::string> edge_labels;
    std::vector<Edge> edges;
    edge_labels.reserve(m + n);
    edges.reserve(m + n);
    for (EdgeIndex e = 0; e < m; ++e) {
        const Edge& ed = instance.edge(e);
        worst[ed.dst] = std::max(worst[ed.dst], ed.rank);
        edges.push_back(ed);
        edge_labels.push_back(instance.edge_label(e));
    }
    const auto root = static_cast<VertexIndex>(n);
    for (VertexIndex v = 0; v < n; ++v) {
        edges.push_back(Edge{root, v, worst[v] + 1});
        edge_labels.emplace_back("root");
    }
    graph_ = Digraph::from_parts(std::move(vertex_labels), std::move(weights), std::move(edge_labels), std::move(edges));
}

AugmentedDigraph augment(const Digraph& instance) { return AugmentedDigraph(instance); }

std::optional<std::string> arborescence_defect(const AugmentedDigraph& d, std::span<const EdgeIndex> in_edge) {
    const std::size_t n = d.instance_vertex_count();
    const Digraph& g = d.graph();
    if (in_edge.size() != n)
        return "expected " + std::to_string(n) + " edges, got " + std::to_string(in_edge.size());
    for (VertexIndex v = 0; v < n; ++v) {
        if (in_edge[v] >= g.edge_count()) return "edge index out of range at vertex '" + g.vertex_label(v) + "'";
        if (g.edge(in_edge[v]).dst != v)
            return "edge '" + g.edge_label(in_edge[v]) + "' does not enter '" + g.vertex_label(v) + "'";
    }
    // Every vertex must reach the root by following parents.
    // 0 = unknown, 1 = on current path, 2 = reaches root.
    std::vector<char> state(n, 0);
    std::vector<VertexIndex> path;
    for (VertexIndex start = 0; start < n; ++start) {
        VertexIndex v = start;
        while (v != d.root() && state[v] == 0) {
            state[v] = 1;
            path.push_back(v);
            v = g.edge(in_edge[v]).src;
        }
        if (v != d.root() && state[v] == 1) return "cycle through '" + g.vertex_label(v) + "'";
        for (VertexIndex p : path) state[p] = 2;
        path.clear();
    }
    return std::nullopt;
}

Arborescence::Arborescence(const AugmentedDigraph& d, std::vector<EdgeIndex> in_edge) : in_edge_(std::move(in_edge)) {
    if (auto defect = arborescence_defect(d, in_edge_)) throw InvalidArborescence("not an r-arborescence: " + *defect);
}

EdgeSet Arborescence::edge_set() const {
    EdgeSet s(in_edge_.begin(), in_edge_.end());
    std::sort(s.begin(), s.end());
    return s;
}

Weight edge_cost(const AugmentedDigraph& d, const Arborescence& a, EdgeIndex e) {
    const Digraph& g = d.graph();
    VertexIndex v = g.edge(e).dst;
    switch (compare(g, e, a.in_edge(v))) {
        case Preference::FirstPreferred: return 0;
        case Preference::Indifferent: return g.weight(v);
        case Preference::SecondPreferred: return 2 * g.weight(v);
    }
    return 0;
}

std::vector<Weight> cost_vector(const AugmentedDigraph& d, const Arborescence& a) {
    std::vector<Weight> costs(d.graph().edge_count());
    for (EdgeIndex e = 0; e < costs.size(); ++e) costs[e] = edge_cost(d, a, e);
    return costs;
}

Weight delta_w(const AugmentedDigraph& d, const Arborescence& a, const Arborescence& a_prime) {
    const Digraph& g = d.graph();
    Weight margin = 0;
    for (VertexIndex v = 0; v < d.instance_vertex_count(); ++v) {
        switch (compare(g, a.in_edge(v), a_prime.in_edge(v))) {
            case Preference::FirstPreferred: margin += g.weight(v); break;
            case Preference::SecondPreferred: margin -= g.weight(v); break;
            case Preference::Indifferent: break;
        }
    }
    return margin;
}

Weight total_cost(const AugmentedDigraph& d, const Arborescence& a, const Arborescence& a_prime) {
    Weight sum = 0;
    for (EdgeIndex e : a_prime.in_edges()) sum += edge_cost(d, a, e);
    return sum;
}

WeightAssumption check_weight_assumption(std::span<const Weight> weights) {
    WeightAssumption result;
    const std::size_t n = weights.size();
    if (n == 0) return result;

    std::vector<VertexIndex> order(n);
    std::iota(order.begin(), order.end(), VertexIndex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexIndex a, VertexIndex b) { return weights[a] < weights[b]; });
    const Weight w_min = weights[order.front()];
    const Weight w_max = weights[order.back()];
    // Heaviest vertex with the smallest index.
    VertexIndex heaviest = *std::find_if(order.begin(), order.end(),
                                         [&](VertexIndex v) { return weights[v] == w_max; });

    result.holds_with_repetition = 2 * w_min > w_max;
    if (n >= 3) {
        VertexIndex s = order[0];
        VertexIndex t = order[1];
        if (weights[s] + weights[t] <= w_max) {
            result.holds = false;
            result.violation = WeightTriple{s, t, heaviest};
        }
    }
    return result;
}

}  // namespace popbranch
