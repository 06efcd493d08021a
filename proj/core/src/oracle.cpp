#include "popbranch/oracle.hpp"

#include <algorithm>
#include <limits>
#include <list>

namespace popbranch {

namespace {

struct WorkEdge {
    std::size_t src;
    std::size_t dst;
    Weight cost;
};

// Minimum-cost arborescence rooted at `root` over nodes 0..node_count-1.
// Returns indices into `edges` of the chosen in-edge per non-root node.
std::vector<std::size_t> edmonds(std::size_t node_count, std::size_t root, const std::vector<WorkEdge>& edges) {
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> best(node_count, none);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const WorkEdge& e = edges[i];
        if (e.dst == root || e.src == e.dst) continue;
        if (best[e.dst] == none || e.cost < edges[best[e.dst]].cost) best[e.dst] = i;
    }
    for (std::size_t v = 0; v < node_count; ++v)
        if (v != root && best[v] == none) throw std::logic_error("vertex unreachable from the root");

    // Find cycles among the cheapest in-edges.
    std::vector<std::size_t> cycle_of(node_count, none);
    std::vector<std::size_t> visited_by(node_count, none);
    std::size_t cycles = 0;
    for (std::size_t start = 0; start < node_count; ++start) {
        std::size_t v = start;
        while (v != root && visited_by[v] == none && cycle_of[v] == none) {
            visited_by[v] = start;
            v = edges[best[v]].src;
        }
        if (v != root && visited_by[v] == start && cycle_of[v] == none) {
            for (std::size_t u = v; cycle_of[u] == none; u = edges[best[u]].src) cycle_of[u] = cycles;
            ++cycles;
        }
    }

    std::vector<std::size_t> chosen(node_count, none);
    if (cycles == 0) {
        for (std::size_t v = 0; v < node_count; ++v)
            if (v != root) chosen[v] = best[v];
        return chosen;
    }

    // Contract each cycle to a single node.
    std::vector<std::size_t> component(node_count);
    std::size_t next = cycles;
    for (std::size_t v = 0; v < node_count; ++v) component[v] = cycle_of[v] != none ? cycle_of[v] : next++;

    std::vector<WorkEdge> reduced;
    std::vector<std::size_t> origin;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const WorkEdge& e = edges[i];
        std::size_t cu = component[e.src];
        std::size_t cv = component[e.dst];
        if (cu == cv || e.dst == root) continue;
        Weight cost = e.cost;
        if (cycle_of[e.dst] != none) cost -= edges[best[e.dst]].cost;
        reduced.push_back(WorkEdge{cu, cv, cost});
        origin.push_back(i);
    }
    std::vector<std::size_t> sub = edmonds(next, component[root], reduced);

    for (std::size_t c = 0; c < next; ++c) {
        if (c == component[root]) continue;
        std::size_t i = origin[sub[c]];
        chosen[edges[i].dst] = i;
    }
    // Inside each cycle keep the cheapest edges except into the entered vertex.
    for (std::size_t v = 0; v < node_count; ++v)
        if (cycle_of[v] != none && chosen[v] == none) chosen[v] = best[v];
    return chosen;
}

}  // namespace

void for_each_arborescence(const AugmentedDigraph& d, std::size_t cap,
                           const std::function<void(std::span<const EdgeIndex>)>& visit) {
    const Digraph& g = d.graph();
    const std::size_t n = d.instance_vertex_count();
    std::vector<EdgeIndex> in_edge(n, 0);
    std::vector<std::size_t> choice(n, 0);
    std::size_t produced = 0;

    // Does assigning in_edge[v] close a cycle through assigned vertices?
    auto closes_cycle = [&](VertexIndex v) {
        VertexIndex u = g.edge(in_edge[v]).src;
        for (std::size_t steps = 0; steps <= n; ++steps) {
            if (u == d.root() || u > v) return false;
            if (u == v) return true;
            u = g.edge(in_edge[u]).src;
        }
        return true;
    };

    if (n == 0) {
        if (cap < 1) throw CapExceeded(cap);
        visit(in_edge);
        return;
    }

    // Iterative backtracking over vertices 0..n-1; vertices > v are unassigned.
    std::size_t v = 0;
    choice[0] = 0;
    for (;;) {
        auto options = g.in_edges(static_cast<VertexIndex>(v));
        if (choice[v] == options.size()) {
            if (v == 0) return;
            --v;
            ++choice[v];
            continue;
        }
        in_edge[v] = options[choice[v]];
        if (closes_cycle(static_cast<VertexIndex>(v))) {
            ++choice[v];
            continue;
        }
        if (v + 1 == n) {
            if (++produced > cap) throw CapExceeded(cap);
            visit(in_edge);
            ++choice[v];
            continue;
        }
        ++v;
        choice[v] = 0;
    }
}

std::vector<Arborescence> enumerate_arborescences(const AugmentedDigraph& d, std::size_t cap) {
    std::vector<Arborescence> all;
    for_each_arborescence(d, cap, [&](std::span<const EdgeIndex> in_edge) {
        all.emplace_back(d, std::vector<EdgeIndex>(in_edge.begin(), in_edge.end()));
    });
    return all;
}

MinCostArborescence min_cost_arborescence(const AugmentedDigraph& d, std::span<const Weight> costs) {
    const Digraph& g = d.graph();
    std::vector<WorkEdge> edges;
    edges.reserve(g.edge_count());
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) edges.push_back(WorkEdge{g.edge(e).src, g.edge(e).dst, costs[e]});
    std::vector<std::size_t> chosen = edmonds(g.vertex_count(), d.root(), edges);

    std::vector<EdgeIndex> in_edge(d.instance_vertex_count());
    Weight total = 0;
    for (VertexIndex v = 0; v < d.instance_vertex_count(); ++v) {
        in_edge[v] = static_cast<EdgeIndex>(chosen[v]);
        total += costs[chosen[v]];
    }
    return MinCostArborescence{Arborescence(d, std::move(in_edge)), total};
}

PopularityVerdict is_popular_exact(const AugmentedDigraph& d, const Arborescence& a) {
    std::vector<Weight> costs = cost_vector(d, a);
    MinCostArborescence best = min_cost_arborescence(d, costs);
    PopularityVerdict verdict{best.cost == d.total_weight(), std::nullopt, best.cost};
    if (!verdict.popular) verdict.witness = std::move(best.arborescence);
    return verdict;
}

std::vector<Arborescence> brute_popular_set(const AugmentedDigraph& d, std::size_t cap) {
    const Digraph& g = d.graph();
    const std::size_t n = d.instance_vertex_count();

    std::vector<EdgeIndex> all;
    for_each_arborescence(d, cap, [&](std::span<const EdgeIndex> in_edge) {
        all.insert(all.end(), in_edge.begin(), in_edge.end());
    });
    const std::size_t count = n == 0 ? 1 : all.size() / n;

    // Delta_w only sees ranks, so compare distinct rank profiles.
    std::vector<std::vector<Rank>> profiles(count, std::vector<Rank>(n));
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t v = 0; v < n; ++v) profiles[i][v] = g.rank(all[i * n + v]);
    std::vector<std::vector<Rank>> distinct = profiles;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    auto beats = [&](const std::vector<Rank>& challenger, const std::vector<Rank>& target) {
        Weight margin = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (challenger[v] < target[v])
                margin += g.weight(static_cast<VertexIndex>(v));
            else if (challenger[v] > target[v])
                margin -= g.weight(static_cast<VertexIndex>(v));
        }
        return margin > 0;
    };

    // Recent successful challengers are tried first; most targets fall to one.
    std::list<std::size_t> champions;
    constexpr std::size_t kChampionCount = 16;
    std::vector<char> popular(distinct.size(), 0);
    for (std::size_t t = 0; t < distinct.size(); ++t) {
        bool beaten = false;
        for (auto it = champions.begin(); it != champions.end(); ++it) {
            if (beats(distinct[*it], distinct[t])) {
                champions.splice(champions.begin(), champions, it);
                beaten = true;
                break;
            }
        }
        if (beaten) continue;
        for (std::size_t c = 0; c < distinct.size() && !beaten; ++c) {
            if (!beats(distinct[c], distinct[t])) continue;
            beaten = true;
            champions.push_front(c);
            if (champions.size() > kChampionCount) champions.pop_back();
        }
        if (!beaten) popular[t] = 1;
    }

    std::vector<Arborescence> result;
    for (std::size_t i = 0; i < count; ++i) {
        auto it = std::lower_bound(distinct.begin(), distinct.end(), profiles[i]);
        if (!popular[static_cast<std::size_t>(it - distinct.begin())]) continue;
        result.emplace_back(d, std::vector<EdgeIndex>(all.begin() + static_cast<std::ptrdiff_t>(i * n),
                                                      all.begin() + static_cast<std::ptrdiff_t>((i + 1) * n)));
    }
    return result;
}

}  // namespace popbranch
