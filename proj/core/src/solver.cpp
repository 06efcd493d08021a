#include "popbranch/solver.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "popbranch/safe_edges.hpp"

namespace popbranch {

namespace {

constexpr Rank kNoRank = std::numeric_limits<Rank>::max();

// Best rank among edges entering v from outside the set.
Rank best_boundary_rank(const Digraph& g, VertexIndex v, const std::vector<char>& in_x) {
    Rank best = kNoRank;
    for (EdgeIndex e : g.in_edges(v))
        if (!in_x[g.edge(e).src]) best = std::min(best, g.rank(e));
    return best;
}

std::vector<char> membership(const Digraph& g, const VertexSet& set) {
    std::vector<char> in_x(g.vertex_count(), 0);
    for (VertexIndex v : set) in_x[v] = 1;
    return in_x;
}

// BFS out-tree of (X, safe) rooted at `root`; in_edge is filled for every
// non-root vertex of X. Returns false if some vertex of X is not reached.
bool bfs_subtree(const Digraph& g, VertexIndex root, const VertexSet& x, const EdgeSet& safe,
                 std::vector<EdgeIndex>& in_edge) {
    std::vector<char> is_safe(g.edge_count(), 0);
    for (EdgeIndex e : safe) is_safe[e] = 1;
    std::vector<char> seen(g.vertex_count(), 0);
    std::deque<VertexIndex> queue{root};
    seen[root] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        VertexIndex u = queue.front();
        queue.pop_front();
        for (EdgeIndex e : g.out_edges(u)) {
            if (!is_safe[e]) continue;
            VertexIndex w = g.edge(e).dst;
            if (seen[w]) continue;
            seen[w] = 1;
            in_edge[w] = e;
            ++reached;
            queue.push_back(w);
        }
    }
    return reached == x.size();
}

}  // namespace

std::optional<CheaperEntryWitness> find_cheaper_entry(const AugmentedDigraph& d, const FamilyMember& member,
                                          VertexIndex v_prime) {
    const Digraph& g = d.graph();
    const std::vector<char> in_x = membership(g, member.members);
    const std::vector<char> in_bottom = membership(g, member.bottom);

    std::vector<VertexIndex> candidates;
    for (VertexIndex s : member.members)
        if (!in_bottom[s] && g.weight(s) < g.weight(v_prime)) candidates.push_back(s);
    if (candidates.empty()) return std::nullopt;
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](VertexIndex a, VertexIndex b) { return g.weight(a) < g.weight(b); });

    const Rank boundary = best_boundary_rank(g, v_prime, in_x);
    std::vector<EdgeIndex> edges_f;
    for (EdgeIndex f : g.in_edges(v_prime)) {
        if (!in_x[g.edge(f).src]) continue;
        if (std::binary_search(member.safe.begin(), member.safe.end(), f)) continue;
        if (g.rank(f) < boundary) edges_f.push_back(f);
    }
    if (edges_f.empty()) return std::nullopt;

    // reaches[i][u]: u reaches v_prime in (X, S(X) + edges_f[i]).
    std::vector<std::vector<EdgeIndex>> reverse_adj(g.vertex_count());
    for (EdgeIndex e : member.safe) reverse_adj[g.edge(e).dst].push_back(e);
    std::vector<std::vector<char>> reaches;
    reaches.reserve(edges_f.size());
    for (EdgeIndex f : edges_f) {
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<VertexIndex> stack{v_prime};
        seen[v_prime] = 1;
        while (!stack.empty()) {
            VertexIndex u = stack.back();
            stack.pop_back();
            auto visit = [&](EdgeIndex e) {
                VertexIndex src = g.edge(e).src;
                if (!seen[src]) {
                    seen[src] = 1;
                    stack.push_back(src);
                }
            };
            for (EdgeIndex e : reverse_adj[u]) visit(e);
            if (g.edge(f).dst == u) visit(f);
        }
        reaches.push_back(std::move(seen));
    }

    for (VertexIndex s : candidates)
        for (std::size_t i = 0; i < edges_f.size(); ++i)
            if (reaches[i][s]) return CheaperEntryWitness{v_prime, s, edges_f[i]};
    return std::nullopt;
}

std::variant<ContractedDigraph, NoAdmissibleEntry> build_contracted(const AugmentedDigraph& d,
                                                               const MaximalFamily& family) {
    const Digraph& g = d.graph();
    ContractedDigraph contracted;
    contracted.member_count = family.members.size();

    for (std::size_t i = 0; i < family.members.size(); ++i) {
        const FamilyMember& member = family.members[i];
        std::vector<VertexIndex> open;
        std::vector<CheaperEntryWitness> witnesses;
        for (VertexIndex v : member.min_weight) {
            if (auto w = find_cheaper_entry(d, member, v))
                witnesses.push_back(*w);
            else
                open.push_back(v);
        }
        if (open.empty()) return NoAdmissibleEntry{i, member.members, member.min_weight, std::move(witnesses)};

        const std::vector<char> in_x = membership(g, member.members);
        for (VertexIndex v : open) {
            const Rank boundary = best_boundary_rank(g, v, in_x);
            for (EdgeIndex e : g.in_edges(v)) {
                VertexIndex u = g.edge(e).src;
                if (in_x[u] || g.rank(e) != boundary) continue;
                std::size_t from = u == d.root() ? contracted.root_node() : family.member_of[u];
                contracted.arcs.push_back(ContractedArc{from, i, e});
            }
        }
    }
    return contracted;
}

std::optional<std::vector<std::size_t>> find_r_arborescence(const ContractedDigraph& contracted) {
    const std::size_t nodes = contracted.member_count + 1;
    std::vector<std::vector<std::size_t>> out(nodes);
    for (std::size_t a = 0; a < contracted.arcs.size(); ++a) out[contracted.arcs[a].from].push_back(a);
    for (auto& list : out)
        std::stable_sort(list.begin(), list.end(), [&](std::size_t x, std::size_t y) {
            return contracted.arcs[x].payload < contracted.arcs[y].payload;
        });

    constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> chosen(contracted.member_count, unset);
    std::vector<char> seen(nodes, 0);
    std::deque<std::size_t> queue{contracted.root_node()};
    seen[contracted.root_node()] = 1;
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t a : out[u]) {
            std::size_t w = contracted.arcs[a].to;
            if (seen[w]) continue;
            seen[w] = 1;
            chosen[w] = a;
            queue.push_back(w);
        }
    }
    if (std::find(chosen.begin(), chosen.end(), unset) != chosen.end()) return std::nullopt;
    return chosen;
}

Arborescence expand(const AugmentedDigraph& d, const MaximalFamily& family, const ContractedDigraph& contracted,
                    const std::vector<std::size_t>& chosen_arcs) {
    const Digraph& g = d.graph();
    constexpr EdgeIndex unset = std::numeric_limits<EdgeIndex>::max();
    std::vector<EdgeIndex> in_edge(d.instance_vertex_count(), unset);

    for (std::size_t arc : chosen_arcs) {
        EdgeIndex e = contracted.arcs[arc].payload;
        VertexIndex v = g.edge(e).dst;
        in_edge[v] = e;
        const ReachSet& reach = family.reach[v];
        if (reach.members.size() < 2) continue;
        EdgeSet safe = safe_edges(d, reach.members);
        if (!bfs_subtree(g, v, reach.members, safe, in_edge))
            throw InternalError("(X_v, S(X_v)) does not span from " + g.vertex_label(v));
    }
    if (std::find(in_edge.begin(), in_edge.end(), unset) != in_edge.end())
        throw InternalError("expansion left a vertex without an incoming edge");
    try {
        return Arborescence(d, std::move(in_edge));
    } catch (const InvalidArborescence& err) {
        throw InternalError(std::string("expansion produced an invalid arborescence: ") + err.what());
    }
}

SolveOutcome solve(const AugmentedDigraph& d, const SolveOptions& options) {
    WeightAssumption assumption = check_weight_assumption(d.instance_weights());
    if (!assumption.holds && !options.force) return AssumptionViolated{*assumption.violation};

    MaximalFamily family = maximal_family(d, compute_reach_sets(d));
    auto contracted = build_contracted(d, family);
    if (auto* failure = std::get_if<NoAdmissibleEntry>(&contracted))
        return NoneExists{std::move(*failure), std::move(family)};

    const auto& graph = std::get<ContractedDigraph>(contracted);
    auto chosen = find_r_arborescence(graph);
    if (!chosen) return NoneExists{NoArborescenceInContracted{}, std::move(family)};

    Arborescence a = expand(d, family, graph, *chosen);
    DualSolution y = build_dual(d, family, a);
    bool verified = verify_feasible(d, a, y).ok() && verify_popularity(d, a, y, &family).ok();
    return PopularFound{std::move(a), std::move(y), verified, std::move(family)};
}

}  // namespace popbranch
