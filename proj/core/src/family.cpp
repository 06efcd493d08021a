#include "popbranch/family.hpp"

#include <algorithm>
#include <map>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "popbranch/safe_edges.hpp"

namespace popbranch {

namespace {

VertexSet all_instance_vertices(const AugmentedDigraph& d) {
    VertexSet all(d.instance_vertex_count());
    for (VertexIndex v = 0; v < all.size(); ++v) all[v] = v;
    return all;
}

std::string describe(const Digraph& g, const VertexSet& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += ",";
        out += g.vertex_label(set[i]);
    }
    return out + "}";
}

}  // namespace

ReachSet compute_reach_set(const AugmentedDigraph& d, VertexIndex v) {
    ReachSet result{v, {}, {}};
    std::vector<char> in_x(d.graph().vertex_count(), 0);
    VertexSet x = all_instance_vertices(d);
    for (;;) {
        for (VertexIndex u : x) in_x[u] = 1;
        EdgeSet safe = safe_edges(d, x, in_x);
        VertexSet reached = reachable_from(d.graph(), safe, v);
        result.history.push_back(x);
        if (reached.size() == x.size()) break;
        for (VertexIndex u : x) in_x[u] = 0;
        x = std::move(reached);
    }
    result.members = std::move(x);
    return result;
}

std::vector<ReachSet> compute_reach_sets(const AugmentedDigraph& d) {
    std::vector<ReachSet> sets;
    sets.reserve(d.instance_vertex_count());
    for (VertexIndex v = 0; v < d.instance_vertex_count(); ++v) sets.push_back(compute_reach_set(d, v));
    return sets;
}

MaximalFamily maximal_family(const AugmentedDigraph& d, std::vector<ReachSet> reach_sets) {
    const std::size_t n = d.instance_vertex_count();
    const Digraph& g = d.graph();
    if (reach_sets.size() != n) throw InternalError("reach set count does not match vertex count");

    std::vector<boost::dynamic_bitset<>> masks(n, boost::dynamic_bitset<>(n));
    for (VertexIndex v = 0; v < n; ++v) {
        if (reach_sets[v].vertex != v) throw InternalError("reach sets out of order");
        for (VertexIndex u : reach_sets[v].members) masks[v].set(u);
        if (!masks[v].test(v)) throw LaminarityViolation("X_" + g.vertex_label(v) + " does not contain its vertex");
    }

    // u in X_v implies X_u subset of X_v.
    for (VertexIndex v = 0; v < n; ++v) {
        for (VertexIndex u : reach_sets[v].members) {
            if (!masks[u].is_subset_of(masks[v]))
                throw LaminarityViolation("X_" + g.vertex_label(u) + " = " + describe(g, reach_sets[u].members) +
                                          " is not contained in X_" + g.vertex_label(v) + " = " +
                                          describe(g, reach_sets[v].members));
        }
    }

    // Given the nesting above, X_v is maximal iff every X_u containing v has the same size.
    std::vector<std::size_t> largest_container(n, 0);
    for (VertexIndex u = 0; u < n; ++u)
        for (VertexIndex v : reach_sets[u].members)
            largest_container[v] = std::max(largest_container[v], reach_sets[u].members.size());

    MaximalFamily family;
    family.member_of.assign(n, n);
    std::map<VertexSet, std::size_t> seen;
    for (VertexIndex v = 0; v < n; ++v) {
        if (largest_container[v] != reach_sets[v].members.size()) continue;
        auto [it, inserted] = seen.emplace(reach_sets[v].members, family.members.size());
        if (!inserted) continue;
        family.members.push_back(FamilyMember{reach_sets[v].members, {}, {}, {}});
    }
    std::sort(family.members.begin(), family.members.end(),
              [](const FamilyMember& a, const FamilyMember& b) { return a.members.front() < b.members.front(); });
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        for (VertexIndex v : family.members[i].members) {
            if (family.member_of[v] != n)
                throw LaminarityViolation("maximal sets overlap at " + g.vertex_label(v));
            family.member_of[v] = i;
        }
    }
    for (VertexIndex v = 0; v < n; ++v)
        if (family.member_of[v] == n) throw LaminarityViolation("no maximal set covers " + g.vertex_label(v));

    for (FamilyMember& member : family.members) {
        member.safe = safe_edges(d, member.members);
        SccPartition scc = scc_partition(g, member.members, member.safe);
        std::size_t sources = 0;
        for (std::size_t c = 0; c < scc.components.size(); ++c) {
            if (scc.in_degree[c] != 0) continue;
            ++sources;
            member.bottom = scc.components[c];
        }
        if (sources != 1)
            throw InternalError("(X, S(X)) for X = " + describe(g, member.members) + " has " +
                                std::to_string(sources) + " source components");
        Weight lightest = g.weight(member.bottom.front());
        for (VertexIndex v : member.bottom) lightest = std::min(lightest, g.weight(v));
        for (VertexIndex v : member.bottom)
            if (g.weight(v) == lightest) member.min_weight.push_back(v);
    }

    family.reach = std::move(reach_sets);
    return family;
}

}  // namespace popbranch
