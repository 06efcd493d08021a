#include "popbranch/certificate.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "popbranch/safe_edges.hpp"

namespace popbranch {

namespace {

CheckResult named_check(std::string name) {
    CheckResult check;
    check.name = std::move(name);
    return check;
}

constexpr std::size_t kMaxDetails = 20;

void fail(CheckResult& check, std::string detail) {
    check.passed = false;
    if (check.details.size() < kMaxDetails) check.details.push_back(std::move(detail));
}

std::string describe(const Digraph& g, const VertexSet& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += ",";
        out += set[i] < g.vertex_count() ? g.vertex_label(set[i]) : "#" + std::to_string(set[i]);
    }
    return out + "}";
}

std::string describe_edge(const Digraph& g, EdgeIndex e) {
    const Edge& ed = g.edge(e);
    return "(" + g.vertex_label(ed.src) + "," + g.vertex_label(ed.dst) + ")[" + g.edge_label(e) + "]";
}

bool well_formed(const AugmentedDigraph& d, const DualSet& s) {
    if (s.members.empty()) return false;
    if (!std::is_sorted(s.members.begin(), s.members.end())) return false;
    if (std::adjacent_find(s.members.begin(), s.members.end()) != s.members.end()) return false;
    return s.members.back() < d.instance_vertex_count() && s.owner < d.instance_vertex_count();
}

// Index of the innermost earlier set for each set, or -1, when processed by
// decreasing size; nullopt if the family is not laminar.
std::optional<std::vector<std::ptrdiff_t>> laminar_parents(std::size_t n, const std::vector<const DualSet*>& sets,
                                                           std::vector<std::size_t>& order) {
    order.resize(sets.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return sets[a]->members.size() > sets[b]->members.size();
    });
    std::vector<std::ptrdiff_t> innermost(n, -1);
    std::vector<std::ptrdiff_t> parent(sets.size(), -1);
    for (std::size_t idx : order) {
        const VertexSet& members = sets[idx]->members;
        std::ptrdiff_t p = innermost[members.front()];
        for (VertexIndex v : members)
            if (innermost[v] != p) return std::nullopt;
        parent[idx] = p;
        for (VertexIndex v : members) innermost[v] = static_cast<std::ptrdiff_t>(idx);
    }
    return parent;
}

}  // namespace

Weight DualSolution::objective() const {
    Weight sum = 0;
    for (const DualSet& s : sets) sum += s.value;
    return sum;
}

DualSolution build_dual(const AugmentedDigraph& d, const MaximalFamily& family, const Arborescence& a) {
    const Digraph& g = d.graph();
    DualSolution y;
    std::vector<char> in_x(g.vertex_count(), 0);
    for (const FamilyMember& member : family.members) {
        if (member.members.size() == 1) {
            VertexIndex t = member.members.front();
            y.sets.push_back(DualSet{{t}, g.weight(t), t});
            continue;
        }
        for (VertexIndex v : member.members) in_x[v] = 1;
        std::optional<VertexIndex> entry;
        for (VertexIndex v : member.members) {
            if (in_x[g.edge(a.in_edge(v)).src]) continue;
            if (entry) throw InternalError("arborescence enters " + describe(g, member.members) + " more than once");
            entry = v;
        }
        if (!entry) throw InternalError("arborescence never enters " + describe(g, member.members));

        EdgeSet edges = member.safe;
        const EdgeIndex entry_edge = a.in_edge(*entry);
        for (EdgeIndex e : g.in_edges(*entry))
            if (in_x[g.edge(e).src] && dominates(g, e, entry_edge)) edges.push_back(e);
        SccPartition scc = scc_partition(g, member.members, edges);
        VertexSet core = scc.components[static_cast<std::size_t>(scc.component_of[*entry])];
        y.sets.push_back(DualSet{core, g.weight(*entry), *entry});
        for (VertexIndex t : member.members)
            if (t != *entry) y.sets.push_back(DualSet{{t}, g.weight(t), t});
        for (VertexIndex v : member.members) in_x[v] = 0;
    }
    std::sort(y.sets.begin(), y.sets.end(), [](const DualSet& l, const DualSet& r) { return l.owner < r.owner; });
    return y;
}

bool VerificationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed || !c.gating; });
}

const CheckResult* VerificationReport::find(std::string_view name) const {
    for (const CheckResult& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string VerificationReport::summary() const {
    std::ostringstream out;
    for (const CheckResult& c : checks) {
        out << (c.passed ? "PASS " : (c.gating ? "FAIL " : "WARN ")) << c.name << "\n";
        for (const std::string& detail : c.details) out << "    " << detail << "\n";
    }
    return out.str();
}

std::vector<Weight> edge_loads(const AugmentedDigraph& d, const DualSolution& y) {
    const Digraph& g = d.graph();
    std::vector<Weight> load(g.edge_count(), 0);
    std::vector<char> in_y(g.vertex_count(), 0);
    for (const DualSet& s : y.sets) {
        if (!well_formed(d, s)) continue;
        for (VertexIndex v : s.members) in_y[v] = 1;
        for (VertexIndex v : s.members)
            for (EdgeIndex e : g.in_edges(v))
                if (!in_y[g.edge(e).src]) load[e] += s.value;
        for (VertexIndex v : s.members) in_y[v] = 0;
    }
    return load;
}

VerificationReport verify_feasible(const AugmentedDigraph& d, const Arborescence& a, const DualSolution& y) {
    const Digraph& g = d.graph();
    VerificationReport report;

    CheckResult shape = named_check("well_formed_sets");
    CheckResult nonneg = named_check("nonnegative_values");
    for (std::size_t i = 0; i < y.sets.size(); ++i) {
        const DualSet& s = y.sets[i];
        if (!well_formed(d, s)) fail(shape, "set #" + std::to_string(i) + " is empty, unsorted or out of range");
        if (s.value < 0) fail(nonneg, "set #" + std::to_string(i) + " has value " + std::to_string(s.value));
    }

    CheckResult capacity = named_check("edge_capacity");
    std::vector<Weight> load = edge_loads(d, y);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        Weight cost = edge_cost(d, a, e);
        if (load[e] <= cost) continue;
        report.edge_violations.push_back(EdgeViolation{e, load[e], cost});
        fail(capacity, describe_edge(g, e) + ": load " + std::to_string(load[e]) + " > cost " + std::to_string(cost));
    }

    report.checks = {std::move(shape), std::move(nonneg), std::move(capacity)};
    return report;
}

VerificationReport verify_popularity(const AugmentedDigraph& d, const Arborescence& a, const DualSolution& y,
                                     const MaximalFamily* family) {
    const Digraph& g = d.graph();
    const std::size_t n = d.instance_vertex_count();
    VerificationReport report;

    std::vector<const DualSet*> support;
    for (const DualSet& s : y.sets)
        if (s.value > 0 && well_formed(d, s)) support.push_back(&s);

    CheckResult objective = named_check("objective_equals_total_weight");
    if (y.objective() != d.total_weight())
        fail(objective, "sum of y is " + std::to_string(y.objective()) + ", w(V_G) is " +
                            std::to_string(d.total_weight()));

    std::vector<char> in_y(g.vertex_count(), 0);
    CheckResult single_entry = named_check("single_tree_edge_entering_each_set");
    CheckResult bijection = named_check("entry_point_bijection");
    std::vector<int> owned(n, 0);
    for (const DualSet* s : support) {
        for (VertexIndex v : s->members) in_y[v] = 1;
        std::size_t entering = 0;
        for (VertexIndex v : s->members)
            if (!in_y[g.edge(a.in_edge(v)).src]) ++entering;
        if (entering != 1)
            fail(single_entry, describe(g, s->members) + " is entered by " + std::to_string(entering) + " tree edges");
        const VertexIndex owner = s->owner;
        ++owned[owner];
        if (!in_y[owner])
            fail(bijection, "owner " + g.vertex_label(owner) + " not in " + describe(g, s->members));
        else if (in_y[g.edge(a.in_edge(owner)).src])
            fail(bijection, "tree edge of owner " + g.vertex_label(owner) + " does not enter " +
                                describe(g, s->members));
        if (s->value != g.weight(owner))
            fail(bijection, "y(" + describe(g, s->members) + ") = " + std::to_string(s->value) + " but w(" +
                                g.vertex_label(owner) + ") = " + std::to_string(g.weight(owner)));
        for (VertexIndex v : s->members) in_y[v] = 0;
    }
    for (VertexIndex v = 0; v < n; ++v)
        if (owned[v] != 1)
            fail(bijection, g.vertex_label(v) + " owns " + std::to_string(owned[v]) + " support sets");

    CheckResult tight = named_check("tight_tree_edges");
    std::vector<Weight> load = edge_loads(d, y);
    for (VertexIndex v = 0; v < n; ++v) {
        EdgeIndex e = a.in_edge(v);
        if (load[e] != g.weight(v))
            fail(tight, describe_edge(g, e) + ": load " + std::to_string(load[e]) + " != w = " +
                            std::to_string(g.weight(v)));
    }

    CheckResult laminar = named_check("laminar");
    std::vector<std::size_t> order;
    auto parents = laminar_parents(n, support, order);
    if (!parents) fail(laminar, "support is not laminar");

    CheckResult two_layer = named_check("at_most_two_sets_per_vertex");
    std::vector<int> depth(n, 0);
    for (const DualSet* s : support)
        for (VertexIndex v : s->members) ++depth[v];
    for (VertexIndex v = 0; v < n; ++v)
        if (depth[v] > 2) fail(two_layer, g.vertex_label(v) + " lies in " + std::to_string(depth[v]) + " sets");

    report.checks = {std::move(objective), std::move(single_entry), std::move(tight),
                     std::move(laminar),   std::move(two_layer),    std::move(bijection)};

    if (family) {
        CheckResult entry = named_check("maximal_set_entry_at_minimum_bottom_vertex");
        CheckResult inside = named_check("tree_edges_inside_maximal_sets_are_safe");
        for (const FamilyMember& member : family->members) {
            for (VertexIndex v : member.members) in_y[v] = 1;
            std::vector<VertexIndex> heads;
            for (VertexIndex v : member.members) {
                EdgeIndex e = a.in_edge(v);
                if (!in_y[g.edge(e).src]) {
                    heads.push_back(v);
                } else if (!std::binary_search(member.safe.begin(), member.safe.end(), e)) {
                    fail(inside, describe_edge(g, e) + " lies in " + describe(g, member.members) + " but is not safe");
                }
            }
            for (VertexIndex v : member.members) in_y[v] = 0;
            if (heads.size() != 1) {
                fail(entry, describe(g, member.members) + " is entered " + std::to_string(heads.size()) + " times");
                continue;
            }
            const VertexIndex v = heads.front();
            if (family->reach[v].members != member.members)
                fail(entry, "entry " + g.vertex_label(v) + " has X_v != " + describe(g, member.members));
            if (!std::binary_search(member.bottom.begin(), member.bottom.end(), v))
                fail(entry, "entry " + g.vertex_label(v) + " outside bottom component " + describe(g, member.bottom));
            else if (g.weight(v) != g.weight(member.min_weight.front()))
                fail(entry, "entry " + g.vertex_label(v) + " is not of minimum weight in " +
                                describe(g, member.bottom));
        }
        report.checks.push_back(std::move(entry));
        report.checks.push_back(std::move(inside));
    }

    // Informational: each support set has exactly one vertex outside its
    // maximal proper support subsets.
    CheckResult one_new{"one_vertex_outside_children", true, false, {}};
    if (parents) {
        std::vector<std::size_t> child_cover(support.size(), 0);
        for (std::size_t i = 0; i < support.size(); ++i) {
            std::ptrdiff_t p = (*parents)[i];
            if (p >= 0 && support[static_cast<std::size_t>(p)]->members.size() > support[i]->members.size())
                child_cover[static_cast<std::size_t>(p)] += support[i]->members.size();
        }
        for (std::size_t i = 0; i < support.size(); ++i)
            if (support[i]->members.size() - child_cover[i] != 1)
                fail(one_new, describe(g, support[i]->members) + " has " +
                                  std::to_string(support[i]->members.size() - child_cover[i]) +
                                  " vertices outside its children");
    } else {
        fail(one_new, "skipped: support is not laminar");
    }
    report.checks.push_back(std::move(one_new));
    return report;
}

bool is_laminar_pairwise(const std::vector<VertexSet>& sets) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            VertexSet common;
            std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                                  std::back_inserter(common));
            if (common.empty()) continue;
            if (common.size() != sets[i].size() && common.size() != sets[j].size()) return false;
        }
    }
    return true;
}

}  // namespace popbranch
