#include "popbranch/io.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace popbranch {

using nlohmann::json;

namespace {

json parse_document(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& err) {
        throw SchemaError("", std::string("invalid JSON: ") + err.what());
    }
}

const json& require(const json& object, const std::string& path, const char* key) {
    if (!object.is_object()) throw SchemaError(path, "expected an object");
    auto it = object.find(key);
    if (it == object.end()) throw SchemaError(path, std::string("missing field \"") + key + "\"");
    return *it;
}

std::string require_string(const json& object, const std::string& path, const char* key) {
    const json& value = require(object, path, key);
    if (!value.is_string()) throw SchemaError(path + "/" + key, "expected a string");
    return value.get<std::string>();
}

std::int64_t require_integer(const json& object, const std::string& path, const char* key) {
    const json& value = require(object, path, key);
    if (!value.is_number_integer()) throw SchemaError(path + "/" + key, "expected an integer");
    return value.get<std::int64_t>();
}

const json& require_array(const json& object, const std::string& path, const char* key) {
    const json& value = require(object, path, key);
    if (!value.is_array()) throw SchemaError(path + "/" + key, "expected an array");
    return value;
}

std::vector<std::string> string_list(const json& array, const std::string& path) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < array.size(); ++i) {
        if (!array[i].is_string()) throw SchemaError(path + "/" + std::to_string(i), "expected a string");
        out.push_back(array[i].get<std::string>());
    }
    return out;
}

std::string vertex_label(const AugmentedDigraph& d, VertexIndex v) { return d.graph().vertex_label(v); }

std::vector<std::string> labels(const AugmentedDigraph& d, const VertexSet& set) {
    std::vector<std::string> out;
    for (VertexIndex v : set) out.push_back(vertex_label(d, v));
    return out;
}

VertexIndex resolve_vertex(const AugmentedDigraph& d, const std::string& label, const std::string& path) {
    auto v = d.graph().find_vertex(label);
    if (!v || *v == d.root()) throw SchemaError(path, "unknown vertex \"" + label + "\"");
    return *v;
}

}  // namespace

InstanceFile parse_instance_file(std::string_view text) {
    json doc = parse_document(text);
    if (!doc.is_object()) throw SchemaError("", "expected an object");
    InstanceFile file;
    const json& vertices = require_array(doc, "", "vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        std::string path = "/vertices/" + std::to_string(i);
        file.vertices.push_back(VertexInput{require_string(vertices[i], path, "id"),
                                            require_integer(vertices[i], path, "weight")});
    }
    const json& edges = require_array(doc, "", "edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::string path = "/edges/" + std::to_string(i);
        file.edges.push_back(EdgeInput{require_string(edges[i], path, "id"), require_string(edges[i], path, "src"),
                                       require_string(edges[i], path, "dst"),
                                       require_integer(edges[i], path, "rank")});
    }
    return file;
}

Digraph build_instance(const InstanceFile& file) {
    try {
        return build_digraph(file.vertices, file.edges);
    } catch (const GraphError& err) {
        std::string path = err.element() == ElementKind::Vertex ? "/vertices/" : "/edges/";
        throw InstanceError(err.code(), path + std::to_string(err.position()), err.what());
    }
}

Digraph parse_instance(std::string_view text) { return build_instance(parse_instance_file(text)); }

std::string serialize_instance(const InstanceFile& file) {
    json vertices = json::array();
    for (const VertexInput& v : file.vertices) {
        json entry{{"id", v.id}};
        if (v.weight) entry["weight"] = *v.weight;
        vertices.push_back(std::move(entry));
    }
    json edges = json::array();
    for (const EdgeInput& e : file.edges) {
        json entry{{"id", e.id}, {"src", e.src}, {"dst", e.dst}};
        if (e.rank) entry["rank"] = *e.rank;
        edges.push_back(std::move(entry));
    }
    json doc;
    doc["vertices"] = std::move(vertices);
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

InstanceFile to_instance_file(const Digraph& instance) {
    InstanceFile file;
    for (VertexIndex v = 0; v < instance.vertex_count(); ++v)
        file.vertices.push_back(VertexInput{instance.vertex_label(v), instance.weight(v)});
    for (EdgeIndex e = 0; e < instance.edge_count(); ++e) {
        const Edge& ed = instance.edge(e);
        file.edges.push_back(EdgeInput{instance.edge_label(e), instance.vertex_label(ed.src),
                                       instance.vertex_label(ed.dst), ed.rank});
    }
    return file;
}

std::string_view to_string(ResultStatus status) {
    switch (status) {
        case ResultStatus::PopularFound: return "popular_found";
        case ResultStatus::NoneExists: return "none_exists";
        case ResultStatus::AssumptionViolated: return "assumption_violated";
    }
    return "unknown";
}

std::vector<ArborescenceEntry> to_entries(const AugmentedDigraph& d, const Arborescence& a) {
    const Digraph& g = d.graph();
    std::vector<ArborescenceEntry> entries;
    for (VertexIndex v = 0; v < a.size(); ++v) {
        EdgeIndex e = a.in_edge(v);
        entries.push_back(ArborescenceEntry{g.vertex_label(g.edge(e).src), g.vertex_label(v),
                                            d.is_root_edge(e) ? std::string("root") : g.edge_label(e)});
    }
    return entries;
}

std::vector<CertificateEntry> to_entries(const AugmentedDigraph& d, const DualSolution& y) {
    std::vector<CertificateEntry> entries;
    for (const DualSet& s : y.sets) entries.push_back(CertificateEntry{labels(d, s.members), s.value, vertex_label(d, s.owner)});
    return entries;
}

ResultFile make_result_file(const AugmentedDigraph& d, const SolveOutcome& outcome,
                            const WeightAssumption& assumption) {
    ResultFile result;
    if (assumption.violation) {
        const WeightTriple& t = *assumption.violation;
        result.assumption_violation = TripleEntry{vertex_label(d, t.s), vertex_label(d, t.t), vertex_label(d, t.u)};
    }
    if (const auto* found = std::get_if<PopularFound>(&outcome)) {
        result.status = ResultStatus::PopularFound;
        result.arborescence = to_entries(d, found->arborescence);
        result.certificate = to_entries(d, found->certificate);
    } else if (const auto* none = std::get_if<NoneExists>(&outcome)) {
        result.status = ResultStatus::NoneExists;
        NoneReasonEntry reason;
        if (const auto* blocked = std::get_if<NoAdmissibleEntry>(&none->reason)) {
            reason.kind = "line10";
            reason.set = labels(d, blocked->set);
            reason.min_weight_vertices = labels(d, blocked->min_weight);
            for (const CheaperEntryWitness& w : blocked->witnesses)
                reason.witnesses.push_back(
                    WitnessEntry{vertex_label(d, w.vertex), vertex_label(d, w.s), d.graph().edge_label(w.f)});
        } else {
            reason.kind = "no_arborescence_in_contracted";
        }
        result.reason = std::move(reason);
    } else {
        const auto& violated = std::get<AssumptionViolated>(outcome);
        result.status = ResultStatus::AssumptionViolated;
        result.assumption_violation = TripleEntry{vertex_label(d, violated.triple.s), vertex_label(d, violated.triple.t),
                                                  vertex_label(d, violated.triple.u)};
    }
    return result;
}

std::string serialize_result(const ResultFile& result) {
    json doc;
    doc["status"] = std::string(to_string(result.status));
    json tree = json::array();
    for (const ArborescenceEntry& e : result.arborescence)
        tree.push_back(json{{"src", e.src}, {"dst", e.dst}, {"edge_id", e.edge_id}});
    doc["arborescence"] = std::move(tree);
    if (result.certificate) {
        json sets = json::array();
        for (const CertificateEntry& s : *result.certificate)
            sets.push_back(json{{"members", s.members}, {"y", s.y}, {"owner", s.owner}});
        doc["certificate"] = json{{"sets", std::move(sets)}};
    }
    if (result.reason) {
        json reason{{"kind", result.reason->kind}};
        if (result.reason->kind == "line10") {
            reason["set"] = result.reason->set;
            reason["min_weight_vertices"] = result.reason->min_weight_vertices;
            json witnesses = json::array();
            for (const WitnessEntry& w : result.reason->witnesses)
                witnesses.push_back(json{{"vertex", w.vertex}, {"s", w.s}, {"f", w.f}});
            reason["witnesses"] = std::move(witnesses);
        }
        doc["reason"] = std::move(reason);
    }
    if (result.assumption_violation) {
        const TripleEntry& t = *result.assumption_violation;
        doc["assumption"] = json{{"holds", false}, {"triple", json{{"s", t.s}, {"t", t.t}, {"u", t.u}}}};
    }
    return doc.dump(2) + "\n";
}

ResultFile parse_result(std::string_view text) {
    json doc = parse_document(text);
    if (!doc.is_object()) throw SchemaError("", "expected an object");
    ResultFile result;
    std::string status = require_string(doc, "", "status");
    if (status == "popular_found")
        result.status = ResultStatus::PopularFound;
    else if (status == "none_exists")
        result.status = ResultStatus::NoneExists;
    else if (status == "assumption_violated")
        result.status = ResultStatus::AssumptionViolated;
    else
        throw SchemaError("/status", "unknown status \"" + status + "\"");

    const json& tree = require_array(doc, "", "arborescence");
    for (std::size_t i = 0; i < tree.size(); ++i) {
        std::string path = "/arborescence/" + std::to_string(i);
        result.arborescence.push_back(ArborescenceEntry{require_string(tree[i], path, "src"),
                                                        require_string(tree[i], path, "dst"),
                                                        require_string(tree[i], path, "edge_id")});
    }

    if (doc.contains("certificate")) {
        const json& sets = require_array(doc["certificate"], "/certificate", "sets");
        std::vector<CertificateEntry> entries;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            std::string path = "/certificate/sets/" + std::to_string(i);
            entries.push_back(CertificateEntry{string_list(require_array(sets[i], path, "members"), path + "/members"),
                                               require_integer(sets[i], path, "y"),
                                               require_string(sets[i], path, "owner")});
        }
        result.certificate = std::move(entries);
    }
    if (result.status == ResultStatus::PopularFound && !result.certificate)
        throw SchemaError("", "popular_found result without certificate");
    if (result.status != ResultStatus::PopularFound && result.certificate)
        throw SchemaError("/certificate", "certificate is only allowed with popular_found");

    if (doc.contains("reason")) {
        const json& reason = doc["reason"];
        NoneReasonEntry entry;
        entry.kind = require_string(reason, "/reason", "kind");
        if (entry.kind == "line10") {
            entry.set = string_list(require_array(reason, "/reason", "set"), "/reason/set");
            entry.min_weight_vertices =
                string_list(require_array(reason, "/reason", "min_weight_vertices"), "/reason/min_weight_vertices");
            const json& witnesses = require_array(reason, "/reason", "witnesses");
            for (std::size_t i = 0; i < witnesses.size(); ++i) {
                std::string path = "/reason/witnesses/" + std::to_string(i);
                entry.witnesses.push_back(WitnessEntry{require_string(witnesses[i], path, "vertex"),
                                                       require_string(witnesses[i], path, "s"),
                                                       require_string(witnesses[i], path, "f")});
            }
        } else if (entry.kind != "no_arborescence_in_contracted") {
            throw SchemaError("/reason/kind", "unknown reason \"" + entry.kind + "\"");
        }
        result.reason = std::move(entry);
    }
    if (result.status == ResultStatus::NoneExists && !result.reason)
        throw SchemaError("", "none_exists result without reason");

    if (doc.contains("assumption")) {
        const json& triple = require(doc["assumption"], "/assumption", "triple");
        result.assumption_violation =
            TripleEntry{require_string(triple, "/assumption/triple", "s"), require_string(triple, "/assumption/triple", "t"),
                        require_string(triple, "/assumption/triple", "u")};
    }
    if (result.status == ResultStatus::AssumptionViolated && !result.assumption_violation)
        throw SchemaError("", "assumption_violated result without triple");
    return result;
}

Arborescence arborescence_from_entries(const AugmentedDigraph& d, const std::vector<ArborescenceEntry>& entries) {
    const Digraph& g = d.graph();
    constexpr EdgeIndex unset = static_cast<EdgeIndex>(-1);
    std::vector<EdgeIndex> in_edge(d.instance_vertex_count(), unset);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const ArborescenceEntry& entry = entries[i];
        std::string path = "/arborescence/" + std::to_string(i);
        VertexIndex v = resolve_vertex(d, entry.dst, path + "/dst");
        EdgeIndex e;
        if (entry.edge_id == "root") {
            e = d.root_edge(v);
        } else {
            auto found = g.find_edge(entry.edge_id);
            if (!found || d.is_root_edge(*found)) throw SchemaError(path + "/edge_id", "unknown edge \"" + entry.edge_id + "\"");
            e = *found;
        }
        if (g.vertex_label(g.edge(e).src) != entry.src || g.edge(e).dst != v)
            throw SchemaError(path, "edge \"" + entry.edge_id + "\" does not run from " + entry.src + " to " + entry.dst);
        if (in_edge[v] != unset) throw InvalidArborescence("vertex " + entry.dst + " has two incoming edges");
        in_edge[v] = e;
    }
    for (VertexIndex v = 0; v < in_edge.size(); ++v)
        if (in_edge[v] == unset) throw InvalidArborescence("vertex " + g.vertex_label(v) + " has no incoming edge");
    return Arborescence(d, std::move(in_edge));
}

DualSolution dual_from_entries(const AugmentedDigraph& d, const std::vector<CertificateEntry>& entries) {
    DualSolution y;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        std::string path = "/certificate/sets/" + std::to_string(i);
        DualSet set{{}, entries[i].y, resolve_vertex(d, entries[i].owner, path + "/owner")};
        for (std::size_t j = 0; j < entries[i].members.size(); ++j)
            set.members.push_back(resolve_vertex(d, entries[i].members[j], path + "/members/" + std::to_string(j)));
        std::sort(set.members.begin(), set.members.end());
        if (std::adjacent_find(set.members.begin(), set.members.end()) != set.members.end())
            throw SchemaError(path + "/members", "duplicate member");
        y.sets.push_back(std::move(set));
    }
    return y;
}

std::string to_dot(const AugmentedDigraph& d, const Arborescence* a, const MaximalFamily* family) {
    const Digraph& g = d.graph();
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out + "\"";
    };
    std::ostringstream out;
    out << "digraph D {\n";
    out << "  " << quote(g.vertex_label(d.root())) << " [shape=doublecircle];\n";
    if (family) {
        for (std::size_t i = 0; i < family->members.size(); ++i) {
            out << "  subgraph cluster_" << i << " {\n    label=\"X" << i << "\";\n";
            for (VertexIndex v : family->members[i].members)
                out << "    " << quote(g.vertex_label(v)) << " [label=" << quote(g.vertex_label(v) + " (w=" + std::to_string(g.weight(v)) + ")") << "];\n";
            out << "  }\n";
        }
    } else {
        for (VertexIndex v = 0; v < d.instance_vertex_count(); ++v)
            out << "  " << quote(g.vertex_label(v)) << " [label=" << quote(g.vertex_label(v) + " (w=" + std::to_string(g.weight(v)) + ")") << "];\n";
    }
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        std::string cost = a ? std::to_string(edge_cost(d, *a, e)) : "-";
        bool in_tree = a && a->in_edge(ed.dst) == e;
        out << "  " << quote(g.vertex_label(ed.src)) << " -> " << quote(g.vertex_label(ed.dst)) << " [label="
            << quote("(" + std::to_string(ed.rank) + ", " + cost + ")");
        if (in_tree) out << ", penwidth=3";
        if (d.is_root_edge(e)) out << ", style=dashed";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace popbranch
