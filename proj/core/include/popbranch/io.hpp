#pragma once

// JSON instance and result files, DOT export.
//
// Instance:
//   {"vertices": [{"id": "a", "weight": 1}, ...],
//    "edges": [{"id": "e1", "src": "a", "dst": "b", "rank": 1}, ...]}
// Root edges are implicit and never listed.
//
// Result:
//   {"status": "popular_found" | "none_exists" | "assumption_violated",
//    "arborescence": [{"src": "r", "dst": "a", "edge_id": "root"}, ...],
//    "certificate": {"sets": [{"members": ["a"], "y": 1, "owner": "a"}, ...]},
//    "reason": {...}, "assumption": {...}}

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "popbranch/augmented.hpp"
#include "popbranch/certificate.hpp"
#include "popbranch/graph.hpp"
#include "popbranch/solver.hpp"

namespace popbranch {

// Malformed JSON or a document that does not match the expected shape.
// `path` is a JSON pointer to the offending value ("" for the document).
class SchemaError : public std::runtime_error {
  public:
    SchemaError(std::string path, const std::string& message)
        : std::runtime_error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

  private:
    std::string path_;
};

// Graph validation failure located in an instance file.
class InstanceError : public std::runtime_error {
  public:
    InstanceError(GraphErrorCode code, std::string path, const std::string& message)
        : std::runtime_error(path + ": " + std::string(to_string(code)) + ": " + message),
          code_(code),
          path_(std::move(path)) {}
    GraphErrorCode code() const noexcept { return code_; }
    const std::string& path() const noexcept { return path_; }

  private:
    GraphErrorCode code_;
    std::string path_;
};

struct InstanceFile {
    std::vector<VertexInput> vertices;
    std::vector<EdgeInput> edges;

    friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

// Schema validation only. Throws SchemaError.
InstanceFile parse_instance_file(std::string_view json);
// Schema plus graph validation. Throws SchemaError or InstanceError.
Digraph parse_instance(std::string_view json);
Digraph build_instance(const InstanceFile& file);

std::string serialize_instance(const InstanceFile& file);
InstanceFile to_instance_file(const Digraph& instance);

enum class ResultStatus { PopularFound, NoneExists, AssumptionViolated };

std::string_view to_string(ResultStatus status);

struct ArborescenceEntry {
    std::string src;
    std::string dst;
    // "root" for root edges.
    std::string edge_id;

    friend bool operator==(const ArborescenceEntry&, const ArborescenceEntry&) = default;
};

struct CertificateEntry {
    std::vector<std::string> members;
    Weight y;
    std::string owner;

    friend bool operator==(const CertificateEntry&, const CertificateEntry&) = default;
};

struct WitnessEntry {
    std::string vertex;
    std::string s;
    std::string f;

    friend bool operator==(const WitnessEntry&, const WitnessEntry&) = default;
};

struct NoneReasonEntry {
    // "line10" or "no_arborescence_in_contracted".
    std::string kind;
    std::vector<std::string> set;
    std::vector<std::string> min_weight_vertices;
    std::vector<WitnessEntry> witnesses;

    friend bool operator==(const NoneReasonEntry&, const NoneReasonEntry&) = default;
};

struct TripleEntry {
    std::string s;
    std::string t;
    std::string u;

    friend bool operator==(const TripleEntry&, const TripleEntry&) = default;
};

struct ResultFile {
    ResultStatus status = ResultStatus::PopularFound;
    std::vector<ArborescenceEntry> arborescence;
    std::optional<std::vector<CertificateEntry>> certificate;
    std::optional<NoneReasonEntry> reason;
    // Violated weight triple; present for assumption_violated and for forced runs.
    std::optional<TripleEntry> assumption_violation;

    friend bool operator==(const ResultFile&, const ResultFile&) = default;
};

ResultFile make_result_file(const AugmentedDigraph& d, const SolveOutcome& outcome,
                            const WeightAssumption& assumption);

std::string serialize_result(const ResultFile& result);
// Throws SchemaError.
ResultFile parse_result(std::string_view json);

// Resolve labels against D. Throw SchemaError on unknown ids and
// InvalidArborescence on structurally invalid trees.
Arborescence arborescence_from_entries(const AugmentedDigraph& d, const std::vector<ArborescenceEntry>& entries);
DualSolution dual_from_entries(const AugmentedDigraph& d, const std::vector<CertificateEntry>& entries);

std::vector<ArborescenceEntry> to_entries(const AugmentedDigraph& d, const Arborescence& a);
std::vector<CertificateEntry> to_entries(const AugmentedDigraph& d, const DualSolution& y);

// Graphviz rendering of D. Maximal sets become clusters when a family is
// given; arborescence edges are drawn bold. Edge labels are "(rank, cost)"
// with cost relative to the arborescence, or "(rank, -)" without one.
std::string to_dot(const AugmentedDigraph& d, const Arborescence* a, const MaximalFamily* family);

}  // namespace popbranch
