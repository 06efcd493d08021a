#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "popbranch/generator.hpp"
#include "popbranch/io.hpp"
#include "popbranch/oracle.hpp"
#include "popbranch/solver.hpp"

namespace popbranch::cli {

namespace fs = std::filesystem;

namespace {

// Instances up to this size are re-checked by enumeration in `verify`.
constexpr std::size_t kVerifyEnumerationVertices = 10;

struct InputFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputFailure("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputFailure("cannot write " + path);
    out << content;
}

Digraph load_instance(const std::string& path) {
    try {
        return parse_instance(read_file(path));
    } catch (const SchemaError& e) {
        throw InputFailure(path + ": SchemaError: " + e.what());
    } catch (const InstanceError& e) {
        throw InputFailure(path + ": " + e.what());
    }
}

std::string set_label(const AugmentedDigraph& d, const VertexSet& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) out += (i ? "," : "") + d.graph().vertex_label(set[i]);
    return out + "}";
}

void print_tree(const std::vector<ArborescenceEntry>& entries, std::ostream& out) {
    for (const ArborescenceEntry& e : entries) out << "  " << e.src << " -> " << e.dst << " [" << e.edge_id << "]\n";
}

// Files ending in .json but not .result.json, sorted.
std::vector<fs::path> instance_files(const fs::path& dir) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::string name = entry.path().filename().string();
        if (name.size() < 5 || name.substr(name.size() - 5) != ".json") continue;
        if (name.size() >= 12 && name.substr(name.size() - 12) == ".result.json") continue;
        files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    return files;
}

// Runs job(i) for i in [0, count) on `jobs` threads; returns the largest exit code.
int run_batch(std::size_t count, unsigned jobs, const std::function<int(std::size_t, std::ostream&, std::ostream&)>& job,
              std::ostream& out, std::ostream& err) {
    std::vector<std::ostringstream> outs(count), errs(count);
    std::vector<int> codes(count, kOk);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) codes[i] = job(i, outs[i], errs[i]);
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
    worker();
    pool.clear();
    int worst = kOk;
    for (std::size_t i = 0; i < count; ++i) {
        out << outs[i].str();
        err << errs[i].str();
        worst = std::max(worst, codes[i]);
    }
    return worst;
}

struct SolveArgs {
    std::string instance;
    bool certificate = false;
    bool force = false;
    bool json = false;
    std::string output;
    std::string dot;
};

int run_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
    Digraph instance = load_instance(args.instance);
    AugmentedDigraph d = augment(instance);
    WeightAssumption assumption = check_weight_assumption(instance);
    if (!assumption.holds && args.force) {
        const WeightTriple& t = *assumption.violation;
        err << "warning: weight assumption violated by (" << instance.vertex_label(t.s) << ", "
            << instance.vertex_label(t.t) << ", " << instance.vertex_label(t.u) << "); continuing (--force)\n";
    }

    SolveOutcome outcome = solve(d, SolveOptions{args.force});
    ResultFile result = make_result_file(d, outcome, assumption);
    std::string json = serialize_result(result);
    if (!args.output.empty()) write_file(args.output, json);
    if (!args.dot.empty()) {
        const Arborescence* tree = nullptr;
        const MaximalFamily* family = nullptr;
        if (const auto* found = std::get_if<PopularFound>(&outcome)) {
            tree = &found->arborescence;
            family = &found->family;
        } else if (const auto* none = std::get_if<NoneExists>(&outcome)) {
            family = &none->family;
        }
        write_file(args.dot, to_dot(d, tree, family));
    }

    if (args.json) {
        out << json;
    } else {
        out << "status: " << to_string(result.status) << "\n";
        if (const auto* found = std::get_if<PopularFound>(&outcome)) {
            out << "arborescence:\n";
            print_tree(result.arborescence, out);
            out << "certificate: " << (found->certificate_verified ? "verified" : "NOT verified") << "\n";
            if (args.certificate) {
                for (const DualSet& s : found->certificate.sets)
                    out << "  y(" << set_label(d, s.members) << ") = " << s.value << "  owner "
                        << instance.vertex_label(s.owner) << "\n";
            }
        } else if (const auto* none = std::get_if<NoneExists>(&outcome)) {
            if (const auto* blocked = std::get_if<NoAdmissibleEntry>(&none->reason)) {
                out << "reason: every minimum-weight bottom vertex of " << set_label(d, blocked->set)
                    << " has a cheaper entry\n";
                for (const CheaperEntryWitness& w : blocked->witnesses)
                    out << "  " << instance.vertex_label(w.vertex) << ": s = " << instance.vertex_label(w.s)
                        << ", f = " << instance.edge_label(w.f) << "\n";
            } else {
                out << "reason: contracted digraph has no arborescence\n";
            }
        } else {
            const auto& t = std::get<AssumptionViolated>(outcome).triple;
            out << "violated: w(" << instance.vertex_label(t.s) << ") + w(" << instance.vertex_label(t.t)
                << ") <= w(" << instance.vertex_label(t.u) << ")\n";
        }
    }

    if (std::holds_alternative<PopularFound>(outcome)) return kOk;
    if (std::holds_alternative<NoneExists>(outcome)) return kNoneExists;
    return kAssumptionViolated;
}

int verify_one(const std::string& instance_path, const std::string& result_path, std::ostream& out,
               std::ostream& err) {
    Digraph instance = load_instance(instance_path);
    AugmentedDigraph d = augment(instance);
    ResultFile result;
    try {
        result = parse_result(read_file(result_path));
    } catch (const SchemaError& e) {
        throw InputFailure(result_path + ": SchemaError: " + e.what());
    }
    WeightAssumption assumption = check_weight_assumption(instance);
    bool pass = true;
    auto line = [&](bool ok, const std::string& what) {
        out << (ok ? "PASS " : "FAIL ") << what << "\n";
        pass = pass && ok;
    };

    switch (result.status) {
        case ResultStatus::PopularFound: {
            std::optional<Arborescence> a;
            DualSolution y;
            try {
                a = arborescence_from_entries(d, result.arborescence);
                y = dual_from_entries(d, *result.certificate);
            } catch (const std::exception& e) {
                line(false, std::string("result is well-formed: ") + e.what());
                break;
            }
            PopularityVerdict verdict = is_popular_exact(d, *a);
            line(verdict.popular, "min-cost arborescence under c_A costs " + std::to_string(verdict.min_cost) +
                                      " (w(V_G) = " + std::to_string(d.total_weight()) + ")");
            VerificationReport feasible = verify_feasible(d, *a, y);
            std::optional<MaximalFamily> family;
            if (assumption.holds) family = maximal_family(d, compute_reach_sets(d));
            VerificationReport popular = verify_popularity(d, *a, y, family ? &*family : nullptr);
            line(feasible.ok(), "certificate feasibility");
            line(popular.ok(), "certificate optimality and structure");
            for (const CheckResult& check : popular.checks)
                if (!check.gating) out << "INFO " << check.name << ": " << (check.passed ? "holds" : "does not hold") << "\n";
            if (!feasible.ok()) err << feasible.summary();
            if (!popular.ok()) err << popular.summary();
            break;
        }
        case ResultStatus::NoneExists: {
            bool checked = false;
            if (instance.vertex_count() <= kVerifyEnumerationVertices) {
                try {
                    auto popular = brute_popular_set(d);
                    line(popular.empty(), "exhaustive search finds " + std::to_string(popular.size()) +
                                              " popular arborescences");
                    checked = true;
                } catch (const CapExceeded&) {
                }
            }
            if (!checked) {
                SolveOutcome again = solve(d, SolveOptions{true});
                line(std::holds_alternative<NoneExists>(again), "re-solving reports no popular arborescence");
            }
            break;
        }
        case ResultStatus::AssumptionViolated:
            line(!assumption.holds, "weight assumption is violated");
            break;
    }
    return pass ? kOk : kVerifyFailed;
}

int run_enumerate_one(const std::string& path, std::size_t cap, std::ostream& out, std::ostream& err) {
    Digraph instance = load_instance(path);
    AugmentedDigraph d = augment(instance);
    try {
        std::vector<Arborescence> popular = brute_popular_set(d, cap);
        nlohmann::json listing = nlohmann::json::array();
        for (const Arborescence& a : popular) {
            nlohmann::json tree = nlohmann::json::array();
            for (const ArborescenceEntry& e : to_entries(d, a))
                tree.push_back({{"src", e.src}, {"dst", e.dst}, {"edge_id", e.edge_id}});
            listing.push_back(std::move(tree));
        }
        nlohmann::json doc{{"instance", path}, {"popular_count", popular.size()}, {"popular", std::move(listing)}};
        out << doc.dump(2) << "\n";
        return kOk;
    } catch (const CapExceeded& e) {
        err << path << ": CapExceeded: " << e.what() << "\n";
        return kCapExceeded;
    }
}

int run_check(const std::string& path, bool verbose, std::ostream& out) {
    Digraph instance = load_instance(path);
    WeightAssumption assumption = check_weight_assumption(instance);
    out << "schema: ok (" << instance.vertex_count() << " vertices, " << instance.edge_count() << " edges)\n";
    if (assumption.holds) {
        out << "weight assumption: holds\n";
    } else {
        const WeightTriple& t = *assumption.violation;
        out << "weight assumption: violated by s=" << instance.vertex_label(t.s) << " t=" << instance.vertex_label(t.t)
            << " u=" << instance.vertex_label(t.u) << "\n";
    }
    if (verbose)
        out << "weight assumption allowing s == t: " << (assumption.holds_with_repetition ? "holds" : "violated")
            << "\n";
    return assumption.holds ? kOk : kAssumptionViolated;
}

// Wraps a subcommand body: input problems become exit code 1.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const InputFailure& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const InvalidArborescence& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Popular arborescences in vertex-weighted digraphs", "popbranch"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Find a popular arborescence or report that none exists");
    solve_cmd->add_option("instance", solve_args.instance, "Instance JSON file")->required();
    solve_cmd->add_flag("--certificate", solve_args.certificate, "Print the dual certificate");
    solve_cmd->add_flag("--force", solve_args.force, "Run even if the weight assumption is violated");
    solve_cmd->add_flag("--json", solve_args.json, "Print the result JSON instead of a summary");
    solve_cmd->add_option("-o,--output", solve_args.output, "Write the result JSON to FILE");
    solve_cmd->add_option("--dot", solve_args.dot, "Write a Graphviz rendering to FILE");

    std::string verify_instance, verify_result;
    unsigned verify_jobs = 1;
    auto* verify_cmd = app.add_subcommand("verify", "Re-check a result file against an instance");
    verify_cmd->add_option("instance", verify_instance, "Instance JSON file or directory")->required();
    verify_cmd->add_option("result", verify_result, "Result JSON file or directory")->required();
    verify_cmd->add_option("--jobs", verify_jobs, "Parallel workers in directory mode")->check(CLI::Range(1u, 256u));

    std::string enumerate_instance;
    std::size_t cap = kDefaultEnumerationCap;
    unsigned enumerate_jobs = 1;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List all popular arborescences by exhaustive search");
    enumerate_cmd->add_option("instance", enumerate_instance, "Instance JSON file or directory")->required();
    enumerate_cmd->add_option("--cap", cap, "Maximum number of arborescences to enumerate");
    enumerate_cmd->add_option("--jobs", enumerate_jobs, "Parallel workers in directory mode")->check(CLI::Range(1u, 256u));

    GenParams gen;
    std::string gen_output;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
    gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
    gen_cmd->add_option("--density", gen.density, "Edge probability")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--max-weight", gen.max_weight, "Maximum vertex weight")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--tie-prob", gen.tie_prob, "Probability of a rank tie")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--seed", gen.seed, "Random seed");
    gen_cmd->add_flag("--enforce-assumption", gen.enforce_assumption, "Resample weights until the assumption holds");
    gen_cmd->add_option("-o,--output", gen_output, "Output file (default: standard output)");

    std::string check_instance;
    bool verbose = false;
    auto* check_cmd = app.add_subcommand("check", "Validate an instance and report the weight assumption");
    check_cmd->add_option("instance", check_instance, "Instance JSON file")->required();
    check_cmd->add_flag("-v,--verbose", verbose, "Also report the reading that allows s == t");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    if (*solve_cmd) return guarded(err, [&] { return run_solve(solve_args, out, err); });

    if (*verify_cmd) {
        return guarded(err, [&] {
            if (!fs::is_directory(verify_instance)) return verify_one(verify_instance, verify_result, out, err);
            auto files = instance_files(verify_instance);
            return run_batch(files.size(), verify_jobs, [&](std::size_t i, std::ostream& o, std::ostream& e) {
                std::string stem = files[i].stem().string();
                fs::path result = fs::path(verify_result) / (stem + ".result.json");
                o << "== " << files[i].filename().string() << "\n";
                return guarded(e, [&] { return verify_one(files[i].string(), result.string(), o, e); });
            }, out, err);
        });
    }

    if (*enumerate_cmd) {
        return guarded(err, [&] {
            if (!fs::is_directory(enumerate_instance)) return run_enumerate_one(enumerate_instance, cap, out, err);
            auto files = instance_files(enumerate_instance);
            return run_batch(files.size(), enumerate_jobs, [&](std::size_t i, std::ostream& o, std::ostream& e) {
                return guarded(e, [&] { return run_enumerate_one(files[i].string(), cap, o, e); });
            }, out, err);
        });
    }

    if (*gen_cmd) {
        return guarded(err, [&] {
            if (gen.n < 1) throw InputFailure("--n must be at least 1");
            std::string text = serialize_instance(generate_random(gen));
            if (gen_output.empty())
                out << text;
            else
                write_file(gen_output, text);
            return kOk;
        });
    }

    if (*check_cmd) return guarded(err, [&] { return run_check(check_instance, verbose, out); });
    return kInputError;
}

}  // namespace popbranch::cli
