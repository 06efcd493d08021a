#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "test_support.hpp"

namespace popbranch {
namespace {

namespace fs = std::filesystem;

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("popbranch_cli_" + std::to_string(::getpid()) + "_" +
                                             ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string tmp(const std::string& name) const { return (dir_ / name).string(); }
    fs::path dir_;
};

TEST_F(CliTest, SolvePair) {
    Invocation r = run({"solve", testing::data_path("pair.json")});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.out.find("r -> a [root]"), std::string::npos);
    EXPECT_NE(r.out.find("a -> b [ab]"), std::string::npos);
}

TEST_F(CliTest, SolveJsonMatchesFileOutput) {
    std::string result = tmp("pair.result.json");
    Invocation r = run({"solve", testing::data_path("pair.json"), "--json", "-o", result});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.out, testing::read_text(result));
    EXPECT_NE(r.out.find("\"status\": \"popular_found\""), std::string::npos);
}

TEST_F(CliTest, SolveViolatedAssumption) {
    EXPECT_EQ(run({"solve", testing::data_path("cycle3_w311.json")}).code, cli::kAssumptionViolated);
    Invocation forced = run({"solve", testing::data_path("cycle3_w311.json"), "--force", "--json"});
    EXPECT_NE(forced.code, cli::kAssumptionViolated);
    EXPECT_NE(forced.err.find("warning"), std::string::npos);
    EXPECT_NE(forced.out.find("\"assumption\""), std::string::npos);
}

TEST_F(CliTest, SolveNoneExists) {
    Invocation r = run({"solve", testing::data_path("no_admissible_entry.json"), "--dot", tmp("no_admissible_entry.dot")});
    EXPECT_EQ(r.code, cli::kNoneExists);
    EXPECT_TRUE(fs::exists(tmp("no_admissible_entry.dot")));
}

TEST_F(CliTest, InputErrors) {
    EXPECT_EQ(run({"solve", tmp("missing.json")}).code, cli::kInputError);
    std::ofstream(tmp("bad.json")) << R"({"vertices": [{"id": "a"}], "edges": []})";
    Invocation r = run({"solve", tmp("bad.json")});
    EXPECT_EQ(r.code, cli::kInputError);
    EXPECT_NE(r.err.find("/vertices/0"), std::string::npos);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kInputError);
    EXPECT_EQ(run({}).code, cli::kInputError);
}

TEST_F(CliTest, VerifyRoundTrip) {
    for (const char* name : {"pair", "cycle3_w322", "cycle3_w111", "cycle3_w311", "no_admissible_entry"}) {
        std::string instance = testing::data_path(std::string(name) + ".json");
        std::string result = tmp(std::string(name) + ".result.json");
        run({"solve", instance, "-o", result});
        Invocation r = run({"verify", instance, result});
        EXPECT_EQ(r.code, cli::kOk) << name << "\n" << r.out << r.err;
    }
}

TEST_F(CliTest, VerifyRejectsWrongResult) {
    std::string result = tmp("pair.result.json");
    std::ofstream(result) << R"({"status": "popular_found",
        "arborescence": [{"src": "r", "dst": "a", "edge_id": "root"}, {"src": "r", "dst": "b", "edge_id": "root"}],
        "certificate": {"sets": [{"members": ["a"], "y": 1, "owner": "a"}, {"members": ["b"], "y": 1, "owner": "b"}]}})";
    EXPECT_EQ(run({"verify", testing::data_path("pair.json"), result}).code, cli::kVerifyFailed);

    std::ofstream(result, std::ios::trunc) << R"({"status": "none_exists", "arborescence": [],
        "reason": {"kind": "no_arborescence_in_contracted"}})";
    EXPECT_EQ(run({"verify", testing::data_path("pair.json"), result}).code, cli::kVerifyFailed);
}

TEST_F(CliTest, VerifyDirectoryInParallel) {
    fs::path instances = dir_ / "instances";
    fs::path results = dir_ / "results";
    fs::create_directories(instances);
    fs::create_directories(results);
    for (int seed = 0; seed < 6; ++seed) {
        std::string stem = "g" + std::to_string(seed);
        std::string instance = (instances / (stem + ".json")).string();
        ASSERT_EQ(run({"gen", "--n", "5", "--density", "0.4", "--max-weight", "3", "--seed", std::to_string(seed),
                       "--enforce-assumption", "-o", instance})
                      .code,
                  cli::kOk);
        run({"solve", instance, "-o", (results / (stem + ".result.json")).string()});
    }
    Invocation r = run({"verify", instances.string(), results.string(), "--jobs", "3"});
    EXPECT_EQ(r.code, cli::kOk) << r.out << r.err;
    EXPECT_NE(r.out.find("== g5.json"), std::string::npos);
}

TEST_F(CliTest, Enumerate) {
    Invocation r = run({"enumerate", testing::data_path("cycle3_w111.json")});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.out.find("\"popular_count\": 3"), std::string::npos);
    EXPECT_EQ(run({"enumerate", testing::data_path("cycle3_w111.json"), "--cap", "3"}).code, cli::kCapExceeded);
    Invocation dir = run({"enumerate", std::string(POPBRANCH_TEST_DATA_DIR), "--jobs", "2"});
    EXPECT_EQ(dir.code, cli::kOk);
}

TEST_F(CliTest, GenIsDeterministic) {
    std::vector<std::string> args{"gen", "--n", "6", "--density", "0.5", "--max-weight", "4", "--tie-prob", "0.3",
                                  "--seed", "99", "--enforce-assumption"};
    Invocation a = run(args);
    Invocation b = run(args);
    EXPECT_EQ(a.code, cli::kOk);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("\"vertices\""), std::string::npos);
}

TEST_F(CliTest, Check) {
    EXPECT_EQ(run({"check", testing::data_path("cycle3_w322.json")}).code, cli::kOk);
    Invocation bad = run({"check", testing::data_path("cycle3_w311.json"), "--verbose"});
    EXPECT_EQ(bad.code, cli::kAssumptionViolated);
    EXPECT_NE(bad.out.find("s=b t=c u=a"), std::string::npos);
    EXPECT_NE(bad.out.find("allowing s == t"), std::string::npos);
    EXPECT_EQ(run({"check", tmp("missing.json")}).code, cli::kInputError);
}

}  // namespace
}  // namespace popbranch
