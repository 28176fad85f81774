#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "relkin");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = relkin::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json as_json(const Outcome& o) {
    return nlohmann::json::parse(o.out);
}

TEST(Cli, ConvertRapidity) {
    const auto o = invoke({"convert", "--mass", "1", "--rapidity", "1", "--format", "json"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = as_json(o);
    EXPECT_NEAR(j["p0"].get<double>(), 1.54308063481524377847790562076, 1e-15);
    EXPECT_NEAR(j["psi"].get<double>(), 1.0, 1e-15);
}

TEST(Cli, ConvertMasslessPhi) {
    const auto o = invoke({"convert", "--mass", "0", "--phi", "2", "--format", "json"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = as_json(o);
    EXPECT_EQ(j["p0"].get<double>(), 0.5);
    EXPECT_EQ(j["p"].get<double>(), 0.5);
}

TEST(Cli, ConvertRestReportsNoCounterAngle) {
    const auto o = invoke({"convert", "--mass", "1", "--momenta", "1,0", "--format", "json"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(as_json(o)["chi"], "rest");
}

TEST(Cli, ConvertDomainErrorExitsTwo) {
    EXPECT_EQ(invoke({"convert", "--mass", "1", "--velocity", "1"}).code, relkin::cli::kBadInput);
    EXPECT_EQ(invoke({"convert", "--rapidity", "1"}).code, relkin::cli::kBadInput);
}

TEST(Cli, SolveMass) {
    const auto o = invoke({"run", "solve-mass", "--K", "1.1", "--format", "json"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_NEAR(as_json(o)["y"].get<double>(), 0.553234632439105796302283053709, 1e-13);
    EXPECT_EQ(invoke({"run", "solve-mass"}).code, relkin::cli::kBadInput);
}

TEST(Cli, Hyperdist) {
    const auto o = invoke({"run", "hyperdist", "--z", "0,1", "--w", "0,2", "--format", "json"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = as_json(o);
    EXPECT_NEAR(j["distance"].get<double>(), std::log(2.0), 1e-15);
    EXPECT_EQ(j["endpoints"]["w_star"], "inf");
}

TEST(Cli, LadderCsv) {
    const auto o = invoke({"run", "ladder", "--mass", "0.5", "--kappa", "1", "--jmax", "2", "--format", "csv"});
    ASSERT_EQ(o.code, 0) << o.err;
    std::istringstream lines(o.out);
    std::string header;
    std::getline(lines, header);
    EXPECT_EQ(header.rfind("J,alpha,v,lambda", 0), 0u);
    int rows = 0;
    for (std::string line; std::getline(lines, line);) rows += line.empty() ? 0 : 1;
    EXPECT_EQ(rows, 5);
}

TEST(Cli, TrajectoryCsv) {
    const auto o = invoke({"run", "trajectory", "--field", "electric", "--E", "0.5,0,0", "--tau-end", "0.1",
                           "--step", "0.01", "--format", "csv"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_GT(std::count(o.out.begin(), o.out.end(), '\n'), 10);
}

TEST(Cli, TrajectoryRejectionExitsThree) {
    const auto o = invoke({"run", "trajectory", "--field", "coulomb", "--k", "-0.5", "--r0", "1,0,0", "--p",
                           "0,0.8,0", "--tau-end", "5", "--step", "0.5", "--max-drift", "1e-16"});
    EXPECT_EQ(o.code, relkin::cli::kNoConvergence);
}

TEST(Cli, VerifyJsonShape) {
    const auto o = invoke({"verify", "--suite", "halfplane", "--seed", "7", "--format", "json"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = as_json(o);
    EXPECT_EQ(j["seed"], 7);
    ASSERT_EQ(j["suites"].size(), 1u);
    EXPECT_EQ(j["suites"][0]["name"], "halfplane");
    for (const auto& c : j["suites"][0]["checks"]) {
        EXPECT_TRUE(c.contains("id") && c.contains("paper_ref") && c.contains("residual") && c.contains("tol") &&
                    c.contains("pass"));
    }
}

TEST(Cli, VerifyToleranceOverrideCanFail) {
    const auto o = invoke({"verify", "--suite", "halfplane", "--tolerance", "distance=1e-300", "--format", "json"});
    EXPECT_EQ(o.code, relkin::cli::kCheckFailed);
    EXPECT_EQ(invoke({"verify", "--tolerance", "no_such=1"}).code, relkin::cli::kBadInput);
    EXPECT_EQ(invoke({"verify", "--suite", "nonsense"}).code, relkin::cli::kBadInput);
}

TEST(Cli, VerifyWritesOutFile) {
    const auto path = std::filesystem::temp_directory_path() / "relkin_cli_test_report.json";
    const auto o = invoke({"verify", "--suite", "qdeform", "--out", path.string(), "--format", "json"});
    ASSERT_EQ(o.code, 0) << o.err;
    std::ifstream in(path);
    EXPECT_EQ(nlohmann::json::parse(in)["suites"][0]["name"], "qdeform");
    std::filesystem::remove(path);
}

TEST(Cli, SeedFromEnvironment) {
    ::setenv("RELKIN_SEED", "123", 1);
    const auto o = invoke({"verify", "--suite", "kinematics", "--format", "json"});
    ::unsetenv("RELKIN_SEED");
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(as_json(o)["seed"], 123);
}

}  // namespace
