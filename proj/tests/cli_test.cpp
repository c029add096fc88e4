#include "braidrep/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace braidrep {
namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

TEST(Cli, BuildJson) {
    CliResult r = run_cli({"build", "--n", "5", "--m", "3", "--format", "json"});
    EXPECT_EQ(r.code, cli::exit_ok);
    json j = json::parse(r.out);
    EXPECT_EQ(j.at("n").get<int>(), 5);
    EXPECT_EQ(j.at("basis").size(), 10u);
    EXPECT_EQ(j.at("generators").size(), 4u);
    EXPECT_TRUE(j.at("relations_verified").get<bool>());
}

TEST(Cli, BuildGoldenCheck) {
    CliResult r = run_cli({"build", "--n", "5", "--m", "3", "--golden-check"});
    EXPECT_EQ(r.code, cli::exit_ok);
    EXPECT_NE(r.out.find("byte-exact match"), std::string::npos);
    CliResult bad = run_cli({"build", "--n", "4", "--m", "2", "--golden-check"});
    EXPECT_EQ(bad.code, cli::exit_config_error);
}

TEST(Cli, GoldenCheckCommand) {
    CliResult r = run_cli({"golden-check"});
    EXPECT_EQ(r.code, cli::exit_ok);
    EXPECT_NE(r.out.find("match"), std::string::npos);
}

TEST(Cli, BuildFromSeedAndQTable) {
    std::string path = ::testing::TempDir() + "cli_q.json";
    {
        std::ofstream out(path);
        out << R"({"0,0": "1", "0,1": "t", "1,0": "t", "1,1": "1"})";
    }
    CliResult r = run_cli({"build", "--seed", "1,0,0", "--qtable", path, "--format", "json"});
    EXPECT_EQ(r.code, cli::exit_ok);
    json j = json::parse(r.out);
    EXPECT_EQ(j.at("basis").size(), 3u);
    std::remove(path.c_str());
}

TEST(Cli, MutuallyExclusiveSeedSpecs) {
    CliResult both = run_cli({"build", "--n", "5", "--m", "3", "--seed", "1,0"});
    EXPECT_EQ(both.code, cli::exit_config_error);
    CliResult neither = run_cli({"build"});
    EXPECT_EQ(neither.code, cli::exit_config_error);
    CliResult half = run_cli({"build", "--n", "5"});
    EXPECT_EQ(half.code, cli::exit_config_error);
}

TEST(Cli, BuildRelationFailureExitsTwo) {
    std::string path = ::testing::TempDir() + "cli_zero_q.json";
    {
        std::ofstream out(path);
        out << R"({"0,0": "1", "0,1": "0", "1,0": "t", "1,1": "1"})";
    }
    // zero q entry is a config error (pointed message), not a math failure
    CliResult r = run_cli({"build", "--seed", "1,0,0", "--qtable", path});
    EXPECT_EQ(r.code, cli::exit_config_error);
    EXPECT_NE(r.err.find("zero"), std::string::npos);
    std::remove(path.c_str());
}

TEST(Cli, AnalyzePhi53) {
    CliResult r = run_cli({"analyze", "--n", "5", "--m", "3", "--format", "json"});
    EXPECT_EQ(r.code, cli::exit_ok);
    json j = json::parse(r.out);
    EXPECT_EQ(j.at("verdict").get<std::string>(), "irreducible");
    EXPECT_EQ(j.at("method").get<std::string>(), "separation");
    EXPECT_EQ(j.at("corank").at("closed_form").get<int>(), 6);
    for (const auto& c : j.at("corank").at("per_k")) EXPECT_EQ(c.get<int>(), 6);
    EXPECT_TRUE(j.at("separation").at("holds").get<bool>());
}

TEST(Cli, AnalyzeBalancedN4M2ReportsReducible) {
    CliResult r = run_cli({"analyze", "--n", "4", "--m", "2", "--format", "json"});
    EXPECT_EQ(r.code, cli::exit_ok);
    json j = json::parse(r.out);
    EXPECT_EQ(j.at("verdict").get<std::string>(), "reducible");
    EXPECT_EQ(j.at("method").get<std::string>(), "witness");
    EXPECT_EQ(j.at("witness").at("subspace").get<std::string>(),
              "complement_symmetric_eigenspace");
    EXPECT_EQ(j.at("witness").at("dim").get<int>(), 3);
    EXPECT_FALSE(j.at("separation").at("holds").get<bool>());
}

TEST(Cli, AnalyzeM1MentionsStandardEquivalence) {
    CliResult r = run_cli({"analyze", "--n", "6", "--m", "1"});
    EXPECT_EQ(r.code, cli::exit_ok);
    EXPECT_NE(r.out.find("standard representation"), std::string::npos);
    EXPECT_NE(r.out.find("corank"), std::string::npos);
    json j = json::parse(run_cli({"analyze", "--n", "6", "--m", "1", "--format", "json"}).out);
    EXPECT_EQ(j.at("corank").at("closed_form").get<int>(), 2);
    EXPECT_TRUE(j.at("standard_equivalence").at("pass").get<bool>());
}

TEST(Cli, WordIdentity) {
    CliResult r = run_cli({"word", "--n", "5", "--m", "3", "1 2 1 -2 -1 -2"});
    EXPECT_EQ(r.code, cli::exit_ok);
    EXPECT_NE(r.out.find("identity"), std::string::npos);
}

TEST(Cli, WordEvaluatedAtT) {
    CliResult r = run_cli({"word", "--n", "5", "--m", "3", "--t", "2", "1"});
    EXPECT_EQ(r.code, cli::exit_ok);
    EXPECT_NE(r.out.find("scale 2"), std::string::npos);  // t evaluated at 2
    CliResult json_out = run_cli({"word", "--n", "3", "--m", "1", "--format", "json", "1 2"});
    EXPECT_EQ(json_out.code, cli::exit_ok);
    json j = json::parse(json_out.out);
    EXPECT_EQ(j.at("matrix").at("perm").size(), 3u);
}

TEST(Cli, WordHandComposedProduct) {
    // "1 2" on n=3, m=1 (q = 1 on equal pairs, t on unequal), composed by
    // hand: e_0 -> t^2 e_2, e_1 -> t e_0, e_2 -> t e_1
    CliResult r = run_cli({"word", "--n", "3", "--m", "1", "--format", "json", "1 2"});
    ASSERT_EQ(r.code, cli::exit_ok);
    json j = json::parse(r.out);
    EXPECT_EQ(j.at("matrix").at("perm"), (json::array_t{2, 0, 1}));
    EXPECT_EQ(j.at("matrix").at("scale"), (json::array_t{"t^2", "t", "t"}));
}

TEST(Cli, EnvSeedOverride) {
    ::setenv("BRAIDREP_SEED", "99", 1);
    CliResult r = run_cli({"word", "--n", "4", "--m", "2", "--corank", "1 2"});
    EXPECT_EQ(r.code, cli::exit_ok);
    EXPECT_NE(r.out.find("rank(word - identity)"), std::string::npos);
    ::setenv("BRAIDREP_SEED", "not-a-number", 1);
    CliResult bad = run_cli({"word", "--n", "4", "--m", "2", "1"});
    EXPECT_EQ(bad.code, cli::exit_config_error);
    ::unsetenv("BRAIDREP_SEED");
}

TEST(Cli, WordParseErrorExitsOneWithPosition) {
    CliResult r = run_cli({"word", "--n", "5", "--m", "3", "1 oops"});
    EXPECT_EQ(r.code, cli::exit_config_error);
    EXPECT_NE(r.err.find("position"), std::string::npos);
    CliResult zero = run_cli({"word", "--n", "5", "--m", "3", "0"});
    EXPECT_EQ(zero.code, cli::exit_config_error);
}

TEST(Cli, SweepCsv) {
    CliResult r = run_cli({"sweep", "--n-min", "3", "--n-max", "5", "--format", "csv"});
    EXPECT_EQ(r.code, cli::exit_ok);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    EXPECT_EQ(header, "n,m,dim,corank_measured,corank_closed_form,verdict,wall_ms");
    int rows = 0;
    std::string line;
    bool saw_53 = false;
    while (std::getline(lines, line)) {
        ++rows;
        if (line.rfind("5,3,", 0) == 0) {
            saw_53 = true;
            EXPECT_EQ(line, "5,3,10,6,6,irreducible,");
        }
    }
    EXPECT_EQ(rows, 2 + 3 + 4);  // m ranges for n = 3, 4, 5
    EXPECT_TRUE(saw_53);
}

TEST(Cli, SweepSingleRow) {
    CliResult r = run_cli({"sweep", "--n-min", "3", "--n-max", "3", "--m", "1"});
    EXPECT_EQ(r.code, cli::exit_ok);
    EXPECT_NE(r.out.find("3,1,3,2,2,irreducible,"), std::string::npos);
}

TEST(Cli, SweepMeasuredEqualsClosedFormThrough8) {
    CliResult r = run_cli({"sweep", "--n-min", "3", "--n-max", "8", "--format", "csv"});
    ASSERT_EQ(r.code, cli::exit_ok);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);  // header
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        // n,m,dim,corank_measured,corank_closed_form,verdict,wall_ms
        std::vector<std::string> fields;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) fields.push_back(cell);
        ASSERT_GE(fields.size(), 6u) << line;
        EXPECT_EQ(fields[3], fields[4]) << line;  // measured == closed form
        int n = std::stoi(fields[0]), m = std::stoi(fields[1]);
        EXPECT_EQ(fields[5], n == 2 * m ? "reducible" : "irreducible") << line;
    }
    EXPECT_EQ(rows, 2 + 3 + 4 + 5 + 6 + 7);
}

TEST(Cli, SweepDeterministicByteIdentical) {
    CliResult a = run_cli({"sweep", "--n-min", "3", "--n-max", "6"});
    CliResult b = run_cli({"sweep", "--n-min", "3", "--n-max", "6"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, cli::exit_ok);
}

TEST(Cli, OutputToFile) {
    std::string path = ::testing::TempDir() + "cli_out.json";
    CliResult r = run_cli({"build", "--n", "4", "--m", "1", "--format", "json",
                           "--output", path});
    EXPECT_EQ(r.code, cli::exit_ok);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    json j = json::parse(in);
    EXPECT_EQ(j.at("n").get<int>(), 4);
    std::remove(path.c_str());
}

TEST(Cli, HelpAndBadFlags) {
    CliResult help = run_cli({"--help"});
    EXPECT_EQ(help.code, cli::exit_ok);
    EXPECT_NE(help.out.find("build"), std::string::npos);
    CliResult sub_help = run_cli({"build", "--help"});
    EXPECT_EQ(sub_help.code, cli::exit_ok);
    EXPECT_NE(sub_help.out.find("--golden-check"), std::string::npos);
    CliResult bad = run_cli({"frobnicate"});
    EXPECT_EQ(bad.code, cli::exit_config_error);
    CliResult badformat = run_cli({"build", "--n", "4", "--m", "1", "--format", "yaml"});
    EXPECT_EQ(badformat.code, cli::exit_config_error);
}

TEST(Cli, WordCsvRespectsEvaluationPoint) {
    CliResult r = run_cli({"word", "--n", "3", "--m", "1", "--format", "csv", "--t", "2", "1"});
    ASSERT_EQ(r.code, cli::exit_ok);
    EXPECT_EQ(r.out.find("t"), std::string::npos);  // everything evaluated
    EXPECT_NE(r.out.find("2"), std::string::npos);
}

}  // namespace
}  // namespace braidrep
