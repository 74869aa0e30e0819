// SPDX-License-Identifier: Apache-2.0

#include "qadd/cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qadd;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string run_binary(const std::string& args) {
    const std::string cmd = std::string(QADD_CLI_BINARY) + " " + args + " 2>/dev/null";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    std::string out;
    std::array<char, 4096> buf{};
    for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0;) {
        out.append(buf.data(), n);
    }
    return out;
}

std::size_t count_lines_with(const std::string& text, const std::string& prefix) {
    std::istringstream in(text);
    std::size_t k = 0;
    for (std::string line; std::getline(in, line);) {
        k += line.rfind(prefix, 0) == 0 ? 1 : 0;
    }
    return k;
}

} // namespace

TEST(CliSynth, OptimizedAtFour) {
    const Result r = cli({"synth", "--constant", "3", "--width", "4", "--variant", "optimized", "--format", "qasm"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out.rfind("OPENQASM 3.0;\n", 0), 0U);
    EXPECT_NE(r.out.find("// t_count=11\n"), std::string::npos);
    EXPECT_EQ(count_lines_with(r.out, "ccx "), 3U);
    EXPECT_EQ(count_lines_with(r.out, "// and"), 2U);
}

TEST(CliSynth, ZeroConstant) {
    const Result r = cli({"synth", "--constant", "0", "--width", "8"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("qubit[8] b;\n"), std::string::npos);
    EXPECT_EQ(count_lines_with(r.out, "x ") + count_lines_with(r.out, "cx ") + count_lines_with(r.out, "ccx "), 0U);
}

TEST(CliSynth, EvenConstantShifted) {
    const Result r = cli({"synth", "--constant", "6", "--width", "5"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out.find("b[0]"), std::string::npos);
}

TEST(CliSynth, JsonAndTextFormats) {
    const Result j = cli({"synth", "-a", "5", "-n", "4", "--format", "json"});
    EXPECT_EQ(j.code, kExitOk);
    const auto parsed = nlohmann::json::parse(j.out);
    EXPECT_EQ(parsed.at("n_data"), 4);
    EXPECT_EQ(parsed.at("n_ancilla"), 1);
    const Result t = cli({"synth", "-a", "5", "-n", "4", "--format", "text"});
    EXPECT_EQ(t.code, kExitOk);
    EXPECT_NE(t.out.find("toffoli"), std::string::npos);
}

TEST(CliSynth, PipelineVariantAndPasses) {
    const Result p = cli({"synth", "-a", "5", "-n", "6", "--variant", "pipeline", "--format", "json"});
    ASSERT_EQ(p.code, kExitOk);
    const Result u = cli({"synth", "-a", "5", "-n", "6", "--variant", "unoptimized", "--passes",
                          "cancel-inverses,merge-classical-x", "--format", "json"});
    ASSERT_EQ(u.code, kExitOk);
    EXPECT_EQ(p.out, u.out);
}

TEST(CliVerify, Examples) {
    const Result o = cli({"verify", "--constant", "5", "--width", "6", "--variant", "optimized", "--exhaustive"});
    EXPECT_EQ(o.code, kExitOk);
    EXPECT_NE(o.out.find("PASS 64/64"), std::string::npos);
    const Result c = cli({"verify", "--constant", "5", "--width", "6", "--variant", "controlled", "--exhaustive"});
    EXPECT_EQ(c.code, kExitOk);
    EXPECT_NE(c.out.find("PASS 128/128"), std::string::npos);
    const Result z = cli({"verify", "--constant", "4", "--width", "2"});
    EXPECT_EQ(z.code, kExitOk);
    EXPECT_NE(z.out.find("identity"), std::string::npos);
    EXPECT_NE(z.out.find("PASS 4/4"), std::string::npos);
}

TEST(CliVerify, SampledEchoesSeed) {
    const Result r = cli({"verify", "-a", "12345", "-n", "30", "--samples", "50", "--seed", "9"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("seed=9"), std::string::npos);
    EXPECT_NE(r.out.find("PASS 50/50"), std::string::npos);
    const Result j = cli({"verify", "-a", "12345", "-n", "30", "--samples", "50", "--seed", "9", "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(j.out).at("seed"), 9);
}

TEST(CliVerify, SeedFromEnvironment) {
    ::setenv("QADD_SEED", "77", 1);
    const Result env = cli({"verify", "-a", "3", "-n", "30", "--samples", "5"});
    const Result flag = cli({"verify", "-a", "3", "-n", "30", "--samples", "5", "--seed", "78"});
    ::unsetenv("QADD_SEED");
    EXPECT_NE(env.out.find("seed=77"), std::string::npos);
    EXPECT_NE(flag.out.find("seed=78"), std::string::npos);
}

TEST(CliVerify, WideExhaustiveIsUsageError) {
    EXPECT_EQ(cli({"verify", "-a", "3", "-n", "30"}).code, kExitUsage);
}

TEST(CliVerify, ExhaustiveAndSamplesExclusive) {
    EXPECT_EQ(cli({"verify", "-a", "3", "-n", "6", "--exhaustive", "--samples", "4"}).code, kExitUsage);
}

TEST(CliCount, OptimizedAtTen) {
    const Result r = cli({"count", "--constant", "9", "--width", "10", "--variant", "optimized"});
    EXPECT_EQ(r.code, kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("t_count"), 35);
    EXPECT_EQ(j.at("ancilla"), 7);
    EXPECT_EQ(j.at("conforms"), true);
}

TEST(CliCount, StrictFailsWithoutConformance) {
    EXPECT_EQ(cli({"count", "-a", "9", "-n", "6", "--variant", "unoptimized", "--strict"}).code, kExitFailure);
    EXPECT_EQ(cli({"count", "-a", "9", "-n", "6", "--variant", "unoptimized"}).code, kExitOk);
    EXPECT_EQ(cli({"count", "-a", "9", "-n", "6", "--variant", "controlled", "--strict"}).code, kExitOk);
}

TEST(CliCompare, WidthFive) {
    const Result r = cli({"compare", "--width", "5", "--format", "json"});
    EXPECT_EQ(r.code, kExitOk);
    const auto rows = nlohmann::json::parse(r.out).at("rows");
    EXPECT_EQ(rows.at(4).at("ancilla_formula"), 2);
    EXPECT_EQ(rows.at(4).at("t_formula"), 15);
    EXPECT_EQ(rows.at(0).at("ancilla_formula"), 6);
    EXPECT_EQ(rows.at(0).at("t_formula"), 49);
    EXPECT_EQ(rows.at(0).at("t_measured"), 56);
}

TEST(CliCompare, StrictSurfacesBaselineGap) {
    EXPECT_EQ(cli({"compare", "--width", "5", "--strict"}).code, kExitFailure);
    EXPECT_EQ(cli({"compare", "--width", "3"}).code, kExitUsage);
}

TEST(CliEquiv, Examples) {
    const Result r = cli({"equiv", "--constant", "7", "--width", "5", "--left", "unoptimized", "--right", "optimized"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("equivalent"), std::string::npos);
    EXPECT_EQ(cli({"equiv", "-a", "11", "-n", "6", "--left", "cuccaro", "--right", "pipeline"}).code, kExitOk);
    EXPECT_EQ(cli({"equiv", "-a", "11", "-n", "6", "--left", "cuccaro", "--right", "optimized", "--control"}).code,
              kExitUsage);
}

TEST(CliErrors, UsageErrors) {
    EXPECT_EQ(cli({}).code, kExitUsage);
    EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(cli({"synth", "--width", "4"}).code, kExitUsage);
    EXPECT_EQ(cli({"synth", "-a", "3", "-n", "0"}).code, kExitUsage);
    EXPECT_EQ(cli({"synth", "-a", "3", "-n", "64"}).code, kExitUsage);
    EXPECT_EQ(cli({"synth", "-a", "3", "-n", "4", "--variant", "fancy"}).code, kExitUsage);
    EXPECT_EQ(cli({"synth", "-a", "3", "-n", "4", "--passes", "fold"}).code, kExitUsage);
    EXPECT_EQ(cli({"synth", "-a", "3", "-n", "4", "--format", "svg"}).code, kExitUsage);
    EXPECT_EQ(cli({"synth", "-a", "3", "-n", "4", "--variant", "cuccaro", "--control"}).code, kExitUsage);
    const Result r = cli({"synth", "-a", "x", "-n", "4"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_FALSE(r.err.empty());
}

TEST(CliErrors, HelpExitsZero) {
    const Result r = cli({"--help"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("synth"), std::string::npos);
}

TEST(CliOutput, WritesFile) {
    const auto path = std::filesystem::temp_directory_path() / "qadd_cli_test_out.qasm";
    std::filesystem::remove(path);
    const Result r = cli({"synth", "-a", "3", "-n", "4", "--out", path.string()});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    EXPECT_EQ(content.str(), cli({"synth", "-a", "3", "-n", "4"}).out);
    std::filesystem::remove(path);
}

TEST(CliDeterminism, ByteIdenticalAcrossProcesses) {
    for (const char* args : {"synth -a 181 -n 9 --variant controlled", "synth -a 77 -n 8 --format json",
                             "verify -a 5 -n 30 --samples 200 --seed 4", "count -a 9 -n 12 --format text",
                             "compare -n 16", "equiv -a 7 -n 6 --left cuccaro --right optimized"}) {
        const std::string first = run_binary(args);
        EXPECT_FALSE(first.empty()) << args;
        EXPECT_EQ(first, run_binary(args)) << args;
        EXPECT_EQ(first, cli([&] {
                             std::vector<std::string> v;
                             std::istringstream in(args);
                             for (std::string w; in >> w;) {
                                 v.push_back(w);
                             }
                             return v;
                         }())
                             .out)
            << args;
    }
}
