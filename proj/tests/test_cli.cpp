#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = prunres::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(PRUNRES_FIXTURES) + "/" + name);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST(Cli, BettiPath5MatchesDiagram) {
    const auto r = run({"betti", "--ideal", "path:5", "--method", "pruned"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, fixture("path5_pruned.txt"));
    EXPECT_EQ(r.err, "");
}

TEST(Cli, BettiAllMethods) {
    EXPECT_EQ(run({"betti", "--ideal", "cycle:5", "--method", "lyubeznik"}).out, fixture("cycle5_lyubeznik.txt"));
    EXPECT_EQ(run({"betti", "--ideal", "rp2", "--method", "pruned", "--char", "3"}).out, fixture("rp2_pruned.txt"));
    const auto nu = run({"betti", "--ideal", "path:5", "--method", "nu"});
    EXPECT_EQ(nu.code, 0);
    EXPECT_EQ(nu.out.rfind("approximation (degree-shift pruning)\n", 0), 0u);
    EXPECT_EQ(run({"betti", "--ideal", "path:5", "--method", "bogus"}).code, prunres::cli::kUsage);
}

TEST(Cli, BettiJson) {
    const auto r = run({"betti", "--ideal", "ring x y; gens x, y", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["graded"], nlohmann::json::parse("[[0,0,1],[1,1,2],[2,2,1]]"));
    EXPECT_EQ(j["multigraded"][3], nlohmann::json::parse(R"([2,"x*y",1])"));
}

TEST(Cli, TrueBetti) {
    EXPECT_EQ(run({"true-betti", "--ideal", "rp2"}).out, fixture("rp2_char0.txt"));
    EXPECT_EQ(run({"true-betti", "--ideal", "rp2", "--char", "2", "--oracle", "hochster"}).out,
              fixture("rp2_char2.txt"));
    const auto ns = run({"true-betti", "--ideal", "ring x y; gens x^2, x*y", "--oracle", "hochster"});
    EXPECT_EQ(ns.code, prunres::cli::kUsage);
    EXPECT_NE(ns.err.find("--polarize"), std::string::npos);
    const auto pol = run({"true-betti", "--ideal", "ring x y; gens x^2, x*y", "--oracle", "hochster", "--polarize"});
    EXPECT_EQ(pol.code, 0);
    EXPECT_EQ(pol.out, run({"true-betti", "--ideal", "ring x y; gens x^2, x*y"}).out);
    EXPECT_EQ(run({"true-betti", "--ideal", "rp2", "--char", "4"}).code, prunres::cli::kUsage);
}

TEST(Cli, CheckExitCodes) {
    EXPECT_EQ(run({"check", "exact", "--ideal", "cycle:7", "--method", "simplicial"}).code, 0);
    EXPECT_EQ(run({"check", "dsquared", "--ideal", "rp2", "--method", "lyubeznik"}).code, 0);
    EXPECT_EQ(run({"check", "matching", "--ideal", "example-4-1", "--method", "pruned"}).code, 0);
    EXPECT_EQ(run({"check", "minimal", "--ideal", "path:6", "--method", "pruned"}).code, 0);
    const auto rp2 = run({"check", "minimal", "--ideal", "rp2", "--method", "pruned"});
    EXPECT_EQ(rp2.code, prunres::cli::kCheckFailed);
    EXPECT_EQ(rp2.out, "minimal: false\nsyntactic: false\nFAIL\n");
    EXPECT_EQ(run({"check", "minimal", "--ideal", "rp2", "--method", "pruned", "--char", "2"}).code, 0);
    EXPECT_EQ(run({"check", "minimal", "--ideal", "path:5", "--method", "taylor"}).code, prunres::cli::kCheckFailed);
}

TEST(Cli, CheckNu) {
    const auto m = run({"check", "matching", "--ideal", "path:5", "--method", "nu"});
    EXPECT_EQ(m.code, 0);
    EXPECT_EQ(m.out, "is_matching=true is_homogeneous=false is_acyclic=true\nPASS\n");
    EXPECT_EQ(run({"check", "exact", "--ideal", "path:5", "--method", "nu"}).code, prunres::cli::kUsage);
}

TEST(Cli, CompareRp2Char2) {
    const auto r = run({"compare", "--ideal", "rp2", "--char", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("oracle:             1 10 15 7 1\n"), std::string::npos);
    EXPECT_NE(r.out.find("pruned:             1 10 15 7 1  MINIMAL\n"), std::string::npos);
    EXPECT_NE(r.out.find("lyubeznik:          1 10 27 27 9  -\n"), std::string::npos);
    EXPECT_EQ(run({"compare", "--ideal", "rp2"}).out.find("pruned:             1 10 15 7 1  MINIMAL"),
              std::string::npos);
}

TEST(Cli, Split) {
    const auto r = run({"split", "--ideal", "path:5", "--at", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "step=2 lower=(1,0,1,0) upper=(1,1,1,0) X_J/X_J\n"
              "step=2 lower=(1,0,1,1) upper=(1,1,1,1) X'/X'\n"
              "step=3 lower=(0,1,0,1) upper=(0,1,1,1) X'/X'\n"
              "s=3 pruned_splitting=yes nonzero_residuals=0\n"
              "last_step_pruning=no\n");
    const auto scan = run({"split", "--ideal", "cycle:5", "--scan", "--format", "json"});
    EXPECT_EQ(scan.code, 0);
    const auto j = nlohmann::json::parse(scan.out);
    EXPECT_EQ(j["splits"].size(), 4u);
    EXPECT_EQ(j["last_step_pruning"], true);
    EXPECT_EQ(run({"split", "--ideal", "path:5", "--at", "4"}).code, prunres::cli::kUsage);
}

TEST(Cli, TraceAndDump) {
    const auto t = run({"betti", "--ideal", "path:5", "--method", "nu", "--trace"});
    EXPECT_NE(t.out.find(fixture("path5_nu_trace.txt")), std::string::npos);
    const auto d = run({"betti", "--ideal", "path:5", "--method", "pruned", "--dump-complex"});
    EXPECT_NE(d.out.find(fixture("path5_pruned_complex.txt")), std::string::npos);
}

TEST(Cli, Errors) {
    EXPECT_EQ(run({}).code, prunres::cli::kUsage);
    EXPECT_EQ(run({"betti"}).code, prunres::cli::kUsage);
    const auto parse = run({"betti", "--ideal", "ring x; gens y"});
    EXPECT_EQ(parse.code, prunres::cli::kUsage);
    EXPECT_NE(parse.err.find("line 2, column"), std::string::npos);
    EXPECT_EQ(run({"betti", "--ideal", "/no/such/file"}).code, prunres::cli::kUsage);
}

TEST(Cli, GeneratorCap) {
    const auto capped = run({"betti", "--ideal", "path:26"});
    EXPECT_EQ(capped.code, prunres::cli::kUsage);
    EXPECT_NE(capped.err.find("--force"), std::string::npos);
    EXPECT_EQ(prunres::cli::load({"path:25"}).size(), 24u);
    EXPECT_EQ(prunres::cli::load({"path:26", true}).size(), 25u);
}

TEST(Cli, Deterministic) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"compare", "--ideal", "cycle:6"},
             {"betti", "--ideal", "example-4-1", "--method", "lyubeznik", "--format", "json"},
             {"split", "--ideal", "cycle:6", "--scan"},
             {"betti", "--ideal", "rp2", "--method", "simplicial", "--trace"}}) {
        EXPECT_EQ(run(args).out, run(args).out);
    }
}
