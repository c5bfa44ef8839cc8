#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "cover_ramsey/hypergraph.hpp"
#include "cover_ramsey/io.hpp"
#include "cover_ramsey/target_graph.hpp"

using namespace cover_ramsey;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cover_ramsey_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& body) {
    const auto p = (dir_ / name).string();
    std::ofstream(p, std::ios::binary) << body;
    return p;
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  static Invocation invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  // Writes the bundle from `args` to a file and checks that verify accepts it.
  void expect_verifies(std::vector<std::string> args, const std::string& name) {
    const auto p = path(name);
    args.insert(args.end(), {"--out", p});
    const auto r = invoke(args);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto v = invoke({"verify", p});
    EXPECT_EQ(v.code, 0) << v.err;
    EXPECT_EQ(v.out.rfind("verify: OK ", 0), 0u) << v.out;
  }

  fs::path dir_;
};

const std::string kFano = "7 7\n1 2 3\n1 4 5\n1 6 7\n2 4 6\n2 5 7\n3 4 7\n3 5 6\n";

}  // namespace

TEST(Sha256, KnownDigest) {
  EXPECT_EQ(cli::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_F(CliTest, GenDesignVerifies) {
  const auto r = invoke({"gen-design", "9", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto b = parse_bundle(r.out);
  EXPECT_EQ(b.kind, "design");
  EXPECT_EQ(parse_hypergraph(b.section("host")).num_edges(), 12u);
  expect_verifies({"gen-design", "9", "3"}, "d9.txt");
}

TEST_F(CliTest, GenDesignUnsupported) {
  const auto r = invoke({"gen-design", "7", "3"});
  EXPECT_EQ(r.code, cli::kExitPrecondition);
  EXPECT_NE(r.err.find("UNSUPPORTED_PARAMETERS"), std::string::npos);
}

TEST_F(CliTest, UnavoidableK6) {
  const auto k6 = file("k6.hg", write_hypergraph(Hypergraph::complete_graph(6)));
  const auto k3 = file("k3.g", write_target(TargetGraph::complete(3)));
  const auto r = invoke({"unavoidable", k6, k3, k3});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("verdict: UNAVOIDABLE"), std::string::npos);
  expect_verifies({"unavoidable", k6, k3, k3, "--jobs", "2"}, "u6.txt");
}

TEST_F(CliTest, UnavoidableK5WitnessAndShard) {
  const auto k5 = file("k5.hg", write_hypergraph(Hypergraph::complete_graph(5)));
  const auto k3 = file("k3.g", write_target(TargetGraph::complete(3)));
  const auto r = invoke({"unavoidable", k5, k3, k3});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("verdict: AVOIDABLE"), std::string::npos);
  EXPECT_TRUE(parse_bundle(r.out).has("witness"));
  expect_verifies({"unavoidable", k5, k3, k3}, "u5.txt");
  expect_verifies({"unavoidable", k5, k3, k3, "--shard", "01"}, "u5s.txt");
}

TEST_F(CliTest, UnavoidableLimit) {
  const auto k6 = file("k6.hg", write_hypergraph(Hypergraph::complete_graph(6)));
  const auto k3 = file("k3.g", write_target(TargetGraph::complete(3)));
  EXPECT_EQ(invoke({"unavoidable", k6, k3, k3, "--limit", "100"}).code, cli::kExitLimit);
}

TEST_F(CliTest, CheckCovering) {
  const auto f = file("fano.hg", kFano);
  const auto r = invoke({"check-covering", f});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("covering: true"), std::string::npos);
  expect_verifies({"check-covering", f, "--minimize"}, "cov.txt");
}

TEST_F(CliTest, FindBerge) {
  const auto f = file("fano.hg", kFano);
  const auto k4 = file("k4.g", write_target(TargetGraph::complete(4)));
  const auto k5 = file("k5.g", write_target(TargetGraph::complete(5)));
  const auto red = file("red.col", "1111111\n");
  expect_verifies({"find-berge", f, k4}, "b4.txt");
  expect_verifies({"find-berge", f, k4, "--color", "1", "--coloring", red}, "b4c.txt");
  const auto absent = invoke({"find-berge", f, k5});
  EXPECT_EQ(absent.code, 0);
  EXPECT_EQ(parse_bundle(absent.out).kind, "berge-absent");
}

TEST_F(CliTest, MoserTardosAndCertify) {
  const auto d = invoke({"gen-design", "9", "3"});
  const auto host = file("d9.hg", parse_bundle(d.out).section("host"));
  const auto mt = invoke({"mt-lll", host, "4", "--seed", "3"});
  ASSERT_EQ(mt.code, 0) << mt.err;
  const auto col = file("d9.col", parse_bundle(mt.out).section("coloring"));
  expect_verifies({"mt-lll", host, "4", "--seed", "3"}, "mt.txt");
  const auto cert = invoke({"certify-lower", host, col, "4"});
  ASSERT_EQ(cert.code, 0) << cert.err;
  EXPECT_NE(cert.out.find("R̂³(BK₄,BK₄) ≥ 10"), std::string::npos);
  expect_verifies({"certify-lower", host, col, "4"}, "lb.txt");
}

TEST_F(CliTest, CertifyLowerFailureEmitsWitness) {
  const auto f = file("fano.hg", kFano);
  const auto blue = file("blue.col", "0000000\n");
  const auto out = path("fail.txt");
  const auto r = invoke({"certify-lower", f, blue, "3", "--out", out});
  EXPECT_EQ(r.code, cli::kExitVerify);
  EXPECT_EQ(parse_bundle(slurp(out)).kind, "berge");
  EXPECT_EQ(invoke({"verify", out}).code, 0);
}

TEST_F(CliTest, MtExhausted) {
  const auto f = file("fano.hg", kFano);
  const auto r = invoke({"mt-lll", f, "2", "--max-resamples", "10"});
  EXPECT_EQ(r.code, cli::kExitLimit);
  EXPECT_EQ(parse_bundle(r.out).kind, "lll-exhausted");
}

TEST_F(CliTest, ScatterAndProduct) {
  const auto f = file("fano.hg", kFano);
  expect_verifies({"scatter", f, "3", "--seed", "11"}, "sc.txt");
  const auto col = file("c.col", "0110100\n");
  expect_verifies({"reduce-product", f, col}, "prod.txt");
  EXPECT_EQ(invoke({"scatter", f, "7", "--max-attempts", "20"}).code, cli::kExitLimit);
}

TEST_F(CliTest, Bounds) {
  const auto r = invoke({"bound", "thm1", "3", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("value: 486"), std::string::npos) << r.out;
  expect_verifies({"bound", "lll", "86", "10", "3"}, "lll.txt");
  expect_verifies({"bound", "lll-threshold", "10", "3", "--admissible"}, "thr.txt");
  expect_verifies({"bound", "asym", "20"}, "asym.txt");
  expect_verifies({"bound", "scatter", "29", "3", "3"}, "sc.txt");
}

TEST_F(CliTest, StructuredOutputVerifies) {
  const auto r = invoke({"bound", "thm1", "2", "6", "--format", "structured"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.front(), '{');
  expect_verifies({"gen-design", "15", "3", "--format", "structured"}, "d15.json");
}

TEST_F(CliTest, ReproducibleOutput) {
  const auto f = file("fano.hg", kFano);
  const auto a = invoke({"scatter", f, "3", "--seed", "5"});
  const auto b = invoke({"scatter", f, "3", "--seed", "5"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("wall-time"), std::string::npos);
  EXPECT_NE(a.err.find("wall-time"), std::string::npos);
  EXPECT_NE(a.out.find("# input " + f + " sha256 "), std::string::npos);
}

TEST_F(CliTest, TamperedBundleFailsVerify) {
  const auto p = path("d9.txt");
  ASSERT_EQ(invoke({"gen-design", "9", "3", "--out", p}).code, 0);
  std::string text = slurp(p);
  const auto pos = text.find("@design\n");
  ASSERT_NE(pos, std::string::npos);
  // First block of the first class: point 1 becomes point 2.
  const auto line_start = text.find('\n', text.find('\n', pos) + 1) + 1;
  ASSERT_EQ(text[line_start], '1');
  text[line_start] = '2';
  const auto bad = file("bad.txt", text);
  const auto v = invoke({"verify", bad});
  EXPECT_EQ(v.code, cli::kExitVerify) << v.out << v.err;
}

TEST_F(CliTest, UsageAndInputErrors) {
  EXPECT_NE(invoke({"no-such-command"}).code, 0);
  EXPECT_NE(invoke({"gen-design", "9"}).code, 0);
  EXPECT_EQ(invoke({"check-covering", path("missing.hg")}).code, cli::kExitPrecondition);
  const auto bad = file("bad.hg", "3 1\n2 1\n");
  const auto r = invoke({"check-covering", bad});
  EXPECT_EQ(r.code, cli::kExitPrecondition);
  EXPECT_NE(r.err.find("PARSE"), std::string::npos);
}
