#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "silt/io/algebra_file.hpp"
#include "silt/silting/explore.hpp"
#include "support.hpp"

using namespace silt;

namespace {

std::string data(const std::string& name) { return std::string(SILT_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args, const std::string& env = "") {
  Run r;
  const std::string cmd = env + " " + SILT_CLI_PATH + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

ParseError parse_error(const std::string& text) {
  try {
    load_algebra(parse_algebra_file(text), RationalField{});
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return ParseError(0, 0, "");
}

}  // namespace

TEST(AlgebraFile, A4MatchesPreset) {
  auto l = load_algebra(parse_algebra_file(slurp(data("a4.alg"))), RationalField{});
  auto preset = make_doubled_algebra(RationalField{}, 4);
  ASSERT_EQ(l.alg->dim(), preset->dim());
  for (int b = 0; b < preset->dim(); ++b) EXPECT_EQ(l.alg->qualified_name(b), preset->qualified_name(b));
  ASSERT_EQ(l.automorphisms.size(), 1u);
  EXPECT_FALSE(l.automorphisms[0].is_identity());
  ASSERT_NE(l.module("E"), nullptr);
  EXPECT_EQ(describe(resolution_complex(*l.module("E"))), "[4 -> 3 -> 2 -> 1]@-3");
  EXPECT_EQ(l.module("aE")->dims(), (std::vector<int>{1, 1, 1, 1}));
}

TEST(AlgebraFile, TrivialExtensionFile) {
  auto l = load_algebra(parse_algebra_file(slurp(data("t_a4.alg"))), RationalField{});
  EXPECT_EQ(l.alg->dim(), 32);
  auto p = load_algebra(parse_algebra_file(slurp(data("t_a4.alg"))), PrimeField(5));
  EXPECT_EQ(p.alg->dim(), 32);
}

TEST(AlgebraFile, TextRoundTrip) {
  for (const char* name : {"a2.alg", "a3.alg", "a4.alg", "a5.alg", "a6.alg", "kronecker.alg", "t_a4.alg"}) {
    auto f = parse_algebra_file(slurp(data(name)));
    const auto text = algebra_file_text(f);
    auto g = parse_algebra_file(text);
    EXPECT_TRUE(f == g) << name;
    EXPECT_EQ(algebra_file_text(g), text) << name;
  }
}

TEST(AlgebraFile, Coefficients) {
  auto f = parse_algebra_file("vertices 3\narrow x 1 2\narrow y 1 2\narrow x 2 3\narrow y 2 3\nrelation 1: 2 xy - 1/2 yx\n");
  ASSERT_EQ(f.relations.size(), 1u);
  EXPECT_EQ(f.relations[0].terms[0].coeff, "2");
  EXPECT_EQ(f.relations[0].terms[1].coeff, "-1/2");
  auto l = load_algebra(f, RationalField{});
  // xx, yy and one of xy, yx remain.
  EXPECT_EQ(l.alg->between(0, 2).size(), 3u);
}

TEST(AlgebraFile, ErrorsCarryLocations) {
  auto e = parse_error("vertices 2\nvertex 3\n");
  EXPECT_EQ(e.line, 2);
  EXPECT_EQ(e.column, 1);
  EXPECT_NE(std::string(e.what()).find("unknown key 'vertex'"), std::string::npos);

  e = parse_error("vertices 2\narrow x 1 2\nrelation 1:   xz\n");
  EXPECT_EQ(e.line, 3);
  EXPECT_EQ(e.column, 16);
  EXPECT_NE(std::string(e.what()).find("'z'"), std::string::npos);

  e = parse_error("vertices 2\narrow x 1 3\n");
  EXPECT_EQ(e.line, 2);
  EXPECT_EQ(e.column, 11);

  e = parse_error("field Fp:4\nvertices 2\n");
  EXPECT_EQ(e.line, 1);

  e = parse_error("vertices 2\noption speed 3\n");
  EXPECT_NE(std::string(e.what()).find("unknown option"), std::string::npos);

  e = parse_error("arrow x 1 2\n");
  EXPECT_NE(std::string(e.what()).find("'vertices' must come before"), std::string::npos);

  e = parse_error("vertices 2\narrow x 1 2\narrow y 1 2\nautomorphism s: x->z\n");
  EXPECT_EQ(e.line, 4);

  e = parse_error("vertices 2\narrow x 1 2\nmodule M: 1 / x x\n");
  EXPECT_EQ(e.line, 3);
  EXPECT_EQ(e.column, 17);
}

TEST(Cli, InfoReportsDimensions) {
  auto r = cli("info " + data("a4.alg"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dimension 16"), std::string::npos);
  EXPECT_NE(r.out.find("global dimension 3"), std::string::npos);
  r = cli("info " + data("kronecker.alg"));
  EXPECT_NE(r.out.find("dimension 4"), std::string::npos);
  EXPECT_NE(r.out.find("global dimension 1"), std::string::npos);
}

TEST(Cli, MalformedFileExitsWithInputError) {
  const std::string path = testing::TempDir() + "bad.alg";
  std::ofstream(path) << "vertices 2\narrow x 1 2\nrelation 1: xq\n";
  auto r = cli("info " + path);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("bad.alg:3:"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("'q'"), std::string::npos) << r.out;
}

TEST(Cli, TwistReportsCertificate) {
  auto r = cli("twist " + data("a4.alg") + " --module E -d 3");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("[4 -> 3+1 -> 2 -> 1]@-1"), std::string::npos);
  EXPECT_NE(r.out.find("[3 -> 2 -> 1]@0"), std::string::npos);
  r = cli("twist " + data("a4.alg") + " --module E -d 3 --power 2");
  EXPECT_NE(r.out.find("H^4"), std::string::npos);
  r = cli("twist " + data("a3.alg") + " --module E -d 2");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("invalid"), std::string::npos);
  EXPECT_NE(r.out.find("isomorphic to aE"), std::string::npos);
}

TEST(Cli, MutateKronecker) {
  auto r = cli("mutate " + data("kronecker.alg") + " --keep 1 --direction left");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[2 -> 1^2]@-1"), std::string::npos) << r.out;
  r = cli("mutate " + data("kronecker.alg") + " --keep none");
  EXPECT_NE(r.out.find("1. [1]@-1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("2. [2]@-1"), std::string::npos) << r.out;
  EXPECT_EQ(cli("mutate " + data("kronecker.alg") + " --keep 3").code, 2);
}

TEST(Cli, ExploreAndNodeCap) {
  const std::string dot = testing::TempDir() + "graph.dot";
  auto r = cli("explore " + data("a4.alg") + " --depth 2 --dot " + dot);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("eps: 52 of 52 nodes invariant"), std::string::npos) << r.out;
  EXPECT_NE(slurp(dot).find("digraph"), std::string::npos);
  EXPECT_EQ(cli("explore " + data("a4.alg") + " --depth 2 --max-nodes 3").code, 3);
}

TEST(Cli, JsonIsDeterministic) {
  const std::string args = "--json --seed 5 twist " + data("a4.alg") + " --module E -d 3";
  auto a = cli(args), b = cli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["schema"], "silt-report/1");
  EXPECT_EQ(j["seed"], 5);
  EXPECT_TRUE(j["result"]["certificate"]["valid"].get<bool>());
}

TEST(Cli, VerifySuiteAndGuards) {
  auto r = cli("paper-verify --n 4 --sections algebra,sphericality,example");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS example"), std::string::npos);
  r = cli("paper-verify --n 3 --sections sphericality");
  EXPECT_NE(r.out.find("exceptional"), std::string::npos);
  r = cli("paper-verify --n 2 --sections homology");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("SKIP homology"), std::string::npos);
  EXPECT_EQ(cli("paper-verify --n 7").code, 2);
  EXPECT_EQ(cli("paper-verify --sections nonsense").code, 2);
  EXPECT_EQ(cli("paper-verify --n 4 --sections algebra --field Fp:7").code, 0);
}

TEST(Cli, BudgetEnvironment) {
  EXPECT_EQ(cli("info " + data("a2.alg"), "SILT_BUDGET=abc").code, 2);
  auto r = cli("--json check " + data("a4.alg"), "SILT_BUDGET=77");
  EXPECT_EQ(nlohmann::json::parse(r.out)["budget"], 77);
}
