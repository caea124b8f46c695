#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

#include "cartcoh/cli.h"
#include "cartcoh/json_io.h"
#include "cartcoh/syntax.h"
#include "support/random_terms.h"

namespace cartcoh::testing {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cartcoh");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err, false);
  return {code, out.str(), err.str()};
}

std::string Golden(const std::string& name) {
  return std::string(CARTCOH_GOLDEN_DIR) + "/" + name;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void ExpectGolden(const std::vector<std::string>& args, const std::string& expected,
                  int code) {
  const CliRun first = Cli(args);
  const CliRun second = Cli(args);
  EXPECT_EQ(first.code, code);
  EXPECT_EQ(first.out, ReadFile(Golden(expected)));
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(first.err, "");
}

TEST(CliGoldenTest, LetterLength) {
  ExpectGolden({"object", Golden("letter_length.obj")}, "letter_length.out", kExitTrue);
  EXPECT_NE(ReadFile(Golden("letter_length.out")).find("letter_length: 4\n"),
            std::string::npos);
}

TEST(CliGoldenTest, EtaEquality) {
  ExpectGolden({"equal", Golden("eta_lhs.term"), Golden("eta_rhs.term")},
               "eta_equal.out", kExitTrue);
  EXPECT_EQ(ReadFile(Golden("eta_equal.out")), "equal\n");
}

TEST(CliGoldenTest, CollapseWitness) {
  ExpectGolden({"collapse", Golden("collapse_lhs.term"), Golden("collapse_rhs.term")},
               "collapse.json", kExitTrue);
}

TEST(CliGoldenTest, NormalizeTrace) {
  ExpectGolden({"normalize", "--trace", Golden("normalize_trace.term")},
               "normalize_trace.out", kExitTrue);
}

TEST(CliTest, Check) {
  const CliRun r = Cli({"check", "p1{p,q}"});
  EXPECT_EQ(r.code, kExitTrue);
  EXPECT_EQ(r.out, "p * q -> p\n");
}

TEST(CliTest, VerdictsAndExitCodes) {
  EXPECT_EQ(Cli({"equal", "p1{p,p}", "p2{p,p}"}).out, "not equal\n");
  EXPECT_EQ(Cli({"equal", "p1{p,p}", "p2{p,p}"}).code, kExitFalse);
  const CliRun same = Cli({"collapse", "id{p}", "id{p}"});
  EXPECT_EQ(same.code, kExitFalse);
  EXPECT_EQ(Cli({"equal", "p1{p,q}", "p2{p,q}"}).code, kExitError);
  EXPECT_EQ(Cli({}).code, kExitError);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitError);
  EXPECT_EQ(Cli({"--mode", "monoidal", "check", "id{p}"}).code, kExitError);
}

TEST(CliTest, GraphAndSynth) {
  const CliRun g = Cli({"graph", "p2{p,q}"});
  EXPECT_EQ(g.code, kExitTrue);
  const Json j = Json::parse(g.out);
  EXPECT_EQ(j["source_letters"], 2);
  EXPECT_EQ(j["target_letters"], 1);
  EXPECT_EQ(j["map"], Json::array({2}));
  const CliRun s = Cli({"synth", R"({"dom": "p*q", "cod": "q", "map": [2]})"});
  EXPECT_EQ(s.code, kExitTrue);
  EXPECT_EQ(s.out, "p2{p,q}\n");
  EXPECT_EQ(Cli({"synth", R"({"dom": "p*q", "cod": "q", "map": [1]})"}).code, kExitError);
}

TEST(CliTest, DiagnosticsAreRendered) {
  const CliRun r = Cli({"check", "<id{p}, id{q}>"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_EQ(r.out, "");
  EXPECT_NE(r.err.find("<inline>:1:"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("TypeMismatch"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find('^'), std::string::npos);
  EXPECT_EQ(Cli({"check", "(p*"}).code, kExitError);
}

TEST(CliTest, BinaryProductsModeRejectsTerminal) {
  for (const char* text : {"bang{p}", "id{p*T}", "p1{T,p}", "<id{p}, bang{p}>",
                           "sigma{p}", "delta{p}"}) {
    for (const char* command : {"check", "graph", "normalize"}) {
      const CliRun r = Cli({"--mode", "binary-products", command, text});
      EXPECT_EQ(r.code, kExitError) << text;
      EXPECT_NE(r.err.find("ModeViolation"), std::string::npos) << r.err;
    }
  }
  EXPECT_EQ(Cli({"--mode", "binary-products", "check", "swap{p,q}"}).code, kExitTrue);
}

TEST(CliPropertyTest, EqualMethodsAgree) {
  for (Mode mode : {Mode::kCartesian, Mode::kBinaryProducts}) {
    const std::string flag =
        mode == Mode::kCartesian ? "cartesian" : "binary-products";
    TermGen gen(71, mode);
    for (int i = 0; i < 100; ++i) {
      auto [dom, cod] = gen.type();
      const Arrow f = gen.term(dom, cod, 3);
      const Arrow g = i % 2 ? gen.mutate_equal(f, 2) : gen.term(dom, cod, 3);
      const std::string a = print_arrow(f), b = print_arrow(g);
      const CliRun by_graph = Cli({"--mode", flag, "equal", "--method", "graph", a, b});
      const CliRun by_nf = Cli({"--mode", flag, "equal", "--method", "normalize", a, b});
      const CliRun both = Cli({"--mode", flag, "equal", "--method", "both", a, b});
      EXPECT_EQ(by_graph.out, by_nf.out);
      EXPECT_EQ(by_graph.code, by_nf.code);
      EXPECT_EQ(by_graph.code, both.code);
      EXPECT_NE(by_graph.code, kExitError) << by_graph.err;
    }
  }
}

}  // namespace
}  // namespace cartcoh::testing
