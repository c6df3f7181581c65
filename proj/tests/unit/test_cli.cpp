#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "z2n/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = z2n::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

constexpr const char* kChart = "chart c { n=2 x:1 eta[(1,1)]:1 zeta[(0,1)]:1 zeta[(1,0)]:1 trunc=8 }";
constexpr const char* kMorphism =
    "chart e { n=2 x:1 eta[(1,1)]:1 }\n"
    "morphism e -> e\n  x1 <- x1 + eta1^2;\n  eta1 <- x1*eta1;\n";

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() / ("z2n_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
    std::ofstream(dir_ / "c.z2n") << kChart << "\n";
    std::ofstream(dir_ / "family.z2n") << "rho box=[0,2] m=0 mu=0\nrho box=[0,2] m=1 mu=0\n";
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const char* name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliFiles, MulExample) {
  const Outcome o = run({"mul", "--chart", path("c.z2n"), "x1+eta1", "x1-eta1"});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out, "x1^2 - eta1^2\n");
}

TEST(Cli, SeminormExample) {
  const Outcome o = run({"seminorm", "--variant", "rho", "--box", "[0,2]", "--grid", "33", "--m", "1", "--mu", "0", "x1"});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out, "4\n");
}

TEST(Cli, CheckSelectedSuite) {
  const Outcome o = run({"check", "--suite", "degree", "--seed", "42"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("PASS degree.standard_order"), std::string::npos);
  EXPECT_EQ(run({"check", "--suite", "bogus"}).code, 3);
}

TEST(Cli, InlineChartAndArithmetic) {
  EXPECT_EQ(run({"add", "--chart", kChart, "x1*zeta1", "zeta1*x1"}).out, "2*x1*zeta1\n");
  EXPECT_EQ(run({"mul", "--chart", kChart, "zeta1", "eta1"}).out, "-eta1*zeta1\n");
  EXPECT_EQ(run({"mul", "x1", "zeta1", "zeta2"}).out, "x1*zeta1*zeta2\n");
  EXPECT_EQ(run({"mul", "--trunc", "2", "zeta1", "zeta2"}).out, "0\n");
}

TEST(Cli, Differentiation) {
  EXPECT_EQ(run({"diff", "--chart", kChart, "--wrt", "zeta1,eta1", "eta1^2*zeta1"}).out, "-2*eta1\n");
  EXPECT_EQ(run({"diff", "--chart", kChart, "--index", "(2,0,0,0)", "x1^3"}).out, "6*x1\n");
  EXPECT_EQ(run({"apply-op", "x1*dx1", "x1^2"}).out, "2*x1^2\n");
  EXPECT_EQ(run({"commutator", "dx1", "x1"}).out, "1\n");
}

TEST(Cli, Decompose) {
  const Outcome ok = run({"decompose", "--chart", kChart, "--order", "2", "dzeta1*eta1*dx1"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(ok.out, "-eta1*dzeta1*dx1\n");
  const Outcome bad = run({"decompose", "--order", "1", "dx1^2"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("witness"), std::string::npos);
  EXPECT_EQ(run({"decompose", "dx1"}).code, 2);
}

TEST(Cli, Morphisms) {
  EXPECT_EQ(run({"pullback", "--morphism", kMorphism, "x1*eta1"}).out, "x1^2*eta1 + x1*eta1^3\n");
  const Outcome chain = run({"chain-check", "--morphism", kMorphism, "x1^2*eta1"});
  EXPECT_EQ(chain.code, 0) << chain.err;
  EXPECT_EQ(chain.out, "d/dx1: holds\nd/deta1: holds\n");
  const Outcome faa = run({"faa-check", "--morphism", kMorphism, "--order", "2", "x1^2*eta1 - eta1^3"});
  EXPECT_EQ(faa.code, 0) << faa.err;
  EXPECT_EQ(faa.out, "holds for 6 multi-indices\n");
}

TEST(Cli, SeminormVariants) {
  EXPECT_EQ(run({"seminorm", "--chart", kChart, "--variant", "cd", "--box", "[-1,2]", "--op", "deta1", "x1^2*eta1"}).out, "4\n");
  EXPECT_EQ(run({"seminorm", "--chart", kChart, "--variant", "cab", "--box", "[0,1]", "--alpha", "(1)", "--beta",
                 "(2,0,0)", "x1^2*eta1^2"})
                .out,
            "4\n");
  EXPECT_EQ(run({"seminorm", "--variant", "base", "--box", "[0,1]", "--op", "x1*dx1", "x1^2"}).out, "2\n");
}

TEST(Cli, EquivalenceAndDistance) {
  const Outcome eq = run({"equiv-const", "--op", "x1*dx1", "--box", "[0,1]", "--outer", "[-1,2]", "x1^2"});
  EXPECT_EQ(eq.code, 0) << eq.err;
  EXPECT_EQ(eq.out.substr(0, eq.out.find('\n')), "C = 3");
  const Outcome d = run({"dist", "--terms", "4", "x1", "x1"});
  EXPECT_EQ(d.out, "0\ntail <= 1/8\n");
}

TEST_F(CliFiles, TableCsv) {
  const Outcome o = run({"table", "--family", path("family.z2n"), "x1", "2*x1"});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out,
            "series,\"rho box=[0,2] grid=9 m=0 mu=0\",\"rho box=[0,2] grid=9 m=1 mu=0\"\n"
            "x1,2,4\n"
            "2*x1,4,8\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"mul", "x1 +"}).code, 2);
  EXPECT_EQ(run({"mul", "eta1"}).code, 3);
  EXPECT_EQ(run({"mul", "--chart", kChart, "theta1"}).code, 3);
  EXPECT_EQ(run({"seminorm", "--box", "[0,1]x[0,1]", "x1"}).code, 3);
  EXPECT_EQ(run({"seminorm", "--variant", "sup", "--box", "[0,1]", "x1"}).code, 2);
  EXPECT_EQ(run({"mul", "--chart", "chart { n=2 x:1 eta[(0,1)]:1 }", "x1"}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}
