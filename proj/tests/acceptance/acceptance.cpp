// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "z2n/cli.hpp"
#include "z2n/suites.hpp"

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<std::string()> check;  // empty string on success
};

std::string suites(std::initializer_list<const char*> names, std::uint64_t seed = 0) {
  std::string failures;
  for (const char* name : names) {
    for (const z2n::Suite* s : z2n::select_suites(name)) {
      const z2n::SuiteResult r = z2n::run_suite(*s, seed);
      if (!r.passed) failures += r.name + ": " + r.witness + "\n";
    }
  }
  return failures;
}

std::string cli(const std::vector<std::string>& args, int expected_code, const std::string& expected_out) {
  std::ostringstream out, err;
  const int code = z2n::cli::run(args, out, err);
  if (code != expected_code) return "exit " + std::to_string(code) + ": " + err.str();
  if (!expected_out.empty() && out.str() != expected_out) return "output was '" + out.str() + "'";
  return "";
}

std::string cli_examples() {
  const auto file = std::filesystem::temp_directory_path() / "z2n_acceptance_c.z2n";
  std::ofstream(file) << "chart c { n=2 x:1 eta[(1,1)]:1 zeta[(0,1)]:1 zeta[(1,0)]:1 trunc=8 }\n";
  std::string failures;
  failures += cli({"check", "--suite", "all", "--seed", "42"}, 0, "");
  failures += cli({"mul", "--chart", file.string(), "x1+eta1", "x1-eta1"}, 0, "x1^2 - eta1^2\n");
  failures += cli({"seminorm", "--variant", "rho", "--box", "[0,2]", "--grid", "33", "--m", "1", "--mu", "0", "x1"}, 0,
                  "4\n");
  std::filesystem::remove(file);
  return failures;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "standard order of Z_2^3", [] { return suites({"degree.standard_order"}); }},
      {2, "graded commutativity and associativity, 500 per chart shape",
       [] { return suites({"algebra.commutativity", "algebra.associativity"}); }},
      {3, "d^B xi^B = B! for |B| <= 5, n = 2 and 3", [] { return suites({"diff.normalization"}); }},
      {4, "extraction round trip on 100 operators, closed k = 2 formula", [] { return suites({"diff.extraction"}); }},
      {5, "commutators drop order, composition subadditive", [] { return suites({"diff.filtration"}); }},
      {6, "J-adic bound on 200 instances", [] { return suites({"diff.jadic"}); }},
      {7, "epsilon identity on 200 instances", [] { return suites({"diff.eps_identity"}); }},
      {8, "chain rule (100) and Faa di Bruno |alpha| <= 3 (25 morphisms)",
       [] { return suites({"morph.chain_rule", "morph.faa_di_bruno"}); }},
      {9, "pullback laws on 200 instances", [] { return suites({"morph.pullback_laws"}); }},
      {10, "rho submultiplicative on 500 pairs, 3 boxes", [] { return suites({"semi.submultiplicative"}); }},
      {11, "equivalence bound on 100 instances", [] { return suites({"semi.equivalence"}); }},
      {12, "metric axioms on 200 triples", [] { return suites({"semi.metric"}); }},
      {13, "separation on 200 series", [] { return suites({"semi.separation"}); }},
      {14, "component seminorms as operator seminorms on 100 series", [] { return suites({"semi.product"}); }},
      {15, "DSL round trip on 200 entities and the CLI examples",
       [] { return suites({"dsl.roundtrip"}) + cli_examples(); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    std::string failure;
    try {
      failure = c.check();
    } catch (const std::exception& e) {
      failure = e.what();
    }
    std::printf("%s [%2d] %s\n", failure.empty() ? "PASS" : "FAIL", c.id, c.title.c_str());
    if (!failure.empty()) {
      std::printf("       %s\n", failure.c_str());
      ++failed;
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
