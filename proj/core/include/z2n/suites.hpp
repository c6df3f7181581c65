#ifndef Z2N_SUITES_HPP
#define Z2N_SUITES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace z2n {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string witness;  // first failing input, shrunk where possible
  double seconds = 0;
};

/// A named, seeded property check. Case counts are fixed per suite.
struct Suite {
  std::string name;
  std::string summary;
  std::function<SuiteResult(std::uint64_t seed)> run;
};

const std::vector<Suite>& all_suites();

/// "all", an exact suite name, or a group prefix such as "diff" or "diff.*".
/// Throws ValidationError when nothing matches.
std::vector<const Suite*> select_suites(std::string_view selector);

SuiteResult run_suite(const Suite& suite, std::uint64_t seed);

}  // namespace z2n

#endif  // Z2N_SUITES_HPP
