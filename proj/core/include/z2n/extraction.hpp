#ifndef Z2N_EXTRACTION_HPP
#define Z2N_EXTRACTION_HPP

#include <cstdint>
#include <functional>

#include "z2n/diff_operator.hpp"

namespace z2n {

/// An R-linear map on series of one chart, known only through evaluation.
struct BlackboxOperator {
  Chart chart;
  std::function<GradedSeries(const GradedSeries&)> evaluate;
  int order_bound = 0;
};

/// f -> apply(d, f)
BlackboxOperator closure(const DiffOperator& d);

struct ExtractionOptions {
  std::size_t battery = 50;
  std::uint64_t seed = 0;
  unsigned max_x_degree = 4;
  bool verify = true;
};

/// m_I = x^alpha eta^beta zeta^gamma / (alpha! beta!)
GradedSeries test_monomial(const Chart& chart, const MultiIndex& index);

/// Normal form of an order <= k blackbox, stratum by stratum:
/// D^i_I = B(m_I) - sum_{j<i} D^j(m_I).
/// With verification on, the result is compared with B on a random battery
/// (and B is spot-checked for linearity); a mismatch throws
/// NotAnOperatorOfOrderK carrying the offending input and residual.
DiffOperator extract_coefficients(const BlackboxOperator& b, int k, const ExtractionOptions& options = {});

/// Second-stratum coefficient at |I| = 2 from the closed formula
/// B(m) - sum_{|mu|=1} (B(m_mu) - B(1) m_mu) d^mu m - B(1) m, with m = m_I.
GradedSeries explicit_second_stratum(const BlackboxOperator& b, const MultiIndex& index);

}  // namespace z2n

#endif  // Z2N_EXTRACTION_HPP
