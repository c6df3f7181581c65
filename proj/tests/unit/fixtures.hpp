#ifndef Z2N_TEST_FIXTURES_HPP
#define Z2N_TEST_FIXTURES_HPP

#include "z2n/dsl.hpp"
#include "z2n/format.hpp"

namespace z2n::test {

/// n=2, x1 | eta1 (1,1), zeta1 (0,1), zeta2 (1,0)
inline Chart chart_c(unsigned trunc = 8) { return make_chart(2, 1, {1, 1, 1}, trunc, "c"); }

/// n=2, x1 | eta1 (1,1)
inline Chart chart_eta(unsigned trunc = 8) { return make_chart(2, 1, {1, 0, 0}, trunc, "e"); }

inline GradedSeries S(const Chart& chart, std::string_view text) { return parse_series(text, chart); }
inline DiffOperator Op(const Chart& chart, std::string_view text) { return parse_operator(text, chart); }

inline Rational Q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace z2n::test

#endif  // Z2N_TEST_FIXTURES_HPP
