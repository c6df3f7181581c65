#ifndef Z2N_FORMAT_HPP
#define Z2N_FORMAT_HPP

#include <string>

#include "z2n/diff_operator.hpp"
#include "z2n/morphism.hpp"
#include "z2n/seminorm.hpp"

namespace z2n {

// Canonical text forms. Every printer emits text that the DSL parser reads
// back to a structurally equal value.

/// "x1^2 - 1/2*x1*eta1 + zeta1*zeta2"; terms by xi-monomial, then graded-lex in x.
std::string to_string(const GradedSeries& f);

/// "deta1 + x1*dx1 - (x1 + zeta1)*dzeta1*dx1^2": coefficients left, derivative
/// tokens in decreasing coordinate order.
std::string to_string(const DiffOperator& d);

/// "chart c { n=2 x:1 eta[(1,1)]:1 zeta[(0,1)]:1 zeta[(1,0)]:1 trunc=8 }"
std::string to_string(const ChartSpec& chart);

/// Header line plus one "coord <- expr;" line per target coordinate.
std::string to_string(const MorphismSpec& phi);

/// "[0,2]x[-1/2,1]"
std::string to_string(const CompactBox& box);

/// "rho box=[0,2] grid=33 m=1 mu=0"; operator-valued specs end with "op=...".
std::string to_string(const SeminormSpec& s);

/// "(1,0,2)"
std::string tuple_string(const std::vector<std::uint32_t>& values);

/// "dzeta1*deta1^2*dx1"; empty for the zero index.
std::string derivative_string(const ChartSpec& chart, const MultiIndex& index);

}  // namespace z2n

#endif  // Z2N_FORMAT_HPP
