#ifndef Z2N_RANDOM_HPP
#define Z2N_RANDOM_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "z2n/diff_operator.hpp"
#include "z2n/morphism.hpp"
#include "z2n/seminorm.hpp"

namespace z2n {

/// Size limits for random series. Terms are sparse; weights are xi-weights.
struct SeriesShape {
  unsigned max_terms = 4;
  unsigned max_x_degree = 2;
  unsigned min_weight = 0;
  unsigned max_weight = 3;
  unsigned max_poly_terms = 2;
  int coefficient_bound = 3;
};

/// Desk-scale chart shapes: n <= 3, p <= 2, |q| <= 5.
std::vector<Chart> sample_charts(unsigned trunc = ChartSpec::kDefaultTrunc);

/// All xi multi-indices of weight in [lo, hi], in key order.
std::vector<XiKey> xi_keys(const ChartSpec& chart, unsigned lo, unsigned hi);

/// Greedy shrink of a failing input: drops single monomials while `fails`
/// keeps holding. Used to report small witnesses.
GradedSeries shrink_series(GradedSeries f, const std::function<bool(const GradedSeries&)>& fails);

/// Seeded source of random algebraic objects. The same seed always yields the
/// same sequence, which keeps every suite reproducible.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : engine_(seed) {}

  std::mt19937_64& engine() noexcept { return engine_; }

  int integer(int lo, int hi);
  bool chance(double p);
  /// Nonzero rational with |numerator| <= bound and denominator in 1..3.
  Rational rational(int bound = 3);
  Exponents exponents(std::size_t vars, unsigned max_total);
  Polynomial polynomial(std::size_t vars, unsigned max_degree, unsigned max_terms, int bound = 3);
  Degree degree(unsigned n);
  XiKey xi_key(const ChartSpec& chart, unsigned min_weight, unsigned max_weight);

  Chart chart(unsigned trunc = ChartSpec::kDefaultTrunc);
  const Chart& pick(const std::vector<Chart>& charts);

  GradedSeries series(const Chart& chart, const SeriesShape& shape = {});
  /// Zero when no monomial of the requested degree fits the shape.
  GradedSeries homogeneous(const Chart& chart, const Degree& degree, const SeriesShape& shape = {});
  GradedSeries nonzero_series(const Chart& chart, const SeriesShape& shape = {});

  /// Random multi-index of total order k (zeta exponents at most one).
  MultiIndex derivative_index(const ChartSpec& chart, unsigned k);
  /// Normal-form operator of exact syntactic order k.
  DiffOperator diff_operator(const Chart& chart, unsigned k, const SeriesShape& coefficients = {});
  /// Homogeneous operator of the given degree and exact order k.
  DiffOperator homogeneous_operator(const Chart& chart, unsigned k, const Degree& degree,
                                    const SeriesShape& coefficients = {});

  MorphismSpec morphism(const Chart& source, const Chart& target, const SeriesShape& shape = {});

  /// Box with integer-or-half endpoints inside [-3, 3]^p.
  CompactBox box(std::size_t p, unsigned grid);

 private:
  std::mt19937_64 engine_;
};

}  // namespace z2n

#endif  // Z2N_RANDOM_HPP
