#include "z2n/extraction.hpp"

#include "z2n/errors.hpp"
#include "z2n/format.hpp"
#include "z2n/random.hpp"

namespace z2n {

BlackboxOperator closure(const DiffOperator& d) {
  return {d.chart(), [d](const GradedSeries& f) { return apply(d, f); }, std::max(0, d.order())};
}

GradedSeries test_monomial(const Chart& chart, const MultiIndex& index) {
  if (index.size() != chart->coordinate_count()) throw ValidationError("derivative multi-index has wrong length");
  GradedMonomial m{Exponents(index.begin(), index.begin() + chart->p()),
                   XiKey(index.begin() + chart->p(), index.end())};
  const Rational weight = multi_factorial(std::span(index).first(chart->p() + chart->eta_count()));
  return GradedSeries::monomial(chart, m, 1 / weight);
}

namespace {

GradedSeries evaluate_checked(const BlackboxOperator& b, const GradedSeries& f) {
  GradedSeries out = b.evaluate(f);
  require_same_chart(out.chart(), b.chart, "blackbox output");
  return out;
}

GradedSeries residual(const GradedSeries& a, const GradedSeries& b) {
  const int v = std::min(a.valid_order(), b.valid_order());
  return a.truncated(v) - b.truncated(v);
}

}  // namespace

DiffOperator extract_coefficients(const BlackboxOperator& b, int k, const ExtractionOptions& options) {
  if (!b.chart) throw ChartError("blackbox without a chart");
  if (k < 0) throw ValidationError("order bound must be nonnegative");
  const Chart& chart = b.chart;

  DiffOperator assembled(chart);
  for (unsigned i = 0; i <= static_cast<unsigned>(k); ++i) {
    DiffOperator stratum(chart);
    for (const auto& index : multi_indices_of_order(*chart, i)) {
      const GradedSeries m = test_monomial(chart, index);
      stratum.add_term(index, evaluate_checked(b, m) - apply(assembled, m));
    }
    assembled += stratum;
  }
  if (!options.verify) return assembled;

  Generator gen(options.seed);
  SeriesShape shape;
  shape.max_terms = 4;
  shape.max_x_degree = options.max_x_degree;
  shape.max_weight = chart->trunc() - 1;
  shape.max_poly_terms = 3;

  for (int t = 0; t < 3; ++t) {
    const GradedSeries f = gen.series(chart, shape);
    const GradedSeries g = gen.series(chart, shape);
    const Rational r = gen.rational();
    const GradedSeries lhs = evaluate_checked(b, f + r * g);
    const GradedSeries rhs = evaluate_checked(b, f) + r * evaluate_checked(b, g);
    if (!agrees_modulo(lhs, rhs)) {
      throw NotAnOperatorOfOrderK("blackbox is not linear",
                                  "f = " + to_string(f) + "; g = " + to_string(g) + "; r = " +
                                      to_string(r) + "; residual = " + to_string(residual(lhs, rhs)));
    }
  }

  auto mismatch = [&](const GradedSeries& f) {
    return !agrees_modulo(evaluate_checked(b, f), apply(assembled, f));
  };
  for (std::size_t t = 0; t < options.battery; ++t) {
    GradedSeries f = gen.series(chart, shape);
    if (!mismatch(f)) continue;
    f = shrink_series(f, mismatch);
    throw NotAnOperatorOfOrderK(
        "blackbox disagrees with its order " + std::to_string(k) + " decomposition",
        "f = " + to_string(f) + "; residual = " +
            to_string(residual(evaluate_checked(b, f), apply(assembled, f))));
  }
  return assembled;
}

GradedSeries explicit_second_stratum(const BlackboxOperator& b, const MultiIndex& index) {
  const Chart& chart = b.chart;
  if (total(index) != 2) throw ValidationError("second stratum needs |I| = 2");
  const GradedSeries m = test_monomial(chart, index);
  const GradedSeries at_one = evaluate_checked(b, GradedSeries::one(chart));
  GradedSeries value = evaluate_checked(b, m) - at_one * m;
  for (const auto& mu : multi_indices_of_order(*chart, 1)) {
    const GradedSeries m_mu = test_monomial(chart, mu);
    const GradedSeries coef = evaluate_checked(b, m_mu) - at_one * m_mu;
    value -= coef * iterated_partial(m, mu);
  }
  return value;
}

}  // namespace z2n
