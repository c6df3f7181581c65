#include "z2n/random.hpp"

#include <algorithm>

#include "z2n/errors.hpp"

namespace z2n {

std::vector<Chart> sample_charts(unsigned trunc) {
  return {
      make_chart(1, 1, {2}, trunc, "a"),
      make_chart(1, 2, {3}, trunc, "b"),
      make_chart(2, 1, {1, 1, 1}, trunc, "c"),
      make_chart(2, 2, {2, 1, 1}, trunc, "d"),
      make_chart(3, 1, {1, 1, 0, 1, 0, 1, 1}, trunc, "e"),
      make_chart(3, 2, {1, 0, 1, 1, 1, 0, 0}, trunc, "f"),
  };
}

std::vector<XiKey> xi_keys(const ChartSpec& chart, unsigned lo, unsigned hi) {
  std::vector<XiKey> out;
  XiKey key(chart.xi_count(), 0);
  auto rec = [&](auto&& self, std::size_t j, unsigned used) -> void {
    if (j == key.size()) {
      if (used >= lo) out.push_back(key);
      return;
    }
    const unsigned cap = chart.xi_is_odd(j) ? std::min(1u, hi - used) : hi - used;
    for (unsigned e = 0; e <= cap; ++e) {
      key[j] = e;
      self(self, j + 1, used + e);
    }
    key[j] = 0;
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

GradedSeries shrink_series(GradedSeries f, const std::function<bool(const GradedSeries&)>& fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& [key, poly] : f.terms()) {
      for (const auto& [alpha, c] : poly.terms()) {
        GradedSeries candidate = f;
        Polynomial drop(poly.nvars());
        drop.add_term(alpha, -c);
        candidate.add_term(key, drop);
        if (!candidate.is_zero() && fails(candidate)) {
          f = std::move(candidate);
          progress = true;
          break;
        }
      }
      if (progress) break;
    }
  }
  return f;
}

int Generator::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

bool Generator::chance(double p) { return std::bernoulli_distribution(p)(engine_); }

Rational Generator::rational(int bound) {
  int num = integer(1, bound);
  if (chance(0.5)) num = -num;
  Rational r(num, integer(1, 3));
  r.canonicalize();
  return r;
}

Exponents Generator::exponents(std::size_t vars, unsigned max_total) {
  Exponents e(vars, 0);
  if (vars == 0) return e;
  const int total = integer(0, static_cast<int>(max_total));
  for (int k = 0; k < total; ++k) ++e[integer(0, static_cast<int>(vars) - 1)];
  return e;
}

Polynomial Generator::polynomial(std::size_t vars, unsigned max_degree, unsigned max_terms, int bound) {
  Polynomial p(vars);
  const int terms = integer(1, static_cast<int>(std::max(1u, max_terms)));
  for (int t = 0; t < terms; ++t) p.add_term(exponents(vars, max_degree), rational(bound));
  return p;
}

Degree Generator::degree(unsigned n) {
  return Degree::from_mask(n, static_cast<std::uint32_t>(integer(0, (1 << n) - 1)));
}

XiKey Generator::xi_key(const ChartSpec& chart, unsigned min_weight, unsigned max_weight) {
  XiKey key(chart.xi_count(), 0);
  if (key.empty() || max_weight < min_weight) return key;
  const int weight = integer(static_cast<int>(min_weight), static_cast<int>(max_weight));
  for (int k = 0; k < weight; ++k) {
    std::vector<std::size_t> allowed;
    for (std::size_t j = 0; j < key.size(); ++j) {
      if (!chart.xi_is_odd(j) || key[j] == 0) allowed.push_back(j);
    }
    if (allowed.empty()) break;
    ++key[allowed[integer(0, static_cast<int>(allowed.size()) - 1)]];
  }
  return key;
}

Chart Generator::chart(unsigned trunc) {
  const unsigned n = static_cast<unsigned>(integer(1, 3));
  const unsigned p = static_cast<unsigned>(integer(1, 2));
  std::vector<unsigned> q((1u << n) - 1, 0);
  const int total = integer(1, 5);
  for (int k = 0; k < total; ++k) ++q[integer(0, static_cast<int>(q.size()) - 1)];
  return make_chart(n, p, std::move(q), trunc);
}

const Chart& Generator::pick(const std::vector<Chart>& charts) {
  return charts.at(integer(0, static_cast<int>(charts.size()) - 1));
}

GradedSeries Generator::series(const Chart& chart, const SeriesShape& shape) {
  GradedSeries out(chart);
  const int terms = integer(1, static_cast<int>(std::max(1u, shape.max_terms)));
  for (int t = 0; t < terms; ++t) {
    XiKey key = xi_key(*chart, shape.min_weight, shape.max_weight);
    if (xi_weight(key) < shape.min_weight) continue;
    out.add_term(key, polynomial(chart->p(), shape.max_x_degree, shape.max_poly_terms,
                                 shape.coefficient_bound));
  }
  return out;
}

GradedSeries Generator::homogeneous(const Chart& chart, const Degree& degree, const SeriesShape& shape) {
  std::vector<XiKey> keys;
  for (auto& key : xi_keys(*chart, shape.min_weight, shape.max_weight)) {
    if (chart->degree_of(key) == degree) keys.push_back(std::move(key));
  }
  GradedSeries out(chart);
  if (keys.empty()) return out;
  const int terms = integer(1, static_cast<int>(std::max(1u, shape.max_terms)));
  for (int t = 0; t < terms; ++t) {
    out.add_term(keys[integer(0, static_cast<int>(keys.size()) - 1)],
                 polynomial(chart->p(), shape.max_x_degree, shape.max_poly_terms,
                            shape.coefficient_bound));
  }
  return out;
}

GradedSeries Generator::nonzero_series(const Chart& chart, const SeriesShape& shape) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    GradedSeries f = series(chart, shape);
    if (!f.is_zero()) return f;
  }
  throw ValidationError("series shape admits no nonzero series");
}

MultiIndex Generator::derivative_index(const ChartSpec& chart, unsigned k) {
  MultiIndex index(chart.coordinate_count(), 0);
  const std::size_t first_zeta = chart.p() + chart.eta_count();
  for (unsigned u = 0; u < k; ++u) {
    std::vector<std::size_t> allowed;
    for (std::size_t c = 0; c < index.size(); ++c) {
      if (c < first_zeta || index[c] == 0) allowed.push_back(c);
    }
    if (allowed.empty()) throw ValidationError("chart admits no derivative of order " + std::to_string(k));
    ++index[allowed[integer(0, static_cast<int>(allowed.size()) - 1)]];
  }
  return index;
}

DiffOperator Generator::diff_operator(const Chart& chart, unsigned k, const SeriesShape& coefficients) {
  while (true) {
    DiffOperator d(chart);
    d.add_term(derivative_index(*chart, k), nonzero_series(chart, coefficients));
    const int extra = integer(0, 2);
    for (int t = 0; t < extra; ++t) {
      const auto j = static_cast<unsigned>(integer(0, static_cast<int>(k)));
      d.add_term(derivative_index(*chart, j), series(chart, coefficients));
    }
    if (d.order() == static_cast<int>(k)) return d;
  }
}

DiffOperator Generator::homogeneous_operator(const Chart& chart, unsigned k, const Degree& degree,
                                             const SeriesShape& coefficients) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    DiffOperator d(chart);
    const MultiIndex lead = derivative_index(*chart, k);
    d.add_term(lead, homogeneous(chart, degree + derivative_degree(*chart, lead), coefficients));
    if (d.order() != static_cast<int>(k)) continue;
    const int extra = integer(0, 2);
    for (int t = 0; t < extra; ++t) {
      const MultiIndex index = derivative_index(*chart, static_cast<unsigned>(integer(0, static_cast<int>(k))));
      d.add_term(index, homogeneous(chart, degree + derivative_degree(*chart, index), coefficients));
    }
    if (d.order() == static_cast<int>(k)) return d;
  }
  throw ValidationError("no homogeneous operator of degree " + degree.to_string() + " fits the chart");
}

MorphismSpec Generator::morphism(const Chart& source, const Chart& target, const SeriesShape& shape) {
  if (source->n() != target->n()) throw ChartError("morphism between charts with different n");
  SeriesShape graded = shape;
  graded.min_weight = std::max(1u, shape.min_weight);
  std::vector<GradedSeries> images;
  for (const auto& coord : target->coordinates()) {
    if (coord.kind == CoordKind::X) {
      GradedSeries base = GradedSeries::from_polynomial(
          source, polynomial(source->p(), shape.max_x_degree, shape.max_poly_terms, shape.coefficient_bound));
      images.push_back(base + homogeneous(source, coord.degree, graded));
    } else if (chance(0.1)) {
      images.emplace_back(source);
    } else {
      images.push_back(homogeneous(source, coord.degree, graded));
    }
  }
  return MorphismSpec(source, target, std::move(images));
}

CompactBox Generator::box(std::size_t p, unsigned grid) {
  std::vector<Interval> intervals;
  for (std::size_t i = 0; i < p; ++i) {
    const Rational lo(integer(-6, 4), 2);
    Rational hi = lo + Rational(integer(1, 6), 2);
    if (hi > 3) hi = 3;
    Rational a = lo, b = hi;
    a.canonicalize();
    b.canonicalize();
    intervals.push_back({a, b});
  }
  return CompactBox(std::move(intervals), grid);
}

}  // namespace z2n
