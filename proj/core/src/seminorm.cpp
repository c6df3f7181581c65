#include "z2n/seminorm.hpp"

#include <algorithm>

#include "z2n/errors.hpp"

namespace z2n {

CompactBox::CompactBox(std::vector<Interval> intervals, unsigned grid)
    : intervals_(std::move(intervals)), grid_(grid) {
  if (grid_ < 2) throw ValidationError("grid needs at least 2 points per axis");
  for (const auto& iv : intervals_) {
    if (iv.lo > iv.hi) throw DomainError("box interval with lower end above upper end");
  }
}

CompactBox CompactBox::cube(std::size_t p, const Rational& k, unsigned grid) {
  return CompactBox(std::vector<Interval>(p, Interval{-k, k}), grid);
}

std::vector<Point> CompactBox::points() const {
  std::vector<std::vector<Rational>> axes;
  for (const auto& iv : intervals_) {
    std::vector<Rational> axis;
    const Rational step = (iv.hi - iv.lo) / Rational(grid_ - 1);
    for (unsigned j = 0; j < grid_; ++j) axis.push_back(iv.lo + step * j);
    axes.push_back(std::move(axis));
  }
  std::vector<Point> out{Point{}};
  for (const auto& axis : axes) {
    std::vector<Point> next;
    next.reserve(out.size() * axis.size());
    for (const auto& prefix : out) {
      for (const auto& v : axis) {
        Point pt = prefix;
        pt.push_back(v);
        next.push_back(std::move(pt));
      }
    }
    out = std::move(next);
  }
  return out;
}

bool CompactBox::contains(const CompactBox& other) const {
  return domain().contains(other.domain());
}

Rational grid_sup(const Polynomial& p, std::span<const Point> points) {
  Rational best = 0;
  if (p.is_zero()) return best;
  for (const auto& pt : points) {
    Rational v = abs(p.evaluate(pt));
    if (v > best) best = v;
  }
  return best;
}

Rational grid_sup(const Polynomial& p, const CompactBox& box) {
  if (p.is_zero()) return 0;
  if (p.is_constant()) return abs(p.coefficient(Exponents(p.nvars(), 0)));
  const auto pts = box.points();
  return grid_sup(p, pts);
}

SeminormSpec SeminormSpec::cd(CompactBox box, DiffOperator op) {
  return {SeminormKind::CD, std::move(box), std::move(op), {}, {}, 0, 0};
}

SeminormSpec SeminormSpec::cab(CompactBox box, Exponents alpha, XiKey beta) {
  return {SeminormKind::Cab, std::move(box), std::nullopt, std::move(alpha), std::move(beta), 0, 0};
}

SeminormSpec SeminormSpec::rho(CompactBox box, unsigned m, unsigned mu) {
  return {SeminormKind::Rho, std::move(box), std::nullopt, {}, {}, m, mu};
}

SeminormSpec SeminormSpec::base(CompactBox box, DiffOperator op, XiKey beta) {
  return {SeminormKind::Base, std::move(box), std::move(op), {}, std::move(beta), 0, 0};
}

namespace {

MultiIndex full_index(const ChartSpec& chart, const Exponents& alpha, const XiKey& beta) {
  if (alpha.size() != chart.p()) throw ValidationError("x multi-index has wrong length");
  if (beta.size() != chart.xi_count()) throw ValidationError("xi multi-index has wrong length");
  MultiIndex index(alpha);
  index.insert(index.end(), beta.begin(), beta.end());
  return index;
}

void require_base_operator(const DiffOperator& op) {
  const ChartSpec& chart = *op.chart();
  for (const auto& [index, coef] : op.terms()) {
    for (std::size_t c = chart.p(); c < index.size(); ++c) {
      if (index[c]) throw ValidationError("base operator may only differentiate in x");
    }
    for (const auto& [key, poly] : coef.terms()) {
      if (xi_weight(key)) throw ValidationError("base operator coefficients must be functions of x");
    }
  }
}

Rational xi_factorial(const ChartSpec& chart, const XiKey& key) {
  return multi_factorial(std::span(key).first(chart.eta_count()));
}

Rational rho_value(const SeminormSpec& s, const GradedSeries& f) {
  const ChartSpec& chart = *f.chart();
  const auto pts = s.box.points();
  std::vector<Exponents> alphas;
  Exponents a(chart.p(), 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i == a.size()) {
      alphas.push_back(a);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      a[i] = e;
      self(self, i + 1, left - e);
    }
    a[i] = 0;
  };
  rec(rec, 0, s.m);
  Rational best = 0;
  for (const auto& [key, poly] : f.terms()) {
    if (xi_weight(key) > s.mu) continue;
    const Rational weight = xi_factorial(chart, key);
    for (const auto& alpha : alphas) {
      Polynomial d = poly.derivative(alpha);
      if (d.is_zero()) continue;
      best = std::max<Rational>(best, weight * grid_sup(d, pts));
    }
  }
  return best * Rational(mpz_class(1) << (s.m + s.mu));
}

}  // namespace

Rational eval_seminorm(const SeminormSpec& s, const GradedSeries& f) {
  const ChartSpec& chart = *f.chart();
  if (s.box.dimension() != chart.p()) throw DomainError("box dimension differs from chart p");
  if (!f.domain().contains(s.box.domain())) {
    throw DomainError("box " + s.box.domain().to_string() + " is outside the section domain " +
                      f.domain().to_string());
  }
  switch (s.kind) {
    case SeminormKind::CD: {
      require_same_chart(s.op->chart(), f.chart(), "seminorm");
      GradedSeries df = apply(s.op->with_domain(f.domain()), f);
      if (df.valid_order() < 1) throw ValidationError("series truncated below the operator order");
      return grid_sup(epsilon(df), s.box);
    }
    case SeminormKind::Cab: {
      GradedSeries df = iterated_partial(f, full_index(chart, s.alpha, s.beta));
      if (df.valid_order() < 1) throw ValidationError("series truncated below the derivative order");
      return grid_sup(epsilon(df), s.box);
    }
    case SeminormKind::Rho:
      return rho_value(s, f);
    case SeminormKind::Base: {
      require_same_chart(s.op->chart(), f.chart(), "seminorm");
      require_base_operator(*s.op);
      if (s.beta.size() != chart.xi_count()) throw ValidationError("xi multi-index has wrong length");
      GradedSeries component = GradedSeries::from_polynomial(f.chart(), f.coefficient(s.beta));
      return grid_sup(epsilon(apply(*s.op, component)), s.box);
    }
  }
  return 0;
}

SubmultiplicativeReport check_submultiplicative(const SeminormSpec& rho, const GradedSeries& f,
                                                const GradedSeries& g) {
  if (rho.kind != SeminormKind::Rho) throw ValidationError("submultiplicativity is checked for rho");
  SubmultiplicativeReport r{eval_seminorm(rho, f * g), eval_seminorm(rho, f), eval_seminorm(rho, g), false};
  r.holds = r.product <= r.left * r.right;
  return r;
}

EquivalenceBound equivalence_constant(const DiffOperator& d, const CompactBox& inner,
                                      const CompactBox& outer) {
  if (!outer.contains(inner)) throw DomainError("inner box is not contained in the outer box");
  if (outer.dimension() != d.chart()->p()) throw DomainError("box dimension differs from chart p");
  if (!d.domain().contains(outer.domain())) throw DomainError("operator is not defined on the outer box");

  EquivalenceBound b{d, inner, outer, outer.points(), 1, 1};
  const auto inner_points = inner.points();
  b.outer_points.insert(b.outer_points.end(), inner_points.begin(), inner_points.end());
  std::sort(b.outer_points.begin(), b.outer_points.end());
  b.outer_points.erase(std::unique(b.outer_points.begin(), b.outer_points.end()), b.outer_points.end());

  const ChartSpec& chart = *d.chart();
  Rational best = 0, weighted = 0;
  for (const auto& [index, coef] : d.terms()) {
    XiKey beta(index.begin() + chart.p(), index.end());
    const Rational s = grid_sup(epsilon(coef), b.outer_points);
    best = std::max(best, s);
    weighted = std::max<Rational>(weighted, s * xi_factorial(chart, beta));
  }
  b.constant = 1 + best;
  b.weighted_constant = 1 + weighted;
  return b;
}

EquivalenceCheck check_equivalence(const EquivalenceBound& bound, const GradedSeries& f) {
  require_same_chart(bound.op.chart(), f.chart(), "equivalence check");
  const ChartSpec& chart = *f.chart();
  EquivalenceCheck r{eval_seminorm(SeminormSpec::cd(bound.inner, bound.op), f), 0, 0, false};
  if (bound.op.order() >= 0) {
    for (const auto& index : multi_indices_up_to(chart, static_cast<unsigned>(bound.op.order()))) {
      Exponents alpha(index.begin(), index.begin() + chart.p());
      XiKey beta(index.begin() + chart.p(), index.end());
      const Polynomial component = f.coefficient(beta).derivative(alpha);
      if (component.is_zero()) continue;
      const Rational s = grid_sup(component, bound.outer_points);
      r.rhs += xi_factorial(chart, beta) * s;
      r.weighted_rhs += s;
    }
  }
  r.holds = r.lhs <= bound.constant * r.rhs && r.lhs <= bound.weighted_constant * r.weighted_rhs;
  return r;
}

MetricSpec default_metric(const Chart& chart, unsigned terms, unsigned grid) {
  MetricSpec metric;
  metric.terms = terms;
  for (unsigned s = 0; metric.family.size() < terms; ++s) {
    for (unsigned k = 1; k <= s + 1 && metric.family.size() < terms; ++k) {
      const unsigned rest = s - (k - 1);
      for (unsigned m = rest + 1; m-- > 0 && metric.family.size() < terms;) {
        metric.family.push_back(SeminormSpec::rho(CompactBox::cube(chart->p(), k, grid), m, rest - m));
      }
    }
  }
  return metric;
}

Distance metric_distance(const MetricSpec& metric, const GradedSeries& f, const GradedSeries& g) {
  const GradedSeries h = f - g;
  const std::size_t count = std::min<std::size_t>(metric.terms, metric.family.size());
  Distance d{0, 0};
  Rational weight = 1;
  for (std::size_t n = 0; n < count; ++n) {
    const Rational p = eval_seminorm(metric.family[n], h);
    d.value += weight * p / (1 + p);
    weight /= 2;
  }
  d.tail_bound = 2 * weight;
  return d;
}

std::vector<std::vector<Rational>> seminorm_table(std::span<const GradedSeries> sequence,
                                                  std::span<const SeminormSpec> family) {
  std::vector<std::vector<Rational>> table;
  for (const auto& f : sequence) {
    if (!sequence.empty()) require_same_chart(sequence.front().chart(), f.chart(), "table");
    std::vector<Rational> row;
    for (const auto& s : family) row.push_back(eval_seminorm(s, f));
    table.push_back(std::move(row));
  }
  return table;
}

SeparationWitness separation_witness(const GradedSeries& f, unsigned radius_cap) {
  if (f.is_zero()) throw ValidationError("the zero series is not separated from zero");
  const ChartSpec& chart = *f.chart();
  const auto& [beta, poly] = *f.terms().begin();
  const Rational weight = xi_factorial(chart, beta);
  Exponents alpha(chart.p(), 0);
  const GradedSeries derived = iterated_partial(f, full_index(chart, alpha, beta));
  const Polynomial eps = epsilon(derived);

  for (unsigned r = 0; r <= radius_cap; ++r) {
    // walk {-r..r}^p; points strictly inside were tried at smaller radii
    Point pt(chart.p(), Rational(-static_cast<int>(r)));
    while (true) {
      bool on_shell = chart.p() == 0;
      for (const auto& v : pt) on_shell = on_shell || abs(v) == r;
      if (on_shell) {
        const Rational predicted = weight * poly.evaluate(pt);
        if (predicted != 0) {
          const Rational actual = eps.evaluate(pt);
          if (actual != predicted) throw Error("separation witness disagrees with direct derivative");
          return {alpha, beta, pt, actual};
        }
      }
      std::size_t i = 0;
      while (i < pt.size() && pt[i] == r) pt[i++] = -static_cast<int>(r);
      if (i == pt.size()) break;
      pt[i] += 1;
    }
  }
  throw Error("no nonzero grid point within radius " + std::to_string(radius_cap));
}

SeminormSpec product_partner(const SeminormSpec& base) {
  if (base.kind != SeminormKind::Base) throw ValidationError("product partner needs a base seminorm");
  const DiffOperator& delta = *base.op;
  require_base_operator(delta);
  const ChartSpec& chart = *delta.chart();
  MultiIndex index = full_index(chart, Exponents(chart.p(), 0), base.beta);
  DiffOperator op = (1 / xi_factorial(chart, base.beta)) *
                    compose(DiffOperator::derivative(delta.chart(), index), delta);
  return SeminormSpec::cd(base.box, std::move(op));
}

ContinuityReport continuity_check(const MorphismSpec& phi, const GradedSeries& f,
                                  const MultiIndex& alpha, const CompactBox& box) {
  const FaaDiBrunoExpansion expansion = faa_di_bruno_expand(phi, f, alpha);
  const auto pts = box.points();
  ContinuityReport r{grid_sup(epsilon(iterated_partial(pullback(phi, f), alpha)), pts), 0, false};

  const std::vector<Polynomial> base = phi.base_map();
  std::vector<Point> image;
  for (const auto& pt : pts) {
    Point y;
    for (const auto& b : base) y.push_back(b.evaluate(pt));
    image.push_back(std::move(y));
  }
  for (const auto& [gamma, factor] : expansion.factors) {
    const Rational left = grid_sup(epsilon(factor), pts);
    if (left == 0) continue;
    r.rhs += left * grid_sup(epsilon(iterated_partial(f, gamma)), image);
  }
  r.holds = r.lhs <= r.rhs;
  return r;
}

}  // namespace z2n
