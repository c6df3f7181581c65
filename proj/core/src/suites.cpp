#include "z2n/suites.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "z2n/dsl.hpp"
#include "z2n/errors.hpp"
#include "z2n/extraction.hpp"
#include "z2n/format.hpp"
#include "z2n/random.hpp"

namespace z2n {

namespace {

struct Stop {};

class Ctx {
 public:
  void tick() { ++cases; }

  template <typename W>
  void expect(bool ok, W&& witness) {
    if (ok) return;
    failed = true;
    message = witness();
    throw Stop{};
  }

  /// Property of one series; on failure the series is shrunk before reporting.
  void expect_for(const GradedSeries& f, const std::function<bool(const GradedSeries&)>& holds,
                  const std::function<std::string(const GradedSeries&)>& describe) {
    if (holds(f)) return;
    const GradedSeries small = shrink_series(f, [&](const GradedSeries& g) { return !holds(g); });
    expect(false, [&] { return describe(small); });
  }

  /// Two-argument variant: shrinks the first argument, then the second.
  void expect_for2(const GradedSeries& f, const GradedSeries& g,
                   const std::function<bool(const GradedSeries&, const GradedSeries&)>& holds,
                   const std::function<std::string(const GradedSeries&, const GradedSeries&)>& describe) {
    if (holds(f, g)) return;
    const GradedSeries f1 = shrink_series(f, [&](const GradedSeries& x) { return !holds(x, g); });
    const GradedSeries g1 = shrink_series(g, [&](const GradedSeries& y) { return !holds(f1, y); });
    expect(false, [&] { return describe(f1, g1); });
  }

  std::size_t cases = 0;
  bool failed = false;
  std::string message;
};

using Body = void (*)(Ctx&, Generator&);

std::string on(const ChartSpec& chart) { return to_string(chart) + "; "; }

SeriesShape small_shape() {
  SeriesShape s;
  s.max_terms = 3;
  s.max_x_degree = 2;
  s.max_weight = 3;
  s.max_poly_terms = 2;
  return s;
}

SeriesShape coefficient_shape() {
  SeriesShape s;
  s.max_terms = 2;
  s.max_x_degree = 2;
  s.max_weight = 2;
  s.max_poly_terms = 2;
  return s;
}

int sign_of(const Degree& a, const Degree& b) { return scalar_product(a, b) ? -1 : 1; }

GradedSeries signed_series(int sign, const GradedSeries& f) { return sign < 0 ? -f : f; }

bool agree(const GradedSeries& a, const GradedSeries& b) { return agrees_modulo(a, b); }

std::vector<std::vector<Chart>> charts_by_n() {
  std::vector<std::vector<Chart>> groups(3);
  for (const auto& c : sample_charts()) groups[c->n() - 1].push_back(c);
  return groups;
}

std::pair<Chart, Chart> chart_pair(Generator& gen) {
  static const auto groups = charts_by_n();
  const auto& g = groups.at(gen.integer(0, 2));
  return {gen.pick(g), gen.pick(g)};
}

SeriesShape image_shape() {
  SeriesShape s;
  s.max_terms = 2;
  s.max_x_degree = 1;
  s.max_weight = 2;
  s.max_poly_terms = 2;
  s.coefficient_bound = 2;
  return s;
}

/// Pullback computed by naive substitution into every monomial; independent
/// of the Taylor route used by `pullback`.
GradedSeries substitute(const MorphismSpec& phi, const GradedSeries& f) {
  const Chart& src = phi.source();
  const ChartSpec& tgt = *phi.target();
  GradedSeries out(src);
  for (const auto& [key, poly] : f.terms()) {
    GradedSeries coef(src);
    for (const auto& [alpha, c] : poly.terms()) {
      GradedSeries term = GradedSeries::constant(src, c);
      for (std::size_t b = 0; b < alpha.size(); ++b) {
        for (std::uint32_t e = 0; e < alpha[b]; ++e) term = term * phi.image(b);
      }
      coef += term;
    }
    GradedSeries mono = GradedSeries::one(src);
    for (std::size_t j = 0; j < key.size(); ++j) {
      for (std::uint32_t e = 0; e < key[j]; ++e) mono = mono * phi.image(tgt.p() + j);
    }
    out += coef * mono;
  }
  return out;
}

std::string describe_morphism(const MorphismSpec& phi) {
  return to_string(*phi.source()) + "; " + to_string(*phi.target()) + "; " + to_string(phi);
}

// ------------------------------------------------------------------ degree

void degree_standard_order(Ctx& ctx, Generator&) {
  for (unsigned n = 1; n <= 4; ++n) {
    ctx.tick();
    const DegreeTable t = standard_order(n);
    const std::size_t size = std::size_t{1} << n;
    ctx.expect(t.ordered.size() == size, [&] { return "wrong table size for n=" + std::to_string(n); });
    std::set<std::uint32_t> masks;
    for (const auto& d : t.ordered) masks.insert(d.mask());
    ctx.expect(masks.size() == size, [&] { return "table is not a permutation for n=" + std::to_string(n); });
    for (std::size_t i = 0; i < size; ++i) {
      const bool even = parity(t.ordered[i]) == Parity::Even;
      ctx.expect(even == (i < size / 2), [&] { return "parity blocks out of place at " + t.ordered[i].to_string(); });
      if (i + 1 < size && i + 1 != size / 2) {
        ctx.expect(t.ordered[i].mask() < t.ordered[i + 1].mask(),
                   [&] { return "block not lexicographic at " + t.ordered[i].to_string(); });
      }
    }
    ctx.expect(t.nonzero_even.size() == size / 2 - 1 && t.odd.size() == size / 2,
               [&] { return "block sizes wrong for n=" + std::to_string(n); });
  }
  ctx.tick();
  const std::vector<Degree> expected = {Degree{0, 0, 0}, Degree{0, 1, 1}, Degree{1, 0, 1}, Degree{1, 1, 0},
                                        Degree{0, 0, 1}, Degree{0, 1, 0}, Degree{1, 0, 0}, Degree{1, 1, 1}};
  ctx.expect(standard_order(3).ordered == expected, [] { return "n=3 order differs from the reference list"; });
}

void degree_pairing(Ctx& ctx, Generator&) {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto all = standard_order(n).ordered;
    for (const auto& a : all) {
      for (const auto& b : all) {
        ctx.tick();
        ctx.expect(scalar_product(a, b) == scalar_product(b, a),
                   [&] { return "pairing not symmetric on " + a.to_string() + ", " + b.to_string(); });
        ctx.expect((parity(a + b) == Parity::Odd) == ((parity(a) == Parity::Odd) != (parity(b) == Parity::Odd)),
                   [&] { return "parity not additive on " + a.to_string() + ", " + b.to_string(); });
        for (const auto& c : all) {
          ctx.expect(scalar_product(a + b, c) == (scalar_product(a, c) ^ scalar_product(b, c)),
                     [&] { return "pairing not bilinear on " + a.to_string() + ", " + b.to_string() + ", " + c.to_string(); });
        }
      }
      ctx.expect((parity(a) == Parity::Even) == (scalar_product(a, a) == 0),
                 [&] { return "parity differs from self-pairing on " + a.to_string(); });
    }
  }
}

// ------------------------------------------------------------------ algebra

void algebra_commutativity(Ctx& ctx, Generator& gen) {
  for (const auto& chart : sample_charts()) {
    for (int i = 0; i < 500; ++i) {
      ctx.tick();
      const Degree d1 = gen.degree(chart->n()), d2 = gen.degree(chart->n());
      const GradedSeries f = gen.homogeneous(chart, d1, small_shape());
      const GradedSeries g = gen.homogeneous(chart, d2, small_shape());
      const int s = sign_of(d1, d2);
      ctx.expect_for2(
          f, g, [&](const GradedSeries& a, const GradedSeries& b) { return a * b == signed_series(s, b * a); },
          [&](const GradedSeries& a, const GradedSeries& b) {
            return on(*chart) + "f = " + to_string(a) + "; g = " + to_string(b);
          });
    }
  }
}

void algebra_associativity(Ctx& ctx, Generator& gen) {
  for (const auto& chart : sample_charts()) {
    for (int i = 0; i < 500; ++i) {
      ctx.tick();
      const GradedSeries f = gen.homogeneous(chart, gen.degree(chart->n()), small_shape());
      const GradedSeries g = gen.homogeneous(chart, gen.degree(chart->n()), small_shape());
      const GradedSeries h = gen.series(chart, small_shape());
      ctx.expect_for(
          h, [&](const GradedSeries& x) { return agree((f * g) * x, f * (g * x)); },
          [&](const GradedSeries& x) {
            return on(*chart) + "f = " + to_string(f) + "; g = " + to_string(g) + "; h = " + to_string(x);
          });
    }
  }
}

void algebra_grading(Ctx& ctx, Generator& gen) {
  for (int i = 0; i < 500; ++i) {
    ctx.tick();
    const Chart chart = gen.pick(sample_charts());
    const Degree d1 = gen.degree(chart->n()), d2 = gen.degree(chart->n());
    const GradedSeries f = gen.homogeneous(chart, d1, small_shape());
    const GradedSeries g = gen.homogeneous(chart, d2, small_shape());
    const GradedSeries fg = f * g;
    auto where = [&] { return on(*chart) + "f = " + to_string(f) + "; g = " + to_string(g); };
    if (!fg.is_zero()) {
      ctx.expect(degree_of(fg) == d1 + d2, [&] { return "degree not additive: " + where(); });
      ctx.expect(adic_order(fg) >= adic_order(f) + adic_order(g), [&] { return "J-adic filtration violated: " + where(); });
    }
    const GradedSeries u = gen.series(chart, small_shape());
    const GradedSeries v = gen.series(chart, small_shape());
    ctx.expect(epsilon(u * v) == epsilon(u) * epsilon(v) && epsilon(u + v) == epsilon(u) + epsilon(v),
               [&] { return "epsilon not multiplicative: " + on(*chart) + "u = " + to_string(u) + "; v = " + to_string(v); });
    ctx.expect(epsilon(u).is_zero() == (adic_order(u) >= 1),
               [&] { return "kernel of epsilon differs from J: " + on(*chart) + "u = " + to_string(u); });
  }
  const Chart chart = sample_charts().front();
  ctx.expect(epsilon(GradedSeries::one(chart)) == Polynomial::constant(chart->p(), 1),
             [] { return "epsilon(1) != 1"; });
}

void algebra_normalize(Ctx& ctx, Generator& gen) {
  for (int i = 0; i < 500; ++i) {
    ctx.tick();
    const Chart chart = gen.pick(sample_charts());
    Word w;
    const int len = gen.integer(0, 6);
    for (int k = 0; k < len; ++k) w.push_back(gen.integer(0, static_cast<int>(chart->coordinate_count()) - 1));
    auto where = [&] {
      std::string s = on(*chart) + "word =";
      for (auto c : w) s += " " + chart->coordinate(c).name;
      return s;
    };
    GradedSeries product = GradedSeries::one(chart);
    for (auto c : w) product = product * GradedSeries::coordinate(chart, c);
    const auto normal = normalize_word(*chart, w);
    if (!normal) {
      ctx.expect(product.is_zero(), [&] { return "word normalizes to zero but the product does not: " + where(); });
      continue;
    }
    const GradedSeries expected = GradedSeries::monomial(chart, normal->monomial, normal->sign);
    ctx.expect(product == expected, [&] { return "normal form disagrees with the product: " + where(); });
    Word sorted;
    for (std::size_t a = 0; a < normal->monomial.alpha.size(); ++a) sorted.insert(sorted.end(), normal->monomial.alpha[a], a);
    for (std::size_t j = 0; j < normal->monomial.xi.size(); ++j) sorted.insert(sorted.end(), normal->monomial.xi[j], chart->p() + j);
    const auto again = normalize_word(*chart, sorted);
    ctx.expect(again && again->sign == 1 && again->monomial == normal->monomial,
               [&] { return "normalization not idempotent: " + where(); });
  }
}

void algebra_decompose(Ctx& ctx, Generator& gen) {
  for (int i = 0; i < 100; ++i) {
    ctx.tick();
    const Chart chart = gen.pick(sample_charts());
    const GradedSeries f = gen.series(chart, small_shape());
    const auto parts = decompose_components(f);
    ctx.expect(std::is_sorted(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.first < b.first; }),
               [&] { return "components out of order: " + on(*chart) + to_string(f); });
    ctx.expect(recompose(chart, parts) == f, [&] { return "recompose(decompose(f)) != f: " + on(*chart) + to_string(f); });
  }
}

// ------------------------------------------------------------------ diff

void diff_normalization(Ctx& ctx, Generator&) {
  for (const Chart& chart : {make_chart(2, 1, {1, 1, 1}), make_chart(3, 1, {1, 1, 1, 1, 1, 1, 1})}) {
    for (const auto& key : xi_keys(*chart, 0, 5)) {
      ctx.tick();
      const GradedMonomial m{Exponents(chart->p(), 0), key};
      MultiIndex index(chart->p(), 0);
      index.insert(index.end(), key.begin(), key.end());
      const GradedSeries d = iterated_partial(GradedSeries::monomial(chart, m, 1), index);
      const Rational expected = multi_factorial(std::span(key).first(chart->eta_count()));
      ctx.expect(d == GradedSeries::constant(chart, expected),
                 [&] { return on(*chart) + "B = " + tuple_string(key) + " gives " + to_string(d); });
    }
  }
}

void diff_leibniz(Ctx& ctx, Generator& gen) {
  for (int i = 0; i < 200; ++i) {
    ctx.tick();
    const Chart chart = gen.pick(sample_charts());
    const std::size_t c = gen.integer(0, static_cast<int>(chart->coordinate_count()) - 1);
    const Degree dc = chart->coordinate(c).degree;
    const Degree df = gen.degree(chart->n());
    const GradedSeries f = gen.homogeneous(chart, df, small_shape());
    const GradedSeries g = gen.series(chart, small_shape());
    ctx.expect_for(
        g,
        [&](const GradedSeries& x) {
          return agree(partial(f * x, c), partial(f, c) * x + signed_series(sign_of(dc, df), f * partial(x, c)));
        },
        [&](const GradedSeries& x) {
          return on(*chart) + "d/d" + chart->coordinate(c).name + "; f = " + to_string(f) + "; g = " + to_string(x);
        });
  }
}

void diff_extraction(Ctx& ctx, Generator& gen) {
  for (int i = 0; i < 100; ++i) {
    ctx.tick();
    const Chart chart = gen.pick(sample_charts());
    const unsigned k = static_cast<unsigned>(i % 4);
    const DiffOperator d = gen.diff_operator(chart, k, coefficient_shape());
    ExtractionOptions opts;
    opts.seed = gen.engine()();
    const DiffOperator e = extract_coefficients(closure(d), static_cast<int>(k), opts);
    ctx.expect(e == d, [&] { return on(*chart) + "D = " + to_string(d) + "; extracted " + to_string(e); });
    for (const auto& index : multi_indices_of_order(*chart, 2)) {
      const GradedSeries second = explicit_second_stratum(closure(d), index);
      ctx.expect(agree(second, d.coefficient(index)), [&] {
        return on(*chart) + "D = " + to_string(d) + "; closed second-stratum formula at " + tuple_string(index) +
               " gives " + to_string(second);
      });
    }
  }
}

void diff_filtration(Ctx& ctx, Generator& gen) {
  for (int i = 0; i < 100; ++i) {
    ctx.tick();
    const Chart chart = gen.pick(sample_charts());
    const unsigned k = static_cast<unsigned>(gen.integer(1, 3));
    const DiffOperator d = gen.homogeneous_operator(chart, k, gen.degree(chart->n()), coefficient_shape());
    GradedSeries g(chart);
    while (g.is_zero()) g = gen.homogeneous(chart, gen.degree(chart->n()), coefficient_shape());
    const DiffOperator c = graded_commutator(d, DiffOperator::multiplication(g));
    auto where = [&] { return on(*chart) + "D = " + to_string(d) + "; g = " + to_string(g); };
    ctx.expect(c.order() <= static_cast<int>(k) - 1, [&] { return "[D, m_g] keeps order: " + where(); });
    ExtractionOptions opts;
    opts.seed = gen.engine()();
    opts.battery = 20;
    ctx.expect(extract_coefficients(closure(c), static_cast<int>(k) - 1, opts) == c,
               [&] { return "[D, m_g] not recovered at order k-1: " + where(); });

    const unsigned l = static_cast<unsigned>(gen.integer(0, 2));
    const unsigned k2 = std::min(k, 2u);
    const DiffOperator a = gen.homogeneous_operator(chart, k2, gen.degree(chart->n()), coefficient_shape());
    const DiffOperator b = gen.homogeneous_operator(chart, l, gen.degree(chart->n()), coefficient_shape());
    const DiffOperator ab = compose(a, b);
    auto where2 = [&] { return on(*chart) + "D = " + to_string(a) + "; E = " + to_string(b); };
    ctx.expect(ab.order() <= static_cast<int>(k2 + l), [&] { return "composition order not subadditive: " + where2(); });
    const DiffOperator br = graded_commutator(a, b);
    ctx.expect(br.order() <= static_cast<int>(k2 + l) - 1, [&] { return "commutator order too high: " + where2(); });
    if (k2 + l >= 1) {
      ctx.expect(extract_coefficients(closure(br), static_cast<int>(k2 + l) - 1, opts) == br,
                 [&] { return "commutator not recovered at order k+l-1: " + where2(); });
    }
  }
}

void diff_composition(Ctx& ctx, Generator& gen) {
  for (int i = 0; i < 100; ++i) {
    ctx.tick();
    const Chart chart = gen.pick(sample_charts());
    const DiffOperator a = gen.diff_operator(chart, gen.integer(0, 2), coefficient_shape());
    const DiffOperator b = gen.diff_operator(chart, gen.integer(0, 2), coefficient_shape());
    const DiffOperator ab = compose(a, b);
    const GradedSeries f = gen.series(chart, small_shape());
    ctx.expect_for(
        f, [&](const GradedSeries& x) { return agree(apply(ab, x), apply(a, apply(b, x))); },
        [&](const GradedSeries& x) {
          return on(*chart) + "D = " + to_string(a) + "; E = " + to_string(b) + "; f = " + to_string(x);
        });
  }
}

void diff_low_orders(Ctx& ctx, Generator& gen) {
  for (int i = 0; i < 100; ++i) {
    ctx.tick();
    const Chart chart = gen.pick(sample_charts());
    // order 0: the blackbox is multiplication by its value on 1
    const DiffOperator d0 = gen.diff_operator(chart, 0, coefficient_shape());
    const BlackboxOperator b0 = parse_blackbox(to_string(d0), chart, 0);
    const GradedSeries at_one = b0.evaluate(GradedSeries::one(chart));
    const GradedSeries f = gen.series(chart, small_shape());
    ctx.expect(agree(b0.evaluate(f), at_one * f),
               [&] { return on(*chart) + "D = " + to_string(d0) + "; f = " + to_string(f); });

    // order 1: D - D(1) is a graded derivation of the operator's degree
    const Degree deg = gen.degree(chart->n());
    const DiffOperator d1 = gen.homogeneous_operator(chart, 1, deg, coefficient_shape());
    const BlackboxOperator b1 = parse_blackbox(to_string(d1), chart, 1);
    const GradedSeries c = b1.evaluate(GradedSeries::one(chart));
    auto der = [&](const GradedSeries& x) { return b1.evaluate(x) - c * x; };
    const Degree dg = gen.degree(chart->n());
    const GradedSeries g = gen.homogeneous(chart, dg, small_shape());
    const GradedSeries h = gen.series(chart, small_shape());
    ctx.expect_for(
        h, [&](const GradedSeries& x) { return agree(der(g * x), der(g) * x + signed_series(sign_of(deg, dg), g * der(x))); },
        [&](const GradedSeries& x) {
          return on(*chart) + "D = " + to_string(d1) + "; g = " + to_string(g) + "; h = " + to_string(x);
        });
    ExtractionOptions opts;
    opts.seed = gen.engine()();
    opts.battery = 10;
    BlackboxOperator derivation{chart, der, 1};
    const DiffOperator split = extract_coefficients(derivation, 1, opts);
    ctx.expect(split.coefficient(MultiIndex(chart->coordinate_count(), 0)).is_zero() &&
                   split + DiffOperator::multiplication(c) == d1,
               [&] { return "order-one split is not O + Der: " + on(*chart) + "D = " + to_string(d1); });
  }
}

void diff_jadic(Ctx& ctx, Generator& gen) {
  for (int i = 0; i < 200; ++i) {
    ctx.tick();
    const Chart chart = gen.pick(sample_charts());
    const unsigned k = static_cast<unsigned>(gen.integer(0, 3));
    const DiffOperator d = gen.diff_operator(chart, k, coefficient_shape());
    SeriesShape shape = small_shape();
    shape.min_weight = static_cast<unsigned>(gen.integer(0, 3));
    shape.max_weight = shape.min_weight + 2;
    const GradedSeries f = gen.series(chart, shape);
    ctx.expect_for(
        f,
        [&](const GradedSeries& x) {
          const GradedSeries y = apply(d, x);
          return y.is_zero() || adic_order(y) >= adic_order(x) - static_cast<int>(k);
        },
        [&](const GradedSeries& x) { return on(*chart) + "D = " + to_string(d) + "; f = " + to_string(x); });
  }
}

void diff_eps_identity(Ctx& ctx, Generator& gen) {
  for (int i = 0; i < 200; ++i) {
    ctx.tick();
    const Chart chart = gen.pick(sample_charts());
    const DiffOperator d = gen.diff_operator(chart, gen.integer(0, 3), coefficient_shape());
    const GradedSeries f = gen.series(chart, small_shape());
    auto holds = [&](const GradedSeries& x) {
      Polynomial rhs(chart->p());
      for (const auto& [index, coef] : d.terms()) {
        const Exponents alpha(index.begin(), index.begin() + chart->p());
        const XiKey beta(index.begin() + chart->p(), index.end());
        const Rational weight = multi_factorial(std::span(beta).first(chart->eta_count()));
        rhs += epsilon(coef) * x.coefficient(beta).derivative(alpha) * weight;
      }
      return epsilon(apply(d, x)) == rhs;
    };
    ctx.expect_for(f, holds, [&](const GradedSeries& x) {
      return on(*chart) + "D = " + to_string(d) + "; f = " + to_string(x);
    });
  }
}

void diff_restriction(Ctx& ctx, Generator& gen) {
  for (int i = 0; i < 100; ++i) {
    ctx.tick();
    const Chart chart = gen.pick(sample_charts());
    const DiffOperator d = gen.diff_operator(chart, gen.integer(0, 2), coefficient_shape());
    const GradedSeries f = gen.series(chart, small_shape());
    const Domain outer = gen.box(chart->p(), 2).domain();
    std::vector<Interval> inner_iv;
    for (const auto& iv : outer.intervals()) inner_iv.push_back({iv.lo, iv.lo + (iv.hi - iv.lo) / 2});
    const Domain inner = Domain::box(inner_iv);
    auto where = [&] { return on(*chart) + "D = " + to_string(d) + "; f = " + to_string(f) + "; box " + outer.to_string(); };
    ctx.expect(apply(restrict_operator(d, outer), restrict(f, outer)) == restrict(apply(d, f), outer),
               [&] { return "restriction does not commute with application: " + where(); });
    ctx.expect(restrict_operator(restrict_operator(d, outer), inner) == restrict_operator(d, inner),
               [&] { return "nested restriction does not compose: " + where(); });
    ctx.expect(restrict_operator(d, d.domain()) == d, [&] { return "restriction to the full domain changed D: " + where(); });
  }
}

// ------------------------------------------------------------------ morph

void morph_pullback_laws(Ctx& ctx, Generator& gen) {
  for (int i = 0; i < 200; ++i) {
    ctx.tick();
    const auto [src, tgt] = chart_pair(gen);
    const MorphismSpec phi = gen.morphism(src, tgt, image_shape());
    const Degree d = gen.degree(tgt->n());
    const GradedSeries f = gen.homogeneous(tgt, d, small_shape());
    const GradedSeries g = gen.series(tgt, small_shape());
    auto where = [&] { return describe_morphism(phi) + "; f = " + to_string(f) + "; g = " + to_string(g); };
    ctx.expect(pullback(phi, GradedSeries::one(tgt)) == GradedSeries::one(src), [&] { return "pullback(1) != 1: " + where(); });
    const GradedSeries pf = pullback(phi, f), pg = pullback(phi, g);
    ctx.expect(agree(pullback(phi, f * g), pf * pg), [&] { return "pullback not multiplicative: " + where(); });
    ctx.expect(agree(pullback(phi, f + g), pf + pg), [&] { return "pullback not additive: " + where(); });
    ctx.expect(pf.is_zero() || degree_of(pf) == d, [&] { return "pullback changed the degree: " + where(); });
    ctx.expect(pf.is_zero() || adic_order(pf) >= adic_order(f), [&] { return "pullback lowered the J-adic order: " + where(); });
    ctx.expect(agree(pf, substitute(phi, f)) && agree(pg, substitute(phi, g)),
               [&] { return "Taylor pullback differs from substitution: " + where(); });
    const std::size_t b = gen.integer(0, static_cast<int>(tgt->coordinate_count()) - 1);
    ctx.expect(pullback(phi, GradedSeries::coordinate(tgt, b)) == phi.image(b),
               [&] { return "pullback of a coordinate is not its image: " + where(); });
  }
}

void morph_composition(Ctx& ctx, Generator& gen) {
  for (int i = 0; i < 100; ++i) {
    ctx.tick();
    const auto [a, b] = chart_pair(gen);
    const auto group = charts_by_n().at(a->n() - 1);
    const Chart c = gen.pick(group);
    const MorphismSpec phi = gen.morphism(a, b, image_shape());
    const MorphismSpec psi = gen.morphism(b, c, image_shape());
    const MorphismSpec composite = compose_morphisms(phi, psi);
    const GradedSeries f = gen.series(c, small_shape());
    auto where = [&] { return describe_morphism(phi) + "; " + describe_morphism(psi) + "; f = " + to_string(f); };
    ctx.expect(agree(pullback(composite, f), pullback(phi, pullback(psi, f))),
               [&] { return "(psi o phi)^* != phi^* psi^*: " + where(); });
    ctx.expect(compose_morphisms(phi, MorphismSpec::identity(b)) == phi &&
                   compose_morphisms(MorphismSpec::identity(a), phi) == phi,
               [&] { return "identity is not neutral: " + where(); });
    const auto base_phi = phi.base_map();
    std::vector<Polynomial> composed;
    for (const auto& q : psi.base_map()) composed.push_back(q.compose(base_phi));
    ctx.expect(composite.base_map() == composed, [&] { return "base map of composite is not the composite: " + where(); });
  }
}

void morph_chain_rule(Ctx& ctx, Generator& gen) {
  for (int i = 0; i < 100; ++i) {
    ctx.tick();
    const auto [src, tgt] = chart_pair(gen);
    const MorphismSpec phi = gen.morphism(src, tgt, image_shape());
    const GradedSeries f = gen.series(tgt, small_shape());
    const std::size_t a = gen.integer(0, static_cast<int>(src->coordinate_count()) - 1);
    ctx.expect_for(
        f, [&](const GradedSeries& x) { return chain_rule_check(phi, x, a).holds; },
        [&](const GradedSeries& x) {
          return describe_morphism(phi) + "; f = " + to_string(x) + "; d/d" + src->coordinate(a).name +
                 "; residual = " + to_string(chain_rule_check(phi, x, a).residual);
        });
  }
}

void morph_faa_di_bruno(Ctx& ctx, Generator& gen) {
  for (int i = 0; i < 25; ++i) {
    const auto [src, tgt] = chart_pair(gen);
    const MorphismSpec phi = gen.morphism(src, tgt, image_shape());
    SeriesShape shape = small_shape();
    shape.max_terms = 2;
    const GradedSeries f = gen.series(tgt, shape);
    for (const auto& alpha : multi_indices_up_to(*src, 3)) {
      ctx.tick();
      const IdentityReport r = faa_di_bruno_check(phi, f, alpha);
      ctx.expect(r.holds, [&] {
        return describe_morphism(phi) + "; f = " + to_string(f) + "; alpha = " + tuple_string(alpha) +
               "; residual = " + to_string(r.residual);
      });
    }
  }
}

void morph_continuity(Ctx& ctx, Generator& gen) {
  for (int i = 0; i < 50; ++i) {
    ctx.tick();
    const auto [src, tgt] = chart_pair(gen);
    const MorphismSpec phi = gen.morphism(src, tgt, image_shape());
    const GradedSeries f = gen.series(tgt, small_shape());
    const MultiIndex alpha = gen.derivative_index(*src, gen.integer(0, 2));
    const CompactBox box = gen.box(src->p(), 3);
    const ContinuityReport r = continuity_check(phi, f, alpha, box);
    ctx.expect(r.holds, [&] {
      return describe_morphism(phi) + "; f = " + to_string(f) + "; alpha = " + tuple_string(alpha) + "; box " +
             to_string(box) + "; " + to_string(r.lhs) + " > " + to_string(r.rhs);
    });
  }
}

// ------------------------------------------------------------------ semi

std::vector<CompactBox> reference_boxes(std::size_t p) {
  return {CompactBox(std::vector<Interval>(p, Interval{0, 1}), 5),
          CompactBox(std::vector<Interval>(p, Interval{-1, 2}), 5),
          CompactBox(std::vector<Interval>(p, Interval{Rational(-5, 2), Rational(3, 2)}), 5)};
}

SeminormSpec random_spec(Generator& gen, const Chart& chart) {
  const CompactBox box = gen.box(chart->p(), 3);
  switch (gen.integer(0, 3)) {
    case 0:
      return SeminormSpec::cd(box, gen.diff_operator(chart, gen.integer(0, 2), coefficient_shape()));
    case 1: {
      const MultiIndex index = gen.derivative_index(*chart, gen.integer(0, 2));
      return SeminormSpec::cab(box, Exponents(index.begin(), index.begin() + chart->p()),
                               XiKey(index.begin() + chart->p(), index.end()));
    }
    case 2:
      return SeminormSpec::rho(box, gen.integer(0, 2), gen.integer(0, 2));
    default: {
      DiffOperator delta(chart);
      const int terms = gen.integer(1, 2);
      for (int t = 0; t < terms; ++t) {
        MultiIndex index(chart->coordinate_count(), 0);
        const Exponents a = gen.exponents(chart->p(), 2);
        std::copy(a.begin(), a.end(), index.begin());
        delta.add_term(index, GradedSeries::from_polynomial(chart, gen.polynomial(chart->p(), 1, 2)));
      }
      return SeminormSpec::base(box, delta, gen.xi_key(*chart, 0, 2));
    }
  }
}

void semi_axioms(Ctx& ctx, Generator& gen) {
  for (int i = 0; i < 200; ++i) {
    ctx.tick();
    const Chart chart = gen.pick(sample_charts());
    const SeminormSpec s = random_spec(gen, chart);
    const GradedSeries f = gen.series(chart, small_shape());
    const GradedSeries g = gen.series(chart, small_shape());
    const Rational r = gen.rational();
    auto where = [&] { return on(*chart) + to_string(s) + "; f = " + to_string(f) + "; g = " + to_string(g); };
    const Rational pf = eval_seminorm(s, f), pg = eval_seminorm(s, g);
    ctx.expect(pf >= 0 && eval_seminorm(s, GradedSeries(chart)) == 0, [&] { return "seminorm negative or p(0) != 0: " + where(); });
    ctx.expect(eval_seminorm(s, r * f) == abs(r) * pf, [&] { return "not absolutely homogeneous (r = " + to_string(r) + "): " + where(); });
    ctx.expect(eval_seminorm(s, f + g) <= pf + pg, [&] { return "triangle inequality fails: " + where(); });
  }
}

void semi_rho_definition(Ctx& ctx, Generator& gen) {
  for (int i = 0; i < 100; ++i) {
    ctx.tick();
    const Chart chart = gen.pick(sample_charts());
    const unsigned m = gen.integer(0, 3), mu = gen.integer(0, 3);
    const CompactBox box = gen.box(chart->p(), 3);
    const GradedSeries f = gen.series(chart, small_shape());
    Rational direct = 0;
    for (const auto& index : multi_indices_up_to(*chart, m + mu)) {
      const Exponents alpha(index.begin(), index.begin() + chart->p());
      const XiKey beta(index.begin() + chart->p(), index.end());
      if (total(alpha) > m || total(beta) > mu) continue;
      direct = std::max<Rational>(direct, eval_seminorm(SeminormSpec::cab(box, alpha, beta), f));
    }
    direct *= Rational(mpz_class(1) << (m + mu));
    const Rational fast = eval_seminorm(SeminormSpec::rho(box, m, mu), f);
    ctx.expect(fast == direct, [&] {
      return on(*chart) + "rho m=" + std::to_string(m) + " mu=" + std::to_string(mu) + " on " + to_string(box) +
             "; f = " + to_string(f) + "; " + to_string(fast) + " != " + to_string(direct);
    });
  }
}

void semi_submultiplicative(Ctx& ctx, Generator& gen) {
  for (int i = 0; i < 500; ++i) {
    ctx.tick();
    const Chart chart = gen.pick(sample_charts());
    const SeminormSpec rho = SeminormSpec::rho(reference_boxes(chart->p()).at(i % 3), gen.integer(0, 3), gen.integer(0, 3));
    const GradedSeries f = gen.series(chart, small_shape());
    const GradedSeries g = gen.series(chart, small_shape());
    ctx.expect_for2(
        f, g, [&](const GradedSeries& a, const GradedSeries& b) { return check_submultiplicative(rho, a, b).holds; },
        [&](const GradedSeries& a, const GradedSeries& b) {
          const auto r = check_submultiplicative(rho, a, b);
          return on(*chart) + to_string(rho) + "; f = " + to_string(a) + "; g = " + to_string(b) + "; " +
                 to_string(r.product) + " > " + to_string(r.left) + " * " + to_string(r.right);
        });
  }
}

void semi_equivalence(Ctx& ctx, Generator& gen) {
  for (int i = 0; i < 100; ++i) {
    ctx.tick();
    const Chart chart = gen.pick(sample_charts());
    const DiffOperator d = gen.diff_operator(chart, gen.integer(0, 2), coefficient_shape());
    const CompactBox inner = gen.box(chart->p(), 3);
    std::vector<Interval> grown;
    for (const auto& iv : inner.intervals()) {
      grown.push_back({iv.lo - Rational(gen.integer(0, 2), 2), iv.hi + Rational(gen.integer(0, 2), 2)});
    }
    const CompactBox outer(grown, 5);
    const EquivalenceBound bound = equivalence_constant(d, inner, outer);
    const GradedSeries f = gen.series(chart, small_shape());
    ctx.expect_for(
        f, [&](const GradedSeries& x) { return check_equivalence(bound, x).holds; },
        [&](const GradedSeries& x) {
          const auto r = check_equivalence(bound, x);
          return on(*chart) + "D = " + to_string(d) + "; C = " + to_string(inner) + "; C_n = " + to_string(outer) +
                 "; f = " + to_string(x) + "; " + to_string(r.lhs) + " > " + to_string(bound.constant) + " * " +
                 to_string(r.rhs);
        });
  }
}

void semi_metric(Ctx& ctx, Generator& gen) {
  std::map<const ChartSpec*, MetricSpec> metrics;
  const auto charts = sample_charts();
  for (const auto& c : charts) metrics.emplace(c.get(), default_metric(c, 16, 5));
  SeriesShape shape = small_shape();
  shape.max_terms = 2;
  for (int i = 0; i < 200; ++i) {
    ctx.tick();
    const Chart chart = gen.pick(charts);
    const MetricSpec& m = metrics.at(chart.get());
    const GradedSeries f = gen.series(chart, shape), g = gen.series(chart, shape), h = gen.series(chart, shape);
    auto where = [&] { return on(*chart) + "f = " + to_string(f) + "; g = " + to_string(g) + "; h = " + to_string(h); };
    const Rational fg = metric_distance(m, f, g).value;
    const Rational gh = metric_distance(m, g, h).value;
    const Rational fh = metric_distance(m, f, h).value;
    ctx.expect(metric_distance(m, f, f).value == 0, [&] { return "d(f, f) != 0: " + where(); });
    ctx.expect(fg >= 0 && fg == metric_distance(m, g, f).value, [&] { return "d not symmetric: " + where(); });
    ctx.expect(fh <= fg + gh, [&] { return "triangle inequality fails: " + where(); });
    ctx.expect(metric_distance(m, f + h, g + h).value == fg, [&] { return "d not translation invariant: " + where(); });
  }
}

void semi_separation(Ctx& ctx, Generator& gen) {
  for (int i = 0; i < 200; ++i) {
    ctx.tick();
    const Chart chart = gen.pick(sample_charts());
    SeriesShape shape = small_shape();
    shape.max_x_degree = 4;
    const GradedSeries f = gen.nonzero_series(chart, shape);
    const SeparationWitness w = separation_witness(f);
    MultiIndex index(w.alpha);
    index.insert(index.end(), w.beta.begin(), w.beta.end());
    const Rational value = epsilon(iterated_partial(f, index)).evaluate(w.point);
    ctx.expect(value != 0 && value == w.value, [&] { return on(*chart) + "f = " + to_string(f); });
  }
}

void semi_product(Ctx& ctx, Generator& gen) {
  for (int i = 0; i < 100; ++i) {
    ctx.tick();
    const Chart chart = gen.pick(sample_charts());
    const GradedSeries f = gen.series(chart, small_shape());
    ctx.expect(recompose(chart, decompose_components(f)) == f, [&] { return "round trip failed: " + on(*chart) + to_string(f); });
    SeminormSpec base = random_spec(gen, chart);
    while (base.kind != SeminormKind::Base) base = random_spec(gen, chart);
    // pick a component that is present half of the time
    if (!f.is_zero() && gen.chance(0.5)) {
      auto it = f.terms().begin();
      std::advance(it, gen.integer(0, static_cast<int>(f.size()) - 1));
      base.beta = it->first;
    }
    const Rational via_components = eval_seminorm(base, f);
    const Rational direct = eval_seminorm(product_partner(base), f);
    ctx.expect(via_components == direct, [&] {
      return on(*chart) + to_string(base) + "; f = " + to_string(f) + "; " + to_string(via_components) + " != " + to_string(direct);
    });
  }
}

void semi_restriction(Ctx& ctx, Generator& gen) {
  for (int i = 0; i < 50; ++i) {
    ctx.tick();
    const Chart chart = gen.pick(sample_charts());
    const unsigned g = 9;
    const CompactBox box = gen.box(chart->p(), g);
    const int lo = gen.integer(0, 4), span = gen.integer(1, 4);
    std::vector<Interval> sub;
    for (const auto& iv : box.intervals()) {
      const Rational step = (iv.hi - iv.lo) / (g - 1);
      sub.push_back({iv.lo + step * lo, iv.lo + step * (lo + span)});
    }
    const CompactBox small(sub, static_cast<unsigned>(span + 1));
    std::vector<SeminormSpec> family, sub_family;
    for (unsigned m = 0; m <= 1; ++m) {
      for (unsigned mu = 0; mu <= 1; ++mu) {
        family.push_back(SeminormSpec::rho(box, m, mu));
        sub_family.push_back(SeminormSpec::rho(small, m, mu));
      }
    }
    std::vector<GradedSeries> seq;
    const GradedSeries f = gen.series(chart, small_shape());
    for (int n = 1; n <= 4; ++n) seq.push_back(Rational(1, n) * f);
    const auto full = seminorm_table(seq, family);
    std::vector<GradedSeries> restricted;
    for (const auto& s : seq) restricted.push_back(restrict(s.with_domain(box.domain()), small.domain()));
    const auto part = seminorm_table(restricted, sub_family);
    for (std::size_t r = 0; r < full.size(); ++r) {
      for (std::size_t c = 0; c < family.size(); ++c) {
        ctx.expect(part[r][c] <= full[r][c] && full[r][c] == full[0][c] / Rational(static_cast<int>(r) + 1), [&] {
          return on(*chart) + to_string(family[c]) + " vs sub-box " + to_string(small) + "; f = " + to_string(f);
        });
      }
    }
  }
}

// ------------------------------------------------------------------ dsl

void dsl_roundtrip(Ctx& ctx, Generator& gen) {
  const auto charts = sample_charts();
  for (int i = 0; i < 200; ++i) {
    ctx.tick();
    const Chart chart = gen.pick(charts);
    switch (i % 5) {
      case 0: {
        const Chart c = gen.chart(static_cast<unsigned>(gen.integer(1, 8)));
        const Chart named = make_chart(c->n(), c->p(), c->q(), c->trunc(), "k" + std::to_string(i));
        const Chart back = parse_chart(to_string(*named));
        ctx.expect(*back == *named && back->name() == named->name(), [&] { return to_string(*named); });
        break;
      }
      case 1: {
        const GradedSeries f = gen.series(chart, small_shape());
        ctx.expect(parse_series(to_string(f), chart) == f, [&] { return on(*chart) + to_string(f); });
        break;
      }
      case 2: {
        const DiffOperator d = gen.diff_operator(chart, gen.integer(0, 3), coefficient_shape());
        ctx.expect(parse_operator(to_string(d), chart) == d, [&] { return on(*chart) + to_string(d); });
        break;
      }
      case 3: {
        const auto [src, tgt] = chart_pair(gen);
        const MorphismSpec phi = gen.morphism(src, tgt, image_shape());
        ctx.expect(parse_morphism(to_string(phi), src, tgt) == phi, [&] { return describe_morphism(phi); });
        break;
      }
      default: {
        const SeminormSpec s = random_spec(gen, chart);
        ctx.expect(parse_seminorm(to_string(s), chart) == s, [&] { return on(*chart) + to_string(s); });
        break;
      }
    }
  }
  // whole documents: print is a fixed point of parse o print
  for (int i = 0; i < 20; ++i) {
    ctx.tick();
    const auto [src, tgt] = chart_pair(gen);
    std::string text = to_string(*src) + "\n";
    if (tgt != src) text += to_string(*tgt) + "\n";
    text += "series f in " + src->name() + " = " + to_string(gen.series(src, small_shape())) + ";\n";
    text += "operator D in " + src->name() + " = " +
            to_string(gen.diff_operator(src, gen.integer(0, 2), coefficient_shape())) + ";\n";
    text += to_string(gen.morphism(src, tgt, image_shape()));
    text += "seminorm in " + src->name() + " " + to_string(random_spec(gen, src)) + ";\n";
    const SourceDocument doc = parse(text);
    const std::string printed = print(doc);
    ctx.expect(print(parse(printed)) == printed, [&] { return text; });
    ctx.expect(doc.series.size() == 1 && doc.operators.size() == 1 && doc.morphisms.size() == 1 &&
                   doc.seminorms.size() == 1,
               [&] { return "document lost items: " + text; });
  }
}

void dsl_examples(Ctx& ctx, Generator&) {
  ctx.tick();
  const Chart c = parse_chart("chart { n=2 x:1 eta[(1,1)]:1 zeta[(0,1)]:1 zeta[(1,0)]:1 trunc=8 }");
  ctx.expect(c->n() == 2 && c->p() == 1 && c->q() == std::vector<unsigned>{1, 1, 1} && c->trunc() == 8,
             [&] { return "chart example parsed as " + to_string(*c); });
  ctx.tick();
  const GradedSeries s = parse_series("1/2*x1^2*eta1", c);
  ctx.expect(s.size() == 1 && s.terms().begin()->second.size() == 1 &&
                 s.terms().begin()->second.terms().begin()->second == Rational(1, 2),
             [&] { return "series example parsed as " + to_string(s); });
  ctx.tick();
  const DiffOperator d = parse_operator("x1*dx1 + deta1", c);
  ctx.expect(d.order() == 1 && d.terms().size() == 2, [&] { return "operator example parsed as " + to_string(d); });
  ctx.tick();
  const std::string product = to_string(parse_series("x1+eta1", c) * parse_series("x1-eta1", c));
  ctx.expect(product == "x1^2 - eta1^2", [&] { return "product printed as " + product; });
  ctx.tick();
  const Chart line = make_chart(1, 1, {0});
  const Rational rho = eval_seminorm(SeminormSpec::rho(parse_box("[0,2]", 33), 1, 0), parse_series("x1", line));
  ctx.expect(rho == 4, [&] { return "rho example gives " + to_string(rho); });
}

struct Entry {
  const char* name;
  const char* summary;
  Body body;
};

const Entry kEntries[] = {
    {"degree.standard_order", "standard order is a permutation, evens first, lexicographic blocks", degree_standard_order},
    {"degree.pairing", "pairing symmetric and bilinear, parity additive (all n <= 4)", degree_pairing},
    {"algebra.commutativity", "fg = (-1)^<f,g> gf on homogeneous pairs, every sample chart", algebra_commutativity},
    {"algebra.associativity", "(fg)h = f(gh) on random triples, every sample chart", algebra_associativity},
    {"algebra.grading", "degree additivity, J-adic filtration, epsilon is an algebra map", algebra_grading},
    {"algebra.normalize", "word normalization agrees with products and is idempotent", algebra_normalize},
    {"algebra.decompose", "components in lexicographic order, recompose inverts decompose", algebra_decompose},
    {"diff.normalization", "d^B xi^B = B! for all |B| <= 5, n = 2 and n = 3", diff_normalization},
    {"diff.leibniz", "partials are graded derivations", diff_leibniz},
    {"diff.extraction", "extraction recovers random operators; closed second stratum agrees", diff_extraction},
    {"diff.filtration", "commutators drop order, composition order subadditive", diff_filtration},
    {"diff.composition", "compose(D, E) acts as D after E", diff_composition},
    {"diff.low_orders", "order 0 is multiplication, order 1 splits as O + Der", diff_low_orders},
    {"diff.jadic", "adic_order(D f) >= adic_order(f) - order(D)", diff_jadic},
    {"diff.eps_identity", "eps(D f) = sum eps(D_ab) b! d^a f_b", diff_eps_identity},
    {"diff.restriction", "restriction commutes with application and composes", diff_restriction},
    {"morph.pullback_laws", "pullback is a unital degree-0 algebra map, matches substitution", morph_pullback_laws},
    {"morph.composition", "(psi o phi)^* = phi^* psi^*, identity neutral", morph_composition},
    {"morph.chain_rule", "graded chain rule holds exactly", morph_chain_rule},
    {"morph.faa_di_bruno", "iterated chain rule equals direct differentiation, |alpha| <= 3", morph_faa_di_bruno},
    {"morph.continuity", "grid-level seminorm bound for pullbacks", morph_continuity},
    {"semi.axioms", "every variant is a seminorm at grid level", semi_axioms},
    {"semi.rho_definition", "rho agrees with its definition through Cab seminorms", semi_rho_definition},
    {"semi.submultiplicative", "rho(fg) <= rho(f) rho(g)", semi_submultiplicative},
    {"semi.equivalence", "p_{C,D} bounded by the computed constant times Cab seminorms", semi_equivalence},
    {"semi.metric", "truncated metric: zero, symmetric, triangle, translation invariant", semi_metric},
    {"semi.separation", "nonzero series have a nonzero derivative value at an integer point", semi_separation},
    {"semi.product", "component seminorms equal their operator form", semi_product},
    {"semi.restriction", "sub-box tables never exceed box tables; homogeneity in tables", semi_restriction},
    {"dsl.roundtrip", "parse o print is the identity on random entities and documents", dsl_roundtrip},
    {"dsl.examples", "worked examples parse and evaluate as documented", dsl_examples},
};

}  // namespace

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites = [] {
    std::vector<Suite> out;
    for (const auto& e : kEntries) {
      Body body = e.body;
      std::string name = e.name;
      out.push_back({e.name, e.summary, [body, name](std::uint64_t seed) {
                       SuiteResult r;
                       r.name = name;
                       Ctx ctx;
                       Generator gen(seed);
                       try {
                         body(ctx, gen);
                       } catch (const Stop&) {
                       } catch (const std::exception& ex) {
                         ctx.failed = true;
                         ctx.message = std::string("unexpected error: ") + ex.what();
                       }
                       r.passed = !ctx.failed;
                       r.cases = ctx.cases;
                       r.witness = ctx.message;
                       return r;
                     }});
    }
    return out;
  }();
  return suites;
}

std::vector<const Suite*> select_suites(std::string_view selector) {
  std::string prefix(selector);
  if (prefix.ends_with(".*")) prefix.resize(prefix.size() - 2);
  std::vector<const Suite*> out;
  for (const auto& s : all_suites()) {
    if (prefix == "all" || s.name == prefix || s.name.starts_with(prefix + ".")) out.push_back(&s);
  }
  if (out.empty()) throw ValidationError("no suite matches '" + std::string(selector) + "'");
  return out;
}

SuiteResult run_suite(const Suite& suite, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r = suite.run(seed);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace z2n
