#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "z2n/errors.hpp"
#include "z2n/random.hpp"
#include "z2n/series.hpp"

using namespace z2n;
using namespace z2n::test;

namespace {
constexpr std::size_t kX1 = 0, kEta1 = 1, kZeta1 = 2, kZeta2 = 3;

/// Sign of xi^a xi^b in normal order by counting crossings: every factor of
/// xi^b passes every later-indexed factor of xi^a.
int crossing_sign(const ChartSpec& chart, const XiKey& a, const XiKey& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (chart.xi_is_odd(j) && a[j] + b[j] > 1) return 0;
  }
  int parity_sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      parity_sum += static_cast<int>(a[i] * b[j]) * scalar_product(chart.xi_degree(i), chart.xi_degree(j));
    }
  }
  return parity_sum % 2 ? -1 : 1;
}
}  // namespace

TEST(NormalizeWord, Examples) {
  const Chart c = chart_c();
  EXPECT_FALSE(normalize_word(*c, {kZeta1, kZeta1}).has_value());

  const auto swapped = normalize_word(*c, {kZeta2, kZeta1});
  ASSERT_TRUE(swapped.has_value());
  EXPECT_EQ(swapped->sign, 1);
  EXPECT_EQ(swapped->monomial.xi, (XiKey{0, 1, 1}));

  const auto mixed = normalize_word(*c, {kZeta1, kEta1});
  ASSERT_TRUE(mixed.has_value());
  EXPECT_EQ(mixed->sign, -1);
  EXPECT_EQ(mixed->monomial.xi, (XiKey{1, 1, 0}));

  const auto with_x = normalize_word(*c, {kZeta1, kX1, kEta1, kX1});
  ASSERT_TRUE(with_x.has_value());
  EXPECT_EQ(with_x->sign, -1);
  EXPECT_EQ(with_x->monomial.alpha, (Exponents{2}));
}

TEST(NormalizeWord, UnknownSymbol) { EXPECT_THROW((normalize_word(*chart_c(), {7})), SymbolError); }

TEST(Multiply, Examples) {
  const Chart c = chart_c();
  const GradedSeries p = S(c, "x1+eta1") * S(c, "x1-eta1");
  EXPECT_EQ(p, S(c, "x1^2 - eta1^2"));
  EXPECT_EQ(to_string(p), "x1^2 - eta1^2");
  const GradedSeries f = S(c, "3*x1*zeta1 - eta1^2*zeta2 + 1/2");
  EXPECT_EQ(f * GradedSeries::one(c), f);
  EXPECT_TRUE((GradedSeries::coordinate(c, kZeta1) * GradedSeries::coordinate(c, kZeta1)).is_zero());
  EXPECT_EQ(S(c, "zeta1*eta1"), -S(c, "eta1*zeta1"));
  EXPECT_EQ(S(c, "zeta2*zeta1"), S(c, "zeta1*zeta2"));
}

TEST(Multiply, ChartMismatch) {
  EXPECT_THROW(S(chart_c(), "x1") * S(chart_eta(), "x1"), ChartError);
  EXPECT_THROW(S(chart_c(), "x1") + S(chart_eta(), "x1"), ChartError);
}

TEST(Multiply, SignMatchesCrossingCount) {
  const Chart e = sample_charts()[4];
  const auto keys = xi_keys(*e, 0, 3);
  for (const auto& a : keys) {
    for (const auto& b : keys) {
      ASSERT_EQ(xi_product_sign(*e, a, b), crossing_sign(*e, a, b));
    }
  }
}

TEST(Multiply, Truncation) {
  const Chart c = chart_c();
  EXPECT_FALSE(S(c, "eta1^7").is_zero());
  EXPECT_TRUE(S(c, "eta1^8").is_zero());
  const GradedSeries f = S(c, "eta1 + x1").truncated(3);
  EXPECT_EQ(f.valid_order(), 3);
  const GradedSeries g = f * S(c, "eta1^2");
  EXPECT_EQ(g.valid_order(), 3);
  EXPECT_EQ(g, S(c, "x1*eta1^2"));
}

TEST(Add, Examples) {
  const Chart c = chart_c();
  const GradedSeries f = S(c, "x1*eta1 - zeta2");
  EXPECT_EQ(f + GradedSeries(c), f);
  EXPECT_TRUE(scale(0, f).is_zero());
  EXPECT_EQ(S(c, "x1") + S(c, "x1"), S(c, "2*x1"));
  EXPECT_EQ(add(f, f), scale(2, f));
}

TEST(Epsilon, Examples) {
  const Chart c = chart_c();
  EXPECT_EQ(epsilon(S(c, "x1^2 + x1*eta1 + zeta1*zeta2")), Polynomial::variable(1, 0).pow(2));
  EXPECT_TRUE(epsilon(S(c, "zeta1")).is_zero());
}

TEST(AdicOrder, Examples) {
  const Chart c = chart_c();
  EXPECT_EQ(adic_order(S(c, "x1^2 + x1*eta1")), 0);
  EXPECT_EQ(adic_order(S(c, "zeta1*zeta2")), 2);
  EXPECT_EQ(adic_order(S(c, "x1*eta1 + zeta1*zeta2")), 1);
}

TEST(DegreeOf, Examples) {
  const Chart c = chart_c();
  EXPECT_EQ(degree_of(S(c, "eta1")), (Degree{1, 1}));
  EXPECT_EQ(degree_of(S(c, "zeta1*zeta2")), (Degree{1, 1}));
  EXPECT_FALSE(degree_of(S(c, "x1 + zeta1")).has_value());
  const auto parts = homogeneous_parts(S(c, "x1 + zeta1 + eta1*zeta1"));
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts.at(Degree{1, 0}), S(c, "eta1*zeta1"));
}

TEST(Decompose, Examples) {
  const Chart c = chart_c();
  const Polynomial x = Polynomial::variable(1, 0);
  const auto parts = decompose_components(S(c, "x1 + x1*eta1"));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], (Component{XiKey{0, 0, 0}, x}));
  EXPECT_EQ(parts[1], (Component{XiKey{1, 0, 0}, x}));
  EXPECT_TRUE(decompose_components(GradedSeries(c)).empty());
}

TEST(AgreesModulo, UsesSmallerValidOrder) {
  const Chart c = chart_c();
  const GradedSeries f = S(c, "x1 + eta1^2 + zeta1");
  EXPECT_TRUE(agrees_modulo(f, f.truncated(2)));
  EXPECT_TRUE(agrees_modulo(f.truncated(2), S(c, "x1 + zeta1")));
  EXPECT_FALSE(agrees_modulo(f.truncated(2), S(c, "x1")));
  EXPECT_EQ(f.truncated(2), S(c, "x1 + zeta1"));
}

TEST(Restrict, Domains) {
  const Chart c = chart_c();
  const GradedSeries f = S(c, "x1*eta1");
  const Domain box = Domain::box({{0, 2}});
  const GradedSeries r = restrict(f, box);
  EXPECT_EQ(r.domain(), box);
  EXPECT_THROW((restrict(r, Domain::box({{-1, 1}}))), DomainError);
  EXPECT_THROW(r + f, DomainError);
}

TEST(Construction, RejectsBadTerms) {
  const Chart c = chart_c();
  GradedSeries f(c);
  EXPECT_THROW((f.add_term({0, 2, 0}, Polynomial::constant(1, 1))), ValidationError);
  EXPECT_THROW((f.add_term({0, 0}, Polynomial::constant(1, 1))), ValidationError);
  EXPECT_THROW(GradedSeries::coordinate(c, 9), SymbolError);
}
