#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "z2n/errors.hpp"
#include "z2n/morphism.hpp"
#include "z2n/random.hpp"

using namespace z2n;
using namespace z2n::test;

namespace {

MorphismSpec example(const Chart& src, const Chart& tgt) {
  return MorphismSpec(src, tgt, {S(src, "x1 + eta1^2"), S(src, "x1*eta1")});
}

/// Substitutes the images into every monomial of f and multiplies out.
GradedSeries substitute(const MorphismSpec& phi, const GradedSeries& f) {
  const Chart& src = phi.source();
  GradedSeries out(src);
  for (const auto& [key, poly] : f.terms()) {
    for (const auto& [alpha, c] : poly.terms()) {
      GradedSeries term = GradedSeries::constant(src, c);
      for (std::size_t b = 0; b < alpha.size(); ++b) {
        for (std::uint32_t e = 0; e < alpha[b]; ++e) term = term * phi.image(b);
      }
      for (std::size_t j = 0; j < key.size(); ++j) {
        for (std::uint32_t e = 0; e < key[j]; ++e) term = term * phi.image(phi.target()->p() + j);
      }
      out += term;
    }
  }
  return out;
}

SeriesShape image_shape() {
  SeriesShape s;
  s.max_terms = 2;
  s.max_x_degree = 2;
  s.max_weight = 2;
  return s;
}

}  // namespace

TEST(Pullback, Example) {
  const Chart src = chart_eta(), tgt = chart_eta();
  const MorphismSpec phi = example(src, tgt);
  EXPECT_EQ(pullback(phi, S(tgt, "x1*eta1")), S(src, "x1^2*eta1 + x1*eta1^3"));
  EXPECT_EQ(pullback(phi, S(tgt, "x1")), phi.image(0));
  EXPECT_EQ(pullback(phi, S(tgt, "eta1")), phi.image(1));
  EXPECT_EQ(pullback(phi, S(tgt, "x1^2")), S(src, "x1^2 + 2*x1*eta1^2 + eta1^4"));
}

TEST(Pullback, MatchesSubstitution) {
  Generator gen(3);
  const auto charts = sample_charts();
  for (int i = 0; i < 100; ++i) {
    const std::size_t group = 2 * static_cast<std::size_t>(gen.integer(0, 2));
    const Chart src = charts[group + gen.integer(0, 1)], tgt = charts[group + gen.integer(0, 1)];
    const MorphismSpec phi = gen.morphism(src, tgt, image_shape());
    const GradedSeries f = gen.series(tgt, {});
    ASSERT_TRUE(agrees_modulo(pullback(phi, f), substitute(phi, f))) << to_string(phi) << to_string(f);
  }
}

TEST(Pullback, RequiresGlobalSection) {
  const Chart c = chart_eta();
  EXPECT_THROW((pullback(MorphismSpec::identity(c), S(c, "x1").with_domain(Domain::box({{0, 1}})))), DomainError);
}

TEST(MorphismSpec, Validation) {
  const Chart src = chart_eta(), tgt = chart_eta();
  EXPECT_THROW((MorphismSpec(src, tgt, {S(src, "x1"), S(src, "x1")})), DegreeMismatch);
  EXPECT_THROW((MorphismSpec(src, tgt, {S(src, "x1 + eta1"), S(src, "eta1")})), DegreeMismatch);
  EXPECT_THROW((MorphismSpec(src, tgt, {S(src, "x1")})), ValidationError);
  EXPECT_THROW((MorphismSpec(make_chart(1, 1, {1}), tgt, {S(src, "x1"), S(src, "eta1")})), ChartError);
  EXPECT_THROW((MorphismSpec(src, tgt, {S(src, "x1").with_domain(Domain::box({{0, 1}})), S(src, "eta1")})),
               DomainError);
  // zero images are allowed for graded coordinates
  EXPECT_NO_THROW((MorphismSpec(src, tgt, {S(src, "x1^2 - 1"), GradedSeries(src)})));
}

TEST(MorphismSpec, BaseMap) {
  const Chart c = chart_eta();
  const MorphismSpec phi(c, c, {S(c, "x1^2 + 3 + eta1^2"), S(c, "eta1")});
  ASSERT_EQ(phi.base_map().size(), 1u);
  EXPECT_EQ(phi.base_map()[0], epsilon(S(c, "x1^2 + 3")));
}

TEST(Composition, IdentityAndAssociativity) {
  const Chart c = chart_eta();
  const MorphismSpec phi = example(c, c);
  EXPECT_EQ(compose_morphisms(phi, MorphismSpec::identity(c)), phi);
  EXPECT_EQ(compose_morphisms(MorphismSpec::identity(c), phi), phi);
  const MorphismSpec psi(c, c, {S(c, "2*x1 - eta1^2"), S(c, "eta1 + x1^2*eta1")});
  const GradedSeries f = S(c, "x1^3*eta1 - eta1^2 + x1");
  EXPECT_EQ(pullback(compose_morphisms(phi, psi), f), pullback(phi, pullback(psi, f)));
  EXPECT_THROW(compose_morphisms(phi, MorphismSpec::identity(chart_c())), ChartError);
}

TEST(ChainRule, ConstantAndExample) {
  const Chart c = chart_eta();
  const MorphismSpec phi = example(c, c);
  const IdentityReport flat = chain_rule_check(phi, S(c, "7"), 0);
  EXPECT_TRUE(flat.holds);
  EXPECT_TRUE(flat.lhs.is_zero());
  EXPECT_TRUE(flat.rhs.is_zero());
  for (std::size_t a = 0; a < 2; ++a) EXPECT_TRUE(chain_rule_check(phi, S(c, "x1^2*eta1 - eta1^3"), a).holds);
}

TEST(FaaDiBruno, FirstOrderIsTheChainRule) {
  const Chart c = chart_eta();
  const MorphismSpec phi = example(c, c);
  const GradedSeries f = S(c, "x1^3*eta1 + eta1^2");
  for (std::size_t a = 0; a < 2; ++a) {
    MultiIndex unit(2, 0);
    unit[a] = 1;
    EXPECT_EQ(faa_di_bruno_expand(phi, f, unit).value, chain_rule_check(phi, f, a).rhs);
  }
}

TEST(FaaDiBruno, RandomHigherOrders) {
  Generator gen(17);
  const auto charts = sample_charts();
  for (int i = 0; i < 10; ++i) {
    const std::size_t group = 2 * static_cast<std::size_t>(gen.integer(0, 2));
    const Chart src = charts[group + gen.integer(0, 1)], tgt = charts[group + gen.integer(0, 1)];
    const MorphismSpec phi = gen.morphism(src, tgt, image_shape());
    const GradedSeries f = gen.series(tgt, {});
    for (const auto& alpha : multi_indices_of_order(*src, 3)) {
      const IdentityReport r = faa_di_bruno_check(phi, f, alpha);
      ASSERT_TRUE(r.holds) << to_string(phi) << to_string(f) << " residual " << to_string(r.residual);
      ASSERT_TRUE(agrees_modulo(faa_di_bruno_expand(phi, f, alpha).value, iterated_partial(substitute(phi, f), alpha)));
    }
  }
}
