#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "z2n/errors.hpp"
#include "z2n/random.hpp"
#include "z2n/seminorm.hpp"

using namespace z2n;
using namespace z2n::test;

namespace {
CompactBox box1(long lo, long hi, unsigned grid = 9) { return CompactBox({{Q(lo), Q(hi)}}, grid); }
}  // namespace

TEST(CompactBox, GridPoints) {
  const CompactBox b({{Q(0), Q(1)}, {Q(-1), Q(1)}}, 3);
  const auto pts = b.points();
  ASSERT_EQ(pts.size(), 9u);
  EXPECT_EQ(pts.front(), (Point{Q(0), Q(-1)}));
  EXPECT_EQ(pts.back(), (Point{Q(1), Q(1)}));
  EXPECT_TRUE(std::find(pts.begin(), pts.end(), Point{Q(1, 2), Q(0)}) != pts.end());
  EXPECT_TRUE(box1(-1, 2).contains(box1(0, 1)));
  EXPECT_FALSE(box1(0, 1).contains(box1(-1, 2)));
  EXPECT_EQ(CompactBox::cube(2, 3, 5), CompactBox({{Q(-3), Q(3)}, {Q(-3), Q(3)}}, 5));
}

TEST(CompactBox, Validation) {
  EXPECT_THROW(box1(0, 1, 1), ValidationError);
  EXPECT_THROW(box1(2, 1), DomainError);
}

TEST(GridSup, Polynomial) {
  const Polynomial x = Polynomial::variable(1, 0);
  EXPECT_EQ(grid_sup(x * x - Polynomial::constant(1, 1), box1(-1, 2, 4)), Q(3));
  EXPECT_EQ(grid_sup(x, std::span<const Point>{}), Q(0));
}

TEST(EvalSeminorm, Examples) {
  const Chart c = chart_eta();
  EXPECT_EQ(eval_seminorm(SeminormSpec::cd(box1(0, 1), DiffOperator::identity(c)), S(c, "x1")), Q(1));
  EXPECT_EQ(eval_seminorm(SeminormSpec::cd(box1(-1, 2), Op(c, "deta1")), S(c, "x1^2*eta1")), Q(4));
  EXPECT_EQ(eval_seminorm(SeminormSpec::rho(box1(0, 2, 33), 1, 0), S(c, "x1")), Q(4));
  EXPECT_EQ(eval_seminorm(SeminormSpec::cab(box1(0, 1), {1}, {2}), S(c, "x1^2*eta1^2")), Q(4));
  EXPECT_EQ(eval_seminorm(SeminormSpec::base(box1(0, 1), Op(c, "x1*dx1"), {1}), S(c, "x1^2*eta1 + 5")), Q(2));
}

TEST(EvalSeminorm, RhoWeighsXiDerivatives) {
  const Chart c = chart_eta();
  // rho_{0,2} sees d_eta^2 (eta^2) = 2 at weight 2^2
  EXPECT_EQ(eval_seminorm(SeminormSpec::rho(box1(0, 1), 0, 2), S(c, "eta1^2")), Q(8));
  EXPECT_EQ(eval_seminorm(SeminormSpec::rho(box1(0, 1), 0, 1), S(c, "eta1^2")), Q(0));
}

TEST(EvalSeminorm, Errors) {
  const Chart c = chart_eta();
  const GradedSeries local = S(c, "x1").with_domain(Domain::box({{0, 1}}));
  EXPECT_THROW(eval_seminorm(SeminormSpec::rho(box1(0, 2), 0, 0), local), DomainError);
  EXPECT_THROW((eval_seminorm(SeminormSpec::rho(CompactBox({{0, 1}, {0, 1}}, 3), 0, 0), S(c, "x1"))), DomainError);
  EXPECT_THROW((eval_seminorm(SeminormSpec::base(box1(0, 1), Op(c, "deta1"), {0}), S(c, "x1"))), ValidationError);
  EXPECT_THROW((eval_seminorm(SeminormSpec::base(box1(0, 1), Op(c, "eta1*dx1"), {0}), S(c, "x1"))), ValidationError);
}

TEST(Submultiplicative, ZeroAndExample) {
  const Chart c = chart_eta();
  const SeminormSpec rho = SeminormSpec::rho(box1(-1, 2), 2, 2);
  const auto zero = check_submultiplicative(rho, GradedSeries(c), S(c, "x1^2 + eta1"));
  EXPECT_TRUE(zero.holds);
  EXPECT_EQ(zero.product, Q(0));
  const auto r = check_submultiplicative(rho, S(c, "x1 + eta1"), S(c, "x1*eta1 - 1"));
  EXPECT_TRUE(r.holds);
  EXPECT_LE(r.product, r.left * r.right);
  EXPECT_THROW((check_submultiplicative(SeminormSpec::cab(box1(0, 1), {0}, {0}), S(c, "x1"), S(c, "x1"))),
               ValidationError);
}

TEST(Equivalence, IdentityOperator) {
  const Chart c = chart_eta();
  const EquivalenceBound b = equivalence_constant(DiffOperator::identity(c), box1(0, 1), box1(0, 1));
  EXPECT_EQ(b.constant, Q(2));
  EXPECT_EQ(b.weighted_constant, Q(2));
  const EquivalenceCheck r = check_equivalence(b, S(c, "x1^2 - 3*eta1"));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, Q(1));
  EXPECT_THROW(equivalence_constant(DiffOperator::identity(c), box1(-1, 1), box1(0, 1)), DomainError);
}

TEST(Equivalence, WeightedConstant) {
  const Chart c = chart_eta();
  const EquivalenceBound b = equivalence_constant(Op(c, "x1*deta1^2"), box1(0, 1), box1(-1, 2));
  // D_(0,2) = x1 with beta! = 2 over the outer box
  EXPECT_EQ(b.constant, Q(3));
  EXPECT_EQ(b.weighted_constant, Q(5));
}

TEST(Metric, SingleTermFamily) {
  const Chart c = chart_eta();
  const MetricSpec m{{SeminormSpec::rho(box1(0, 2), 1, 0)}, 1};
  const Distance d = metric_distance(m, S(c, "x1"), GradedSeries(c));
  EXPECT_EQ(d.value, Q(4, 5));
  EXPECT_EQ(d.tail_bound, Q(1));
  EXPECT_EQ(metric_distance(m, S(c, "x1"), S(c, "x1")).value, Q(0));
}

TEST(Metric, DefaultFamily) {
  const Chart c = chart_c();
  const MetricSpec m = default_metric(c, 16, 5);
  ASSERT_EQ(m.family.size(), 16u);
  EXPECT_EQ(m.family[0], SeminormSpec::rho(CompactBox::cube(1, 1, 5), 0, 0));
  EXPECT_EQ(metric_distance(m, S(c, "x1"), S(c, "x1")).tail_bound, Q(1, 32768));
}

TEST(SeminormTable, Homogeneity) {
  const Chart c = chart_eta();
  const std::vector<SeminormSpec> family = {SeminormSpec::rho(box1(0, 1), 1, 1),
                                            SeminormSpec::cd(box1(-1, 1), Op(c, "x1*deta1"))};
  const GradedSeries f = S(c, "x1^3 - x1*eta1 + 2");
  std::vector<GradedSeries> constant(3, f), scaled;
  for (int n = 1; n <= 3; ++n) scaled.push_back(Q(1, n) * f);
  const auto tc = seminorm_table(constant, family);
  const auto ts = seminorm_table(scaled, family);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t k = 0; k < family.size(); ++k) {
      EXPECT_EQ(tc[r][k], tc[0][k]);
      EXPECT_EQ(ts[r][k], ts[0][k] / Q(static_cast<long>(r) + 1));
    }
  }
}

TEST(Separation, Examples) {
  const Chart c = chart_eta();
  const SeparationWitness w = separation_witness(S(c, "x1^2 - x1"));
  EXPECT_NE(w.value, 0);
  EXPECT_EQ(epsilon(S(c, "x1^2 - x1")).evaluate(w.point), w.value);
  const SeparationWitness g = separation_witness(S(c, "x1*eta1^2"));
  EXPECT_EQ(g.beta, (XiKey{2}));
  EXPECT_NE(g.value, 0);
  EXPECT_THROW(separation_witness(GradedSeries(c)), ValidationError);
}

TEST(ProductPartner, MatchesBaseSeminorm) {
  Generator gen(23);
  for (int i = 0; i < 40; ++i) {
    const Chart c = gen.pick(sample_charts());
    DiffOperator delta(c);
    MultiIndex idx(c->coordinate_count(), 0);
    idx[0] = static_cast<std::uint32_t>(gen.integer(0, 2));
    delta.add_term(idx, GradedSeries::from_polynomial(c, gen.polynomial(c->p(), 2, 2, 3)));
    const GradedSeries f = gen.series(c, {});
    const XiKey beta = f.is_zero() ? XiKey(c->xi_count(), 0) : f.terms().rbegin()->first;
    const SeminormSpec base = SeminormSpec::base(gen.box(c->p(), 3), delta, beta);
    ASSERT_EQ(eval_seminorm(base, f), eval_seminorm(product_partner(base), f));
  }
}

TEST(Continuity, IdentityMorphism) {
  const Chart c = chart_eta();
  const ContinuityReport r =
      continuity_check(MorphismSpec::identity(c), S(c, "x1^2*eta1 - x1"), {1, 1}, box1(-1, 1, 5));
  EXPECT_TRUE(r.holds);
  EXPECT_LE(r.lhs, r.rhs);
}
