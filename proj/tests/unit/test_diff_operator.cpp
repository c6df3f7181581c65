#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "z2n/diff_operator.hpp"
#include "z2n/errors.hpp"
#include "z2n/random.hpp"

using namespace z2n;
using namespace z2n::test;

namespace {
DiffOperator d(const Chart& c, MultiIndex i) { return DiffOperator::derivative(c, i); }
}  // namespace

TEST(Partial, Examples) {
  const Chart c = chart_c();
  EXPECT_EQ(partial(S(c, "eta1^2"), "eta1"), S(c, "2*eta1"));
  EXPECT_EQ(partial(S(c, "eta1*zeta1"), "zeta1"), S(c, "-eta1"));
  EXPECT_EQ(partial(S(c, "x1^2"), "x1"), S(c, "2*x1"));
  EXPECT_EQ(partial(S(c, "zeta1*zeta2"), "zeta2"), S(c, "zeta1"));
  EXPECT_EQ(partial(S(c, "zeta1*zeta2"), "zeta1"), S(c, "zeta2"));
}

TEST(Partial, UnknownSymbol) {
  EXPECT_THROW(partial(S(chart_c(), "x1"), "eta2"), SymbolError);
  EXPECT_THROW(partial(S(chart_c(), "x1"), 4), SymbolError);
}

TEST(Partial, LowersValidOrder) {
  const Chart c = chart_c();
  EXPECT_EQ(partial(S(c, "eta1^3"), "eta1").valid_order(), 7);
  EXPECT_EQ(partial(S(c, "x1"), "x1").valid_order(), 8);
}

TEST(IteratedPartial, Examples) {
  const Chart c = chart_c();
  EXPECT_EQ(iterated_partial(S(c, "eta1^2"), {0, 2, 0, 0}), S(c, "2"));
  EXPECT_EQ(iterated_partial(S(c, "zeta1*zeta2"), {0, 0, 1, 1}), S(c, "1"));
  const GradedSeries f = S(c, "x1^3*eta1*zeta2 - 4");
  EXPECT_EQ(iterated_partial(f, {0, 0, 0, 0}), f);
  EXPECT_EQ(iterated_partial(S(c, "eta1^3*zeta1*zeta2"), {0, 3, 1, 1}), S(c, "6"));
}

TEST(Apply, Examples) {
  const Chart c = chart_c();
  EXPECT_EQ(apply(Op(c, "x1*dx1"), S(c, "x1^2")), S(c, "2*x1^2"));
  EXPECT_EQ(apply(Op(c, "deta1"), S(c, "x1^2*eta1")), S(c, "x1^2"));
  EXPECT_EQ(apply(DiffOperator::identity(c), S(c, "zeta1 + x1")), S(c, "zeta1 + x1"));
}

TEST(Apply, ChartMismatch) { EXPECT_THROW(apply(Op(chart_c(), "dx1"), S(chart_eta(), "x1")), ChartError); }

TEST(Compose, OperatorProductsFollowTheSignRule) {
  const Chart c = chart_c();
  const DiffOperator dz1 = d(c, {0, 0, 1, 0}), de1 = d(c, {0, 1, 0, 0}), dz2 = d(c, {0, 0, 0, 1});
  EXPECT_EQ(compose(dz1, de1), -compose(de1, dz1));
  EXPECT_EQ(compose(dz1, dz2), compose(dz2, dz1));
  EXPECT_TRUE(compose(dz1, dz1).is_zero());
  EXPECT_EQ(Op(c, "dx1*x1"), Op(c, "1 + x1*dx1"));
  EXPECT_EQ(Op(c, "dzeta1*zeta1"), Op(c, "1 - zeta1*dzeta1"));
}

TEST(Compose, AgreesWithSuccessiveApplication) {
  const Chart c = chart_c();
  const DiffOperator a = Op(c, "x1*dx1*deta1 + zeta1*dzeta2 + eta1");
  const DiffOperator b = Op(c, "dx1^2 - zeta2*deta1 + x1*zeta1*dzeta1");
  const GradedSeries f = S(c, "x1^3*eta1^2*zeta1 + eta1*zeta2 - x1^2*zeta1*zeta2 + 5*x1");
  EXPECT_EQ(apply(compose(a, b), f), apply(a, apply(b, f)));
  EXPECT_LE(compose(a, b).order(), a.order() + b.order());
  EXPECT_THROW(compose(a, Op(chart_eta(), "dx1")), ChartError);
}

TEST(Commutator, Examples) {
  const Chart c = chart_c();
  EXPECT_EQ(graded_commutator(Op(c, "dx1"), DiffOperator::multiplication(S(c, "x1"))), DiffOperator::identity(c));
  EXPECT_TRUE(graded_commutator(DiffOperator::multiplication(S(c, "x1*zeta1")),
                                DiffOperator::multiplication(S(c, "eta1*zeta2")))
                  .is_zero());
  EXPECT_TRUE(graded_commutator(DiffOperator::multiplication(S(c, "zeta1")),
                                DiffOperator::multiplication(S(c, "x1*zeta1")))
                  .is_zero());
  EXPECT_EQ(graded_commutator(Op(c, "dzeta1"), DiffOperator::multiplication(S(c, "zeta1"))),
            DiffOperator::identity(c));
}

TEST(Commutator, RequiresHomogeneousOperators) {
  const Chart c = chart_c();
  EXPECT_THROW(graded_commutator(Op(c, "dx1 + dzeta1"), Op(c, "dx1")), DegreeError);
}

TEST(OperatorDegree, Examples) {
  const Chart c = chart_c();
  EXPECT_EQ(operator_degree(Op(c, "deta1")), (Degree{1, 1}));
  EXPECT_EQ(operator_degree(Op(c, "x1*dx1")), (Degree{0, 0}));
  EXPECT_EQ(operator_degree(Op(c, "zeta1*deta1")), (Degree{1, 0}));
  EXPECT_FALSE(operator_degree(Op(c, "eta1 + dzeta1")).has_value());
  EXPECT_EQ(DiffOperator(c).order(), -1);
}

TEST(MultiIndices, Enumeration) {
  const Chart c = chart_c();
  EXPECT_EQ(multi_indices_of_order(*c, 0).size(), 1u);
  EXPECT_EQ(multi_indices_of_order(*c, 1).size(), 4u);
  EXPECT_EQ(multi_indices_of_order(*c, 2).size(), 8u);
  EXPECT_EQ(multi_indices_up_to(*c, 2).size(), 13u);
  for (const auto& i : multi_indices_of_order(*c, 3)) EXPECT_TRUE(i[2] <= 1 && i[3] <= 1);
}

TEST(RestrictOperator, Domains) {
  const Chart c = chart_c();
  const DiffOperator a = Op(c, "x1*dx1").with_domain(Domain::box({{0, 2}}));
  EXPECT_EQ(restrict_operator(a, a.domain()), a);
  const DiffOperator r = restrict_operator(a, Domain::box({{0, 1}}));
  EXPECT_EQ(r.domain(), Domain::box({{0, 1}}));
  EXPECT_THROW((restrict_operator(r, Domain::box({{-1, 1}}))), DomainError);
  EXPECT_THROW((apply(r, S(c, "x1").with_domain(Domain::box({{0, 2}})))), DomainError);
}

TEST(Leibniz, RandomInstances) {
  Generator gen(5);
  for (int i = 0; i < 100; ++i) {
    const Chart c = gen.pick(sample_charts());
    const std::size_t a = gen.integer(0, static_cast<int>(c->coordinate_count()) - 1);
    const Degree df = gen.degree(c->n());
    const GradedSeries f = gen.homogeneous(c, df, {});
    const GradedSeries g = gen.series(c, {});
    const int sign = scalar_product(c->coordinate(a).degree, df) ? -1 : 1;
    const GradedSeries rhs = partial(f, a) * g + (sign < 0 ? -(f * partial(g, a)) : f * partial(g, a));
    ASSERT_TRUE(agrees_modulo(partial(f * g, a), rhs)) << to_string(f) << " ; " << to_string(g);
  }
}
