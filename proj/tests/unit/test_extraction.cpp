#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "z2n/errors.hpp"
#include "z2n/extraction.hpp"
#include "z2n/random.hpp"

using namespace z2n;
using namespace z2n::test;

TEST(Extraction, FirstOrderExample) {
  const Chart c = chart_eta();
  const GradedSeries x = S(c, "x1"), eta = S(c, "eta1");
  const BlackboxOperator b{c, [&](const GradedSeries& f) { return x * partial(f, "x1") + eta * f; }, 1};
  const DiffOperator d = extract_coefficients(b, 1);
  ASSERT_EQ(d.terms().size(), 2u);
  EXPECT_EQ(d.coefficient({0, 0}), eta);
  EXPECT_EQ(d.coefficient({1, 0}), x);
}

TEST(Extraction, MultiplicationOperator) {
  const Chart c = chart_c();
  const GradedSeries g = S(c, "x1^2*zeta1 - eta1 + 3");
  const DiffOperator d = extract_coefficients(closure(DiffOperator::multiplication(g)), 0);
  EXPECT_EQ(d, DiffOperator::multiplication(g));
}

TEST(Extraction, SignsFromReordering) {
  const Chart c = chart_c();
  const GradedSeries eta = S(c, "eta1");
  const BlackboxOperator b{c, [&](const GradedSeries& f) { return partial(eta * partial(f, "x1"), "zeta1"); }, 2};
  const DiffOperator d = extract_coefficients(b, 2);
  EXPECT_EQ(d, Op(c, "-eta1*dzeta1*dx1"));
}

TEST(Extraction, RejectsNonlinearBlackbox) {
  const Chart c = chart_c();
  const BlackboxOperator b{c, [](const GradedSeries& f) { return f * f; }, 2};
  try {
    extract_coefficients(b, 2);
    FAIL() << "expected NotAnOperatorOfOrderK";
  } catch (const NotAnOperatorOfOrderK& e) {
    EXPECT_FALSE(e.witness().empty());
  }
}

TEST(Extraction, RejectsOrderAboveBound) {
  const Chart c = chart_c();
  EXPECT_THROW(extract_coefficients(closure(Op(c, "dx1^2 + eta1")), 1), NotAnOperatorOfOrderK);
  EXPECT_THROW(extract_coefficients(closure(Op(c, "x1*deta1*dzeta2")), 1), NotAnOperatorOfOrderK);
  EXPECT_THROW(extract_coefficients(closure(Op(c, "dx1")), -1), ValidationError);
}

TEST(Extraction, WitnessIsShrunk) {
  const Chart c = chart_c();
  try {
    extract_coefficients(closure(Op(c, "dx1^3")), 2);
    FAIL() << "expected NotAnOperatorOfOrderK";
  } catch (const NotAnOperatorOfOrderK& e) {
    // a single monomial is enough to expose the third derivative
    EXPECT_EQ(e.witness().find(" + "), std::string::npos) << e.witness();
    EXPECT_EQ(e.witness().find(" - "), std::string::npos) << e.witness();
  }
}

TEST(Extraction, TestMonomial) {
  const Chart c = chart_c();
  EXPECT_EQ(test_monomial(c, {2, 3, 1, 0}), S(c, "1/12*x1^2*eta1^3*zeta1"));
}

TEST(Extraction, RoundTripAndSecondStratum) {
  Generator gen(11);
  SeriesShape shape;
  shape.max_terms = 2;
  shape.max_weight = 2;
  for (int i = 0; i < 30; ++i) {
    const Chart c = gen.pick(sample_charts());
    const unsigned k = static_cast<unsigned>(i % 4);
    const DiffOperator d = gen.diff_operator(c, k, shape);
    ASSERT_EQ(extract_coefficients(closure(d), static_cast<int>(k)), d) << to_string(d);
    for (const auto& index : multi_indices_of_order(*c, 2)) {
      ASSERT_TRUE(agrees_modulo(explicit_second_stratum(closure(d), index), d.coefficient(index))) << to_string(d);
    }
  }
}

TEST(Extraction, SecondStratumNeedsOrderTwo) {
  const Chart c = chart_c();
  EXPECT_THROW((explicit_second_stratum(closure(Op(c, "dx1")), {1, 0, 0, 0})), ValidationError);
}
