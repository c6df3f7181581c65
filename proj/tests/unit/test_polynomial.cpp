#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "z2n/polynomial.hpp"

using namespace z2n;
using z2n::test::Q;

namespace {
Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }
const std::vector<std::string> kNames = {"x1", "x2"};
}  // namespace

TEST(Polynomial, ArithmeticAndPrinting) {
  const Polynomial x = var(2, 0), y = var(2, 1);
  const Polynomial p = (x + y) * (x - y);
  EXPECT_EQ(p.to_string(kNames), "x1^2 - x2^2");
  EXPECT_EQ((x * Q(1, 2) + Polynomial::constant(2, 3)).to_string(kNames), "1/2*x1 + 3");
  EXPECT_EQ(Polynomial(2).to_string(kNames), "0");
  EXPECT_EQ(p.total_degree(), 2);
  EXPECT_EQ(Polynomial(2).total_degree(), -1);
  EXPECT_TRUE((x - x).is_zero());
}

TEST(Polynomial, DerivativeAndEvaluate) {
  const Polynomial x = var(2, 0), y = var(2, 1);
  const Polynomial p = x.pow(3) * y + Q(2) * y;
  EXPECT_EQ(p.derivative(0), Q(3) * x.pow(2) * y);
  const std::vector<std::uint32_t> alpha = {2, 1};
  EXPECT_EQ(p.derivative(alpha), Q(6) * x);
  const std::vector<Rational> pt = {Q(1, 2), Q(-3)};
  EXPECT_EQ(p.evaluate(pt), Q(1, 8) * Q(-3) + Q(-6));
}

TEST(Polynomial, Compose) {
  const Polynomial x = var(1, 0);
  const Polynomial p = x.pow(2) + Polynomial::constant(1, 1);
  const std::vector<Polynomial> images = {x + Polynomial::constant(1, 1)};
  EXPECT_EQ(p.compose(images), x.pow(2) + Q(2) * x + Polynomial::constant(1, 2));
}

TEST(Polynomial, Factorials) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  const std::vector<std::uint32_t> ks = {2, 3, 0};
  EXPECT_EQ(multi_factorial(ks), 12);
  EXPECT_EQ(total(ks), 5u);
}
