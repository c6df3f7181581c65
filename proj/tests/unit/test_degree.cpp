#include <gtest/gtest.h>

#include "z2n/degree.hpp"
#include "z2n/errors.hpp"

using namespace z2n;

TEST(Degree, ScalarProductExamples) {
  EXPECT_EQ(scalar_product(Degree{0, 1, 1}, Degree{1, 0, 1}), 1);
  EXPECT_EQ(scalar_product(Degree{0, 1}, Degree{1, 0}), 0);
  for (const auto& g : standard_order(3).ordered) EXPECT_EQ(scalar_product(g, Degree::zero(3)), 0);
}

TEST(Degree, ScalarProductArityMismatch) {
  EXPECT_THROW((scalar_product(Degree{0, 1}, Degree{0, 1, 1})), DegreeArityError);
  EXPECT_THROW((Degree{1} + Degree{1, 0}), DegreeArityError);
}

TEST(Degree, Parity) {
  EXPECT_EQ(parity(Degree{0, 1, 1}), Parity::Even);
  EXPECT_EQ(parity(Degree{1, 1, 1}), Parity::Odd);
  EXPECT_EQ(parity(Degree::zero(4)), Parity::Even);
}

TEST(Degree, StandardOrderSmall) {
  EXPECT_EQ(standard_order(1).ordered, (std::vector<Degree>{Degree{0}, Degree{1}}));
  EXPECT_EQ(standard_order(2).ordered,
            (std::vector<Degree>{Degree{0, 0}, Degree{1, 1}, Degree{0, 1}, Degree{1, 0}}));
  const std::vector<Degree> three = {Degree{0, 0, 0}, Degree{0, 1, 1}, Degree{1, 0, 1}, Degree{1, 1, 0},
                                     Degree{0, 0, 1}, Degree{0, 1, 0}, Degree{1, 0, 0}, Degree{1, 1, 1}};
  EXPECT_EQ(standard_order(3).ordered, three);
}

TEST(Degree, StandardOrderBlocks) {
  const DegreeTable t = standard_order(3);
  EXPECT_EQ(t.nonzero_even.size(), 3u);
  EXPECT_EQ(t.odd.size(), 4u);
  EXPECT_EQ(t.nonzero().size(), 7u);
  EXPECT_EQ(t.position(Degree{1, 1, 1}), 7u);
}

TEST(Degree, StandardOrderRejectsZero) { EXPECT_THROW(standard_order(0), ValidationError); }

TEST(Degree, ComparisonFollowsStandardOrder) {
  const auto t = standard_order(4).ordered;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) EXPECT_LT(t[i], t[i + 1]);
}

TEST(Degree, ParseAndPrint) {
  EXPECT_EQ(Degree::parse("(0,1,1)"), (Degree{0, 1, 1}));
  EXPECT_EQ(Degree::parse(" ( 1 , 0 ) "), (Degree{1, 0}));
  EXPECT_EQ((Degree{1, 0, 1}).to_string(), "(1,0,1)");
  EXPECT_THROW(Degree::parse("(0,2)"), ValidationError);
  EXPECT_THROW(Degree::parse("0,1"), ValidationError);
  EXPECT_THROW(Degree::parse("(0,1"), ValidationError);
}

TEST(Degree, AdditionIsXor) {
  EXPECT_EQ((Degree{0, 1, 1}) + (Degree{1, 1, 0}), (Degree{1, 0, 1}));
  EXPECT_TRUE(((Degree{1, 1}) + (Degree{1, 1})).is_zero());
}
