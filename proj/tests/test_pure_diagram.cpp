#include <gtest/gtest.h>

#include "boij/errors.hpp"
#include "boij/pure_diagram.hpp"
#include "support/oracles.hpp"

using namespace boij;

namespace {
std::vector<Rational> rats(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }
}  // namespace

TEST(DegreeSequence, ParseAndFormat) {
  DegreeSequence d = DegreeSequence::parse("0,2,3,4", 3);
  EXPECT_EQ(d.degrees(), (std::vector<int>{0, 2, 3, 4}));
  EXPECT_EQ(d.str(), "0,2,3,4");
  DegreeSequence w = DegreeSequence::parse("1:[1,3,4]", 2);
  EXPECT_EQ(w.start(), 1);
  EXPECT_EQ(w.end(), 3);
  EXPECT_EQ(w.at(2), 3);
  EXPECT_THROW(DegreeSequence(2, {0, 0}), InvalidArgument);
  EXPECT_THROW(DegreeSequence(1, {0, 1, 2}), InvalidArgument);
  EXPECT_THROW(DegreeSequence(2, {}), InvalidArgument);
}

TEST(PureDiagram, NormalizedMatchesLinearSolve) {
  for (auto degrees : std::vector<std::vector<int>>{{0, 1, 3}, {0, 2, 3}, {0, 2, 3, 4}, {0, 1, 3, 4}, {-2, 5}}) {
    DegreeSequence d(3, degrees);
    EXPECT_EQ(hk_normalized(d).values(), oracle::hk_by_linear_solve(degrees));
  }
}

TEST(PureDiagram, SmallestIntegralPoints) {
  EXPECT_EQ(smallest_integral(hk_normalized({2, {0, 1, 3}})).values(), rats({2, 3, 1}));
  EXPECT_EQ(smallest_integral(hk_normalized({2, {0, 2, 3}})).values(), rats({1, 3, 2}));
  EXPECT_EQ(smallest_integral(hk_normalized({3, {0, 2, 3, 4}})).values(), rats({1, 6, 8, 3}));
  EXPECT_EQ(smallest_integral(hk_normalized({3, {0, 1, 3, 4}})).values(), rats({1, 2, 2, 1}));
  EXPECT_EQ(integral_scale(hk_normalized({2, {0, 1, 3}})), Rational(2));
}

TEST(PureDiagram, KoszulIsBinomialRow) {
  for (int v = 1; v <= 8; ++v) {
    std::vector<int> deg;
    for (int i = 0; i <= v; ++i) deg.push_back(i);
    EXPECT_EQ(smallest_integral(hk_normalized({v, deg})).values(), oracle::pascal_row(v));
  }
}

TEST(PureDiagram, MomentsVanish) {
  PureDiagram p = hk_normalized({3, {0, 2, 3, 4}});
  for (int k = 0; k < 3; ++k) EXPECT_EQ(p.moment(k), Rational(0));
  EXPECT_NE(p.moment(3), Rational(0));
}

TEST(PureDiagram, ToTablePlacesEntries) {
  BettiTable t = PureDiagram(DegreeSequence(2, {1, 3, 4}, 1), rats({1, 3, 2})).to_table();
  EXPECT_EQ(t.at(1, 1), Rational(1));
  EXPECT_EQ(t.at(2, 3), Rational(3));
  EXPECT_EQ(t.at(3, 4), Rational(2));
  EXPECT_THROW(PureDiagram(DegreeSequence(2, {0, 1}), rats({1, 0})), InvalidArgument);
}

TEST(Compare, PaddedTermwiseOrder) {
  DegreeSequence a(3, {0, 2, 3, 4});
  DegreeSequence b(3, {0, 2, 3});
  DegreeSequence c(3, {0, 1, 3});
  EXPECT_EQ(compare(a, b), Order::LessEq);
  EXPECT_EQ(compare(b, a), Order::GreaterEq);
  EXPECT_EQ(compare(b, b), Order::Equal);
  EXPECT_EQ(compare(c, b), Order::LessEq);
  EXPECT_EQ(compare(DegreeSequence(3, {0, 3, 4}), DegreeSequence(3, {0, 2, 5})), Order::Incomparable);
  EXPECT_THROW(compare(DegreeSequence(2, {0}), DegreeSequence(3, {0})), DimensionMismatch);
  EXPECT_TRUE(is_chain({a, b}));
  EXPECT_TRUE(is_chain({c, b}));
  // The shorter sequence is padded with +infinity, which outranks 4.
  EXPECT_EQ(compare(c, a), Order::Incomparable);
  EXPECT_EQ(compare(DegreeSequence(3, {0, 3}), DegreeSequence(3, {0, 2, 5})), Order::GreaterEq);
  EXPECT_FALSE(is_chain({DegreeSequence(3, {0, 3, 4}), DegreeSequence(3, {0, 2, 5})}));
}
