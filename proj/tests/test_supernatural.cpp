#include <gtest/gtest.h>

#include "boij/errors.hpp"
#include "boij/supernatural.hpp"
#include "support/oracles.hpp"

using namespace boij;

TEST(RootSequence, ParseAndOrder) {
  RootSequence f = RootSequence::parse("0,-3");
  EXPECT_EQ(f.n(), 2);
  EXPECT_EQ(f[1], 0);
  EXPECT_EQ(f[2], -3);
  EXPECT_EQ(f.str(), "0,-3");
  EXPECT_THROW(RootSequence({1, 1}), InvalidArgument);
  EXPECT_THROW(RootSequence({}), InvalidArgument);
  EXPECT_TRUE(termwise_leq(RootSequence({0, -3}), RootSequence({0, -2})));
  EXPECT_FALSE(termwise_leq(RootSequence({1, -3}), RootSequence({0, -2})));
}

TEST(Sigma, EntriesMatchDirectProduct) {
  for (auto roots : std::vector<std::vector<int>>{{0, -3}, {0, -2}, {2, -1, -4}, {-1}, {5, 4}}) {
    RootSequence f(roots);
    Window w = minimal_window(f);
    w = {w.lo - 3, w.hi + 3};
    CohomologyTable s = sigma(f, Rational(3), w);
    EXPECT_TRUE(validate(s).ok()) << validate(s).str();
    for (int i = 0; i <= f.n(); ++i)
      for (int j = w.lo - 4; j <= w.hi + 4; ++j)
        EXPECT_EQ(s.at(i, j), oracle::supernatural_entry(roots, 3, i, j)) << f.str() << " " << i << "," << j;
  }
}

TEST(Sigma, ExamplePlaneValues) {
  CohomologyTable a = sigma(RootSequence({0, -3}), 1, {-5, 3});
  EXPECT_EQ(a.at(0, 1), Rational(2));
  EXPECT_EQ(a.at(1, -1), Rational(1));
  EXPECT_EQ(a.at(2, -5), Rational(5));
  CohomologyTable b = sigma(RootSequence({0, -2}), 1, {-5, 3});
  EXPECT_EQ(b.at(0, 1), Rational(3, 2));
  EXPECT_EQ(b.at(1, -1), Rational(1, 2));
  EXPECT_EQ(b.at(2, -5), Rational(15, 2));
}

TEST(Sigma, Errors) {
  EXPECT_THROW(sigma(RootSequence({0, -3}), 1, {-2, 3}), WindowTooSmall);
  EXPECT_THROW(sigma(RootSequence({0}), 0, {-2, 3}), InvalidArgument);
  EXPECT_THROW(sigma(RootSequence({0}), -1, {-2, 3}), InvalidArgument);
}

TEST(LineBundle, PlaneStructureSheaf) {
  CohomologyTable o = line_bundle(2, 0, {-5, 3});
  for (int j = 0; j <= 3; ++j) EXPECT_EQ(o.at(0, j), Rational((j + 1) * (j + 2), 2));
  EXPECT_EQ(o.at(2, -3), Rational(1));
  EXPECT_EQ(o.at(2, -5), Rational(6));
  for (int j = -5; j <= 3; ++j) EXPECT_EQ(o.at(1, j), Rational(0));
  EXPECT_EQ(o.at(0, -1), Rational(0));
  EXPECT_TRUE(validate(o).ok());
}

TEST(LineBundle, IsUnitSupernaturalOnLine) {
  for (int a = -5; a <= 5; ++a) {
    Window w{-8, 8};
    EXPECT_TRUE(equivalent(line_bundle(1, a, w), sigma(RootSequence({-a - 1}), 1, w))) << a;
  }
}

TEST(CornerRoots, ReadsStaircase) {
  CohomologyTable g = add_tables(sigma(RootSequence({0, -3}), 1, {-5, 3}), sigma(RootSequence({0, -2}), 2, {-5, 3}));
  EXPECT_EQ(corner_roots(g), RootSequence({0, -3}));
  CohomologyTable zero(1, {0, 2}, {Rational(0), Rational(0)});
  EXPECT_THROW(corner_roots(zero), NotStaircase);
}
