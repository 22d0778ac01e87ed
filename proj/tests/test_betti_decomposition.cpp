#include <gtest/gtest.h>

#include "boij/betti_decomposition.hpp"
#include "boij/errors.hpp"
#include "boij/table_io.hpp"

using namespace boij;

namespace {

BettiTable table(int vars, std::initializer_list<std::tuple<int, int, int>> cells) {
  BettiTable t(vars);
  for (auto [i, j, v] : cells) t.set(i, j, v);
  return t;
}

std::vector<Rational> rats(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

void expect_term(const BettiTerm& t, Rational c, int start, std::vector<int> deg, std::vector<Rational> values) {
  EXPECT_EQ(t.coefficient, c);
  EXPECT_EQ(t.diagram.sequence().start(), start);
  EXPECT_EQ(t.diagram.sequence().degrees(), deg);
  EXPECT_EQ(t.diagram.values(), values);
}

}  // namespace

TEST(BettiDecomposition, KoszulOfXY2) {
  BettiTable b = table(2, {{0, 0, 1}, {1, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  auto dec = decompose(b);
  ASSERT_EQ(dec.terms.size(), 2u);
  expect_term(dec.terms[0], Rational(1, 3), 0, {0, 1, 3}, rats({2, 3, 1}));
  expect_term(dec.terms[1], Rational(1, 3), 0, {0, 2, 3}, rats({1, 3, 2}));
  EXPECT_EQ(recompose(dec), b);
  EXPECT_TRUE(is_member(b));
}

TEST(BettiDecomposition, NonCohenMacaulay) {
  BettiTable b = table(3, {{0, 0, 1}, {1, 2, 4}, {2, 3, 4}, {3, 4, 1}});
  auto dec = decompose(b);
  ASSERT_EQ(dec.terms.size(), 2u);
  expect_term(dec.terms[0], Rational(1, 3), 0, {0, 2, 3, 4}, rats({1, 6, 8, 3}));
  expect_term(dec.terms[1], Rational(2, 3), 0, {0, 2, 3}, rats({1, 3, 2}));
  EXPECT_EQ(recompose(dec), b);
}

TEST(BettiDecomposition, ComplexWithShiftedWindow) {
  BettiTable b = table(2, {{0, 0, 1}, {1, 1, 2}, {2, 3, 2}, {3, 4, 1}});
  auto dec = decompose(b);
  ASSERT_EQ(dec.terms.size(), 2u);
  expect_term(dec.terms[0], Rational(1, 2), 0, {0, 1, 3}, rats({2, 3, 1}));
  expect_term(dec.terms[1], Rational(1, 2), 1, {1, 3, 4}, rats({1, 3, 2}));
  EXPECT_EQ(recompose(dec), b);
  auto chain = dec.chain();
  ASSERT_EQ(chain.size(), 2u);
  EXPECT_NE(compare(chain[0], chain[1]), Order::Incomparable);
}

TEST(BettiDecomposition, NormalizedCoefficientsScaleBack) {
  BettiTable b = table(2, {{0, 0, 1}, {1, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  auto dec = decompose(b, Normalization::Normalized);
  EXPECT_EQ(dec.terms[0].coefficient, Rational(2, 3));
  EXPECT_EQ(dec.terms[0].diagram.values()[0], Rational(1));
  EXPECT_EQ(recompose(dec), b);
}

TEST(BettiDecomposition, EmptyTableHasNoTerms) {
  auto dec = decompose(BettiTable(2));
  EXPECT_TRUE(dec.terms.empty());
}

TEST(BettiDecomposition, RejectsTablesOutsideCone) {
  // Strand blocked: column 1 has an entry below column 0's minimum.
  BettiTable blocked = table(2, {{0, 2, 1}, {1, 1, 1}});
  EXPECT_THROW(decompose(blocked), NotInCone);
  EXPECT_FALSE(is_member(blocked));
  // A single pure diagram is a member.
  EXPECT_TRUE(is_member(table(2, {{0, 0, 1}, {1, 1, 1}})));
  BettiTable negative(2, Entries{{{0, 0}, Rational(-1)}});
  EXPECT_THROW(decompose(negative), Error);
}

TEST(BettiDecomposition, MinStrandAndPeel) {
  BettiTable b = table(2, {{0, 0, 1}, {1, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  DegreeSequence d = min_strand(b);
  EXPECT_EQ(d.degrees(), (std::vector<int>{0, 1, 3}));
  BettiPeel p = peel(b, d);
  EXPECT_EQ(p.q, Rational(2, 3));
  EXPECT_EQ(p.remainder.at(1, 1), Rational(0));
  EXPECT_THROW(peel(b, DegreeSequence(2, {0, 5})), InvalidArgument);
}

TEST(BettiDecomposition, FormatTerms) {
  BettiTable b = table(2, {{0, 0, 1}, {1, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  EXPECT_EQ(format_terms(decompose(b)),
            "term 1/3 window=0 degrees=0,1,3 values=2,3,1\n"
            "term 1/3 window=0 degrees=0,2,3 values=1,3,2\n");
}
