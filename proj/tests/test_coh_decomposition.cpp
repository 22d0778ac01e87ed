#include <gtest/gtest.h>

#include "boij/coh_decomposition.hpp"
#include "boij/errors.hpp"
#include "boij/table_io.hpp"

using namespace boij;

namespace {

CohomologyTable pp2_e() {
  return parse_cohomology(
      "coh-table v1\nn 2\nwindow -5 3\nchi 0 7/2 3/2\n"
      "entry 2 -5 20\nentry 2 -4 10\nentry 2 -3 3\nentry 1 -2 1\nentry 1 -1 2\n"
      "entry 0 1 5\nentry 0 2 13\nentry 0 3 24\n");
}

CohomologyTable p1_table(std::vector<std::pair<int, int>> terms, Window w = {-6, 4}) {
  CohomologyTable t(1, w, {Rational(0), Rational(0)});
  for (auto [m, f] : terms) t = add_tables(t, sigma(RootSequence({f}), m, w));
  return t;
}

}  // namespace

TEST(CohDecomposition, PlaneBundle) {
  CohomologyTable e = pp2_e();
  auto dec = decompose_coh(e);
  ASSERT_EQ(dec.terms.size(), 2u);
  EXPECT_EQ(dec.terms[0], (CohTerm{1, RootSequence({0, -3})}));
  EXPECT_EQ(dec.terms[1], (CohTerm{2, RootSequence({0, -2})}));
  CohomologyTable back = recompose(dec, e.window());
  EXPECT_TRUE(equivalent(back, e));
  for (int j = -5; j <= 3; ++j)
    for (int i = 0; i <= 2; ++i) EXPECT_EQ(back.at(i, j), e.at(i, j)) << i << "," << j;
  EXPECT_EQ(format_terms(dec), "term 1 roots=0,-3\nterm 2 roots=0,-2\n");
}

TEST(CohDecomposition, PeelFirstCorner) {
  CohPeel p = peel_supernatural(pp2_e(), RootSequence({0, -3}));
  EXPECT_EQ(p.q, Rational(1));
  EXPECT_EQ(p.remainder.at(1, -2), Rational(0));
  EXPECT_THROW(peel_supernatural(pp2_e(), RootSequence({3, 2})), Error);
}

TEST(CohDecomposition, LineSplitTable) {
  CohomologyTable split = p1_table({{5, -3}, {5, 1}});
  auto dec = decompose_coh(split);
  ASSERT_EQ(dec.terms.size(), 2u);
  EXPECT_EQ(dec.terms[0], (CohTerm{5, RootSequence({-3})}));
  EXPECT_EQ(dec.terms[1], (CohTerm{5, RootSequence({1})}));
  EXPECT_EQ(p1_oracle(split), dec);
}

TEST(CohDecomposition, OracleSecondDifferences) {
  CohomologyTable t = p1_table({{2, 0}, {3, 2}});
  auto d2 = p1_second_differences(t);
  Rational total;
  for (const auto& v : d2) {
    EXPECT_GE(v, Rational(0));
    total += v;
  }
  // Each sigma_(f) with multiplier m contributes 2m to the total.
  EXPECT_EQ(total, Rational(10));
}

TEST(CohDecomposition, RejectsNonMembers) {
  // Row 1 entry that cannot be matched: h^1 = 1 at a single twist with chi
  // forced to zero makes a negative second difference.
  CohomologyTable bad(1, {-2, 2}, {Rational(0), Rational(0)});
  bad.set(1, 0, 1);
  bad.set(0, 0, 1);
  EXPECT_THROW(decompose_coh(bad), Error);
  EXPECT_FALSE(is_member(bad));
  EXPECT_THROW(p1_oracle(bad), NotInCone);
  EXPECT_THROW(p1_oracle(pp2_e()), DimensionMismatch);
}

TEST(CohDecomposition, ZeroTable) {
  CohomologyTable zero(2, {0, 3}, {Rational(0), Rational(0), Rational(0)});
  EXPECT_TRUE(decompose_coh(zero).terms.empty());
  EXPECT_TRUE(is_member(zero));
}

TEST(CohDecomposition, IntegralMultiple) {
  EXPECT_EQ(integral_multiple(RootSequence({0, -3}), {-5, 3}), Rational(1));
  EXPECT_EQ(integral_multiple(RootSequence({0, -2}), {-5, 3}), Rational(2));
}
