#ifndef BOIJ_COHOMOLOGY_TABLE_HPP
#define BOIJ_COHOMOLOGY_TABLE_HPP

#include <vector>

#include "boij/betti_table.hpp"
#include "boij/rational.hpp"
#include "boij/validation.hpp"

namespace boij {

/// Closed twist interval [lo, hi].
struct Window {
  int lo = 0;
  int hi = 0;

  bool contains(int j) const { return lo <= j && j <= hi; }
  int width() const { return hi - lo + 1; }
  friend bool operator==(const Window&, const Window&) = default;
};

Window window_union(const Window& a, const Window& b);

/// Coefficients c_0..c_d of sum c_k x^k.
using Polynomial = std::vector<Rational>;

Rational evaluate(const Polynomial& p, const Rational& x);
/// lead * prod_k (x - roots[k]) in the monomial basis.
Polynomial polynomial_from_roots(const Rational& lead, const std::vector<int>& roots);

/// Cohomology table of a vector-bundle-shaped object on P^n.
///
/// Rows 0..n are stored sparsely over the finite window. Outside the window
/// the table is governed by chi: row 0 equals chi(j) above the window, row n
/// equals (-1)^n chi(j) below it, every other row is zero.
class CohomologyTable {
 public:
  CohomologyTable(int n, Window window, Polynomial chi, Entries entries = {});

  int n() const { return n_; }
  const Window& window() const { return window_; }
  const Polynomial& chi() const { return chi_; }
  const Entries& entries() const { return entries_; }

  Rational chi_at(int j) const;
  /// gamma_{i,j} for any twist, tails included.
  Rational at(int i, int j) const;

  /// Stores a nonnegative value inside the window; zero erases.
  void set(int i, int j, const Rational& value);

  /// Same table on a larger window, tail values materialized from chi.
  CohomologyTable widened(const Window& target) const;

  /// No window entries and chi identically zero.
  bool is_zero() const;

  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;

 private:
  int n_;
  Window window_;
  Polynomial chi_;
  Entries entries_;
};

Rational chi_eval(const CohomologyTable& t, int j);

/// Equal as infinite tables: same n and chi, same values on the union window.
bool equivalent(const CohomologyTable& a, const CohomologyTable& b);

CohomologyTable add_tables(const CohomologyTable& a, const CohomologyTable& b);
CohomologyTable scale(const CohomologyTable& t, const Rational& c);
CohomologyTable subtract_checked(const CohomologyTable& a, const CohomologyTable& b);
ValidationReport validate(const CohomologyTable& t);

}  // namespace boij

#endif  // BOIJ_COHOMOLOGY_TABLE_HPP
