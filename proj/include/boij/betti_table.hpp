#ifndef BOIJ_BETTI_TABLE_HPP
#define BOIJ_BETTI_TABLE_HPP

#include <compare>
#include <map>
#include <optional>
#include <utility>

#include "boij/rational.hpp"
#include "boij/validation.hpp"

namespace boij {

/// (row-or-homological index, degree-or-twist) key of a sparse table.
struct Cell {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

using Entries = std::map<Cell, Rational>;

/// Sparse Betti table over a polynomial ring in `vars` variables.
///
/// Zero entries are never stored. Tables built through `set` or the table
/// operations keep every stored value strictly positive; the raw-entries
/// constructor accepts anything so that `validate` can report on parsed input.
class BettiTable {
 public:
  explicit BettiTable(int vars = 1);
  BettiTable(int vars, Entries entries);

  int vars() const { return vars_; }
  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  /// Value at (i, j); zero when absent.
  Rational at(int i, int j) const;
  bool contains(int i, int j) const { return entries_.count({i, j}) != 0; }

  /// Stores a nonnegative value; zero erases. Throws NegativeEntry.
  void set(int i, int j, const Rational& value);

  /// Smallest / largest homological index with an entry.
  std::optional<int> first_column() const;
  std::optional<int> last_column() const;
  /// Minimum degree present in column i.
  std::optional<int> min_degree(int i) const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int vars_;
  Entries entries_;
};

BettiTable add_tables(const BettiTable& a, const BettiTable& b);
BettiTable scale(const BettiTable& t, const Rational& c);
/// Entrywise a - b; throws NegativeEntry at the first negative difference.
BettiTable subtract_checked(const BettiTable& a, const BettiTable& b);
ValidationReport validate(const BettiTable& t);

}  // namespace boij

#endif  // BOIJ_BETTI_TABLE_HPP
