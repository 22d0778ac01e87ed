#ifndef BOIJ_PURE_DIAGRAM_HPP
#define BOIJ_PURE_DIAGRAM_HPP

#include <string>
#include <string_view>
#include <vector>

#include "boij/betti_table.hpp"
#include "boij/rational.hpp"

namespace boij {

/// Strictly increasing degrees d_a < ... < d_{a+l} placed at homological
/// positions a..a+l. Positions after the end are implicitly +infinity,
/// positions before the window start are implicitly -infinity.
class DegreeSequence {
 public:
  /// Throws InvalidArgument unless vars >= 1, 1 <= size <= vars+1 and the
  /// degrees are strictly increasing.
  DegreeSequence(int vars, std::vector<int> degrees, int window_start = 0);

  /// `a:[d0,d1,...]` or `d0,d1,...` (window start 0).
  static DegreeSequence parse(std::string_view text, int vars);

  int vars() const { return vars_; }
  int start() const { return start_; }
  int end() const { return start_ + static_cast<int>(degrees_.size()) - 1; }
  int length() const { return static_cast<int>(degrees_.size()); }
  const std::vector<int>& degrees() const { return degrees_; }
  /// Degree at absolute homological position `pos` (must be in [start, end]).
  int at(int pos) const { return degrees_.at(static_cast<std::size_t>(pos - start_)); }

  /// Comma list of degrees, prefixed with `a:[...]` when a != 0.
  std::string str() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  int vars_;
  int start_;
  std::vector<int> degrees_;
};

class PureDiagram {
 public:
  PureDiagram(DegreeSequence sequence, std::vector<Rational> values);

  const DegreeSequence& sequence() const { return sequence_; }
  const std::vector<Rational>& values() const { return values_; }

  BettiTable to_table() const;
  /// sum_i (-1)^i beta_i d_i^k, indexed from the window start.
  Rational moment(int k) const;

  friend bool operator==(const PureDiagram&, const PureDiagram&) = default;

 private:
  DegreeSequence sequence_;
  std::vector<Rational> values_;
};

/// Herzog-Kuehl pure diagram with first entry 1:
/// beta_i = prod_{j!=a} |d_j - d_a| / prod_{j!=i} |d_j - d_i|.
PureDiagram hk_normalized(const DegreeSequence& d);

/// Positive scalar lambda making every entry an integer with set-gcd 1.
Rational integral_scale(const PureDiagram& p);
PureDiagram smallest_integral(const PureDiagram& p);
PureDiagram scale(const PureDiagram& p, const Rational& c);

enum class Order { LessEq, GreaterEq, Equal, Incomparable };

std::string to_string(Order o);

/// Termwise order after aligning both sequences by absolute position.
/// `LessEq` means d <= e and d != e. Throws DimensionMismatch on differing vars.
Order compare(const DegreeSequence& d, const DegreeSequence& e);

/// Consecutive elements compare LessEq or Equal.
bool is_chain(const std::vector<DegreeSequence>& seqs);

}  // namespace boij

#endif  // BOIJ_PURE_DIAGRAM_HPP
