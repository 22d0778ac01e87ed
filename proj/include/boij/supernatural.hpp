#ifndef BOIJ_SUPERNATURAL_HPP
#define BOIJ_SUPERNATURAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "boij/cohomology_table.hpp"

namespace boij {

/// Strictly decreasing f_1 > ... > f_n.
class RootSequence {
 public:
  explicit RootSequence(std::vector<int> roots);
  /// Comma list, e.g. `0,-3`.
  static RootSequence parse(std::string_view text);

  int n() const { return static_cast<int>(roots_.size()); }
  const std::vector<int>& roots() const { return roots_; }
  /// f_k for k in 1..n.
  int operator[](int k) const { return roots_.at(static_cast<std::size_t>(k - 1)); }
  std::string str() const;

  friend bool operator==(const RootSequence&, const RootSequence&) = default;
  /// Lexicographic; used only for deterministic ordering.
  friend auto operator<=>(const RootSequence&, const RootSequence&) = default;

 private:
  std::vector<int> roots_;
};

/// Smallest window holding every nonzero interior entry of sigma_f plus one
/// column of each tail: [f_n - 1, f_1 + 1].
Window minimal_window(const RootSequence& f);

/// m * sigma_f: gamma_{i,j} = (m/n!) |prod_k (j - f_k)| for f_{i+1} < j < f_i.
/// Throws WindowTooSmall unless the window contains minimal_window(f).
CohomologyTable sigma(const RootSequence& f, const Rational& m, const Window& window);

/// O(a) on P^n over the window.
CohomologyTable line_bundle(int n, int a, const Window& window);

/// Minimal root sequence of the chain carried by a table:
/// f_i = min(min support of row i-1, f_{i-1}) - 1. Throws NotStaircase when
/// row 0 has no support in the window.
RootSequence corner_roots(const CohomologyTable& g);

/// Termwise f <= g (both length n).
bool termwise_leq(const RootSequence& f, const RootSequence& g);

}  // namespace boij

#endif  // BOIJ_SUPERNATURAL_HPP
