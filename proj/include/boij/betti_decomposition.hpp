#ifndef BOIJ_BETTI_DECOMPOSITION_HPP
#define BOIJ_BETTI_DECOMPOSITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "boij/betti_table.hpp"
#include "boij/pure_diagram.hpp"

namespace boij {

/// How coefficients are reported: against the smallest integral diagram of
/// each ray, or against the diagram with first entry 1.
enum class Normalization { SmallestIntegral, Normalized };

struct BettiTerm {
  Rational coefficient;
  PureDiagram diagram;
  friend bool operator==(const BettiTerm&, const BettiTerm&) = default;
};

struct BettiDecomposition {
  int vars = 1;
  std::vector<BettiTerm> terms;  // peel order

  /// Degree sequences sorted ascending in the termwise order.
  std::vector<DegreeSequence> chain() const;
  friend bool operator==(const BettiDecomposition&, const BettiDecomposition&) = default;
};

/// Result of walking the top strand. `blocked_column` is set when a nonempty
/// column inside the length bound had min degree <= the previous strand degree.
struct StrandScan {
  DegreeSequence strand;
  std::optional<int> blocked_column;
};

StrandScan scan_strand(const BettiTable& b);
/// Top strand starting at the first nonempty column: min degree per column,
/// extended while columns are nonempty, increasing and within vars+1 terms.
/// Throws InvalidArgument on the zero table.
DegreeSequence min_strand(const BettiTable& b);

struct BettiPeel {
  Rational q;  // against hk_normalized(d)
  BettiTable remainder;
};

/// q = min_i b(i,d_i) / pi_i; remainder = b - q*pi.
BettiPeel peel(const BettiTable& b, const DegreeSequence& d);

/// Greedy chain decomposition. Throws NotInCone.
BettiDecomposition decompose(const BettiTable& b, Normalization norm = Normalization::SmallestIntegral);
BettiTable recompose(const BettiDecomposition& dec);
bool is_member(const BettiTable& b);

/// `term <coeff> window=<a> degrees=<...> values=<...>` lines.
std::string format_terms(const BettiDecomposition& dec);

}  // namespace boij

#endif  // BOIJ_BETTI_DECOMPOSITION_HPP
