#ifndef BOIJ_EXTENSION_POLYTOPE_HPP
#define BOIJ_EXTENSION_POLYTOPE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boij/cohomology_table.hpp"
#include "boij/hull.hpp"

namespace boij {

/// c_{i,j}: rank of the connecting map H^i(B(j)) -> H^{i+1}(A(j)).
using CancellationPattern = std::map<Cell, long long>;

/// floor(min(gamma_i(B)(j), gamma_{i+1}(A)(j))) for i = 0..n-1 over the
/// union window; only positive bounds are listed.
std::map<Cell, long long> cancellation_bounds(const CohomologyTable& a, const CohomologyTable& b);

/// gamma_i(E)(j) = gamma_i(A)(j) + gamma_i(B)(j) - c_{i-1,j} - c_{i,j};
/// chi_E = chi_A + chi_B. Throws BoundViolation.
CohomologyTable apply_cancellation(const CohomologyTable& a, const CohomologyTable& b, const CancellationPattern& c);

enum class PolytopeMode { Full, SerreSymmetric };

struct PolytopeOptions {
  PolytopeMode mode = PolytopeMode::Full;
  long long max_points = 1'000'000;
  /// Serre pairing (i,j) <-> (n-1-i, -j-n-1+shift).
  int serre_shift = 0;
};

/// One free parameter: a set of cells sharing a value, with its upper bound.
struct PatternCoordinate {
  std::vector<Cell> cells;
  long long bound;
  /// `(i,j)` cells joined by `+`.
  std::string label() const;
};

struct PatternPoint {
  LatticePoint params;
  bool feasible = false;
  /// Tight constraints for feasible points, failure reasons otherwise.
  std::vector<std::string> binding;
  std::optional<CohomologyTable> table;  // kept for feasible points
};

struct PolytopeReport {
  std::vector<PatternCoordinate> coordinates;
  std::vector<PatternPoint> points;  // lexicographic in params
  std::vector<LatticePoint> vertices;  // of conv(feasible params)

  CancellationPattern pattern(const LatticePoint& params) const;
  std::size_t feasible_count() const;
};

/// Enumerates every integer pattern in the bound box (or its Serre-symmetric
/// slice), tests cone membership of each resulting table in parallel, and
/// computes the vertices of the feasible point set. Throws BudgetExceeded.
PolytopeReport enumerate_patterns(const CohomologyTable& a, const CohomologyTable& b, const PolytopeOptions& opts);
/// Single-threaded reference for `enumerate_patterns`.
PolytopeReport enumerate_patterns_serial(const CohomologyTable& a, const CohomologyTable& b,
                                         const PolytopeOptions& opts);

/// Feasible (pattern, table) pairs sorted lexicographically by pattern.
std::vector<std::pair<CancellationPattern, CohomologyTable>> feasible_set(const CohomologyTable& a,
                                                                          const CohomologyTable& b,
                                                                          const PolytopeOptions& opts);

/// Header comments naming the coordinates, one TSV row per point
/// (pattern, feasible Y/N, binding constraints), then the vertex list.
std::string format_polytope_tsv(const PolytopeReport& report);

}  // namespace boij

#endif  // BOIJ_EXTENSION_POLYTOPE_HPP
