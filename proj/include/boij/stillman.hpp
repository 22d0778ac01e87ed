#ifndef BOIJ_STILLMAN_HPP
#define BOIJ_STILLMAN_HPP

#include <string>
#include <vector>

#include "boij/pure_diagram.hpp"

namespace boij {

/// Family of pure diagrams that look like resolutions of S/I with I
/// generated by r forms of degree e (beta_0 = 1, beta_1 = r in degree e).
struct StillmanParams {
  int e = 1;
  int r = 2;
  int p = 0;

  /// Throws InvalidArgument unless e >= 1, r >= 2, p >= 0.
  void check() const;
  /// n = r + p(r-1), the number of variables and the codimension.
  int codim() const { return r + p * (r - 1); }
};

/// (0, e, e(p+2), e(p+3), ..., e(p+n)) in n = r + p(r-1) variables.
DegreeSequence stillman_sequence(const StillmanParams& params);
/// hk_normalized of the sequence; throws IntegralityViolation if any entry
/// is not an integer.
PureDiagram stillman_diagram(const StillmanParams& params);

enum class Realizability { NotRealizableAsCyclic, Inconclusive };

struct ObstructionVerdict {
  Realizability verdict;
  int codim;  // length - 1 of the diagram
  int generators;
  std::string certificate;
};

/// A cyclic module S/I with I on r generators has codimension <= r, so a
/// pure diagram with beta_0 = 1 and codimension > r cannot be its Betti table.
/// Throws InvalidArgument unless beta_0 = 1.
ObstructionVerdict realizability_obstruction(const PureDiagram& d, int r);

struct ScanRow {
  int p;
  DegreeSequence sequence;
  PureDiagram diagram;
  bool integral;
  ObstructionVerdict obstruction;
};

/// Rows for p = 0..p_max, ordered by p. Iterations run in parallel (OpenMP).
std::vector<ScanRow> scan(int e, int r, int p_max);
/// Single-threaded reference for `scan`.
std::vector<ScanRow> scan_serial(int e, int r, int p_max);

/// TSV: p, degrees, values, integral(Y/N), codim, obstruction.
std::string format_scan_tsv(const std::vector<ScanRow>& rows);

}  // namespace boij

#endif  // BOIJ_STILLMAN_HPP
