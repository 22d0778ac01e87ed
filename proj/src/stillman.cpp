#include "boij/stillman.hpp"

#include <omp.h>

#include <algorithm>
#include <optional>
#include <sstream>

#include "boij/errors.hpp"

namespace boij {

void StillmanParams::check() const {
  if (e < 1) throw InvalidArgument("e must be >= 1");
  if (r < 2) throw InvalidArgument("r must be >= 2");
  if (p < 0) throw InvalidArgument("p must be >= 0");
}

DegreeSequence stillman_sequence(const StillmanParams& params) {
  params.check();
  const int n = params.codim();
  std::vector<int> degrees{0, params.e};
  for (int i = 2; i <= n; ++i) degrees.push_back(params.e * (params.p + i));
  return DegreeSequence(n, std::move(degrees));
}

PureDiagram stillman_diagram(const StillmanParams& params) {
  PureDiagram d = hk_normalized(stillman_sequence(params));
  for (std::size_t i = 0; i < d.values().size(); ++i) {
    if (!d.values()[i].is_integer()) {
      throw IntegralityViolation("e=" + std::to_string(params.e) + " r=" + std::to_string(params.r) +
                                 " p=" + std::to_string(params.p) + ": beta_" + std::to_string(i) + " = " +
                                 d.values()[i].str());
    }
  }
  return d;
}

ObstructionVerdict realizability_obstruction(const PureDiagram& d, int r) {
  if (d.values().front() != Rational(1)) throw InvalidArgument("diagram must be normalized with beta_0 = 1");
  int codim = d.sequence().length() - 1;
  if (codim > r) {
    return {Realizability::NotRealizableAsCyclic, codim, r,
            "codim " + std::to_string(codim) + " > " + std::to_string(r) + " generators"};
  }
  return {Realizability::Inconclusive, codim, r, "codim " + std::to_string(codim) + " <= " + std::to_string(r)};
}

namespace {

ScanRow scan_row(int e, int r, int p) {
  StillmanParams params{e, r, p};
  DegreeSequence seq = stillman_sequence(params);
  PureDiagram diagram = hk_normalized(seq);
  bool integral = std::all_of(diagram.values().begin(), diagram.values().end(),
                              [](const Rational& v) { return v.is_integer(); });
  ObstructionVerdict verdict = realizability_obstruction(diagram, r);
  return {p, std::move(seq), std::move(diagram), integral, std::move(verdict)};
}

}  // namespace

std::vector<ScanRow> scan(int e, int r, int p_max) {
  if (p_max < 0) throw InvalidArgument("p_max must be >= 0");
  StillmanParams{e, r, 0}.check();
  std::vector<std::optional<ScanRow>> slots(static_cast<std::size_t>(p_max) + 1);
  // Later p are more expensive; dynamic scheduling balances the tail.
#pragma omp parallel for schedule(dynamic, 1)
  for (int p = 0; p <= p_max; ++p) slots[static_cast<std::size_t>(p)] = scan_row(e, r, p);
  std::vector<ScanRow> rows;
  rows.reserve(slots.size());
  for (auto& s : slots) rows.push_back(std::move(*s));
  return rows;
}

std::vector<ScanRow> scan_serial(int e, int r, int p_max) {
  if (p_max < 0) throw InvalidArgument("p_max must be >= 0");
  StillmanParams{e, r, 0}.check();
  std::vector<ScanRow> rows;
  for (int p = 0; p <= p_max; ++p) rows.push_back(scan_row(e, r, p));
  return rows;
}

std::string format_scan_tsv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "p\tdegrees\tvalues\tintegral\tcodim\tobstruction\n";
  for (const auto& row : rows) {
    os << row.p << "\t" << row.sequence.str() << "\t";
    for (std::size_t k = 0; k < row.diagram.values().size(); ++k) os << (k ? "," : "") << row.diagram.values()[k];
    os << "\t" << (row.integral ? "Y" : "N") << "\t" << row.obstruction.codim << "\t"
       << (row.obstruction.verdict == Realizability::NotRealizableAsCyclic ? "NotRealizableAsCyclic" : "Inconclusive")
       << "\n";
  }
  return os.str();
}

}  // namespace boij
