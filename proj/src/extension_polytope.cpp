#include "boij/extension_polytope.hpp"

#include <omp.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "boij/coh_decomposition.hpp"
#include "boij/errors.hpp"

namespace boij {

namespace {

void require_same_n(const CohomologyTable& a, const CohomologyTable& b) {
  if (a.n() != b.n()) throw DimensionMismatch("n " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
}

long long to_ll(const BigInt& v) {
  if (!v.fits_slong_p()) throw BudgetExceeded("cancellation bound " + v.get_str() + " does not fit");
  return v.get_si();
}

std::string cell_text(const Cell& c) { return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")"; }

}  // namespace

std::map<Cell, long long> cancellation_bounds(const CohomologyTable& a, const CohomologyTable& b) {
  require_same_n(a, b);
  Window w = window_union(a.window(), b.window());
  std::map<Cell, long long> bounds;
  for (int i = 0; i < a.n(); ++i) {
    for (int j = w.lo; j <= w.hi; ++j) {
      Rational bound = std::min(b.at(i, j), a.at(i + 1, j));
      if (bound.sign() <= 0) continue;
      long long v = to_ll(bound.floor());
      if (v > 0) bounds[{i, j}] = v;
    }
  }
  return bounds;
}

CohomologyTable apply_cancellation(const CohomologyTable& a, const CohomologyTable& b, const CancellationPattern& c) {
  auto bounds = cancellation_bounds(a, b);
  CohomologyTable e = add_tables(a, b);
  for (const auto& [cell, value] : c) {
    if (value == 0) continue;
    auto it = bounds.find(cell);
    long long bound = it == bounds.end() ? 0 : it->second;
    if (value < 0 || value > bound) {
      throw BoundViolation(cell.i, cell.j, std::to_string(value) + " outside [0," + std::to_string(bound) + "]");
    }
    e.set(cell.i, cell.j, e.at(cell.i, cell.j) - Rational(value));
    e.set(cell.i + 1, cell.j, e.at(cell.i + 1, cell.j) - Rational(value));
  }
  return e;
}

std::string PatternCoordinate::label() const {
  std::string s;
  for (std::size_t k = 0; k < cells.size(); ++k) s += (k ? "+" : "") + cell_text(cells[k]);
  return s;
}

CancellationPattern PolytopeReport::pattern(const LatticePoint& params) const {
  CancellationPattern c;
  for (std::size_t k = 0; k < coordinates.size(); ++k) {
    for (const auto& cell : coordinates[k].cells) c[cell] = params[k];
  }
  return c;
}

std::size_t PolytopeReport::feasible_count() const {
  return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [](const auto& p) { return p.feasible; }));
}

namespace {

std::vector<PatternCoordinate> make_coordinates(const std::map<Cell, long long>& bounds, int n,
                                                const PolytopeOptions& opts) {
  std::vector<PatternCoordinate> coords;
  if (opts.mode == PolytopeMode::Full) {
    for (const auto& [cell, bound] : bounds) coords.push_back({{cell}, bound});
    return coords;
  }
  std::set<Cell> seen;
  for (const auto& [cell, bound] : bounds) {
    if (seen.count(cell)) continue;
    Cell mirror{n - 1 - cell.i, -cell.j - n - 1 + opts.serre_shift};
    std::vector<Cell> orbit{cell};
    if (mirror != cell) orbit.push_back(mirror);
    std::sort(orbit.begin(), orbit.end());
    long long b = bound;
    for (const auto& m : orbit) {
      seen.insert(m);
      auto it = bounds.find(m);
      b = std::min(b, it == bounds.end() ? 0LL : it->second);
    }
    if (b > 0) coords.push_back({orbit, b});
  }
  std::sort(coords.begin(), coords.end(),
            [](const PatternCoordinate& x, const PatternCoordinate& y) { return x.cells.front() < y.cells.front(); });
  return coords;
}

struct Setup {
  std::vector<PatternCoordinate> coords;
  long long total = 1;
  CohomologyTable split;
  std::vector<Rational> split_d2;  // P^1 only
};

Setup prepare(const CohomologyTable& a, const CohomologyTable& b, const PolytopeOptions& opts) {
  require_same_n(a, b);
  Setup s{make_coordinates(cancellation_bounds(a, b), a.n(), opts), 1, add_tables(a, b), {}};
  for (const auto& c : s.coords) {
    if (s.total > opts.max_points / (c.bound + 1)) {
      throw BudgetExceeded("pattern box exceeds " + std::to_string(opts.max_points) + " points");
    }
    s.total *= c.bound + 1;
  }
  if (s.total > opts.max_points) throw BudgetExceeded("pattern box exceeds " + std::to_string(opts.max_points) + " points");
  if (a.n() == 1) s.split_d2 = p1_second_differences(s.split);
  return s;
}

LatticePoint unrank(long long index, const std::vector<PatternCoordinate>& coords) {
  LatticePoint params(coords.size());
  for (std::size_t k = coords.size(); k-- > 0;) {
    long long radix = coords[k].bound + 1;
    params[k] = index % radix;
    index /= radix;
  }
  return params;
}

PatternPoint evaluate_point(const CohomologyTable& a, const CohomologyTable& b, const Setup& s, long long index) {
  PatternPoint pt;
  pt.params = unrank(index, s.coords);
  CancellationPattern c;
  for (std::size_t k = 0; k < s.coords.size(); ++k) {
    for (const auto& cell : s.coords[k].cells) c[cell] = pt.params[k];
  }
  CohomologyTable e = apply_cancellation(a, b, c);
  const bool p1 = a.n() == 1;
  std::vector<Rational> d2;
  if (p1) d2 = p1_second_differences(e);

  try {
    decompose_coh(e);
    pt.feasible = true;
  } catch (const Error& err) {
    pt.feasible = false;
    if (!p1) pt.binding.push_back(err.code());
  }

  if (pt.feasible) {
    for (std::size_t k = 0; k < s.coords.size(); ++k) {
      if (pt.params[k] == 0) pt.binding.push_back(s.coords[k].label() + "=0");
      if (pt.params[k] == s.coords[k].bound) pt.binding.push_back(s.coords[k].label() + "=ub");
    }
    for (std::size_t k = 0; p1 && k < d2.size(); ++k) {
      if (d2[k].is_zero() && s.split_d2[k].sign() > 0) {
        pt.binding.push_back("d2@" + std::to_string(e.window().lo + static_cast<int>(k)) + "=0");
      }
    }
    pt.table = std::move(e);
  } else if (p1) {
    for (std::size_t k = 0; k < d2.size(); ++k) {
      if (d2[k].sign() < 0) pt.binding.push_back("d2@" + std::to_string(e.window().lo + static_cast<int>(k)) + "<0");
    }
    if (pt.binding.empty()) pt.binding.push_back("NotInCone");
  }
  return pt;
}

std::vector<LatticePoint> feasible_vertices(const std::vector<PatternPoint>& points) {
  std::vector<LatticePoint> feasible;
  for (const auto& p : points) {
    if (p.feasible) feasible.push_back(p.params);
  }
  std::vector<LatticePoint> out;
  if (feasible.size() == 1) return feasible;
  for (std::size_t idx : hull_vertices(feasible)) out.push_back(feasible[idx]);
  return out;
}

}  // namespace

PolytopeReport enumerate_patterns(const CohomologyTable& a, const CohomologyTable& b, const PolytopeOptions& opts) {
  Setup s = prepare(a, b, opts);
  PolytopeReport report{s.coords, std::vector<PatternPoint>(static_cast<std::size_t>(s.total)), {}};
#pragma omp parallel for schedule(dynamic, 16)
  for (long long idx = 0; idx < s.total; ++idx) {
    report.points[static_cast<std::size_t>(idx)] = evaluate_point(a, b, s, idx);
  }
  report.vertices = feasible_vertices(report.points);
  return report;
}

PolytopeReport enumerate_patterns_serial(const CohomologyTable& a, const CohomologyTable& b,
                                         const PolytopeOptions& opts) {
  Setup s = prepare(a, b, opts);
  PolytopeReport report{s.coords, {}, {}};
  report.points.reserve(static_cast<std::size_t>(s.total));
  for (long long idx = 0; idx < s.total; ++idx) report.points.push_back(evaluate_point(a, b, s, idx));
  report.vertices = feasible_vertices(report.points);
  return report;
}

std::vector<std::pair<CancellationPattern, CohomologyTable>> feasible_set(const CohomologyTable& a,
                                                                          const CohomologyTable& b,
                                                                          const PolytopeOptions& opts) {
  PolytopeReport report = enumerate_patterns(a, b, opts);
  std::vector<std::pair<CancellationPattern, CohomologyTable>> out;
  for (const auto& p : report.points) {
    if (p.feasible) out.emplace_back(report.pattern(p.params), *p.table);
  }
  return out;
}

std::string format_polytope_tsv(const PolytopeReport& report) {
  std::ostringstream os;
  os << "# coordinates:";
  for (const auto& c : report.coordinates) os << " " << c.label() << "<=" << c.bound;
  os << "\n";
  os << "pattern\tfeasible\tbinding\n";
  auto params_text = [](const LatticePoint& p) {
    std::string s;
    for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
    return s;
  };
  for (const auto& p : report.points) {
    os << params_text(p.params) << "\t" << (p.feasible ? "Y" : "N") << "\t";
    for (std::size_t k = 0; k < p.binding.size(); ++k) os << (k ? ";" : "") << p.binding[k];
    os << "\n";
  }
  os << "# feasible: " << report.feasible_count() << " of " << report.points.size() << "\n";
  os << "# vertices:";
  for (const auto& v : report.vertices) os << " (" << params_text(v) << ")";
  os << "\n";
  return os.str();
}

}  // namespace boij
