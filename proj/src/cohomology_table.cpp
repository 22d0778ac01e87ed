#include "boij/cohomology_table.hpp"

#include <algorithm>

#include "boij/errors.hpp"

namespace boij {

Window window_union(const Window& a, const Window& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Rational evaluate(const Polynomial& p, const Rational& x) {
  Rational acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial polynomial_from_roots(const Rational& lead, const std::vector<int>& roots) {
  Polynomial p{lead};
  for (int r : roots) {
    Polynomial next(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] -= p[k] * Rational(r);
    }
    p = std::move(next);
  }
  return p;
}

CohomologyTable::CohomologyTable(int n, Window window, Polynomial chi, Entries entries)
    : n_(n), window_(window), chi_(std::move(chi)), entries_(std::move(entries)) {
  if (n < 1) throw InvalidArgument("n must be positive, got " + std::to_string(n));
  if (window.lo > window.hi) {
    throw InvalidArgument("empty window [" + std::to_string(window.lo) + "," + std::to_string(window.hi) + "]");
  }
  if (chi_.size() != static_cast<std::size_t>(n) + 1) {
    throw InvalidArgument("chi needs " + std::to_string(n + 1) + " coefficients, got " + std::to_string(chi_.size()));
  }
}

Rational CohomologyTable::chi_at(int j) const { return evaluate(chi_, Rational(j)); }

Rational CohomologyTable::at(int i, int j) const {
  if (i < 0 || i > n_) return {};
  if (window_.contains(j)) {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? Rational() : it->second;
  }
  if (j > window_.hi) return i == 0 ? chi_at(j) : Rational();
  if (i != n_) return {};
  return n_ % 2 == 0 ? chi_at(j) : -chi_at(j);
}

void CohomologyTable::set(int i, int j, const Rational& value) {
  if (i < 0 || i > n_ || !window_.contains(j)) {
    throw InvalidArgument("cell (" + std::to_string(i) + "," + std::to_string(j) + ") outside the table");
  }
  if (value.sign() < 0) throw NegativeEntry(i, j, value.str());
  if (value.is_zero()) {
    entries_.erase({i, j});
  } else {
    entries_[{i, j}] = value;
  }
}

CohomologyTable CohomologyTable::widened(const Window& target) const {
  Window w = window_union(window_, target);
  if (w == window_) return *this;
  Entries out = entries_;
  for (int j = w.lo; j <= w.hi; ++j) {
    if (window_.contains(j)) continue;
    int row = j > window_.hi ? 0 : n_;
    Rational v = at(row, j);
    if (!v.is_zero()) out[{row, j}] = v;
  }
  return CohomologyTable(n_, w, chi_, std::move(out));
}

bool CohomologyTable::is_zero() const {
  return entries_.empty() && std::all_of(chi_.begin(), chi_.end(), [](const Rational& c) { return c.is_zero(); });
}

Rational chi_eval(const CohomologyTable& t, int j) { return t.chi_at(j); }

bool equivalent(const CohomologyTable& a, const CohomologyTable& b) {
  if (a.n() != b.n() || a.chi() != b.chi()) return false;
  Window w = window_union(a.window(), b.window());
  return a.widened(w).entries() == b.widened(w).entries();
}

namespace {

void require_same_n(const CohomologyTable& a, const CohomologyTable& b) {
  if (a.n() != b.n()) {
    throw DimensionMismatch("n " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
  }
}

}  // namespace

CohomologyTable add_tables(const CohomologyTable& a, const CohomologyTable& b) {
  require_same_n(a, b);
  Window w = window_union(a.window(), b.window());
  CohomologyTable wa = a.widened(w);
  CohomologyTable wb = b.widened(w);
  Entries out = wa.entries();
  for (const auto& [cell, v] : wb.entries()) out[cell] += v;
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  Polynomial chi = a.chi();
  for (std::size_t k = 0; k < chi.size(); ++k) chi[k] += b.chi()[k];
  return CohomologyTable(a.n(), w, std::move(chi), std::move(out));
}

CohomologyTable scale(const CohomologyTable& t, const Rational& c) {
  if (c.sign() < 0) throw InvalidArgument("scale factor must be nonnegative, got " + c.str());
  Polynomial chi = t.chi();
  for (auto& x : chi) x *= c;
  Entries out;
  if (!c.is_zero()) {
    for (const auto& [cell, v] : t.entries()) out.emplace(cell, v * c);
  }
  return CohomologyTable(t.n(), t.window(), std::move(chi), std::move(out));
}

CohomologyTable subtract_checked(const CohomologyTable& a, const CohomologyTable& b) {
  require_same_n(a, b);
  Window w = window_union(a.window(), b.window());
  CohomologyTable wa = a.widened(w);
  CohomologyTable wb = b.widened(w);
  Entries out = wa.entries();
  for (const auto& [cell, v] : wb.entries()) {
    Rational d = out[cell] - v;
    if (d.sign() < 0) throw NegativeEntry(cell.i, cell.j, d.str());
    if (d.is_zero()) {
      out.erase(cell);
    } else {
      out[cell] = d;
    }
  }
  Polynomial chi = a.chi();
  for (std::size_t k = 0; k < chi.size(); ++k) chi[k] -= b.chi()[k];
  return CohomologyTable(a.n(), w, std::move(chi), std::move(out));
}

ValidationReport validate(const CohomologyTable& t) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, int i, int j, std::string msg) {
    report.violations.push_back({kind, i, j, std::move(msg)});
  };
  const int n = t.n();
  const Window& w = t.window();

  for (const auto& [cell, v] : t.entries()) {
    if (cell.i < 0 || cell.i > n || !w.contains(cell.j)) {
      add(ViolationKind::Shape, cell.i, cell.j, "entry outside rows 0.." + std::to_string(n) + " x window");
      continue;
    }
    if (v.sign() <= 0) add(ViolationKind::Positivity, cell.i, cell.j, "stored value " + v.str());
    if (cell.i > 0 && cell.i < n && (cell.j == w.lo || cell.j == w.hi)) {
      add(ViolationKind::InteriorRow, cell.i, cell.j, "intermediate row touches the window edge");
    }
  }

  for (int j = w.lo; j <= w.hi; ++j) {
    Rational sum;
    for (int i = 0; i <= n; ++i) {
      Rational v = t.at(i, j);
      if (i % 2 == 0) {
        sum += v;
      } else {
        sum -= v;
      }
    }
    Rational chi = t.chi_at(j);
    if (sum != chi) add(ViolationKind::Euler, 0, j, "alternating sum " + sum.str() + " != chi " + chi.str());
  }

  for (int k = 1; k <= n + 1; ++k) {
    Rational above = t.chi_at(w.hi + k);
    if (above.sign() < 0) add(ViolationKind::Tail, 0, w.hi + k, "chi " + above.str() + " < 0 above the window");
    Rational below = t.at(n, w.lo - k);
    if (below.sign() < 0) {
      add(ViolationKind::Tail, n, w.lo - k, "(-1)^n chi " + below.str() + " < 0 below the window");
    }
  }
  if (t.chi().back().sign() < 0) add(ViolationKind::Tail, 0, 0, "negative leading coefficient of chi");
  return report;
}

}  // namespace boij
