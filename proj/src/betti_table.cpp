#include "boij/betti_table.hpp"

#include <limits>
#include <sstream>

#include "boij/errors.hpp"

namespace boij {

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Shape: return "shape";
    case ViolationKind::Positivity: return "positivity";
    case ViolationKind::Euler: return "euler";
    case ViolationKind::Tail: return "tail";
    case ViolationKind::InteriorRow: return "interior-row";
  }
  return "unknown";
}

std::string ValidationReport::str() const {
  std::ostringstream os;
  for (const auto& v : violations) {
    os << to_string(v.kind) << " (" << v.i << "," << v.j << "): " << v.message << "\n";
  }
  return os.str();
}

BettiTable::BettiTable(int vars) : vars_(vars) {
  if (vars < 1) throw InvalidArgument("vars must be positive, got " + std::to_string(vars));
}

BettiTable::BettiTable(int vars, Entries entries) : vars_(vars), entries_(std::move(entries)) {}

Rational BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Rational() : it->second;
}

void BettiTable::set(int i, int j, const Rational& value) {
  if (value.sign() < 0) throw NegativeEntry(i, j, value.str());
  if (value.is_zero()) {
    entries_.erase({i, j});
  } else {
    entries_[{i, j}] = value;
  }
}

std::optional<int> BettiTable::first_column() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.begin()->first.i;
}

std::optional<int> BettiTable::last_column() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.rbegin()->first.i;
}

std::optional<int> BettiTable::min_degree(int i) const {
  auto it = entries_.lower_bound({i, std::numeric_limits<int>::min()});
  if (it == entries_.end() || it->first.i != i) return std::nullopt;
  return it->first.j;
}

BettiTable add_tables(const BettiTable& a, const BettiTable& b) {
  if (a.vars() != b.vars()) {
    throw DimensionMismatch("vars " + std::to_string(a.vars()) + " vs " + std::to_string(b.vars()));
  }
  Entries out = a.entries();
  for (const auto& [cell, v] : b.entries()) out[cell] += v;
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return BettiTable(a.vars(), std::move(out));
}

BettiTable scale(const BettiTable& t, const Rational& c) {
  if (c.sign() < 0) throw InvalidArgument("scale factor must be nonnegative, got " + c.str());
  if (c.is_zero()) return BettiTable(t.vars());
  Entries out;
  for (const auto& [cell, v] : t.entries()) out.emplace(cell, v * c);
  return BettiTable(t.vars(), std::move(out));
}

BettiTable subtract_checked(const BettiTable& a, const BettiTable& b) {
  if (a.vars() != b.vars()) {
    throw DimensionMismatch("vars " + std::to_string(a.vars()) + " vs " + std::to_string(b.vars()));
  }
  Entries out = a.entries();
  for (const auto& [cell, v] : b.entries()) {
    Rational d = out[cell] - v;
    if (d.sign() < 0) throw NegativeEntry(cell.i, cell.j, d.str());
    if (d.is_zero()) {
      out.erase(cell);
    } else {
      out[cell] = d;
    }
  }
  return BettiTable(a.vars(), std::move(out));
}

ValidationReport validate(const BettiTable& t) {
  ValidationReport report;
  if (t.vars() < 1) {
    report.violations.push_back({ViolationKind::Shape, 0, 0, "vars must be positive"});
  }
  for (const auto& [cell, v] : t.entries()) {
    if (v.sign() <= 0) {
      report.violations.push_back({ViolationKind::Positivity, cell.i, cell.j, "stored value " + v.str()});
    }
  }
  return report;
}

}  // namespace boij
