#include "boij/pretty.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <vector>

namespace boij {

namespace {

using Grid = std::vector<std::vector<std::string>>;

// First column is the label column; first row is the header.
std::string render(const Grid& grid) {
  std::vector<std::size_t> width;
  for (const auto& row : grid) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += ' ';
      std::string pad(width[c] - row[c].size(), ' ');
      line += c == 0 ? row[c] + pad : pad + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

std::string cell_text(const Rational& v) { return v.is_zero() ? "-" : v.str(); }

}  // namespace

std::string pretty(const BettiTable& t, const GridRange& range) {
  Window cols{0, 0};
  Window rows{0, 0};
  if (!t.empty()) {
    cols = {t.entries().begin()->first.i, t.entries().rbegin()->first.i};
    int lo = std::numeric_limits<int>::max();
    int hi = std::numeric_limits<int>::min();
    for (const auto& [cell, v] : t.entries()) {
      lo = std::min(lo, cell.j - cell.i);
      hi = std::max(hi, cell.j - cell.i);
    }
    rows = {lo, hi};
  }
  if (range.columns) cols = *range.columns;
  if (range.rows) rows = *range.rows;

  Grid grid;
  std::vector<std::string> header{""};
  for (int i = cols.lo; i <= cols.hi; ++i) header.push_back(std::to_string(i));
  grid.push_back(header);
  for (int k = rows.lo; k <= rows.hi; ++k) {
    std::vector<std::string> row{std::to_string(k) + ":"};
    for (int i = cols.lo; i <= cols.hi; ++i) row.push_back(cell_text(t.at(i, i + k)));
    grid.push_back(std::move(row));
  }
  return render(grid);
}

std::string pretty(const CohomologyTable& t, const GridRange& range) {
  const int n = t.n();
  Window cols = range.columns.value_or(Window{t.window().lo, t.window().hi + n});
  Window rows = range.rows.value_or(Window{0, n});

  Grid grid;
  std::vector<std::string> header{"j"};
  for (int c = cols.lo; c <= cols.hi; ++c) header.push_back(std::to_string(c));
  grid.push_back(header);
  for (int i = rows.hi; i >= rows.lo; --i) {
    std::vector<std::string> row{"h^" + std::to_string(i) + ":"};
    for (int c = cols.lo; c <= cols.hi; ++c) row.push_back(cell_text(t.at(i, c - i)));
    grid.push_back(std::move(row));
  }
  return render(grid);
}

}  // namespace boij
