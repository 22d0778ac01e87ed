#ifndef BOIJ_PRETTY_HPP
#define BOIJ_PRETTY_HPP

#include <optional>
#include <string>

#include "boij/betti_table.hpp"
#include "boij/cohomology_table.hpp"

namespace boij {

struct GridRange {
  std::optional<Window> columns;
  std::optional<Window> rows;
};

/// Betti grid: column = homological index i, row k holds beta_{i,i+k}.
/// Zeros print as `-`.
std::string pretty(const BettiTable& t, const GridRange& range = {});

/// Cohomology grid: top row h^n, bottom row h^0; gamma_{i,j} sits in display
/// column j+i. Columns default to [lo, hi+n] so both tails of the window
/// appear; values outside the window come from chi.
std::string pretty(const CohomologyTable& t, const GridRange& range = {});

}  // namespace boij

#endif  // BOIJ_PRETTY_HPP
