#ifndef BOIJ_HULL_HPP
#define BOIJ_HULL_HPP

#include <cstddef>
#include <vector>

#include "boij/rational.hpp"

namespace boij {

using LatticePoint = std::vector<long long>;

/// Exact test of p in conv(points) (phase-1 simplex, Bland's rule).
bool in_convex_hull(const LatticePoint& p, const std::vector<LatticePoint>& points);

/// Indices of the points that are vertices of conv(points), ascending.
/// Duplicate points are not expected.
std::vector<std::size_t> hull_vertices(const std::vector<LatticePoint>& points);

}  // namespace boij

#endif  // BOIJ_HULL_HPP
