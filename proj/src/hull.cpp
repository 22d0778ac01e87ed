#include "boij/hull.hpp"

#include <optional>
#include <set>

namespace boij {

bool in_convex_hull(const LatticePoint& p, const std::vector<LatticePoint>& points) {
  if (points.empty()) return false;
  const std::size_t dim = p.size();
  const std::size_t rows = dim + 1;
  const std::size_t vars = points.size();
  const std::size_t cols = vars + rows;  // lambdas then artificials; rhs kept apart

  std::vector<std::vector<Rational>> tab(rows, std::vector<Rational>(cols));
  std::vector<Rational> rhs(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < vars; ++k) tab[r][k] = r < dim ? Rational(points[k][r]) : Rational(1);
    rhs[r] = r < dim ? Rational(p[r]) : Rational(1);
    if (rhs[r].sign() < 0) {
      for (std::size_t k = 0; k < vars; ++k) tab[r][k] = -tab[r][k];
      rhs[r] = -rhs[r];
    }
    tab[r][vars + r] = 1;
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = vars + r;

  // Reduced costs of the phase-1 objective (sum of artificials).
  std::vector<Rational> cost(cols);
  Rational objective;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < vars; ++k) cost[k] -= tab[r][k];
    objective += rhs[r];
  }

  for (;;) {
    std::optional<std::size_t> enter;
    for (std::size_t k = 0; k < cols; ++k) {
      if (cost[k].sign() < 0) {
        enter = k;
        break;
      }
    }
    if (!enter) break;
    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (tab[r][*enter].sign() <= 0) continue;
      Rational ratio = rhs[r] / tab[r][*enter];
      if (!leave || ratio < best || (ratio == best && basis[r] < basis[*leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (!leave) break;  // unbounded cannot happen for phase 1; stop defensively
    const std::size_t pr = *leave;
    Rational pivot = tab[pr][*enter];
    for (auto& x : tab[pr]) x /= pivot;
    rhs[pr] /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || tab[r][*enter].is_zero()) continue;
      Rational factor = tab[r][*enter];
      for (std::size_t k = 0; k < cols; ++k) tab[r][k] -= factor * tab[pr][k];
      rhs[r] -= factor * rhs[pr];
    }
    Rational factor = cost[*enter];
    for (std::size_t k = 0; k < cols; ++k) cost[k] -= factor * tab[pr][k];
    objective += factor * rhs[pr];
    basis[pr] = *enter;
  }
  return objective.is_zero();
}

std::vector<std::size_t> hull_vertices(const std::vector<LatticePoint>& points) {
  std::vector<std::size_t> out;
  if (points.empty()) return out;
  const std::size_t dim = points.front().size();
  std::set<LatticePoint> present(points.begin(), points.end());

  // Directions in {-1,0,1}^dim up to sign; a point that is the midpoint of
  // p+u and p-u is never a vertex.
  std::vector<LatticePoint> dirs;
  if (dim <= 6) {
    LatticePoint u(dim, -1);
    for (;;) {
      bool positive_lead = false;
      for (long long x : u) {
        if (x != 0) {
          positive_lead = x > 0;
          break;
        }
      }
      if (positive_lead) dirs.push_back(u);
      std::size_t k = 0;
      while (k < dim && u[k] == 1) u[k++] = -1;
      if (k == dim) break;
      ++u[k];
    }
  }

  for (std::size_t idx = 0; idx < points.size(); ++idx) {
    const LatticePoint& p = points[idx];
    bool midpoint = false;
    for (const auto& u : dirs) {
      LatticePoint a = p;
      LatticePoint b = p;
      for (std::size_t k = 0; k < dim; ++k) {
        a[k] += u[k];
        b[k] -= u[k];
      }
      if (present.count(a) && present.count(b)) {
        midpoint = true;
        break;
      }
    }
    if (midpoint) continue;
    std::vector<LatticePoint> others;
    others.reserve(points.size() - 1);
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (k != idx) others.push_back(points[k]);
    }
    if (!in_convex_hull(p, others)) out.push_back(idx);
  }
  return out;
}

}  // namespace boij
