#include "boij/supernatural.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "boij/errors.hpp"

namespace boij {

RootSequence::RootSequence(std::vector<int> roots) : roots_(std::move(roots)) {
  if (roots_.empty()) throw InvalidArgument("root sequence is empty");
  for (std::size_t k = 1; k < roots_.size(); ++k) {
    if (roots_[k] >= roots_[k - 1]) throw InvalidArgument("roots must be strictly decreasing: " + str());
  }
}

RootSequence RootSequence::parse(std::string_view text) {
  std::vector<int> roots;
  std::istringstream in{std::string(text)};
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      roots.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad root '" + item + "' in '" + std::string(text) + "'");
    }
  }
  return RootSequence(std::move(roots));
}

std::string RootSequence::str() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < roots_.size(); ++k) os << (k ? "," : "") << roots_[k];
  return os.str();
}

Window minimal_window(const RootSequence& f) { return {f.roots().back() - 1, f.roots().front() + 1}; }

CohomologyTable sigma(const RootSequence& f, const Rational& m, const Window& window) {
  if (m.sign() <= 0) throw InvalidArgument("multiplier must be positive, got " + m.str());
  Window need = minimal_window(f);
  if (window.lo > need.lo || window.hi < need.hi) {
    throw WindowTooSmall("window [" + std::to_string(window.lo) + "," + std::to_string(window.hi) + "] must contain [" +
                         std::to_string(need.lo) + "," + std::to_string(need.hi) + "]");
  }
  const int n = f.n();
  Rational lead = m / Rational(factorial(n));
  CohomologyTable t(n, window, polynomial_from_roots(lead, f.roots()));
  for (int j = window.lo; j <= window.hi; ++j) {
    // Row i is live on f_{i+1} < j < f_i, i.e. i = #{k : f_k > j}.
    int i = static_cast<int>(std::count_if(f.roots().begin(), f.roots().end(), [j](int r) { return r > j; }));
    t.set(i, j, t.chi_at(j).abs());
  }
  return t;
}

CohomologyTable line_bundle(int n, int a, const Window& window) {
  if (n < 1) throw InvalidArgument("n must be positive");
  std::vector<int> roots;
  for (int k = 1; k <= n; ++k) roots.push_back(-a - k);
  CohomologyTable t(n, window, polynomial_from_roots(Rational(1) / Rational(factorial(n)), roots));
  for (int j = window.lo; j <= window.hi; ++j) {
    if (a + j >= 0) t.set(0, j, Rational(binomial(a + j + n, n)));
    if (a + j <= -n - 1) t.set(n, j, Rational(binomial(-a - j - 1, n)));
  }
  return t;
}

RootSequence corner_roots(const CohomologyTable& g) {
  const int n = g.n();
  auto min_support = [&](int row) -> std::optional<int> {
    for (const auto& [cell, v] : g.entries()) {
      if (cell.i == row && v.sign() > 0) return cell.j;  // map is ordered by (i, j)
    }
    return std::nullopt;
  };
  auto first = min_support(0);
  if (!first) throw NotStaircase("row h^0 has no support in the window");
  std::vector<int> roots{*first - 1};
  for (int i = 2; i <= n; ++i) {
    int f = roots.back() - 1;
    if (auto m = min_support(i - 1)) f = std::min(f, *m - 1);
    roots.push_back(f);
  }
  return RootSequence(std::move(roots));
}

bool termwise_leq(const RootSequence& f, const RootSequence& g) {
  if (f.n() != g.n()) throw DimensionMismatch("root sequences of different length");
  for (int k = 1; k <= f.n(); ++k) {
    if (f[k] > g[k]) return false;
  }
  return true;
}

}  // namespace boij
