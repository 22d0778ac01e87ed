#include "boij/coh_decomposition.hpp"

#include <optional>
#include <sstream>

#include "boij/errors.hpp"

namespace boij {

CohPeel peel_supernatural(const CohomologyTable& g, const RootSequence& f) {
  if (f.n() != g.n()) throw DimensionMismatch("root sequence length differs from n");
  CohomologyTable table = g.widened(minimal_window(f));
  CohomologyTable unit = sigma(f, 1, table.window());

  std::optional<Rational> q;
  for (const auto& [cell, s] : unit.entries()) {
    Rational ratio = table.at(cell.i, cell.j) / s;
    if (!q || ratio < *q) q = ratio;
  }
  if (!q || q->sign() <= 0) {
    throw TailGuardFailure("sigma_(" + f.str() + ") does not fit under the table (ratio " + (q ? q->str() : "none") +
                           ")");
  }
  CohomologyTable rest = subtract_checked(table, scale(unit, *q));
  auto report = validate(rest);
  if (!report.ok()) {
    throw TailGuardFailure("remainder after " + q->str() + " * sigma_(" + f.str() + "): " +
                           report.violations.front().message);
  }
  return {*q, std::move(rest)};
}

CohDecomposition decompose_coh(const CohomologyTable& g) {
  auto report = validate(g);
  if (!report.ok()) throw InvalidTable(report.str());

  CohDecomposition dec;
  dec.n = g.n();
  CohomologyTable rest = g;
  // Each peel zeroes a window entry; widening adds at most a few columns.
  const std::size_t max_steps = rest.entries().size() + static_cast<std::size_t>(2 * (g.n() + 2) * (g.n() + 1));
  for (int step = 1; !rest.is_zero(); ++step) {
    if (static_cast<std::size_t>(step) > max_steps) throw NotInCone(step, "no termination");
    try {
      RootSequence f = corner_roots(rest);
      if (!dec.terms.empty() && !termwise_leq(dec.terms.back().roots, f)) {
        throw NotInCone(step, "root sequence " + f.str() + " breaks the chain after " + dec.terms.back().roots.str());
      }
      CohPeel p = peel_supernatural(rest, f);
      dec.terms.push_back({p.q, f});
      rest = std::move(p.remainder);
    } catch (const NotStaircase& e) {
      throw NotInCone(step, e.what());
    } catch (const TailGuardFailure& e) {
      throw NotInCone(step, e.what());
    }
  }
  return dec;
}

CohomologyTable recompose(const CohDecomposition& dec, const Window& window) {
  Window w = window;
  for (const auto& t : dec.terms) w = window_union(w, minimal_window(t.roots));
  CohomologyTable sum(dec.n, w, Polynomial(static_cast<std::size_t>(dec.n) + 1));
  for (const auto& t : dec.terms) sum = add_tables(sum, sigma(t.roots, t.coefficient, w));
  return sum;
}

bool is_member(const CohomologyTable& g) {
  try {
    decompose_coh(g);
    return true;
  } catch (const NotInCone&) {
    return false;
  } catch (const InvalidTable&) {
    return false;
  }
}

std::vector<Rational> p1_second_differences(const CohomologyTable& g) {
  if (g.n() != 1) throw DimensionMismatch("p1 oracle needs n = 1");
  auto total = [&](int j) { return g.at(0, j) + g.at(1, j); };
  std::vector<Rational> out;
  for (int f = g.window().lo; f <= g.window().hi; ++f) out.push_back(total(f + 1) - total(f) - total(f) + total(f - 1));
  return out;
}

CohDecomposition p1_oracle(const CohomologyTable& g) {
  if (g.n() != 1) throw DimensionMismatch("p1 oracle needs n = 1");
  auto report = validate(g);
  if (!report.ok()) throw InvalidTable(report.str());

  CohDecomposition dec;
  dec.n = 1;
  auto d2 = p1_second_differences(g);
  for (std::size_t k = 0; k < d2.size(); ++k) {
    int f = g.window().lo + static_cast<int>(k);
    if (d2[k].sign() < 0) throw NotInCone(0, "negative second difference " + d2[k].str() + " at j=" + std::to_string(f));
    if (d2[k].sign() > 0) dec.terms.push_back({d2[k] / Rational(2), RootSequence({f})});
  }
  if (!equivalent(recompose(dec, g.window()), g)) {
    throw NotInCone(0, "second differences do not recompose the table (roots outside the window?)");
  }
  return dec;
}

Rational integral_multiple(const RootSequence& f, const Window& window) {
  Window w = window_union(window, minimal_window(f));
  CohomologyTable unit = sigma(f, 1, w);
  BigInt den = 1;
  BigInt num = 0;
  for (const auto& [cell, v] : unit.entries()) den = lcm(den, v.den());
  for (const auto& [cell, v] : unit.entries()) num = gcd(num, v.num() * (den / v.den()));
  return Rational(den, num);
}

std::string format_terms(const CohDecomposition& dec) {
  std::ostringstream os;
  for (const auto& t : dec.terms) os << "term " << t.coefficient << " roots=" << t.roots.str() << "\n";
  return os.str();
}

}  // namespace boij
