#ifndef BOIJ_COH_DECOMPOSITION_HPP
#define BOIJ_COH_DECOMPOSITION_HPP

#include <string>
#include <vector>

#include "boij/cohomology_table.hpp"
#include "boij/supernatural.hpp"

namespace boij {

/// Coefficient against the unit supernatural table sigma(f, 1).
struct CohTerm {
  Rational coefficient;
  RootSequence roots;
  friend bool operator==(const CohTerm&, const CohTerm&) = default;
};

struct CohDecomposition {
  int n = 1;
  std::vector<CohTerm> terms;  // peel order, roots nondecreasing
  friend bool operator==(const CohDecomposition&, const CohDecomposition&) = default;
};

struct CohPeel {
  Rational q;
  CohomologyTable remainder;
};

/// q = min over the window of g(i,j)/sigma_f(i,j) where sigma_f > 0. The
/// table is first widened to contain minimal_window(f). Throws
/// TailGuardFailure when the remainder fails validation.
CohPeel peel_supernatural(const CohomologyTable& g, const RootSequence& f);

/// Greedy decomposition into unit supernatural tables. Throws InvalidTable
/// when g fails validation and NotInCone when the greedy loop breaks down.
CohDecomposition decompose_coh(const CohomologyTable& g);

/// Sum of q * sigma(f, 1) over the terms, on `window` widened as needed.
CohomologyTable recompose(const CohDecomposition& dec, const Window& window);

bool is_member(const CohomologyTable& g);

/// Brute-force decomposition on P^1: with T = h^0 + h^1, the multiplicity of
/// sigma_(f) is the second difference (T(f+1) - 2T(f) + T(f-1)) / 2.
CohDecomposition p1_oracle(const CohomologyTable& g);

/// Second differences T(f+1) - 2T(f) + T(f-1) of h^0 + h^1 on P^1, for f in
/// the window.
std::vector<Rational> p1_second_differences(const CohomologyTable& g);

/// Smallest positive k with every window entry of k * sigma(f, 1) integral.
Rational integral_multiple(const RootSequence& f, const Window& window);

/// `term <coeff> roots=<f1,...>` lines.
std::string format_terms(const CohDecomposition& dec);

}  // namespace boij

#endif  // BOIJ_COH_DECOMPOSITION_HPP
