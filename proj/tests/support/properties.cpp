#include "properties.hpp"

#include <sstream>

#include "boij/betti_decomposition.hpp"
#include "boij/coh_decomposition.hpp"
#include "boij/errors.hpp"
#include "boij/extension_polytope.hpp"
#include "generators.hpp"

namespace boij::prop {

namespace {

std::string fail(int trial, const std::string& what) {
  std::ostringstream os;
  os << "case " << trial << ": " << what;
  return os.str();
}

CohomologyTable combine(int n, const std::vector<CohTerm>& terms, const Window& w) {
  CohomologyTable t(n, w, Polynomial(static_cast<std::size_t>(n + 1)));
  for (const auto& term : terms) t = add_tables(t, sigma(term.roots, term.coefficient, w));
  return t;
}

}  // namespace

std::string hk_moments(std::uint32_t seed, int cases) {
  gen::Rng rng(seed);
  for (int trial = 0; trial < cases; ++trial) {
    int vars = gen::uniform(rng, 1, 8);
    DegreeSequence d = gen::degree_sequence(rng, vars);
    PureDiagram p = hk_normalized(d);
    if (p.values().front() != Rational(1)) return fail(trial, "beta_0 != 1 for " + d.str());
    for (int k = 0; k + 1 < d.length(); ++k)
      if (!p.moment(k).is_zero()) return fail(trial, "moment " + std::to_string(k) + " of " + d.str());
    PureDiagram s = smallest_integral(p);
    BigInt g = 0;
    for (const auto& v : s.values()) {
      if (!v.is_integer()) return fail(trial, "smallest integral not integral: " + d.str());
      g = gcd(g, v.num());
    }
    if (g != 1) return fail(trial, "smallest integral gcd != 1: " + d.str());
    if (!(smallest_integral(s) == s)) return fail(trial, "smallest integral not idempotent: " + d.str());
  }
  return {};
}

std::string betti_round_trip(std::uint32_t seed, int cases) {
  gen::Rng rng(seed);
  for (int trial = 0; trial < cases; ++trial) {
    int vars = gen::uniform(rng, 1, 5);
    auto chain = gen::degree_chain(rng, vars, gen::uniform(rng, 1, vars + 2));
    BettiDecomposition made = gen::chain_decomposition(rng, chain);
    BettiTable b = recompose(made);
    BettiDecomposition got;
    try {
      got = decompose(b, Normalization::Normalized);
    } catch (const Error& e) {
      return fail(trial, std::string("decompose threw ") + e.what());
    }
    if (!(got == made)) return fail(trial, "decomposition differs:\n" + format_terms(got) + "vs\n" + format_terms(made));
    if (!(recompose(got) == b)) return fail(trial, "recompose mismatch");
    auto c = got.chain();
    for (std::size_t k = 1; k < c.size(); ++k)
      if (compare(c[k - 1], c[k]) != Order::LessEq) return fail(trial, "chain not ascending");
    // Smallest-integral coefficients describe the same table.
    if (!(recompose(decompose(b)) == b)) return fail(trial, "smallest-integral recompose mismatch");
  }
  return {};
}

std::string coh_round_trip(std::uint32_t seed, int n, int cases) {
  gen::Rng rng(seed);
  for (int trial = 0; trial < cases; ++trial) {
    auto chain = gen::root_chain(rng, n, 5);
    std::vector<CohTerm> terms;
    for (const auto& f : chain) terms.push_back({gen::uniform(rng, 1, 5), f});
    Window w = gen::covering_window(chain, gen::uniform(rng, 0, 2));
    CohomologyTable g = combine(n, terms, w);
    CohDecomposition got;
    try {
      got = decompose_coh(g);
    } catch (const Error& e) {
      return fail(trial, std::string("decompose_coh threw ") + e.what());
    }
    CohDecomposition want{n, terms};
    if (!(got == want)) return fail(trial, "decomposition differs:\n" + format_terms(got) + "vs\n" + format_terms(want));
    if (!equivalent(recompose(got, w), g)) return fail(trial, "recompose mismatch");
  }
  return {};
}

std::string p1_oracle_agreement(std::uint32_t seed, int cases) {
  gen::Rng rng(seed);
  for (int trial = 0; trial < cases; ++trial) {
    // Arbitrary positive combinations: on P^1 any set of roots is a chain.
    int count = gen::uniform(rng, 1, 5);
    std::vector<RootSequence> roots;
    for (int k = 0; k < count; ++k) roots.push_back(gen::root_sequence(rng, 1));
    Window w = gen::covering_window(roots, gen::uniform(rng, 0, 2));
    CohomologyTable g(1, w, Polynomial(2));
    for (const auto& f : roots) g = add_tables(g, sigma(f, gen::positive_rational(rng), w));
    try {
      CohDecomposition a = decompose_coh(g);
      CohDecomposition b = p1_oracle(g);
      if (!(a == b)) return fail(trial, "greedy\n" + format_terms(a) + "oracle\n" + format_terms(b));
    } catch (const Error& e) {
      return fail(trial, std::string("threw ") + e.what());
    }
  }
  return {};
}

std::string line_bundle_is_sigma(std::uint32_t seed, int cases) {
  gen::Rng rng(seed);
  for (int trial = 0; trial < cases; ++trial) {
    int a = gen::uniform(rng, -30, 30);
    int lo = std::min(-a - 2, gen::uniform(rng, -40, 0));
    int hi = std::max(-a, gen::uniform(rng, 0, 40));
    Window w{lo, hi};
    CohomologyTable lb = line_bundle(1, a, w);
    CohomologyTable s = sigma(RootSequence({-a - 1}), 1, w);
    if (!(lb == s)) return fail(trial, "a=" + std::to_string(a));
  }
  return {};
}

std::string cancellation_keeps_chi(std::uint32_t seed, int cases) {
  gen::Rng rng(seed);
  for (int trial = 0; trial < cases; ++trial) {
    int n = gen::uniform(rng, 1, 3);
    auto fa = gen::root_sequence(rng, n);
    auto fb = gen::root_sequence(rng, n);
    Window w = gen::covering_window({fa, fb}, 1);
    CohomologyTable a = sigma(fa, gen::uniform(rng, 1, 4), w);
    CohomologyTable b = sigma(fb, gen::uniform(rng, 1, 4), w);
    auto bounds = cancellation_bounds(a, b);
    CancellationPattern c;
    for (auto [cell, ub] : bounds)
      c[cell] = std::uniform_int_distribution<long long>(0, ub)(rng);
    CohomologyTable e = apply_cancellation(a, b, c);
    for (int j = w.lo - 3; j <= w.hi + 3; ++j) {
      if (chi_eval(e, j) != chi_eval(a, j) + chi_eval(b, j)) return fail(trial, "chi at " + std::to_string(j));
      Rational alt;
      for (int i = 0; i <= n; ++i) alt += (i % 2 == 0 ? e.at(i, j) : -e.at(i, j));
      if (alt != chi_eval(e, j)) return fail(trial, "alternating sum at " + std::to_string(j));
    }
  }
  return {};
}

}  // namespace boij::prop
