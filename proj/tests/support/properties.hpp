#ifndef BOIJ_TESTS_PROPERTIES_HPP
#define BOIJ_TESTS_PROPERTIES_HPP

// Property checks shared by the gtest suite and the acceptance runner. Each
// returns an empty string on success or a description of the first failure.

#include <cstdint>
#include <string>

namespace boij::prop {

constexpr int kCases = 250;

std::string hk_moments(std::uint32_t seed, int cases = kCases);
std::string betti_round_trip(std::uint32_t seed, int cases = kCases);
std::string coh_round_trip(std::uint32_t seed, int n, int cases = kCases);
std::string p1_oracle_agreement(std::uint32_t seed, int cases = kCases);
std::string line_bundle_is_sigma(std::uint32_t seed, int cases = kCases);
std::string cancellation_keeps_chi(std::uint32_t seed, int cases = kCases);

}  // namespace boij::prop

#endif  // BOIJ_TESTS_PROPERTIES_HPP
