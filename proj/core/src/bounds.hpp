#pragma once

// Internal helpers shared by the bound checks.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "compa/report.hpp"
#include "compa/structure.hpp"

namespace compa::detail {

inline double log2_of(std::size_t n) { return std::log2(static_cast<double>(n)); }

inline double log2_of(const BigInt& value) {
  // Good to ~1e-15 relative, plenty for bound comparisons.
  return std::log2(value.convert_to<double>());
}

/// a < b with a margin that only accepts clear-cut cases.
inline bool strictly_below(double a, double b) {
  return a < b - 1e-9 * std::max(1.0, std::fabs(b));
}

/// a <= b. Tight cases occur at powers of two where both sides are exact
/// in binary, so no slack is added.
inline bool at_most(double a, double b) { return a <= b; }

/// 2^e <= n, exactly.
inline bool pow2_at_most(std::size_t e, std::size_t n) {
  return e < 64 && (std::uint64_t{1} << e) <= n;
}

/// 2^e <= value, exactly.
inline bool pow2_at_most(std::size_t e, const BigInt& value) {
  return (BigInt(1) << e) <= value;
}

inline json prime_list(const PrimeSet& primes) {
  json out = json::array();
  for (auto p : primes) out.push_back(p);
  return out;
}

inline json factor_list(const FactorList& factors) {
  json out = json::array();
  for (const auto& f : factors) out.push_back(f.to_string());
  return out;
}

inline PrimeSet set_difference(const PrimeSet& a, const PrimeSet& b) {
  PrimeSet out;
  for (auto p : a) {
    if (!b.contains(p)) out.insert(p);
  }
  return out;
}

inline bool includes(const PrimeSet& big, const PrimeSet& small) {
  for (auto p : small) {
    if (!big.contains(p)) return false;
  }
  return true;
}

}  // namespace compa::detail
