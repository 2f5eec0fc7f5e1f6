#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace compa {

using Point = std::uint32_t;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultEnumerationLimit = 1'000'000;
inline constexpr std::uint64_t kDefaultOrderLimit = 100'000'000;

/// Caps on the element-enumerating algorithms. Operations that would exceed
/// `enumeration` elements throw ResourceLimit instead of approximating.
struct Limits {
  std::uint64_t enumeration = kDefaultEnumerationLimit;
  std::uint64_t order = kDefaultOrderLimit;
};

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace compa
