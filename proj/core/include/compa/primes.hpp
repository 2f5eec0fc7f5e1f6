#pragma once

#include <cstdint>
#include <vector>

namespace compa {

/// All primes <= limit, by the sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

bool is_prime(std::uint64_t n);

/// Distinct prime divisors in increasing order; empty for n <= 1.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// All positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace compa
