#pragma once

#include <cstdint>
#include <vector>

namespace hugheslab {

bool is_prime(std::uint64_t n);

/// Prime divisors of n in increasing order (trial division; callers stay
/// below 10^12 or so, catalog orders are <= 10^6).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Full factorization as (prime, exponent) pairs, primes increasing.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// All primes <= n, increasing.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

/// base^exp, saturating at UINT64_MAX instead of wrapping.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

/// Multiplicative order of a modulo p (p prime, p does not divide a).
unsigned multiplicative_order_mod(std::uint64_t a, std::uint64_t p);

} // namespace hugheslab
