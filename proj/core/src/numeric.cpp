#include "hugheslab/numeric.hpp"

#include <limits>

#include "hugheslab/errors.hpp"

namespace hugheslab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto [p, e] : factorize(n)) {
    (void)e;
    out.push_back(p);
  }
  return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (is_prime(i)) out.push_back(i);
  }
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > kMax / base) return kMax;
    result *= base;
  }
  return result;
}

unsigned multiplicative_order_mod(std::uint64_t a, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgumentError("modulus must be prime");
  a %= p;
  if (a == 0) throw InvalidArgumentError("a divisible by p has no multiplicative order");
  std::uint64_t x = a;
  unsigned order = 1;
  while (x != 1) {
    x = (x * a) % p;
    ++order;
  }
  return order;
}

} // namespace hugheslab
