#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace zap::arith {

// Linear sieve up to `limit` inclusive: smallest prime factor, Moebius function
// and the list of primes.
struct Sieve {
  std::uint64_t limit = 0;
  std::vector<std::uint32_t> spf;  // spf[0] = spf[1] = 0
  std::vector<std::int8_t> mu;
  std::vector<std::uint32_t> primes;

  explicit Sieve(std::uint64_t limit);

  bool is_prime(std::uint64_t n) const { return n >= 2 && n <= limit && spf[n] == n; }
};

std::uint64_t binary_gcd(std::uint64_t a, std::uint64_t b);

// Largest r with r^k <= n.
std::uint64_t iroot(std::uint64_t n, unsigned k);

// r with r^k == n, if any.
std::optional<std::uint64_t> exact_root(std::uint64_t n, unsigned k);

// Overflow-checked power; nullopt on overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

// Trial-division smallest prime factor; 0 for n < 2.
std::uint64_t smallest_prime_factor(std::uint64_t n);

// d(n), number of divisors, by trial division.
std::uint64_t divisor_count(std::uint64_t n);

}  // namespace zap::arith
