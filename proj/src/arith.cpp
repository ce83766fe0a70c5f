#include "zap/arith.hpp"

#include <bit>
#include <cmath>

#include "zap/error.hpp"

namespace zap::arith {

Sieve::Sieve(std::uint64_t limit_) : limit(limit_) {
  require(limit < (1ULL << 32), "sieve limit exceeds 2^32");
  spf.assign(limit + 1, 0);
  mu.assign(limit + 1, 0);
  if (limit >= 1) mu[1] = 1;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      mu[i] = -1;
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      const std::uint64_t m = i * p;
      if (p > spf[i] || m > limit) break;
      spf[m] = p;
      mu[m] = (p == spf[i]) ? 0 : static_cast<std::int8_t>(-mu[i]);
    }
  }
}

std::uint64_t binary_gcd(std::uint64_t a, std::uint64_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = std::countr_zero(a | b);
  a >>= std::countr_zero(a);
  do {
    b >>= std::countr_zero(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && out > UINT64_MAX / base) return std::nullopt;
    out *= base;
  }
  return out;
}

std::uint64_t iroot(std::uint64_t n, unsigned k) {
  if (k == 0) throw ConfigError("iroot: k must be positive");
  if (k == 1 || n < 2) return n;
  auto r = static_cast<std::uint64_t>(std::pow(static_cast<double>(n), 1.0 / k));
  auto fits = [&](std::uint64_t c) {
    auto p = checked_pow(c, k);
    return p && *p <= n;
  };
  while (r > 0 && !fits(r)) --r;
  while (fits(r + 1)) ++r;
  return r;
}

std::optional<std::uint64_t> exact_root(std::uint64_t n, unsigned k) {
  const std::uint64_t r = iroot(n, k);
  auto p = checked_pow(r, k);
  if (p && *p == n) return r;
  return std::nullopt;
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  if (n < 2) return 0;
  if (n % 2 == 0) return 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return d;
  return n;
}

std::uint64_t divisor_count(std::uint64_t n) {
  std::uint64_t count = 1;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    count *= e + 1;
  }
  if (n > 1) count *= 2;
  return count;
}

}  // namespace zap::arith
