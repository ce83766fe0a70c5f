#pragma once

// Test-only reference computations. Each one takes a different route from the
// library code it checks: uniform trapezoid instead of adaptive Gauss-Legendre,
// alternating-series zeta instead of Euler-Maclaurin, long-double brute force
// instead of 256-bit continued fractions.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double kPi = 3.14159265358979323846;

// The C-infinity ramp written out directly.
inline double ramp(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  const double f = std::exp(-1.0 / u);
  const double g = std::exp(-1.0 / (1.0 - u));
  return f / (f + g);
}

inline double bump(double edge, double x) {
  if (x <= 1.0 || x >= 2.0) return 0.0;
  return ramp((x - 1.0) / edge) * ramp((2.0 - x) / edge);
}

// Trapezoid rule on a uniform grid. The integrand and all its derivatives
// vanish at 1 and 2, so the rule converges faster than any power of the step.
inline cplx fourier_bump(double edge, double xi, int steps = 200000) {
  const double h = 1.0 / steps;
  std::complex<long double> acc = 0.0L;
  for (int k = 1; k < steps; ++k) {
    const double t = 1.0 + k * h;
    const double ph = -2.0 * kPi * xi * t;
    acc += static_cast<long double>(bump(edge, t)) *
           std::complex<long double>(std::cos(ph), std::sin(ph));
  }
  return {static_cast<double>(acc.real() * h), static_cast<double>(acc.imag() * h)};
}

// zeta(s) = eta(s) / (1 - 2^{1-s}) with Borwein's accelerated alternating
// series. Good to ~1e-13 for |Im s| <= 30 at n = 80.
inline cplx borwein_zeta(cplx s, int n = 80) {
  // d_i = n sum_{j<=i} (n + j - 1)! 4^j / ((n - j)! (2j)!)
  std::vector<long double> d(n + 1);
  long double f = 1.0L;
  long double acc = 0.0L;
  for (int i = 0; i <= n; ++i) {
    if (i > 0) f *= 4.0L * (n + i - 1) * (n - i + 1) / ((2.0L * i - 1) * (2.0L * i));
    acc += f / (n + i);
    d[i] = n * acc;
  }
  std::complex<long double> sum = 0.0L;
  const std::complex<long double> sl(s.real(), s.imag());
  for (int k = 0; k < n; ++k) {
    const std::complex<long double> kp = std::pow(static_cast<long double>(k + 1), -sl);
    const long double sign = (k % 2 == 0) ? 1.0L : -1.0L;
    sum += sign * (d[k] - d[n]) * kp;
  }
  const std::complex<long double> eta = -sum / d[n];
  const std::complex<long double> factor = 1.0L - std::pow(2.0L, 1.0L - sl);
  const auto z = eta / factor;
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// Closed-form smoothing transform for G = exp(w^2).
inline double smoothing(double x) { return 0.5 * std::erfc(std::log(x) / 2.0); }

// sum_{r <= R} W(r^2 / x) / r, the series form of the arithmetic transform.
inline double arithmetic_series(double x, int R = 10000) {
  long double acc = 0.0L;
  for (int r = R; r >= 1; --r) acc += smoothing(static_cast<double>(r) * r / x) / r;
  return static_cast<double>(acc);
}

struct Hit {
  std::uint64_t a, b;
  long double quality;
};

// Every b below the cap, a = floor and ceil of b x; keeps the closest coprime
// pair with relative error at most tol. Long double is enough while b x stays
// well under 1e15.
inline std::optional<Hit> farey_scan(long double x, double cap, long double tol) {
  std::optional<Hit> best;
  if (cap <= 1.0) return best;
  const auto b_max = static_cast<std::uint64_t>(std::ceil(cap)) - 1;
  for (std::uint64_t b = 1; b <= b_max; ++b) {
    const long double bx = b * x;
    const auto lo = static_cast<std::uint64_t>(std::floor(bx));
    for (std::uint64_t a : {lo, lo + 1}) {
      if (a == 0 || a * b <= 1 || std::gcd(a, b) != 1) continue;
      const long double q = std::fabs(static_cast<long double>(a) / b - x) / x;
      if (q > tol) continue;
      if (!best || q < best->quality) best = Hit{a, b, q};
    }
  }
  return best;
}

// sum_{r >= 1} b(a r) b(b r) / r by walking every r up to the length.
inline double f_prime_brute(const std::vector<double>& dense, std::uint64_t a, std::uint64_t b) {
  double acc = 0.0;
  const std::uint64_t len = dense.size() - 1;
  for (std::uint64_t r = 1; r <= len; ++r) {
    const double x = a * r <= len ? dense[a * r] : 0.0;
    const double y = b * r <= len ? dense[b * r] : 0.0;
    acc += x * y / static_cast<double>(r);
  }
  return acc;
}

// Moebius function by trial division.
inline int moebius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

}  // namespace oracle
