#pragma once

#include <cstdint>
#include <vector>

#include "zap/numeric.hpp"

namespace zap {

// B(s) = sum_{n <= length} b(n) n^{-s} with real coefficients. Zero coefficients
// are kept implicitly; the nonzero support is cached with the factors needed to
// evaluate on the critical line.
class DirichletPoly {
 public:
  DirichletPoly() : DirichletPoly(std::vector<double>{0.0, 1.0}) {}
  // dense[n] = b(n); dense[0] is ignored.
  explicit DirichletPoly(std::vector<double> dense);

  static DirichletPoly one() { return DirichletPoly(); }

  std::uint64_t length() const { return dense_.size() - 1; }
  // b(n), zero beyond the length.
  double operator[](std::uint64_t n) const { return n >= 1 && n < dense_.size() ? dense_[n] : 0.0; }

  const std::vector<std::uint64_t>& support() const { return support_; }
  const std::vector<double>& dense() const { return dense_; }

  // B(1/2 + i t).
  cplx critical_value(double t) const;

 private:
  std::vector<double> dense_;
  std::vector<std::uint64_t> support_;
  std::vector<double> scaled_;  // b(n) / sqrt(n) on the support
  std::vector<double> logs_;    // ln n on the support
};

// M(s) = sum_{n <= T^theta} mu(n) (1 - ln n / ln T^theta) n^{-s}.
struct Mollifier {
  double T = 0.0;
  double theta = 0.0;
  DirichletPoly poly;
};

inline constexpr std::uint64_t kDefaultPolyCap = 50'000'000;

// Throws ConfigError unless T >= 100 and 0 < theta < 1/2 (or < 1 when
// `allow_long` is set, the range polynomial-only moments allow), and
// CapacityError if T^theta exceeds `max_length`.
Mollifier mollifier_coeffs(double T, double theta, std::uint64_t max_length = kDefaultPolyCap,
                           bool allow_long = false);

inline cplx eval_poly(const DirichletPoly& p, double t) { return p.critical_value(t); }

// d_k(n), the k-fold divisor function.
std::uint64_t divisor_function(std::uint64_t n, unsigned k);

// |b(n)| <= C d_A(n) for every n <= length.
bool within_divisor_profile(const DirichletPoly& p, unsigned A, double C);

}  // namespace zap
