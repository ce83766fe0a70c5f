#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>

namespace zap {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Neumaier's variant of Kahan summation. Order-dependent, so callers that need
// thread-count independence feed it values in a fixed index order.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(cplx z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  cplx value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

// Fixed-shape pairwise reduction: the tree depends only on the length, never on
// how the values were produced, so results are identical across thread counts.
template <typename T>
T pairwise_sum(std::span<const T> v) {
  if (v.empty()) return T{};
  if (v.size() <= 16) {
    T acc{};
    for (const T& x : v) acc += x;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

// n^{-s} for real n > 0 and complex s.
inline cplx pow_neg(double n, cplx s) {
  const double ln = std::log(n);
  return std::exp(-s * ln);
}

// n^{-1/2 - i t} on the critical line; avoids a complex exp.
inline cplx critical_term(double n, double t) {
  const double ln = std::log(n);
  const double mag = 1.0 / std::sqrt(n);
  return {mag * std::cos(t * ln), -mag * std::sin(t * ln)};
}

}  // namespace zap
