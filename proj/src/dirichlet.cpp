#include "zap/dirichlet.hpp"

#include <cmath>

#include "zap/arith.hpp"
#include "zap/error.hpp"

namespace zap {

DirichletPoly::DirichletPoly(std::vector<double> dense) : dense_(std::move(dense)) {
  require(dense_.size() >= 2, "Dirichlet polynomial needs length >= 1");
  dense_[0] = 0.0;
  for (std::uint64_t n = 1; n < dense_.size(); ++n) {
    if (dense_[n] == 0.0) continue;
    const double nd = static_cast<double>(n);
    support_.push_back(n);
    scaled_.push_back(dense_[n] / std::sqrt(nd));
    logs_.push_back(std::log(nd));
  }
}

cplx DirichletPoly::critical_value(double t) const {
  CompensatedSum re, im;
  for (std::size_t j = 0; j < support_.size(); ++j) {
    const double ph = t * logs_[j];
    re.add(scaled_[j] * std::cos(ph));
    im.add(-scaled_[j] * std::sin(ph));
  }
  return {re.value(), im.value()};
}

Mollifier mollifier_coeffs(double T, double theta, std::uint64_t max_length, bool allow_long) {
  require(T >= 100.0, "mollifier needs T >= 100");
  require(theta > 0.0 && theta < (allow_long ? 1.0 : 0.5),
          allow_long ? "mollifier theta must lie in (0, 1)" : "mollifier theta must lie in (0, 1/2)");
  const double log_len = theta * std::log(T);
  const double len = std::exp(log_len);
  if (len > static_cast<double>(max_length))
    throw CapacityError("mollifier length T^theta exceeds the configured cap");
  const auto n_max = static_cast<std::uint64_t>(std::floor(len * (1.0 + 1e-15)));
  const arith::Sieve sieve(n_max);
  std::vector<double> dense(n_max + 1, 0.0);
  for (std::uint64_t n = 1; n <= n_max; ++n)
    if (sieve.mu[n] != 0)
      dense[n] = sieve.mu[n] * (1.0 - std::log(static_cast<double>(n)) / log_len);
  return {T, theta, DirichletPoly(std::move(dense))};
}

std::uint64_t divisor_function(std::uint64_t n, unsigned k) {
  require(n >= 1 && k >= 1, "divisor function needs n >= 1 and k >= 1");
  std::uint64_t out = 1;
  while (n > 1) {
    const std::uint64_t p = arith::smallest_prime_factor(n);
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    // d_k(p^e) = C(e + k - 1, k - 1)
    std::uint64_t c = 1;
    for (unsigned i = 1; i < k; ++i) c = c * (e + i) / i;
    out *= c;
  }
  return out;
}

bool within_divisor_profile(const DirichletPoly& p, unsigned A, double C) {
  for (std::uint64_t n : p.support())
    if (std::abs(p[n]) > C * static_cast<double>(divisor_function(n, A)) * (1.0 + 1e-12))
      return false;
  return true;
}

}  // namespace zap
