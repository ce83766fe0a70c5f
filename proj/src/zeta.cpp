#include "zap/zeta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "zap/arith.hpp"
#include "zap/error.hpp"
#include "zap/special.hpp"

namespace zap {

namespace {

#include "rs_coeffs.inc"

// B_{2k} / (2k)! for k = 1..15.
constexpr std::array<double, 15> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
    854513.0 / 138.0 / 1.1240007277776077e21,
    -236364091.0 / 2730.0 / 6.204484017332394e23,
    8553103.0 / 6.0 / 4.0329146112660565e26,
    -23749461029.0 / 870.0 / 3.0488834461171384e29,
    8615841276005.0 / 14322.0 / 2.6525285981219107e32,
};

constexpr double kEmTolerance = 1e-13;
constexpr std::uint64_t kEmHardCap = 1ULL << 24;

// Euler-Maclaurin tail sum_{k=1}^{M} B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}.
// Returns the sum and the magnitude of the last term.
std::pair<cplx, double> em_tail(cplx s, double n, int order) {
  const cplx n_pow = std::exp(-s * std::log(n));  // N^{-s}
  cplx poch = s;                                  // s (s+1) ... (s+2k-2)
  double n_inv = 1.0 / n;                         // N^{-(2k-1)}
  const double n_inv2 = n_inv * n_inv;
  cplx acc{};
  double last = 0.0;
  for (int k = 1; k <= order; ++k) {
    const cplx term = kBernoulliOverFactorial[k - 1] * poch * n_pow * n_inv;
    acc += term;
    last = std::abs(term);
    poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
    n_inv *= n_inv2;
  }
  return {acc, last};
}

cplx direct_sum(cplx s, std::uint64_t last) {
  CompensatedComplexSum acc;
  for (std::uint64_t n = 1; n <= last; ++n) {
    const double ln = std::log(static_cast<double>(n));
    const double mag = std::exp(-s.real() * ln);
    const double ph = -s.imag() * ln;
    acc.add({mag * std::cos(ph), mag * std::sin(ph)});
  }
  return acc.value();
}

double rs_poly(int k, double z) {
  double acc = 0.0;
  for (int i = kRsTerms - 1; i >= 0; --i) acc = acc * z + kRsCoeffs[k][i];
  return acc;
}

}  // namespace

void ZetaEngineConfig::validate() const {
  require(em_terms >= 10, "em_terms must be >= 10");
  require(em_bernoulli_order >= 2 && em_bernoulli_order <= 15,
          "em_bernoulli_order must lie in [2, 15]");
  require(afe_epsilon > 0.0 && afe_epsilon <= 0.5, "afe_epsilon must lie in (0, 0.5]");
  require(rs_threshold >= 100.0, "rs_threshold below 100 is outside the Riemann-Siegel range");
}

cplx zeta_em(cplx s, const ZetaEngineConfig& cfg) {
  if (s == cplx(1.0, 0.0)) throw PoleError("zeta has a pole at s = 1");
  const double size = std::abs(s);
  auto n = static_cast<std::uint64_t>(
      std::max<double>(cfg.em_terms, std::ceil(0.4 * size + 2.0 * cfg.em_bernoulli_order)));
  while (true) {
    const auto [tail, last] = em_tail(s, static_cast<double>(n), cfg.em_bernoulli_order);
    const cplx head = direct_sum(s, n - 1);
    const double nd = static_cast<double>(n);
    const cplx n_pow = std::exp(-s * std::log(nd));
    const cplx value = head + n_pow * nd / (s - 1.0) + 0.5 * n_pow + tail;
    if (last <= kEmTolerance * std::max(1.0, std::abs(value))) return value;
    if (n >= kEmHardCap)
      throw ToleranceError("zeta_em: Euler-Maclaurin remainder above tolerance at cutoff cap");
    n *= 2;
  }
}

double rs_theta(double t) {
  const double inv = 1.0 / t;
  const double inv2 = inv * inv;
  return 0.5 * t * std::log(t / kTwoPi) - 0.5 * t - kPi / 8.0 +
         inv * (1.0 / 48.0 + inv2 * (7.0 / 5760.0 + inv2 * (31.0 / 80640.0 + inv2 * 127.0 / 430080.0)));
}

double hardy_z_rs(double t) {
  require(t >= 10.0, "Riemann-Siegel needs t >= 10");
  const double a = std::sqrt(t / kTwoPi);
  const auto nu = static_cast<std::uint64_t>(std::floor(a));
  const double theta = rs_theta(t);
  CompensatedSum main;
  for (std::uint64_t n = 1; n <= nu; ++n) {
    const double nd = static_cast<double>(n);
    main.add(std::cos(theta - t * std::log(nd)) / std::sqrt(nd));
  }
  const double z = (a - static_cast<double>(nu)) - 0.5;
  // Remainder (-1)^{nu-1} a^{-1/2} sum_k C_k(z) a^{-k}, a = (t/2pi)^{1/2}.
  double corr = 0.0;
  double pw = 1.0;
  for (int k = 0; k < 5; ++k) {
    corr += rs_poly(k, z) * pw;
    pw /= a;
  }
  const double sign = (nu % 2 == 1) ? 1.0 : -1.0;
  return 2.0 * main.value() + sign * corr / std::sqrt(a);
}

cplx zeta_critical(double t, const ZetaEngineConfig& cfg) {
  if (t < 0.0) return std::conj(zeta_critical(-t, cfg));
  if (t >= cfg.rs_threshold) {
    const double theta = rs_theta(t);
    return hardy_z_rs(t) * cplx(std::cos(theta), -std::sin(theta));
  }
  return zeta_em({0.5, t}, cfg);
}

cplx main_sum(double t, std::uint64_t cutoff) {
  require(cutoff >= 1, "main_sum cutoff must be >= 1");
  CompensatedComplexSum acc;
  for (std::uint64_t n = 1; n <= cutoff; ++n) acc.add(critical_term(static_cast<double>(n), t));
  return acc.value();
}

cplx partial_zeta_sum(cplx s, std::uint64_t cutoff, cplx zeta_s, const ZetaEngineConfig& cfg) {
  require(cutoff >= 1, "partial_zeta_sum cutoff must be >= 1");
  const double n = static_cast<double>(cutoff);
  const auto [tail, last] = em_tail(s, n, cfg.em_bernoulli_order);
  if (std::abs(s) > 2.5 * n || last > 1e-12) return direct_sum(s, cutoff);
  const cplx n_pow = std::exp(-s * std::log(n));
  // zeta(s) = sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2 + tail
  return zeta_s - n_pow * n / (s - 1.0) + 0.5 * n_pow - tail;
}

double afe_default_cap(double t, const ZetaEngineConfig& cfg) {
  // W(x) = erfc(ln x / 2) / 2 <= 1e-6 once ln x / 2 >= 3.3612.
  const double w_cut = std::exp(2.0 * 3.3612) * t / kTwoPi;
  return std::ceil(std::max(std::pow(t, 1.0 + cfg.afe_epsilon), w_cut));
}

double afe_square(double t, double cap, const ZetaEngineConfig& cfg) {
  require(t >= 10.0, "afe_square needs t >= 10");
  require(cap >= std::pow(t, 1.0 + cfg.afe_epsilon) * (1.0 - 1e-12),
          "afe_square cap is below t^{1+afe_epsilon}");
  require(cap < 4.0e9, "afe_square cap exceeds the sieve range");
  const auto last = static_cast<std::uint64_t>(std::ceil(cap)) - 1;  // N < cap
  const arith::Sieve sieve(last);

  // g(N) = N^{-it} sum_{d | N} d^{2it} is multiplicative with
  // g(p^k) = sum_{j=0}^{k} p^{i(2j-k)t}.
  std::vector<cplx> g(last + 1);
  std::vector<cplx> prime_phase(last + 1);
  for (std::uint32_t p : sieve.primes) {
    const double ph = t * std::log(static_cast<double>(p));
    prime_phase[p] = {std::cos(ph), std::sin(ph)};
  }
  if (last >= 1) g[1] = 1.0;
  for (std::uint64_t n = 2; n <= last; ++n) {
    const std::uint32_t p = sieve.spf[n];
    std::uint64_t rest = n;
    int k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    const cplx q = prime_phase[p];
    const cplx q2 = q * q;
    cplx geo = 1.0, pw = 1.0;
    for (int j = 1; j <= k; ++j) {
      pw *= q2;
      geo += pw;
    }
    cplx shift = 1.0;
    for (int j = 0; j < k; ++j) shift *= std::conj(q);
    g[n] = g[rest] * geo * shift;
  }

  CompensatedComplexSum acc;
  for (std::uint64_t n = 1; n <= last; ++n) {
    const double nd = static_cast<double>(n);
    acc.add(w_exact(kTwoPi * nd / t) / std::sqrt(nd) * g[n]);
  }
  const cplx total = 2.0 * acc.value();
  if (std::abs(total.imag()) > 1e-8)
    throw ToleranceError("afe_square: imaginary residue above 1e-8");
  return total.real();
}

}  // namespace zap
