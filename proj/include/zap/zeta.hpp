#pragma once

#include <cstdint>

#include "zap/numeric.hpp"

namespace zap {

struct ContourConfig;

struct ZetaEngineConfig {
  // Minimum Euler-Maclaurin cutoff N; raised adaptively with |Im s|.
  int em_terms = 50;
  // Number of Bernoulli corrections B_2 .. B_{2M}.
  int em_bernoulli_order = 12;
  // AFE truncation exponent: the double sum runs over mn < t^{1 + afe_epsilon}.
  double afe_epsilon = 0.2;
  // zeta_critical switches to Riemann-Siegel for |t| >= rs_threshold.
  // Set to infinity to force Euler-Maclaurin everywhere.
  double rs_threshold = 400.0;

  void validate() const;
};

// Euler-Maclaurin evaluation of zeta(s) for complex s != 1, absolute accuracy
// about 1e-10 for |Im s| <= 1e5. Throws PoleError at s = 1 and ToleranceError
// if the remainder cannot be pushed below tolerance within the cutoff cap.
cplx zeta_em(cplx s, const ZetaEngineConfig& cfg = {});

// Riemann-Siegel theta function.
double rs_theta(double t);

// Hardy Z(t) by Riemann-Siegel with the C0..C4 corrections; t >= 10.
double hardy_z_rs(double t);

// zeta(1/2 + i t). Same contract as zeta_em(1/2 + i t); uses the Riemann-Siegel
// accelerator above cfg.rs_threshold.
cplx zeta_critical(double t, const ZetaEngineConfig& cfg = {});

// sum_{n <= cutoff} n^{-1/2 - i t}, compensated.
cplx main_sum(double t, std::uint64_t cutoff);

// sum_{n <= cutoff} n^{-s} from a known zeta(s) minus the Euler-Maclaurin tail.
// Falls back to direct summation when the tail expansion does not converge.
cplx partial_zeta_sum(cplx s, std::uint64_t cutoff, cplx zeta_s, const ZetaEngineConfig& cfg = {});

// Smallest cap the AFE should use at height t: max(t^{1+eps}, the point where
// the smoothing weight W(2 pi N / t) falls below 1e-6).
double afe_default_cap(double t, const ZetaEngineConfig& cfg = {});

// 2 sum_{N < cap} W(2 pi N / t) N^{-1/2} sum_{mn = N} (m/n)^{it}, the smoothed
// approximate functional equation for |zeta(1/2 + it)|^2. Throws ConfigError if
// t < 10 or cap < t^{1+afe_epsilon}; ToleranceError if the assembled sum has an
// imaginary part above 1e-8.
double afe_square(double t, double cap, const ZetaEngineConfig& cfg = {});

}  // namespace zap
