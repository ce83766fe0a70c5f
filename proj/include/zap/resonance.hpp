#pragma once

#include <cstdint>
#include <vector>

#include "zap/dioph.hpp"
#include "zap/dirichlet.hpp"
#include "zap/moments.hpp"
#include "zap/window.hpp"

namespace zap {

enum class ResonatorMode { max, min };

// strict keeps the prime window [L^2, exp((ln L)^2)] and requires N <= T^{1/6};
// exploratory widens the window to [L^2, N] (the strict window is empty below
// N ~ 5e8) and lifts the length restriction.
enum class ResonanceRegime { strict, exploratory };

struct Resonator {
  std::uint64_t N = 0;
  double L = 0.0;
  double prime_lo = 0.0;
  double prime_hi = 0.0;
  std::vector<std::uint64_t> excluded;  // the set S
  std::vector<std::uint64_t> primes;    // admissible primes actually used
  ResonatorMode mode = ResonatorMode::max;
  ResonanceRegime regime = ResonanceRegime::exploratory;
  bool window_widened = false;  // exploratory window differs from the strict one
  DirichletPoly coeffs;
};

// For each tuple of the progression (see progression_tuples), the smallest prime
// factor of a and of b (b = 1 contributes nothing). Sorted, unique.
std::vector<std::uint64_t> build_excluded_set(const ProgressionSpec& spec, double T, double eps);

// b(n) = sqrt(n) r(n) (max) or mu(n) sqrt(n) r(n) (min), r multiplicative on
// squarefree n built from admissible primes, r(p) = L / (sqrt(p) ln p).
Resonator resonator_coeffs(std::uint64_t N, ResonatorMode mode,
                           const std::vector<std::uint64_t>& excluded,
                           ResonanceRegime regime = ResonanceRegime::exploratory,
                           std::uint64_t max_length = kDefaultPolyCap);

// The resonator with only b(1) = 1.
Resonator trivial_resonator(ResonatorMode mode = ResonatorMode::max);

// A(s) = sum_{n <= cutoff} n^{-s} on the critical line, via zeta minus its
// Euler-Maclaurin tail where that converges.
cplx truncated_zeta(double tau, std::uint64_t cutoff, const ZetaEngineConfig& cfg = {});

struct RatioReport {
  cplx numerator{};     // sum_ell A |B|^2 phi
  double denominator = 0.0;  // sum_ell |B|^2 phi
  cplx ratio{};
  double abs_ratio = 0.0;
  double imag_relative = 0.0;  // |Im ratio| / |ratio|
};

// Throws ConfigError in strict mode when N > T^{1/6}; ToleranceError when the
// denominator is below 1e-12.
RatioReport ratio_R(const ProgressionSpec& spec, const SmoothWindow& w, double T,
                    const Resonator& res, const MomentOptions& opt = {});

struct EulerPrediction {
  double log_value = 0.0;  // sum_p ln(1 + b(p) / p)
  double value = 1.0;
  double first_order = 0.0;  // sum_p b(p) / p
  double envelope = 1.0;     // exp(+-sqrt(ln N / ln ln N))
};

EulerPrediction euler_product_prediction(const Resonator& res);

struct ExtremeReport {
  std::int64_t ell_star = 0;  // extremum among the top decile of |B|^2
  cplx zeta_star{};
  std::int64_t ell_global = 0;  // extremum over the whole range
  double abs_global = 0.0;
  double median_abs = 0.0;
  double abs_ratio = 0.0;
  double slack = 0.0;
  bool certified = false;  // max >= |R| - slack (min: min <= |R| + slack)
};

ExtremeReport extreme_search(const ProgressionSpec& spec, const SmoothWindow& w, double T,
                             const Resonator& res, const MomentOptions& opt = {});

// Continuous counterparts int D |B|^2 phi dt with D = 1 or D = A.
cplx continuous_resonated_moment(const ProgressionSpec& spec, const SmoothWindow& w, double T,
                                 const Resonator& res, bool with_A, const MomentOptions& opt = {});

}  // namespace zap
