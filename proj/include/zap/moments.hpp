#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zap/dioph.hpp"
#include "zap/dirichlet.hpp"
#include "zap/kernels.hpp"
#include "zap/special.hpp"
#include "zap/window.hpp"
#include "zap/zeta.hpp"

namespace zap {

struct MomentOptions {
  ZetaEngineConfig zeta;
  ContourConfig contour;
  // Continuous integrals: composite 20-point Gauss-Legendre at
  // max(nodes_per_unit_t, nodes_per_unit_tau * alpha) nodes per unit t, doubled
  // until two successive results agree to rel_tol.
  double nodes_per_unit_t = 20.0;
  double nodes_per_unit_tau = 4.0;
  double rel_tol = 1e-4;
  int max_doublings = 5;
  // Tolerance exponent of the tuple condition; see find_tuple.
  double tuple_eps = 0.01;
  Exec exec = default_exec();

  void validate() const;
};

// Which product the moment is taken of.
enum class Integrand { zeta_poly, poly_only };

// Integers ell with phi(ell / T) > 0.
std::vector<std::int64_t> progression_support(const SmoothWindow& w, double T);

// power 2: sum_ell |(zeta B)(1/2 + i(alpha ell + beta))|^2 phi(ell/T), real.
// power 1: sum_ell (zeta B)(...) phi(ell/T).
cplx discrete_twisted_moment(const ProgressionSpec& spec, const SmoothWindow& w, double T,
                             const DirichletPoly& poly, int power, const MomentOptions& opt = {},
                             Integrand what = Integrand::zeta_poly);

// The same with the sum over ell replaced by an integral over t.
cplx continuous_twisted_moment(const ProgressionSpec& spec, const SmoothWindow& w, double T,
                               const DirichletPoly& poly, int power,
                               const MomentOptions& opt = {},
                               Integrand what = Integrand::zeta_poly);

// F(a, b, t) through the arithmetic transform:
// sum_{m,n} b(m) b(n) / (m n) * g * H((alpha t + beta) g^2 / (2 pi m a n b)), g = gcd(m a, n b).
double F_func(std::uint64_t a, std::uint64_t b, double t, const DirichletPoly& poly,
              const ProgressionSpec& spec, const ContourConfig& contour = {});

struct SeriesCaps {
  std::uint64_t r_max = 10'000;
  std::uint64_t mn_max = 1'000'000;
};

struct SeriesValue {
  double value = 0.0;
  // |contribution of r in (r_max/10, r_max]| / |value|
  double last_decade = 0.0;
  bool cap_warning = false;
};

// F(a, b, t) as the literal triple sum over r, (h, k) and mn with W.
SeriesValue F_func_series(std::uint64_t a, std::uint64_t b, double t, const DirichletPoly& poly,
                          const ProgressionSpec& spec, const SeriesCaps& caps = {},
                          const ContourConfig& contour = {});

// sum_{r >= 1} b(a r) b(b r) / r.
double F_prime(std::uint64_t a, std::uint64_t b, const DirichletPoly& poly);

struct EllTerm {
  std::uint64_t ell = 0;
  std::optional<DiophantineTuple> tuple;
  cplx value{};  // H(ell), or the summand of the polynomial-only correction
};

// Correction integral attached to the tuple at ell; 0 when no tuple exists.
EllTerm H_ell(std::uint64_t ell, const ProgressionSpec& spec, const SmoothWindow& w, double T,
              const DirichletPoly& poly, const MomentOptions& opt = {});

// Smallest ell range that can carry a tuple, widened to cover
// (alpha / 2 pi) ln(2 alpha T^{1 + theta}) with T^theta the polynomial length.
std::uint64_t default_ell_max(const ProgressionSpec& spec, double T, const DirichletPoly& poly);

struct Prediction {
  double value = 0.0;
  std::vector<EllTerm> terms;
};

// 4 Re sum_ell H(ell).
Prediction predict_E(const ProgressionSpec& spec, const SmoothWindow& w, double T,
                     const DirichletPoly& poly, std::uint64_t ell_max,
                     const MomentOptions& opt = {});

// 2 Re sum_ell (a/b)^{i beta} / sqrt(ab) * T phi_hat(-T nu) * F'(a, b).
Prediction predict_E_prime(const ProgressionSpec& spec, const SmoothWindow& w, double T,
                           const DirichletPoly& poly, std::uint64_t ell_max,
                           const MomentOptions& opt = {});

struct MomentReport {
  double discrete = 0.0;
  double continuous = 0.0;
  double E = 0.0;
  double predicted_E = 0.0;
  double ratio = 0.0;
  double T = 0.0;
  double edge = 0.0;
  std::string poly_id;
  std::vector<EllTerm> terms;
};

MomentReport moment_report(const ProgressionSpec& spec, const SmoothWindow& w, double T,
                           const DirichletPoly& poly, const std::string& poly_id,
                           const MomentOptions& opt = {}, bool with_prediction = true);

struct NonvanishingReport {
  cplx first{};         // sum zeta M phi
  double second = 0.0;  // sum |zeta M|^2 phi
  double bound = 0.0;   // |first|^2 / (T second)
  double target = 0.0;  // theta / (theta + 1) * phi_hat(0)
};

NonvanishingReport nonvanishing_bound(const ProgressionSpec& spec, const SmoothWindow& w, double T,
                                      double theta, const MomentOptions& opt = {});

// Fraction of integers ell in [T, 2T] with |zeta(1/2 + i(alpha ell + beta))| >
// threshold / sqrt(ln ell).
double empirical_nonvanishing(const ProgressionSpec& spec, double T, double threshold,
                              const MomentOptions& opt = {});

}  // namespace zap
