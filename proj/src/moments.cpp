#include "zap/moments.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "zap/arith.hpp"
#include "zap/error.hpp"
#include "zap/quadrature.hpp"

namespace zap {

namespace {

constexpr int kPanelOrder = 20;

struct Grid {
  std::vector<double> t;
  std::vector<double> w;
};

Grid gauss_grid(double lo, double hi, std::size_t panels) {
  const quad::GaussRule& rule = quad::gauss_legendre(kPanelOrder);
  Grid g;
  g.t.reserve(panels * kPanelOrder);
  g.w.reserve(panels * kPanelOrder);
  const double h = (hi - lo) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = lo + h * (static_cast<double>(p) + 0.5);
    for (int i = 0; i < kPanelOrder; ++i) {
      g.t.push_back(mid + 0.5 * h * rule.nodes[i]);
      g.w.push_back(0.5 * h * rule.weights[i]);
    }
  }
  return g;
}

// Integrates over [lo, hi] by composite Gauss-Legendre, doubling the panel count
// until two successive results agree to rel_tol (relative to |result| + floor).
template <typename Eval>
cplx integrate_doubling(Eval&& eval, double lo, double hi, std::size_t panels, double rel_tol,
                        int max_doublings, double floor, const char* what) {
  cplx prev = eval(gauss_grid(lo, hi, panels));
  for (int d = 0; d < max_doublings; ++d) {
    panels *= 2;
    const cplx cur = eval(gauss_grid(lo, hi, panels));
    if (std::abs(cur - prev) <= rel_tol * (std::abs(cur) + floor)) return cur;
    prev = cur;
  }
  throw QuadratureError(std::string(what) + ": node doubling did not converge");
}

double log_over_two_pi(std::uint64_t a, std::uint64_t b) {
  return std::log(static_cast<double>(a) / static_cast<double>(b)) / kTwoPi;
}

// F(a, b, t) = sum_j coef_j H(x scale_j) with x = alpha t + beta; pairs (m, n)
// sharing the same reduced scale are merged.
struct FTerms {
  std::vector<double> coef;
  std::vector<double> scale;
};

FTerms f_terms(std::uint64_t a, std::uint64_t b, const DirichletPoly& poly) {
  require(a >= 1 && b >= 1 && arith::binary_gcd(a, b) == 1, "F needs coprime a, b >= 1");
  require(a * b > 1, "F needs a b > 1");
  std::map<unsigned __int128, double> merged;  // keyed by the reduced denominator
  for (std::uint64_t m : poly.support()) {
    for (std::uint64_t n : poly.support()) {
      const unsigned __int128 ma = static_cast<unsigned __int128>(m) * a;
      const unsigned __int128 nb = static_cast<unsigned __int128>(n) * b;
      if (ma >> 64 || nb >> 64) throw OverflowError("F: m a or n b exceeds 64 bits");
      const std::uint64_t g = arith::binary_gcd(static_cast<std::uint64_t>(ma), static_cast<std::uint64_t>(nb));
      // g^2 / (m a n b) = (g / ma') (g / nb') reduced: both factors are 1 / integer.
      const unsigned __int128 den = (ma / g) * (nb / g);
      const double c = poly[m] * poly[n] / (static_cast<double>(m) * static_cast<double>(n)) *
                       static_cast<double>(g);
      merged[den] += c;
    }
  }
  FTerms out;
  for (const auto& [den, c] : merged) {
    if (c == 0.0) continue;
    out.coef.push_back(c);
    out.scale.push_back(1.0 / (kTwoPi * static_cast<double>(den)));
  }
  return out;
}

double apply_terms(const FTerms& f, double x, const ContourConfig& contour) {
  CompensatedSum acc;
  for (std::size_t j = 0; j < f.coef.size(); ++j) acc.add(f.coef[j] * eval_H(x * f.scale[j], contour));
  return acc.value();
}

void check_power(int power) { require(power == 1 || power == 2, "moment power must be 1 or 2"); }

std::vector<cplx> product_values(std::span<const double> taus, const DirichletPoly& poly,
                                 const MomentOptions& opt, Integrand what) {
  std::vector<cplx> out(taus.size());
  for_each_index(taus.size(), opt.exec, [&](std::size_t i) {
    const cplx b = poly.critical_value(taus[i]);
    out[i] = what == Integrand::zeta_poly ? zeta_critical(taus[i], opt.zeta) * b : b;
  });
  return out;
}

}  // namespace

void MomentOptions::validate() const {
  zeta.validate();
  contour.validate();
  require(nodes_per_unit_t >= 20.0, "nodes_per_unit_t must be >= 20");
  require(nodes_per_unit_tau > 0.0, "nodes_per_unit_tau must be positive");
  require(rel_tol > 0.0 && rel_tol < 1.0, "rel_tol must lie in (0, 1)");
  require(max_doublings >= 1, "max_doublings must be >= 1");
  require(tuple_eps > 0.0 && tuple_eps < 0.5, "tuple_eps must lie in (0, 1/2)");
}

std::vector<std::int64_t> progression_support(const SmoothWindow& w, double T) {
  require(T > 0.0, "T must be positive");
  std::vector<std::int64_t> out;
  const auto lo = static_cast<std::int64_t>(std::floor(T));
  const auto hi = static_cast<std::int64_t>(std::ceil(2.0 * T));
  for (std::int64_t l = lo; l <= hi; ++l)
    if (w(static_cast<double>(l) / T) > 0.0) out.push_back(l);
  return out;
}

cplx discrete_twisted_moment(const ProgressionSpec& spec, const SmoothWindow& w, double T,
                             const DirichletPoly& poly, int power, const MomentOptions& opt,
                             Integrand what) {
  check_power(power);
  const auto ells = progression_support(w, T);
  std::vector<double> taus, weights;
  for (std::int64_t l : ells) {
    taus.push_back(spec.alpha * static_cast<double>(l) + spec.beta);
    weights.push_back(w(static_cast<double>(l) / T));
  }
  const auto vals = product_values(taus, poly, opt, what);
  if (power == 2) return weighted_square_sum(vals, weights);
  return weighted_sum(vals, weights);
}

cplx continuous_twisted_moment(const ProgressionSpec& spec, const SmoothWindow& w, double T,
                               const DirichletPoly& poly, int power, const MomentOptions& opt,
                               Integrand what) {
  check_power(power);
  require(T >= 100.0, "continuous moment needs T >= 100");
  opt.validate();
  const double density = std::max(opt.nodes_per_unit_t, opt.nodes_per_unit_tau * spec.alpha);
  const auto panels = static_cast<std::size_t>(std::ceil(T * density / kPanelOrder));
  auto eval = [&](const Grid& g) {
    std::vector<double> taus(g.t.size()), weights(g.t.size());
    for (std::size_t i = 0; i < g.t.size(); ++i) {
      taus[i] = spec.alpha * g.t[i] + spec.beta;
      weights[i] = g.w[i] * w(g.t[i] / T);
    }
    const auto vals = product_values(taus, poly, opt, what);
    return power == 2 ? cplx(weighted_square_sum(vals, weights)) : weighted_sum(vals, weights);
  };
  return integrate_doubling(eval, T, 2.0 * T, panels, opt.rel_tol, opt.max_doublings, 1e-12 * T,
                            "continuous moment");
}

double F_func(std::uint64_t a, std::uint64_t b, double t, const DirichletPoly& poly,
              const ProgressionSpec& spec, const ContourConfig& contour) {
  return apply_terms(f_terms(a, b, poly), spec.alpha * t + spec.beta, contour);
}

SeriesValue F_func_series(std::uint64_t a, std::uint64_t b, double t, const DirichletPoly& poly,
                          const ProgressionSpec& spec, const SeriesCaps& caps,
                          const ContourConfig& contour) {
  require(a >= 1 && b >= 1 && arith::binary_gcd(a, b) == 1, "F needs coprime a, b >= 1");
  require(a * b > 1, "F needs a b > 1");
  const double x = spec.alpha * t + spec.beta;
  require(x > 0.0, "F needs alpha t + beta > 0");
  CompensatedSum total, tail;
  const std::uint64_t decade = caps.r_max / 10;
  for (std::uint64_t r = 1; r <= caps.r_max; ++r) {
    const std::uint64_t ar = a * r;
    const std::uint64_t br = b * r;
    CompensatedSum row;
    for (std::uint64_t k : poly.support()) {
      if (k > ar || ar % k) continue;
      const std::uint64_t m = ar / k;
      for (std::uint64_t h : poly.support()) {
        if (h > br || br % h) continue;
        const std::uint64_t n = br / h;
        if (static_cast<double>(m) * static_cast<double>(n) > static_cast<double>(caps.mn_max)) continue;
        const double arg = kTwoPi * static_cast<double>(m) * static_cast<double>(n) / x;
        if (arg > 1e6) continue;  // W(1e6) < 1e-20
        row.add(poly[k] * poly[h] * eval_W(arg, contour));
      }
    }
    const double v = row.value() / static_cast<double>(r);
    total.add(v);
    if (r > decade) tail.add(v);
  }
  SeriesValue out;
  out.value = total.value();
  out.last_decade = std::abs(tail.value()) / std::max(std::abs(out.value), 1e-300);
  out.cap_warning = out.last_decade > 1e-6;
  return out;
}

double F_prime(std::uint64_t a, std::uint64_t b, const DirichletPoly& poly) {
  require(a >= 1 && b >= 1 && arith::binary_gcd(a, b) == 1, "F' needs coprime a, b >= 1");
  const std::uint64_t r_max = poly.length() / std::max(a, b);
  CompensatedSum acc;
  for (std::uint64_t r = 1; r <= r_max; ++r)
    acc.add(poly[a * r] * poly[b * r] / static_cast<double>(r));
  return acc.value();
}

EllTerm H_ell(std::uint64_t ell, const ProgressionSpec& spec, const SmoothWindow& w, double T,
              const DirichletPoly& poly, const MomentOptions& opt) {
  EllTerm out;
  out.ell = ell;
  out.tuple = find_tuple(spec, ell, T, opt.tuple_eps);
  if (!out.tuple) return out;
  const DiophantineTuple& tp = *out.tuple;
  const FTerms terms = f_terms(tp.a, tp.b, poly);
  if (terms.coef.empty()) return out;
  const double nu = tp.frequency(spec.alpha);
  // Poisson's ell-th frequency pairs (m, n) with n/m close to a/b and carries
  // exp(+2 pi i t nu).
  auto eval = [&](const Grid& g) {
    std::vector<cplx> vals(g.t.size());
    for_each_index(g.t.size(), opt.exec, [&](std::size_t i) {
      const double phi = w(g.t[i] / T);
      if (phi == 0.0) return;
      const double f = apply_terms(terms, spec.alpha * g.t[i] + spec.beta, opt.contour);
      vals[i] = g.w[i] * phi * f * std::exp(cplx(0.0, kTwoPi * g.t[i] * nu));
    });
    return pairwise_sum(std::span<const cplx>(vals));
  };
  const cplx integral =
      integrate_doubling(eval, T, 2.0 * T, 8, 1e-2 * opt.rel_tol, opt.max_doublings + 3, 1e-9 * T, "H(ell)");
  const double ab = static_cast<double>(tp.a) * static_cast<double>(tp.b);
  const cplx twist = std::exp(cplx(0.0, spec.beta * std::log(static_cast<double>(tp.a) / static_cast<double>(tp.b))));
  out.value = twist / std::sqrt(ab) * integral;
  return out;
}

std::uint64_t default_ell_max(const ProgressionSpec& spec, double T, const DirichletPoly& poly) {
  const double theta = std::log(static_cast<double>(poly.length())) / std::log(T);
  const double a = spec.alpha / kTwoPi;
  const double by_support = std::ceil(a * std::log(2.0 * spec.alpha * std::pow(T, 1.0 + theta))) + 1.0;
  const double by_square = std::ceil(a * std::log(T * T));
  return static_cast<std::uint64_t>(std::max({1.0, by_support, by_square}));
}

Prediction predict_E(const ProgressionSpec& spec, const SmoothWindow& w, double T,
                     const DirichletPoly& poly, std::uint64_t ell_max, const MomentOptions& opt) {
  opt.validate();
  Prediction out;
  CompensatedSum acc;
  for (std::uint64_t ell = 1; ell <= ell_max; ++ell) {
    EllTerm term = H_ell(ell, spec, w, T, poly, opt);
    acc.add(4.0 * term.value.real());
    if (term.tuple) out.terms.push_back(std::move(term));
  }
  out.value = acc.value();
  return out;
}

Prediction predict_E_prime(const ProgressionSpec& spec, const SmoothWindow& w, double T,
                           const DirichletPoly& poly, std::uint64_t ell_max,
                           const MomentOptions& opt) {
  opt.validate();
  Prediction out;
  CompensatedSum acc;
  for (std::uint64_t ell = 1; ell <= ell_max; ++ell) {
    EllTerm term;
    term.ell = ell;
    term.tuple = find_tuple(spec, ell, T, opt.tuple_eps);
    if (!term.tuple) continue;
    const DiophantineTuple& tp = *term.tuple;
    const double ab = static_cast<double>(tp.a) * static_cast<double>(tp.b);
    const cplx twist = std::exp(cplx(0.0, spec.beta * kTwoPi * log_over_two_pi(tp.a, tp.b)));
    // Summing phi(ell/T) e^{2 pi i nu ell} over ell gives T phi_hat(-T nu).
    const cplx spread = T * phi_hat(w, -T * tp.frequency(spec.alpha));
    term.value = twist / std::sqrt(ab) * spread * F_prime(tp.a, tp.b, poly);
    acc.add(2.0 * term.value.real());
    out.terms.push_back(term);
  }
  out.value = acc.value();
  return out;
}

MomentReport moment_report(const ProgressionSpec& spec, const SmoothWindow& w, double T,
                           const DirichletPoly& poly, const std::string& poly_id,
                           const MomentOptions& opt, bool with_prediction) {
  MomentReport r;
  r.T = T;
  r.edge = w.edge();
  r.poly_id = poly_id;
  r.discrete = discrete_twisted_moment(spec, w, T, poly, 2, opt).real();
  r.continuous = continuous_twisted_moment(spec, w, T, poly, 2, opt).real();
  r.E = r.discrete - r.continuous;
  r.ratio = r.discrete / r.continuous;
  if (with_prediction) {
    Prediction p = predict_E(spec, w, T, poly, default_ell_max(spec, T, poly), opt);
    r.predicted_E = p.value;
    r.terms = std::move(p.terms);
  }
  return r;
}

NonvanishingReport nonvanishing_bound(const ProgressionSpec& spec, const SmoothWindow& w, double T,
                                      double theta, const MomentOptions& opt) {
  const Mollifier mol = mollifier_coeffs(T, theta);
  NonvanishingReport r;
  r.first = discrete_twisted_moment(spec, w, T, mol.poly, 1, opt);
  r.second = discrete_twisted_moment(spec, w, T, mol.poly, 2, opt).real();
  if (r.second <= 0.0) throw ToleranceError("nonvanishing bound: second moment vanished");
  r.bound = std::norm(r.first) / (T * r.second);
  r.target = theta / (theta + 1.0) * w.plateau_mass();
  return r;
}

double empirical_nonvanishing(const ProgressionSpec& spec, double T, double threshold,
                              const MomentOptions& opt) {
  require(threshold >= 0.0, "threshold must be >= 0");
  require(T >= 1.0, "T must be >= 1");
  const auto lo = static_cast<std::int64_t>(std::ceil(T));
  const auto hi = static_cast<std::int64_t>(std::floor(2.0 * T));
  std::vector<double> taus;
  for (std::int64_t l = lo; l <= hi; ++l) taus.push_back(spec.alpha * static_cast<double>(l) + spec.beta);
  const auto z = zeta_values(taus, opt.zeta, opt.exec);
  std::size_t count = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double ell = static_cast<double>(lo + static_cast<std::int64_t>(i));
    if (std::abs(z[i]) > threshold / std::sqrt(std::log(ell))) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(z.size());
}

}  // namespace zap
