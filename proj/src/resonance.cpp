#include "zap/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "zap/arith.hpp"
#include "zap/error.hpp"
#include "zap/quadrature.hpp"

namespace zap {

namespace {

constexpr double kEngineSlack = 1e-6;

struct Samples {
  std::vector<std::int64_t> ells;
  std::vector<double> weights;  // phi(ell / T)
  std::vector<cplx> b;          // B(1/2 + i tau)
  std::vector<cplx> zeta;       // zeta(1/2 + i tau), filled on demand
  std::vector<cplx> a;          // A(1/2 + i tau), filled on demand
};

Samples sample(const ProgressionSpec& spec, const SmoothWindow& w, double T, const Resonator& res,
               const MomentOptions& opt, bool want_zeta, bool want_a) {
  Samples s;
  s.ells = progression_support(w, T);
  const std::size_t n = s.ells.size();
  std::vector<double> taus(n);
  s.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    taus[i] = spec.alpha * static_cast<double>(s.ells[i]) + spec.beta;
    s.weights[i] = w(static_cast<double>(s.ells[i]) / T);
  }
  s.b = poly_values(taus, res.coeffs, opt.exec);
  const auto cutoff = static_cast<std::uint64_t>(std::floor(T));
  if (want_zeta) s.zeta = zeta_values(taus, opt.zeta, opt.exec);
  if (want_a) {
    s.a.resize(n);
    for_each_index(n, opt.exec, [&](std::size_t i) { s.a[i] = truncated_zeta(taus[i], cutoff, opt.zeta); });
  }
  return s;
}

void check_regime(const Resonator& res, double T) {
  require(T >= 100.0, "resonance needs T >= 100");
  if (res.regime == ResonanceRegime::strict)
    require(static_cast<double>(res.N) <= std::pow(T, 1.0 / 6.0),
            "strict resonance needs N <= T^{1/6}; use the exploratory regime at desk scale");
}

}  // namespace

std::vector<std::uint64_t> build_excluded_set(const ProgressionSpec& spec, double T, double eps) {
  require(T >= 100.0, "excluded set needs T >= 100");
  std::vector<std::uint64_t> out;
  for (const DiophantineTuple& t : progression_tuples(spec, T, eps)) {
    if (t.a > 1) out.push_back(arith::smallest_prime_factor(t.a));
    if (t.b > 1) out.push_back(arith::smallest_prime_factor(t.b));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Resonator resonator_coeffs(std::uint64_t N, ResonatorMode mode,
                           const std::vector<std::uint64_t>& excluded, ResonanceRegime regime,
                           std::uint64_t max_length) {
  require(N >= 100, "resonator needs N >= 100");
  if (N > max_length) throw CapacityError("resonator length exceeds the configured cap");
  Resonator r;
  r.N = N;
  r.mode = mode;
  r.regime = regime;
  r.excluded = excluded;
  std::sort(r.excluded.begin(), r.excluded.end());
  const double ln_n = std::log(static_cast<double>(N));
  r.L = std::sqrt(ln_n * std::log(ln_n));
  r.prime_lo = r.L * r.L;
  const double strict_hi = std::exp(std::pow(std::log(r.L), 2));
  r.prime_hi = regime == ResonanceRegime::strict ? strict_hi : static_cast<double>(N);
  r.window_widened = regime == ResonanceRegime::exploratory && r.prime_hi != strict_hi;

  const arith::Sieve sieve(N);
  for (std::uint32_t p : sieve.primes) {
    if (p < r.prime_lo || p > r.prime_hi) continue;
    if (std::binary_search(r.excluded.begin(), r.excluded.end(), p)) continue;
    r.primes.push_back(p);
  }

  // Squarefree products of admissible primes up to N, depth first.
  std::vector<double> dense(N + 1, 0.0);
  dense[1] = 1.0;
  const double sign = mode == ResonatorMode::min ? -1.0 : 1.0;
  std::function<void(std::size_t, std::uint64_t, double)> dfs = [&](std::size_t from, std::uint64_t n,
                                                                    double b) {
    for (std::size_t i = from; i < r.primes.size(); ++i) {
      const std::uint64_t p = r.primes[i];
      if (n * p > N) break;
      // sqrt(p) r(p) = L / ln p
      const double bp = sign * b * r.L / std::log(static_cast<double>(p));
      dense[n * p] = bp;
      dfs(i + 1, n * p, bp);
    }
  };
  dfs(0, 1, 1.0);
  r.coeffs = DirichletPoly(std::move(dense));
  return r;
}

Resonator trivial_resonator(ResonatorMode mode) {
  Resonator r;
  r.N = 1;
  r.mode = mode;
  return r;
}

cplx truncated_zeta(double tau, std::uint64_t cutoff, const ZetaEngineConfig& cfg) {
  const cplx s(0.5, tau);
  const cplx z = zeta_critical(tau, cfg);
  return partial_zeta_sum(s, cutoff, z, cfg);
}

RatioReport ratio_R(const ProgressionSpec& spec, const SmoothWindow& w, double T,
                    const Resonator& res, const MomentOptions& opt) {
  check_regime(res, T);
  const Samples s = sample(spec, w, T, res, opt, false, true);
  std::vector<double> bw(s.b.size());
  for (std::size_t i = 0; i < bw.size(); ++i) bw[i] = s.weights[i] * std::norm(s.b[i]);
  RatioReport out;
  out.numerator = weighted_sum(s.a, bw);
  out.denominator = pairwise_sum(std::span<const double>(bw));
  if (out.denominator < 1e-12) throw ToleranceError("ratio_R: resonator mass below 1e-12");
  out.ratio = out.numerator / out.denominator;
  out.abs_ratio = std::abs(out.ratio);
  out.imag_relative = std::abs(out.ratio.imag()) / std::max(out.abs_ratio, 1e-300);
  return out;
}

EulerPrediction euler_product_prediction(const Resonator& res) {
  EulerPrediction e;
  CompensatedSum lg, first;
  for (std::uint64_t p : res.primes) {
    const double x = res.coeffs[p] / static_cast<double>(p);
    lg.add(std::log1p(x));
    first.add(x);
  }
  e.log_value = lg.value();
  e.value = std::exp(e.log_value);
  e.first_order = first.value();
  if (res.N >= 16) {
    const double ln_n = std::log(static_cast<double>(res.N));
    const double g = std::sqrt(ln_n / std::log(ln_n));
    e.envelope = std::exp(res.mode == ResonatorMode::min ? -g : g);
  }
  return e;
}

ExtremeReport extreme_search(const ProgressionSpec& spec, const SmoothWindow& w, double T,
                             const Resonator& res, const MomentOptions& opt) {
  check_regime(res, T);
  const Samples s = sample(spec, w, T, res, opt, true, true);
  const std::size_t n = s.ells.size();
  const bool want_max = res.mode == ResonatorMode::max;

  std::vector<double> bw(n), mags(n);
  for (std::size_t i = 0; i < n; ++i) {
    bw[i] = s.weights[i] * std::norm(s.b[i]);
    mags[i] = std::abs(s.zeta[i]);
  }
  const double denom = pairwise_sum(std::span<const double>(bw));
  if (denom < 1e-12) throw ToleranceError("extreme_search: resonator mass below 1e-12");

  ExtremeReport out;
  out.abs_ratio = std::abs(weighted_sum(s.a, bw) / denom);
  out.slack = 2.0 / std::sqrt(T) + kEngineSlack;

  std::vector<double> sorted_bw = bw;
  const std::size_t k = n - std::max<std::size_t>(1, n / 10);
  std::nth_element(sorted_bw.begin(), sorted_bw.begin() + static_cast<long>(k), sorted_bw.end());
  const double decile = sorted_bw[k];

  auto better = [&](double x, double y) { return want_max ? x > y : x < y; };
  std::size_t star = n, global = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (better(mags[i], mags[global])) global = i;
    if (bw[i] >= decile && (star == n || better(mags[i], mags[star]))) star = i;
  }
  out.ell_star = s.ells[star];
  out.zeta_star = s.zeta[star];
  out.ell_global = s.ells[global];
  out.abs_global = mags[global];

  std::vector<double> sorted_mags = mags;
  std::nth_element(sorted_mags.begin(), sorted_mags.begin() + static_cast<long>(n / 2), sorted_mags.end());
  out.median_abs = sorted_mags[n / 2];
  out.certified = want_max ? out.abs_global >= out.abs_ratio - out.slack
                           : out.abs_global <= out.abs_ratio + out.slack;
  return out;
}

cplx continuous_resonated_moment(const ProgressionSpec& spec, const SmoothWindow& w, double T,
                                 const Resonator& res, bool with_A, const MomentOptions& opt) {
  check_regime(res, T);
  opt.validate();
  const double density = std::max(opt.nodes_per_unit_t, opt.nodes_per_unit_tau * spec.alpha);
  const auto cutoff = static_cast<std::uint64_t>(std::floor(T));
  const auto& rule = quad::gauss_legendre(20);
  auto eval = [&](std::size_t panels) {
    const double h = T / static_cast<double>(panels);
    std::vector<cplx> vals(panels * 20);
    for_each_index(vals.size(), opt.exec, [&](std::size_t j) {
      const std::size_t p = j / 20, i = j % 20;
      const double t = T + h * (static_cast<double>(p) + 0.5 + 0.5 * rule.nodes[i]);
      const double tau = spec.alpha * t + spec.beta;
      const double wt = 0.5 * h * rule.weights[i] * w(t / T) * std::norm(res.coeffs.critical_value(tau));
      vals[j] = with_A ? wt * truncated_zeta(tau, cutoff, opt.zeta) : cplx(wt);
    });
    return pairwise_sum(std::span<const cplx>(vals));
  };
  auto panels = static_cast<std::size_t>(std::ceil(T * density / 20.0));
  cplx prev = eval(panels);
  for (int d = 0; d < opt.max_doublings; ++d) {
    panels *= 2;
    const cplx cur = eval(panels);
    if (std::abs(cur - prev) <= opt.rel_tol * std::abs(cur)) return cur;
    prev = cur;
  }
  throw QuadratureError("continuous resonated moment: node doubling did not converge");
}

}  // namespace zap
