#include "zap/kernels.hpp"

#include <atomic>

#include "zap/error.hpp"

namespace zap {

namespace {
std::atomic<Exec> g_exec{Exec::parallel};
}

Exec default_exec() { return g_exec.load(); }
void set_default_exec(Exec e) { g_exec.store(e); }

std::vector<cplx> zeta_values(std::span<const double> taus, const ZetaEngineConfig& cfg,
                              Exec exec) {
  std::vector<cplx> out(taus.size());
  for_each_index(taus.size(), exec, [&](std::size_t i) { out[i] = zeta_critical(taus[i], cfg); });
  return out;
}

std::vector<cplx> poly_values(std::span<const double> taus, const DirichletPoly& poly, Exec exec) {
  std::vector<cplx> out(taus.size());
  for_each_index(taus.size(), exec, [&](std::size_t i) { out[i] = poly.critical_value(taus[i]); });
  return out;
}

double weighted_square_sum(std::span<const cplx> v, std::span<const double> w) {
  require(v.size() == w.size(), "weighted sum needs matching lengths");
  std::vector<double> terms(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) terms[i] = w[i] * std::norm(v[i]);
  return pairwise_sum(std::span<const double>(terms));
}

cplx weighted_sum(std::span<const cplx> v, std::span<const double> w) {
  require(v.size() == w.size(), "weighted sum needs matching lengths");
  std::vector<cplx> terms(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) terms[i] = w[i] * v[i];
  return pairwise_sum(std::span<const cplx>(terms));
}

}  // namespace zap
