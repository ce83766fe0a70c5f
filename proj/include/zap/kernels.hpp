#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zap/dirichlet.hpp"
#include "zap/numeric.hpp"
#include "zap/zeta.hpp"

namespace zap {

// Serial is the reference path; Parallel fans the same per-index work out over
// OpenMP threads. Each index is computed independently and written to its own
// slot, and reductions run afterwards in a fixed order, so both paths return
// bit-identical results.
enum class Exec { serial, parallel };

Exec default_exec();
void set_default_exec(Exec e);

template <typename F>
void for_each_index(std::size_t n, Exec exec, F&& f) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (long long i = 0; i < count; ++i) f(static_cast<std::size_t>(i));
}

// zeta(1/2 + i tau_j).
std::vector<cplx> zeta_values(std::span<const double> taus, const ZetaEngineConfig& cfg,
                              Exec exec = default_exec());

// B(1/2 + i tau_j).
std::vector<cplx> poly_values(std::span<const double> taus, const DirichletPoly& poly,
                              Exec exec = default_exec());

// sum_j w_j |v_j|^2 and sum_j w_j v_j by pairwise reduction.
double weighted_square_sum(std::span<const cplx> v, std::span<const double> w);
cplx weighted_sum(std::span<const cplx> v, std::span<const double> w);

}  // namespace zap
