#pragma once

#include <cmath>
#include <cstddef>
#include <type_traits>
#include <vector>

#include "zap/error.hpp"
#include "zap/numeric.hpp"

namespace zap::quad {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Cached; the returned reference stays valid for the program's lifetime.
const GaussRule& gauss_legendre(int order);

template <typename F>
using result_t = std::decay_t<std::invoke_result_t<F, double>>;

template <typename F>
result_t<F> gauss(F&& f, double a, double b, const GaussRule& rule) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  result_t<F> acc{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * half;
}

// Equal-width panels, one Gauss rule per panel.
template <typename F>
result_t<F> composite(F&& f, double a, double b, std::size_t panels, int order) {
  const GaussRule& rule = gauss_legendre(order);
  const double h = (b - a) / static_cast<double>(panels);
  result_t<F> acc{};
  for (std::size_t p = 0; p < panels; ++p) acc += gauss(f, a + h * p, a + h * (p + 1), rule);
  return acc;
}

namespace detail {

template <typename T>
double magnitude(const T& v) {
  return std::abs(v);
}

template <typename F, typename R>
R adapt(F& f, double a, double b, R whole, double tol, const GaussRule& rule, int depth,
        long& budget) {
  const double mid = 0.5 * (a + b);
  const R left = gauss(f, a, mid, rule);
  const R right = gauss(f, mid, b, rule);
  const R both = left + right;
  if (magnitude(both - whole) <= tol) return both;
  if (depth <= 0 || --budget <= 0)
    throw QuadratureError("adaptive Gauss-Legendre did not converge");
  return adapt(f, a, mid, left, 0.5 * tol, rule, depth - 1, budget) +
         adapt(f, mid, b, right, 0.5 * tol, rule, depth - 1, budget);
}

}  // namespace detail

// Recursive bisection until a panel and its two halves agree to the local share
// of abs_tol. Starts from `initial_panels` equal panels.
template <typename F>
result_t<F> adaptive(F&& f, double a, double b, double abs_tol, int order = 20,
                     std::size_t initial_panels = 1, int max_depth = 40) {
  const GaussRule& rule = gauss_legendre(order);
  long budget = 200000;
  const double h = (b - a) / static_cast<double>(initial_panels);
  const double local_tol = abs_tol / static_cast<double>(initial_panels);
  result_t<F> acc{};
  for (std::size_t p = 0; p < initial_panels; ++p) {
    const double lo = a + h * p;
    const double hi = a + h * (p + 1);
    acc += detail::adapt(f, lo, hi, gauss(f, lo, hi, rule), local_tol, rule, max_depth, budget);
  }
  return acc;
}

}  // namespace zap::quad
