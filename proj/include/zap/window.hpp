#pragma once

#include "zap/numeric.hpp"

namespace zap {

// Smooth bump supported on [1, 2], equal to 1 on [1 + edge, 2 - edge].
//
// phi(x) = S((x - 1) / edge) * S((2 - x) / edge) with the C-infinity ramp
// S(u) = f(u) / (f(u) + f(1 - u)), f(u) = exp(-1/u) for u > 0 and 0 otherwise.
// Since S(u) + S(1 - u) = 1, each ramp integrates to edge / 2 and the total mass
// is exactly 1 - edge.
class SmoothWindow {
 public:
  static constexpr double kDefaultEdge = 0.05;

  explicit SmoothWindow(double edge = kDefaultEdge);

  double edge() const { return edge_; }
  // Integral of phi, i.e. phi_hat(0), by quadrature at construction.
  double plateau_mass() const { return plateau_mass_; }

  double operator()(double x) const;

 private:
  double edge_;
  double plateau_mass_;
};

// The ramp S(u).
double smooth_step(double u);

inline double eval_phi(const SmoothWindow& w, double x) { return w(x); }

// phi_hat(xi) = int phi(t) exp(-2 pi i xi t) dt, absolute accuracy ~1e-10.
// Throws QuadratureError if the adaptive rule fails to converge.
cplx phi_hat(const SmoothWindow& w, double xi);

}  // namespace zap
