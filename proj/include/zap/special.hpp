#pragma once

#include "zap/numeric.hpp"

namespace zap {

// Truncated vertical contour Re w = sigma, |Im w| <= height_cut, sampled by
// composite 20-point Gauss-Legendre at roughly nodes_per_unit nodes per unit height.
struct ContourConfig {
  double sigma = 0.5;
  double height_cut = 12.0;
  int nodes_per_unit = 40;

  void validate() const;
  bool operator==(const ContourConfig&) const = default;
};

// Below this W uses the contour shifted to Re w = -sigma plus the residue at 0.
inline constexpr double kWShiftBelow = 1e-4;
// At and above this the arithmetic transform returns its asymptotic 1/2 ln x + gamma.
inline constexpr double kHAsymptoticFrom = 1e4;

// The smoothing kernel G(w) = exp(w^2).
cplx eval_G(cplx w);

// W(x) = (1 / 2 pi i) int_(sigma) x^{-w} G(w) dw / w by contour quadrature.
// Throws ToleranceError if the discarded imaginary part exceeds 1e-9.
double eval_W(double x, const ContourConfig& cfg = {});

// Closed form of the same transform for G = exp(w^2): erfc(ln x / 2) / 2.
// Used as the fast path inside long sums and as an independent oracle.
double w_exact(double x);

// H(x) = (1 / 2 pi i) int_(sigma) zeta(1 + 2w) x^w G(w) dw / w. The pole of
// zeta(1 + 2w) at w = 0 stays left of the contour. `asymptotic` (if given)
// reports whether the 1/2 ln x + gamma branch was taken.
double eval_H(double x, const ContourConfig& cfg = {}, bool* asymptotic = nullptr);

}  // namespace zap
