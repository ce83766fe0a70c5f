#include "zap/window.hpp"

#include <algorithm>
#include <cmath>

#include "zap/error.hpp"
#include "zap/quadrature.hpp"

namespace zap {

double smooth_step(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  const double f = std::exp(-1.0 / u);
  const double g = std::exp(-1.0 / (1.0 - u));
  return f / (f + g);
}

SmoothWindow::SmoothWindow(double edge) : edge_(edge), plateau_mass_(0.0) {
  require(edge > 0.0 && edge < 0.5, "window edge must lie in (0, 1/2)");
  auto ramp = [this](double x) { return (*this)(x); };
  const double ramps = quad::adaptive(ramp, 1.0, 1.0 + edge_, 1e-15, 20, 4) +
                       quad::adaptive(ramp, 2.0 - edge_, 2.0, 1e-15, 20, 4);
  plateau_mass_ = ramps + (1.0 - 2.0 * edge_);
}

double SmoothWindow::operator()(double x) const {
  if (x <= 1.0 || x >= 2.0) return 0.0;
  return smooth_step((x - 1.0) / edge_) * smooth_step((2.0 - x) / edge_);
}

cplx phi_hat(const SmoothWindow& w, double xi) {
  if (xi == 0.0) return {w.plateau_mass(), 0.0};
  const double edge = w.edge();
  const double lo = 1.0 + edge;
  const double hi = 2.0 - edge;
  const double omega = kTwoPi * xi;

  // Plateau in closed form: int_lo^hi exp(-i omega t) dt.
  const cplx plateau = (std::exp(cplx(0.0, -omega * lo)) - std::exp(cplx(0.0, -omega * hi))) /
                       cplx(0.0, omega);

  // Ramps: oscillation-aware panels no longer than 1 / (4 |xi|).
  auto integrand = [&](double t) { return w(t) * std::exp(cplx(0.0, -omega * t)); };
  const double max_panel = std::abs(xi) > 1.0 ? 0.25 / std::abs(xi) : edge;
  const auto panels = static_cast<std::size_t>(std::max(1.0, std::ceil(edge / max_panel)));
  const cplx left = quad::adaptive(integrand, 1.0, lo, 5e-12, 20, panels);
  const cplx right = quad::adaptive(integrand, hi, 2.0, 5e-12, 20, panels);
  return plateau + left + right;
}

}  // namespace zap
