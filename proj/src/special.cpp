#include "zap/special.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "zap/error.hpp"
#include "zap/quadrature.hpp"
#include "zap/zeta.hpp"

namespace zap {

namespace {

constexpr int kPanelOrder = 20;
constexpr double kImagTolerance = 1e-9;

// Nodes w_j on a vertical segment with weights already folded into the
// integrand's x-independent factor, so a transform is sum_j c_j exp(+-w_j ln x).
struct ContourTable {
  std::vector<cplx> w;
  std::vector<cplx> coef;
};

std::vector<std::pair<cplx, double>> segment_nodes(double sigma, const ContourConfig& cfg) {
  const quad::GaussRule& rule = quad::gauss_legendre(kPanelOrder);
  const double span = 2.0 * cfg.height_cut;
  const auto panels = static_cast<int>(std::ceil(span * cfg.nodes_per_unit / kPanelOrder));
  const double h = span / panels;
  std::vector<std::pair<cplx, double>> out;
  out.reserve(static_cast<std::size_t>(panels) * kPanelOrder);
  for (int p = 0; p < panels; ++p) {
    const double mid = -cfg.height_cut + h * (p + 0.5);
    for (int i = 0; i < kPanelOrder; ++i)
      out.emplace_back(cplx(sigma, mid + 0.5 * h * rule.nodes[i]), 0.5 * h * rule.weights[i]);
  }
  return out;
}

// dw = i dy turns 1 / (2 pi i) into 1 / (2 pi).
ContourTable build_w_table(double sigma, const ContourConfig& cfg) {
  ContourTable t;
  for (const auto& [w, wt] : segment_nodes(sigma, cfg)) {
    t.w.push_back(w);
    t.coef.push_back(wt / kTwoPi * eval_G(w) / w);
  }
  return t;
}

ContourTable build_h_table(const ContourConfig& cfg) {
  ContourTable t;
  const ZetaEngineConfig zcfg;
  for (const auto& [w, wt] : segment_nodes(cfg.sigma, cfg)) {
    t.w.push_back(w);
    t.coef.push_back(wt / kTwoPi * zeta_em(1.0 + 2.0 * w, zcfg) * eval_G(w) / w);
  }
  return t;
}

enum class Kind { w_right, w_left, h };

const ContourTable& table(Kind kind, const ContourConfig& cfg) {
  using Key = std::tuple<int, double, double, int>;
  static std::mutex mu;
  static std::map<Key, std::unique_ptr<ContourTable>> cache;
  const Key key{static_cast<int>(kind), cfg.sigma, cfg.height_cut, cfg.nodes_per_unit};
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[key];
  if (!slot) {
    switch (kind) {
      case Kind::w_right: slot = std::make_unique<ContourTable>(build_w_table(cfg.sigma, cfg)); break;
      case Kind::w_left: slot = std::make_unique<ContourTable>(build_w_table(-cfg.sigma, cfg)); break;
      case Kind::h: slot = std::make_unique<ContourTable>(build_h_table(cfg)); break;
    }
  }
  return *slot;
}

double apply(const ContourTable& t, double log_x, const char* what) {
  CompensatedComplexSum acc;
  for (std::size_t j = 0; j < t.w.size(); ++j) acc.add(t.coef[j] * std::exp(t.w[j] * log_x));
  const cplx v = acc.value();
  if (std::abs(v.imag()) > kImagTolerance)
    throw ToleranceError(std::string(what) + ": imaginary residue above 1e-9");
  return v.real();
}

}  // namespace

void ContourConfig::validate() const {
  require(sigma > 0.0 && sigma <= 1.0, "contour sigma must lie in (0, 1]");
  require(height_cut >= 10.0, "contour height_cut must be >= 10");
  require(nodes_per_unit >= 20, "contour nodes_per_unit must be >= 20");
}

cplx eval_G(cplx w) { return std::exp(w * w); }

double w_exact(double x) { return 0.5 * std::erfc(0.5 * std::log(x)); }

double eval_W(double x, const ContourConfig& cfg) {
  require(x > 0.0, "W needs x > 0");
  cfg.validate();
  const double log_x = std::log(x);
  if (x <= kWShiftBelow) return 1.0 + apply(table(Kind::w_left, cfg), -log_x, "W");
  return apply(table(Kind::w_right, cfg), -log_x, "W");
}

double eval_H(double x, const ContourConfig& cfg, bool* asymptotic) {
  require(x > 0.0, "H needs x > 0");
  cfg.validate();
  const bool far = x >= kHAsymptoticFrom;
  if (asymptotic) *asymptotic = far;
  if (far) return 0.5 * std::log(x) + kEulerGamma;
  return apply(table(Kind::h, cfg), std::log(x), "H");
}

}  // namespace zap
