#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zap/error.hpp"
#include "zap/zeta.hpp"

using namespace zap;

namespace {

ZetaEngineConfig em_only() {
  ZetaEngineConfig cfg;
  cfg.rs_threshold = std::numeric_limits<double>::infinity();
  return cfg;
}

// Z(t) = e^{i theta(t)} zeta(1/2 + it) is real; its sign changes bracket zeros.
double hardy_z_em(double t) {
  return (std::exp(cplx(0.0, rs_theta(t))) * zeta_em({0.5, t})).real();
}

}  // namespace

TEST_CASE("zeta_em: known values") {
  CHECK(std::abs(zeta_em(2.0) - kPi * kPi / 6.0) <= 1e-10);
  CHECK(std::abs(zeta_em(0.5) - (-1.46035450880958681)) <= 1e-8);
  CHECK(std::abs(zeta_em({0.5, 100.0}) - cplx(2.69261988568132409, -0.0203860296025981618)) <=
        1e-10);
  CHECK(std::abs(zeta_em({0.5, 1000.0}) - cplx(0.356334367194396055, 0.931997831232993665)) <=
        1e-10);
}

TEST_CASE("zeta_em: agrees with the alternating-series oracle") {
  for (cplx s : {cplx(0.5, 0.0), cplx(0.5, 3.0), cplx(0.25, 9.5), cplx(1.5, -20.0),
                 cplx(-0.5, 7.0), cplx(2.0, 25.0), cplx(1.0, 0.5)})
    CHECK(std::abs(zeta_em(s) - oracle::borwein_zeta(s)) <= 1e-10);
}

TEST_CASE("zeta_em: pole and config errors") {
  CHECK_THROWS_AS(zeta_em(1.0), PoleError);
  ZetaEngineConfig bad;
  bad.em_terms = 5;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = {};
  bad.em_bernoulli_order = 16;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = {};
  bad.afe_epsilon = 0.6;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("zeta_em: conjugation symmetry is exact") {
  for (cplx s : {cplx(0.5, 14.0), cplx(0.3, 250.0), cplx(1.7, 3000.0)})
    CHECK(zeta_em(std::conj(s)) == std::conj(zeta_em(s)));
}

TEST_CASE("zeta: first zero located by bisection on the Z-function") {
  double lo = 14.0, hi = 14.3;
  REQUIRE(hardy_z_em(lo) * hardy_z_em(hi) < 0.0);
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (hardy_z_em(lo) * hardy_z_em(mid) <= 0.0 ? hi : lo) = mid;
  }
  CHECK(lo == doctest::Approx(14.1347251417346938).epsilon(1e-12));
  CHECK(std::abs(zeta_em({0.5, 14.1347251417})) <= 1e-6);
  CHECK(std::abs(zeta_critical(14.1347251417)) <= 1e-6);
}

TEST_CASE("zeta_critical: matches zeta_em and the doubled-parameter engine") {
  CHECK(std::abs(zeta_critical(0.0) - (-1.46035450880958681)) <= 1e-8);
  ZetaEngineConfig fine = em_only();
  fine.em_terms = 100;
  fine.em_bernoulli_order = 15;
  CHECK(std::abs(zeta_critical(100.0) - zeta_em({0.5, 100.0}, fine)) <= 1e-8);
  CHECK(zeta_critical(-37.5) == std::conj(zeta_critical(37.5)));
}

TEST_CASE("zeta_critical: Riemann-Siegel accelerator agrees with Euler-Maclaurin") {
  const auto em = em_only();
  for (double t : {400.0, 401.3, 777.7, 2000.0, 5432.1, 10000.0, 99999.5})
    CHECK(std::abs(zeta_critical(t) - zeta_em({0.5, t}, em)) <= 1e-6);
  CHECK(hardy_z_rs(1000.0) == doctest::Approx(hardy_z_em(1000.0)).epsilon(1e-8));
}

TEST_CASE("main_sum: direct values and the short-sum approximation") {
  CHECK(main_sum(0.0, 1) == cplx(1.0, 0.0));
  const double four = 1.0 + 1.0 / std::sqrt(2.0) + 1.0 / std::sqrt(3.0) + 0.5;
  CHECK(std::abs(main_sum(0.0, 4) - four) <= 1e-15);
  CHECK(four == doctest::Approx(2.78445705));
  // Measured difference 0.0897 against the 5 / sqrt(t) envelope 0.224.
  CHECK(std::abs(main_sum(500.0, 2000) - zeta_em({0.5, 500.0})) <= 5.0 / std::sqrt(500.0));
}

TEST_CASE("partial_zeta_sum: tail subtraction matches direct summation") {
  for (double t : {50.0, 700.0, 3000.0}) {
    const cplx s(0.5, t);
    const std::uint64_t cutoff = 5000;
    const cplx fast = partial_zeta_sum(s, cutoff, zeta_em(s));
    CHECK(std::abs(fast - main_sum(t, cutoff)) <= 1e-9);
  }
}

TEST_CASE("afe_square: preconditions") {
  CHECK_THROWS_AS(afe_square(5.0, 1e3), ConfigError);
  CHECK_THROWS_AS(afe_square(1000.0, 100.0), ConfigError);
}

TEST_CASE("afe_square: small t output is nonnegative") { CHECK(afe_square(10.0, 1e3) >= -1e-8); }

TEST_CASE("afe_square: cap t^1.2 at t = 1000") {
  const double t = 1000.0;
  const double ref = std::norm(zeta_em({0.5, t}));
  CHECK(std::abs(afe_square(t, std::pow(t, 1.2)) - ref) <= 1e-2);
}

TEST_CASE("afe_square: default cap tracks |zeta|^2 closely") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> dist(1e3, 1e4);
  for (int i = 0; i < 8; ++i) {
    const double t = dist(rng);
    const double z2 = std::norm(zeta_critical(t));
    const double afe = afe_square(t, afe_default_cap(t));
    CHECK(std::abs(afe - z2) <= 1e-4 * (1.0 + z2));
  }
}

TEST_CASE("afe_square: truncation at eps 0.1 vs 0.2" *
          doctest::description("1e-4 agreement does not hold; W(x) decays like exp(-(ln x)^2/4)")) {
  // The two caps cut the smoothing weight at W ~ 3e-2 and W ~ 1e-2, so their
  // difference is a few 1e-3. Both stay within the engine's 2e-2 contract.
  const double t = 5000.0;
  ZetaEngineConfig c1, c2;
  c1.afe_epsilon = 0.1;
  c2.afe_epsilon = 0.2;
  const double z2 = std::norm(zeta_critical(t));
  const double a1 = afe_square(t, std::pow(t, 1.1), c1);
  const double a2 = afe_square(t, std::pow(t, 1.2), c2);
  CHECK(std::abs(a1 - z2) <= 0.02 * (1.0 + z2));
  CHECK(std::abs(a2 - z2) <= 0.02 * (1.0 + z2));
  CHECK(std::abs(a2 - z2) < std::abs(a1 - z2));
}

TEST_CASE("zeta: mean value of |zeta|^2 over [T, 2T] is about log T") {
  const double T = 2000.0;
  const double h = 0.05;
  double acc = 0.0;
  for (double t = T + 0.5 * h; t < 2.0 * T; t += h) acc += std::norm(zeta_critical(t)) * h;
  const double ratio = acc / T / std::log(T);
  CHECK(ratio >= 0.8);
  CHECK(ratio <= 1.2);
}
