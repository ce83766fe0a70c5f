#include "zap/dioph.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <bit>
#include <cmath>
#include <limits>

#include "zap/arith.hpp"
#include "zap/error.hpp"
#include "zap/numeric.hpp"

namespace zap {

namespace mp = boost::multiprecision;

namespace {

// 256-bit binary float: convergent denominators up to ~1e30 stay trustworthy.
using Big = mp::number<mp::cpp_bin_float<256, mp::digit_base_2>, mp::et_off>;
using BigInt = mp::cpp_int;

constexpr double kMaxHeight = 1e18;
constexpr double kDetectMaxTarget = 1e12;

// x = e^{2 pi ell / alpha}, with the exact fraction when the progression carries one.
struct Target {
  Big x;
  bool exact = false;
  BigInt num, den;
};

Target target(const ProgressionSpec& spec, std::uint64_t ell) {
  Target tg;
  if (spec.exact_rational()) {
    const RationalForm& r = *spec.rational;
    if (ell % r.ell0 == 0) {
      const auto k = static_cast<unsigned>(ell / r.ell0);
      tg.exact = true;
      tg.num = mp::pow(BigInt(r.m), k);
      tg.den = mp::pow(BigInt(r.n), k);
      tg.x = Big(tg.num) / Big(tg.den);
      return tg;
    }
    tg.x = mp::exp(Big(ell) / Big(r.ell0) * mp::log(Big(r.m) / Big(r.n)));
    return tg;
  }
  const Big pi = boost::math::constants::pi<Big>();
  tg.x = mp::exp(2 * pi * Big(ell) / Big(spec.alpha));
  return tg;
}

// Partial quotients of x, stopping once the convergent denominator reaches
// `den_stop` or the expansion terminates.
std::vector<BigInt> partial_quotients(const Target& tg, const BigInt& den_stop) {
  std::vector<BigInt> out;
  BigInt k_prev = 1, k_cur = 0;  // denominators q_{i-2}, q_{i-1}
  if (tg.exact) {
    BigInt p = tg.num, q = tg.den;
    while (q != 0) {
      const BigInt a = p / q;
      out.push_back(a);
      const BigInt r = p - a * q;
      p = q;
      q = r;
      const BigInt k_next = a * k_cur + k_prev;
      k_prev = k_cur;
      k_cur = k_next;
      if (k_cur > den_stop) break;
    }
    return out;
  }
  Big y = tg.x;
  for (int i = 0; i < 200; ++i) {
    const Big fl = mp::floor(y);
    const BigInt a = fl.convert_to<BigInt>();
    out.push_back(a);
    const BigInt k_next = a * k_cur + k_prev;
    k_prev = k_cur;
    k_cur = k_next;
    const Big frac = y - fl;
    if (k_cur > den_stop || frac == 0) break;
    y = 1 / frac;
  }
  return out;
}

std::uint64_t to_u64(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw OverflowError("tuple component exceeds 64-bit range");
  return v.convert_to<std::uint64_t>();
}

struct Best {
  std::optional<DiophantineTuple> tuple;
  Big gap;
};

void consider(Best& best, const Target& tg, const BigInt& a, const BigInt& b, const Big& tol,
              std::uint64_t ell) {
  if (a <= 0 || b <= 0 || a * b <= 1) return;
  if (mp::gcd(a, b) != 1) return;
  const Big bx = Big(b) * tg.x;
  const Big gap = mp::abs(Big(a) - bx);
  if (gap > bx * tol) return;
  if (best.tuple && gap / Big(b) >= best.gap) return;
  DiophantineTuple t;
  t.ell = ell;
  t.a = to_u64(a);
  t.b = to_u64(b);
  const bool hit = tg.exact && BigInt(a) * tg.den == BigInt(b) * tg.num;
  t.quality = hit ? 0.0 : static_cast<double>(gap / bx);
  t.log_offset = hit ? 0.0 : static_cast<double>(mp::log(Big(a) / bx));
  best.tuple = t;
  best.gap = gap / Big(b);
}

void check_tuple_args(double T, double eps) {
  require(T >= 100.0, "tuple search needs T >= 100");
  require(eps > 0.0 && eps < 0.5, "tuple search needs 0 < eps < 1/2");
  if (T > kMaxHeight) throw OverflowError("T beyond the exact-arithmetic range");
}

}  // namespace

double DiophantineTuple::frequency(double alpha) const {
  return alpha * log_offset / kTwoPi;
}

ProgressionSpec ProgressionSpec::from_alpha(double alpha, double beta) {
  ProgressionSpec s;
  s.alpha = alpha;
  s.beta = beta;
  s.validate();
  return s;
}

ProgressionSpec ProgressionSpec::from_rational(std::uint64_t ell0, std::uint64_t m,
                                               std::uint64_t n, double beta) {
  require(ell0 >= 1 && m >= 1 && n >= 1, "rational form needs positive ell0, m, n");
  require(m > n, "rational form needs m > n so that alpha > 0");
  const RationalForm r = minimal_fraction({ell0, m, n, false});
  ProgressionSpec s;
  const Big pi = boost::math::constants::pi<Big>();
  s.alpha = static_cast<double>(2 * pi * Big(r.ell0) / mp::log(Big(r.m) / Big(r.n)));
  s.beta = beta;
  s.rational = r;
  s.validate();
  return s;
}

void ProgressionSpec::validate() const {
  require(std::isfinite(alpha) && alpha > 0.0, "alpha must be a positive finite number");
  require(std::isfinite(beta), "beta must be finite");
  if (!rational) return;
  const RationalForm& r = *rational;
  require(r.ell0 >= 1 && r.n >= 1, "rational form needs positive ell0 and n");
  require(arith::binary_gcd(r.m, r.n) == 1, "rational form needs gcd(m, n) = 1");
  require(r.m > r.n, "rational form needs m > n");
  const double implied = kTwoPi * static_cast<double>(r.ell0) /
                         std::log(static_cast<double>(r.m) / static_cast<double>(r.n));
  require(std::abs(alpha - implied) <= 1e-12 * alpha + 1e-15 * implied,
          "alpha is inconsistent with its rational form");
  RationalForm reduced = minimal_fraction(r);
  reduced.candidate = r.candidate;
  require(reduced == r, "rational form is not minimal");
}

RationalForm minimal_fraction(const RationalForm& form) {
  if (form.m == form.n) throw ConfigError("rational form needs m/n != 1");
  if (arith::binary_gcd(form.m, form.n) != 1) throw ConfigError("rational form needs gcd(m, n) = 1");
  require(form.ell0 >= 1, "rational form needs ell0 >= 1");
  const std::uint64_t top = std::max(form.m, form.n);
  std::uint64_t k = 1, r = form.m, s = form.n;
  for (unsigned kk = static_cast<unsigned>(std::bit_width(top)); kk >= 2; --kk) {
    const auto rr = arith::exact_root(form.m, kk);
    const auto ss = arith::exact_root(form.n, kk);
    if (rr && ss) {
      k = kk;
      r = *rr;
      s = *ss;
      break;
    }
  }
  const std::uint64_t d = arith::binary_gcd(form.ell0, k);
  const auto e = static_cast<unsigned>(k / d);
  return {form.ell0 / d, *arith::checked_pow(r, e), *arith::checked_pow(s, e), form.candidate};
}

std::optional<RationalForm> detect_rational(const ProgressionSpec& spec, std::uint64_t ell_max,
                                            std::uint64_t den_max) {
  require(!spec.rational, "detect_rational needs a progression without a rational form");
  for (std::uint64_t ell = 1; ell <= ell_max; ++ell) {
    const Target tg = target(spec, ell);
    // Past 1e12 a relative 1e-12 tolerance admits the nearest integer outright,
    // and x only grows with ell.
    if (tg.x > Big(kDetectMaxTarget)) break;
    const auto quotients = partial_quotients(tg, BigInt(den_max));
    BigInt h_prev = 0, h_cur = 1, k_prev = 1, k_cur = 0;
    for (const BigInt& a : quotients) {
      const BigInt h = a * h_cur + h_prev;
      const BigInt k = a * k_cur + k_prev;
      h_prev = h_cur;
      h_cur = h;
      k_prev = k_cur;
      k_cur = k;
      if (k > BigInt(den_max)) break;
      if (h > BigInt(std::numeric_limits<std::uint64_t>::max())) break;
      if (h == k) continue;
      // Scale-aware: q |q x - p| rather than |x - p/q| keeps large q honest.
      if (Big(k) * mp::abs(Big(k) * tg.x - Big(h)) <= Big(1e-12) * tg.x)
        return minimal_fraction({ell, h.convert_to<std::uint64_t>(), k.convert_to<std::uint64_t>(), true});
    }
  }
  return std::nullopt;
}

double delta(const ProgressionSpec& spec) {
  if (!spec.exact_rational()) return 0.0;
  const RationalForm r = minimal_fraction(*spec.rational);
  const double mn = static_cast<double>(r.m) * static_cast<double>(r.n);
  const double root = std::sqrt(mn);
  const double c = std::cos(spec.beta * std::log(static_cast<double>(r.m) / static_cast<double>(r.n)));
  return (2.0 * c * root - 2.0) / (mn + 1.0 - 2.0 * root * c);
}

double tuple_denominator_cap(const ProgressionSpec& spec, std::uint64_t ell, double T, double eps) {
  return std::pow(T, 0.5 - eps) * std::exp(-kPi * static_cast<double>(ell) / spec.alpha);
}

std::optional<DiophantineTuple> find_tuple(const ProgressionSpec& spec, std::uint64_t ell,
                                           double T, double eps) {
  check_tuple_args(T, eps);
  require(ell >= 1, "find_tuple needs ell >= 1");
  const double cap = tuple_denominator_cap(spec, ell, T, eps);
  if (cap <= 1.0) return std::nullopt;
  // Largest admissible denominator (strict inequality b < cap).
  const BigInt b_max = BigInt(static_cast<std::uint64_t>(std::ceil(cap)) - 1);
  const Target tg = target(spec, ell);
  const Big tol = mp::pow(Big(T), Big(eps) - 1);
  const auto quotients = partial_quotients(tg, b_max);

  // |a/b - x| <= x T^{eps-1} < 1/b^2 for admissible b, so a/b is a convergent or
  // one of the semiconvergents next to it.
  Best best;
  BigInt h_prev = 0, h_cur = 1, k_prev = 1, k_cur = 0;
  for (const BigInt& q : quotients) {
    auto try_j = [&](const BigInt& j) {
      if (j < 1 || j > q) return;
      const BigInt k = k_prev + j * k_cur;
      if (k > b_max) return;
      consider(best, tg, h_prev + j * h_cur, k, tol, ell);
    };
    if (q <= 64) {
      for (BigInt j = 1; j <= q; ++j) try_j(j);
    } else {
      try_j(1);
      try_j(q - 1);
      try_j(q);
      if (k_cur > 0) try_j((b_max - k_prev) / k_cur);
    }
    const BigInt h = q * h_cur + h_prev;
    const BigInt k = q * k_cur + k_prev;
    h_prev = h_cur;
    h_cur = h;
    k_prev = k_cur;
    k_cur = k;
    if (k_cur > b_max) break;
  }
  return best.tuple;
}

std::optional<DiophantineTuple> find_tuple_exhaustive(const ProgressionSpec& spec,
                                                      std::uint64_t ell, double T, double eps) {
  check_tuple_args(T, eps);
  require(ell >= 1, "find_tuple needs ell >= 1");
  const double cap = tuple_denominator_cap(spec, ell, T, eps);
  if (cap <= 1.0) return std::nullopt;
  if (cap > 1e8) throw CapacityError("exhaustive tuple scan beyond 1e8 denominators");
  const auto b_max = static_cast<std::uint64_t>(std::ceil(cap)) - 1;
  const Target tg = target(spec, ell);
  const Big tol = mp::pow(Big(T), Big(eps) - 1);
  Best best;
  for (std::uint64_t b = 1; b <= b_max; ++b) {
    const Big bx = Big(b) * tg.x;
    const BigInt lo = mp::floor(bx).convert_to<BigInt>();
    consider(best, tg, lo, BigInt(b), tol, ell);
    consider(best, tg, lo + 1, BigInt(b), tol, ell);
  }
  return best.tuple;
}

double waldschmidt_log_bound(std::uint64_t m, std::uint64_t p) {
  require(m >= 1, "Waldschmidt bound needs m >= 1");
  require(p >= 3, "Waldschmidt bound needs p >= 3 so that ln ln p > 0");
  const double lp = std::log(static_cast<double>(p));
  return -std::ldexp(1.0, 72) * std::log(2.0 * static_cast<double>(m)) * lp * std::log(lp);
}

std::vector<DiophantineTuple> progression_tuples(const ProgressionSpec& spec, double T,
                                                 double eps) {
  check_tuple_args(T, eps);
  const double side = std::pow(T, 0.5 - eps);
  if (side > 1e8) throw CapacityError("progression tuple scan beyond 1e8 denominators");
  const auto side_max = static_cast<std::uint64_t>(std::ceil(side)) - 1;
  const double freq_tol = std::pow(T, eps - 1.0);
  const auto ell_max = static_cast<std::uint64_t>(std::floor(2.0 * std::log(T)));
  std::vector<DiophantineTuple> out;
  for (std::uint64_t ell = 1; ell <= ell_max; ++ell) {
    const Target tg = target(spec, ell);
    if (tg.x >= Big(side_max)) continue;  // a >= b x would leave the box
    // |alpha ln(a/b) / 2pi - ell| <= tol  <=>  |ln(a / (b x))| <= 2 pi tol / alpha.
    const Big log_tol = Big(kTwoPi * freq_tol / spec.alpha);
    std::optional<DiophantineTuple> best;
    for (std::uint64_t b = 1; b <= side_max; ++b) {
      const Big bx = Big(b) * tg.x;
      const BigInt lo = mp::floor(bx).convert_to<BigInt>();
      for (const BigInt& a : {lo, BigInt(lo + 1)}) {
        if (a < 1 || a > BigInt(side_max) || a * b <= 1 || mp::gcd(a, BigInt(b)) != 1) continue;
        const Big off = mp::log(Big(a) / bx);
        if (mp::abs(off) > log_tol) continue;
        if (best && std::abs(best->log_offset) <= std::abs(static_cast<double>(off))) continue;
        const bool hit = tg.exact && a * tg.den == BigInt(b) * tg.num;
        best = DiophantineTuple{ell, a.convert_to<std::uint64_t>(), b,
                                hit ? 0.0 : static_cast<double>(mp::abs(Big(a) - bx) / bx),
                                hit ? 0.0 : static_cast<double>(off)};
      }
    }
    if (best) out.push_back(*best);
  }
  return out;
}

}  // namespace zap
