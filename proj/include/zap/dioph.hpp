#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace zap {

// e^{2 pi ell0 / alpha} = m / n. `candidate` marks a float-level detection that
// was never certified exactly; candidates do not feed the delta correction.
struct RationalForm {
  std::uint64_t ell0 = 1;
  std::uint64_t m = 2;
  std::uint64_t n = 1;
  bool candidate = false;

  bool operator==(const RationalForm&) const = default;
};

// Progression 1/2 + i(alpha ell + beta).
struct ProgressionSpec {
  double alpha = 1.0;
  double beta = 0.0;
  std::optional<RationalForm> rational;

  static ProgressionSpec from_alpha(double alpha, double beta = 0.0);
  // alpha = 2 pi ell0 / ln(m/n), with (ell0, m, n) normalized by minimal_fraction.
  static ProgressionSpec from_rational(std::uint64_t ell0, std::uint64_t m, std::uint64_t n,
                                       double beta = 0.0);

  bool exact_rational() const { return rational && !rational->candidate; }
  void validate() const;
};

struct DiophantineTuple {
  std::uint64_t ell = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  double quality = 0.0;     // |a/b - x| / x with x = e^{2 pi ell / alpha}
  double log_offset = 0.0;  // ln(a / (b x)), signed; exactly 0 for exact hits

  // alpha ln(a/b) / 2 pi - ell, the residual frequency of the tuple.
  double frequency(double alpha) const;
};

// Scan ell = 1..ell_max for a continued-fraction convergent p/q, q <= den_max, of
// e^{2 pi ell / alpha} with q |q x - p| <= 1e-12 x. The result is a candidate.
// The scan stops once x exceeds 1e12, where that tolerance no longer discriminates.
std::optional<RationalForm> detect_rational(const ProgressionSpec& spec, std::uint64_t ell_max,
                                            std::uint64_t den_max);

// Reduce to the representation with the smallest m: strip the largest common
// perfect power k of (m, n), then divide ell0 and k by gcd(ell0, k).
RationalForm minimal_fraction(const RationalForm& form);

// Rational-case correction factor; 0 unless the spec carries an exact form.
double delta(const ProgressionSpec& spec);

// Coprime (a, b), a b > 1, b < T^{1/2 - eps} e^{-pi ell / alpha}, with
// |a/b - x| <= x T^{-1 + eps}. Searches convergents and semiconvergents; if
// several qualify the closest is returned.
std::optional<DiophantineTuple> find_tuple(const ProgressionSpec& spec, std::uint64_t ell,
                                           double T, double eps);

// Reference path for find_tuple: every denominator below the cap, a = floor and
// ceil of b x.
std::optional<DiophantineTuple> find_tuple_exhaustive(const ProgressionSpec& spec,
                                                      std::uint64_t ell, double T, double eps);

// Largest denominator find_tuple may return, as a real bound (exclusive).
double tuple_denominator_cap(const ProgressionSpec& spec, std::uint64_t ell, double T,
                             double eps);

// Natural log of the transcendence lower bound exp(-2^72 ln(2m) ln p ln ln p).
double waldschmidt_log_bound(std::uint64_t m, std::uint64_t p);

// Every ell <= 2 ln T with coprime a, b < T^{1/2 - eps}, a b > 1 and
// |alpha ln(a/b) / 2 pi - ell| <= T^{-1 + eps}, found by exhaustive scan.
std::vector<DiophantineTuple> progression_tuples(const ProgressionSpec& spec, double T,
                                                 double eps);

}  // namespace zap
