#include "zap/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <random>
#include <sstream>

#include "zap/error.hpp"
#include "zap/moments.hpp"
#include "zap/resonance.hpp"

namespace zap {

namespace {

using nlohmann::ordered_json;

struct Common {
  double alpha = 1.0;
  std::string alpha_rational;
  double beta = 0.0;
  double T = 2000.0;
  double edge = SmoothWindow::kDefaultEdge;
  int threads = 0;
  bool serial = false;
  bool timing = false;
  std::uint64_t seed = 1;
  std::string output;
  std::string csv;
};

ProgressionSpec make_spec(const Common& c) {
  if (c.alpha_rational.empty()) return ProgressionSpec::from_alpha(c.alpha, c.beta);
  std::uint64_t l0 = 0, m = 0, n = 0;
  char s1 = 0, s2 = 0;
  std::istringstream is(c.alpha_rational);
  if (!(is >> l0 >> s1 >> m >> s2 >> n) || s1 != ':' || s2 != ':' || !is.eof())
    throw ConfigError("--alpha-rational expects ell0:m:n, e.g. 1:2:1");
  return ProgressionSpec::from_rational(l0, m, n, c.beta);
}

ordered_json spec_json(const ProgressionSpec& s) {
  ordered_json j{{"alpha", s.alpha}, {"beta", s.beta}};
  if (s.rational)
    j["rational_form"] = {{"ell0", s.rational->ell0}, {"m", s.rational->m}, {"n", s.rational->n},
                          {"candidate", s.rational->candidate}};
  else
    j["rational_form"] = nullptr;
  return j;
}

ordered_json tuple_json(const DiophantineTuple& t, double alpha) {
  return {{"ell", t.ell}, {"a", t.a}, {"b", t.b}, {"quality", t.quality},
          {"frequency", t.frequency(alpha)}};
}

ordered_json cplx_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

// Fixed 17-significant-digit formatting keeps CSV files byte-stable.
std::string num(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

struct Csv {
  std::ostringstream body;
  void row(std::initializer_list<std::string> cells) {
    bool first = true;
    for (const auto& c : cells) {
      if (!first) body << ',';
      body << c;
      first = false;
    }
    body << '\n';
  }
};

struct Outcome {
  ordered_json result;
  ordered_json checks = ordered_json::array();
  std::optional<Csv> csv;
  bool ok = true;

  void check(const std::string& name, bool pass, double value, double bound) {
    checks.push_back({{"name", name}, {"pass", pass}, {"value", value}, {"bound", bound}});
    ok = ok && pass;
  }
};

MomentOptions options(const Common& c) {
  MomentOptions o;
  o.exec = c.serial ? Exec::serial : Exec::parallel;
  return o;
}

DirichletPoly pick_poly(const std::string& kind, double T, double theta) {
  if (kind == "one") return DirichletPoly::one();
  if (kind == "mollifier") return mollifier_coeffs(T, theta).poly;
  throw ConfigError("--poly must be 'one' or 'mollifier'");
}

Outcome cmd_moment(const Common& c, const std::string& poly_kind, double theta, bool predict) {
  const auto spec = make_spec(c);
  const SmoothWindow w(c.edge);
  const DirichletPoly poly = pick_poly(poly_kind, c.T, theta);
  const MomentOptions opt = options(c);
  const MomentReport r = moment_report(spec, w, c.T, poly, poly_kind, opt, predict);
  Outcome o;
  o.result = {{"discrete", r.discrete},   {"continuous", r.continuous},
              {"E", r.E},                 {"predicted_E", predict ? ordered_json(r.predicted_E) : ordered_json()},
              {"ratio", r.ratio},         {"delta", delta(spec)},
              {"one_plus_delta", 1.0 + delta(spec)}};
  ordered_json terms = ordered_json::array();
  for (const EllTerm& t : r.terms)
    terms.push_back({{"tuple", tuple_json(*t.tuple, spec.alpha)}, {"H", cplx_json(t.value)}});
  o.result["terms"] = terms;
  if (predict) {
    const double bound = std::max(0.1 * std::abs(r.E), 0.05 * r.continuous);
    o.check("prediction_closure", std::abs(r.E - r.predicted_E) <= bound, std::abs(r.E - r.predicted_E), bound);
  }
  if (!c.csv.empty()) {
    Csv csv;
    csv.row({"ell", "tau", "phi", "zeta_re", "zeta_im", "poly_re", "poly_im", "weighted_square"});
    for (std::int64_t l : progression_support(w, c.T)) {
      const double tau = spec.alpha * static_cast<double>(l) + spec.beta;
      const double phi = w(static_cast<double>(l) / c.T);
      const cplx z = zeta_critical(tau, opt.zeta);
      const cplx b = poly.critical_value(tau);
      csv.row({std::to_string(l), num(tau), num(phi), num(z.real()), num(z.imag()), num(b.real()),
               num(b.imag()), num(phi * std::norm(z * b))});
    }
    o.csv = std::move(csv);
  }
  return o;
}

Outcome cmd_delta(const Common& c) {
  const auto spec = make_spec(c);
  Outcome o;
  o.result = {{"delta", delta(spec)}, {"one_plus_delta", 1.0 + delta(spec)}};
  return o;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoull(s);
      return {v, v};
    }
    return {std::stoull(s.substr(0, dots)), std::stoull(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ConfigError("--ell expects an integer or a range lo..hi");
  }
}

Outcome cmd_dioph(const Common& c, const std::string& ells, double eps, std::uint64_t den_max) {
  const auto spec = make_spec(c);
  const auto [lo, hi] = parse_range(ells);
  require(lo >= 1 && lo <= hi, "--ell range must satisfy 1 <= lo <= hi");
  Outcome o;
  Csv csv;
  csv.row({"ell", "a", "b", "quality"});
  ordered_json rows = ordered_json::array();
  for (std::uint64_t ell = lo; ell <= hi; ++ell) {
    const auto t = find_tuple(spec, ell, c.T, eps);
    if (t) {
      rows.push_back(tuple_json(*t, spec.alpha));
      csv.row({std::to_string(ell), std::to_string(t->a), std::to_string(t->b), num(t->quality)});
    } else {
      rows.push_back({{"ell", ell}, {"tuple", nullptr}});
      csv.row({std::to_string(ell), "none", "none", "none"});
    }
  }
  o.result["tuples"] = rows;
  o.result["delta"] = delta(spec);
  if (!spec.rational) {
    const auto cand = detect_rational(spec, hi, den_max);
    o.result["rational_candidate"] =
        cand ? ordered_json{{"ell0", cand->ell0}, {"m", cand->m}, {"n", cand->n}, {"candidate", true}}
             : ordered_json();
  }
  o.csv = std::move(csv);
  return o;
}

Outcome cmd_firstmoment(const Common& c, double theta) {
  const auto spec = make_spec(c);
  const SmoothWindow w(c.edge);
  const auto mol = mollifier_coeffs(c.T, theta);
  const cplx first = discrete_twisted_moment(spec, w, c.T, mol.poly, 1, options(c));
  const double main = c.T * w.plateau_mass();
  Outcome o;
  o.result = {{"first_moment", cplx_json(first)}, {"main_term", main},
              {"deviation", std::abs(first - main)}, {"deviation_over_T_by_log_T", std::abs(first - main) / (c.T / std::log(c.T))}};
  o.check("first_moment_quarter", std::abs(first - main) <= 0.25 * c.T, std::abs(first - main), 0.25 * c.T);
  return o;
}

Outcome cmd_nonvanish(const Common& c, double theta, double threshold) {
  const auto spec = make_spec(c);
  const SmoothWindow w(c.edge);
  const MomentOptions opt = options(c);
  const NonvanishingReport r = nonvanishing_bound(spec, w, c.T, theta, opt);
  const double frac = empirical_nonvanishing(spec, c.T, threshold, opt);
  Outcome o;
  o.result = {{"first_moment", cplx_json(r.first)}, {"second_moment", r.second},
              {"bound", r.bound},                     {"asymptotic_target", r.target},
              {"threshold", threshold},               {"empirical_proportion", frac}};
  return o;
}

Outcome cmd_resonate(const Common& c, std::uint64_t N, const std::string& mode_s,
                     const std::string& regime_s, double eps) {
  const auto spec = make_spec(c);
  const SmoothWindow w(c.edge);
  const MomentOptions opt = options(c);
  ResonanceRegime regime;
  if (regime_s == "strict") regime = ResonanceRegime::strict;
  else if (regime_s == "exploratory") regime = ResonanceRegime::exploratory;
  else throw ConfigError("--regime must be 'strict' or 'exploratory'");
  std::vector<ResonatorMode> modes;
  if (mode_s == "max" || mode_s == "both") modes.push_back(ResonatorMode::max);
  if (mode_s == "min" || mode_s == "both") modes.push_back(ResonatorMode::min);
  if (modes.empty()) throw ConfigError("--mode must be 'max', 'min' or 'both'");

  const auto S = build_excluded_set(spec, c.T, eps);
  Outcome o;
  o.result["excluded"] = S;
  ordered_json runs = ordered_json::array();
  Csv csv;
  csv.row({"mode", "ell", "tau", "phi", "zeta_abs", "poly_weight"});
  for (ResonatorMode mode : modes) {
    const Resonator res = resonator_coeffs(N, mode, S, regime);
    const RatioReport rr = ratio_R(spec, w, c.T, res, opt);
    const EulerPrediction ep = euler_product_prediction(res);
    const ExtremeReport ex = extreme_search(spec, w, c.T, res, opt);
    const std::string name = mode == ResonatorMode::max ? "max" : "min";
    runs.push_back({{"mode", name},
                    {"N", res.N},
                    {"L", res.L},
                    {"prime_window", {res.prime_lo, res.prime_hi}},
                    {"window_widened", res.window_widened},
                    {"admissible_primes", res.primes.size()},
                    {"support", res.coeffs.support().size()},
                    {"ratio", cplx_json(rr.ratio)},
                    {"abs_ratio", rr.abs_ratio},
                    {"euler_prediction", ep.value},
                    {"asymptotic_envelope", ep.envelope},
                    {"witness_ell", ex.ell_star},
                    {"witness_abs_zeta", std::abs(ex.zeta_star)},
                    {"global_ell", ex.ell_global},
                    {"global_abs_zeta", ex.abs_global},
                    {"median_abs_zeta", ex.median_abs}});
    o.check("sandwich_" + name, ex.certified, ex.abs_global, ex.abs_ratio);
    if (!c.csv.empty()) {
      for (std::int64_t l : progression_support(w, c.T)) {
        const double tau = spec.alpha * static_cast<double>(l) + spec.beta;
        const double phi = w(static_cast<double>(l) / c.T);
        csv.row({name, std::to_string(l), num(tau), num(phi), num(std::abs(zeta_critical(tau, opt.zeta))),
                 num(phi * std::norm(res.coeffs.critical_value(tau)))});
      }
    }
  }
  o.result["runs"] = runs;
  if (!c.csv.empty()) o.csv = std::move(csv);
  return o;
}

// A fast cross-section of the invariant suite.
Outcome cmd_selftest(const Common& c) {
  Outcome o;
  const ZetaEngineConfig zc;
  o.check("zeta_2", std::abs(zeta_em(2.0, zc) - kPi * kPi / 6.0) <= 1e-10,
          std::abs(zeta_em(2.0, zc) - kPi * kPi / 6.0), 1e-10);
  const double z0 = std::abs(zeta_critical(14.1347251417, zc));
  o.check("first_zero", z0 <= 1e-6, z0, 1e-6);
  const double rs = std::abs(zeta_em({0.5, 2500.0}, zc) - zeta_critical(2500.0, zc));
  o.check("riemann_siegel_vs_em", rs <= 1e-6, rs, 1e-6);
  double w_err = 0.0;
  for (double x : {1e-6, 0.1, 1.0, 10.0, 100.0}) w_err = std::max(w_err, std::abs(eval_W(x) - w_exact(x)));
  o.check("W_contour_vs_closed_form", w_err <= 1e-9, w_err, 1e-9);
  CompensatedSum series;
  for (int r = 1; r <= 10000; ++r) series.add(w_exact(r * r / 10.0) / r);
  const double h_err = std::abs(eval_H(10.0) - series.value());
  o.check("H_series_identity", h_err <= 1e-6, h_err, 1e-6);
  const double d = delta(ProgressionSpec::from_rational(1, 2, 1));
  o.check("delta_two", std::abs(d - (2.0 + 2.0 * std::sqrt(2.0))) <= 1e-12, d, 2.0 + 2.0 * std::sqrt(2.0));

  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> alpha_dist(0.5, 6.0);
  int mismatches = 0;
  for (int i = 0; i < 40; ++i) {
    const auto spec = ProgressionSpec::from_alpha(alpha_dist(rng));
    for (std::uint64_t ell = 1; ell <= 3; ++ell) {
      const auto a = find_tuple(spec, ell, 1e6, 0.05);
      const auto b = find_tuple_exhaustive(spec, ell, 1e6, 0.05);
      if (a.has_value() != b.has_value() || (a && (a->a != b->a || a->b != b->b))) ++mismatches;
    }
  }
  o.check("tuple_vs_farey_scan", mismatches == 0, mismatches, 0);

  std::uniform_real_distribution<double> t_dist(1e3, 1e4);
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double t = t_dist(rng);
    const double z2 = std::norm(zeta_critical(t, zc));
    worst = std::max(worst, std::abs(afe_square(t, afe_default_cap(t, zc), zc) - z2) / (1.0 + z2));
  }
  o.check("afe_vs_zeta", worst <= 0.02, worst, 0.02);

  const SmoothWindow w(c.edge);
  const auto spec = ProgressionSpec::from_rational(1, 2, 1);
  const MomentReport r = moment_report(spec, w, 500.0, DirichletPoly::one(), "one", options(c));
  const double bound = std::max(0.1 * std::abs(r.E), 0.05 * r.continuous);
  o.check("prediction_closure_T500", std::abs(r.E - r.predicted_E) <= bound, std::abs(r.E - r.predicted_E), bound);
  o.result["passed"] = o.ok;
  return o;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file " + path);
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete and continuous moments of zeta on vertical progressions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Common c;
  auto add_common = [&c](CLI::App* sub, bool progression) {
    if (progression) {
      auto* a = sub->add_option("--alpha", c.alpha, "progression step alpha > 0");
      auto* r = sub->add_option("--alpha-rational", c.alpha_rational,
                                "exact form ell0:m:n meaning e^{2 pi ell0 / alpha} = m/n");
      a->excludes(r);
      sub->add_option("--beta", c.beta, "progression offset beta");
    }
    sub->add_option("--T", c.T, "height scale T (window support [T, 2T])");
    sub->add_option("--edge", c.edge, "window transition width in (0, 1/2)");
    sub->add_option("--threads", c.threads, "OpenMP threads (0 = runtime default)");
    sub->add_flag("--serial", c.serial, "use the serial reference kernels");
    sub->add_flag("--timing", c.timing, "include wall time in the report (breaks byte determinism)");
    sub->add_option("--seed", c.seed, "seed for randomized grids");
    sub->add_option("--output,-o", c.output, "JSON report path (default stdout)");
    sub->add_option("--csv", c.csv, "CSV sample path");
  };

  std::string poly_kind = "one";
  double theta = 0.3;
  bool no_predict = false;
  auto* moment = app.add_subcommand("moment", "discrete vs continuous second moment with prediction");
  add_common(moment, true);
  moment->add_option("--poly", poly_kind, "one | mollifier");
  moment->add_option("--theta", theta, "mollifier length exponent");
  moment->add_flag("--no-predict", no_predict, "skip the correction prediction");

  auto* delta_cmd = app.add_subcommand("delta", "rational-case correction factor");
  add_common(delta_cmd, true);

  std::string ells = "1..5";
  double eps = 0.05;
  std::uint64_t den_max = 1'000'000;
  auto* dioph = app.add_subcommand("dioph", "tuples (a, b) of the diophantine condition");
  add_common(dioph, true);
  dioph->add_option("--ell", ells, "ell or lo..hi");
  dioph->add_option("--eps", eps, "tolerance exponent");
  dioph->add_option("--den-max", den_max, "denominator cap for rational detection");

  auto* first = app.add_subcommand("firstmoment", "mollified first moment against T phi_hat(0)");
  add_common(first, true);
  first->add_option("--theta", theta, "mollifier length exponent");

  double threshold = 0.1;
  auto* nonvanish = app.add_subcommand("nonvanish", "Cauchy-Schwarz nonvanishing bound and empirical proportion");
  add_common(nonvanish, true);
  nonvanish->add_option("--theta", theta, "mollifier length exponent");
  nonvanish->add_option("--threshold", threshold, "|zeta| threshold in units of (ln ell)^{-1/2}");

  std::uint64_t N = 100;
  std::string mode = "both", regime = "exploratory";
  auto* resonate = app.add_subcommand("resonate", "resonator ratio, Euler product and extreme values");
  add_common(resonate, true);
  resonate->add_option("--N", N, "resonator length");
  resonate->add_option("--mode", mode, "max | min | both");
  resonate->add_option("--regime", regime, "strict | exploratory");
  resonate->add_option("--eps", eps, "tolerance exponent for the excluded set");

  auto* selftest = app.add_subcommand("selftest", "fast invariant suite; nonzero exit on failure");
  add_common(selftest, false);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadConfig;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    if (c.threads > 0) omp_set_num_threads(c.threads);
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    if (name == "moment") o = cmd_moment(c, poly_kind, theta, !no_predict);
    else if (name == "delta") o = cmd_delta(c);
    else if (name == "dioph") o = cmd_dioph(c, ells, eps, den_max);
    else if (name == "firstmoment") o = cmd_firstmoment(c, theta);
    else if (name == "nonvanish") o = cmd_nonvanish(c, theta, threshold);
    else if (name == "resonate") o = cmd_resonate(c, N, mode, regime, eps);
    else o = cmd_selftest(c);

    ordered_json report;
    report["schema_version"] = kReportSchemaVersion;
    report["tool"] = {{"name", "zap"}, {"version", kToolVersion}};
    report["command"] = name;
    ordered_json params = {{"T", c.T}, {"edge", c.edge}, {"seed", c.seed}};
    if (name != "selftest") params["progression"] = spec_json(make_spec(c));
    if (name == "moment") params["poly"] = poly_kind;
    if (name == "moment" || name == "firstmoment" || name == "nonvanish") params["theta"] = theta;
    if (name == "dioph") params["ell"] = ells;
    if (name == "dioph" || name == "resonate") params["eps"] = eps;
    if (name == "nonvanish") params["threshold"] = threshold;
    if (name == "resonate") params["N"] = N, params["mode"] = mode, params["regime"] = regime;
    report["params"] = params;
    report["result"] = o.result;
    report["checks"] = o.checks;
    if (c.timing)
      report["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const std::string text = report.dump(2) + "\n";
    if (c.output.empty()) out << text;
    else write_text(c.output, text);
    if (o.csv && !c.csv.empty()) write_text(c.csv, o.csv->body.str());
    if (!o.ok) {
      for (const auto& ck : o.checks)
        if (!ck["pass"].get<bool>()) err << name << ": check failed: " << ck["name"].get<std::string>() << '\n';
      return kExitFailedCheck;
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    err << name << ": invalid configuration: " << e.what() << '\n';
    return kExitBadConfig;
  } catch (const Error& e) {
    err << name << ": " << e.what() << '\n';
    return kExitFailedCheck;
  }
}

}  // namespace zap
