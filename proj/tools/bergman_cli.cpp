// Command-line front end for the kernel-operator laboratory.
//
// Subcommands: classify, diagram, norm, trace, spectrum, identity,
// integral, verify {hls, weak, sweep, probe}.  All machine output is JSON
// (UTF-8, keys sorted, 2-space indent) unless a command offers --format
// text or emits CSV/SVG.  Exit codes: 0 success, 1 domain/runtime error,
// 2 usage error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bergman/classifier.hpp"
#include "bergman/errors.hpp"
#include "bergman/kernel_integrals.hpp"
#include "bergman/norm_bounds.hpp"
#include "bergman/operator_engine.hpp"
#include "bergman/report_io.hpp"
#include "bergman/verifier.hpp"

namespace {

using bergman::OperatorParams;
using bergman::Rat;
using json = nlohmann::json;

// Flag values that parsed syntactically but cannot be interpreted.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string utc_stamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// --alpha accepts "a/b" (exact classification path) or a plain decimal
// (double path, which may set the boundary-ambiguity flag on verdicts).
OperatorParams make_params(int d, const std::string& alpha_text) {
  OperatorParams par;
  par.d = d;
  if (alpha_text.find('/') != std::string::npos) {
    Rat a;
    try {
      a = bergman::parse_rational(alpha_text);
    } catch (const bergman::domain_error& e) {
      throw usage_error(std::string("bad --alpha value: ") + e.what());
    }
    par.alpha_exact = a;
    par.alpha = a.to_double();
    return par;
  }
  std::size_t used = 0;
  try {
    par.alpha = std::stod(alpha_text, &used);
  } catch (const std::exception&) {
    throw usage_error("bad --alpha value: " + alpha_text);
  }
  if (used != alpha_text.size()) throw usage_error("bad --alpha value: " + alpha_text);
  return par;
}

// Exponents are taken as p itself ("2", "5/2", "2.5", or "inf") and
// stored as the exact reciprocal 1/p; "inf" maps to 0.
Rat parse_exponent(const std::string& text, const char* flag) {
  if (text == "inf" || text == "Inf" || text == "INF" || text == "infinity")
    return Rat(0);
  Rat p;
  try {
    p = bergman::parse_rational(text);
  } catch (const bergman::domain_error& e) {
    throw usage_error(std::string("bad ") + flag + " value: " + e.what());
  }
  if (p.num <= 0)
    throw bergman::domain_error(std::string(flag) + " must be positive or \"inf\"");
  return Rat(1) / p;
}

double exponent_double(const Rat& inv) {
  if (inv.num == 0) return INFINITY;
  return (Rat(1) / inv).to_double();
}

json params_json(const OperatorParams& par) {
  json j;
  j["d"] = par.d;
  j["alpha"] = par.alpha;
  if (par.alpha_exact)
    j["alpha_exact"] = par.alpha_exact->str();
  else
    j["alpha_exact"] = nullptr;
  return j;
}

json exponents_json(const bergman::ExponentPair& e) {
  return json{{"inv_p", e.ip.str()}, {"inv_q", e.iq.str()}};
}

// JSON has no literal for non-finite numbers; labels keep the information.
json num_or_label(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "infinity" : "-infinity";
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// Renders v as a small exact fraction when one matches to 1e-12
// (continued-fraction search, denominators up to 10^6), else as a decimal.
std::string fraction_or_decimal(double v) {
  const double tol = 1e-12 * std::max(1.0, std::fabs(v));
  double x = v;
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int step = 0; step < 40; ++step) {
    const double fl = std::floor(x);
    if (fl > 1e15 || fl < -1e15) break;
    const long long a = static_cast<long long>(fl);
    const long long h2 = a * h1 + h0;
    const long long k2 = a * k1 + k0;
    if (k2 > 1000000) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    if (std::fabs(v - static_cast<double>(h1) / static_cast<double>(k1)) <= tol) {
      if (k1 == 1) return std::to_string(h1);
      return std::to_string(h1) + "/" + std::to_string(k1);
    }
    const double frac = x - fl;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Shared per-command output settings.
struct OutputOpts {
  bool no_stamp = false;
  std::string format = "json";
};

void add_output_flags(CLI::App* sub, OutputOpts* out, bool with_text) {
  sub->add_flag("--no-timestamp", out->no_stamp,
                "Omit the timestamp field for byte-reproducible output");
  if (with_text)
    sub->add_option("--format", out->format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
}

void stamp_into(json& j, const OutputOpts& out) {
  if (!out.no_stamp) j["timestamp"] = utc_stamp();
}

int cmd_classify(const OperatorParams& par, const Rat& ip, const Rat& iq,
                 const OutputOpts& out) {
  const bergman::ExponentPair e{ip, iq};
  const bergman::Verdict v = bergman::classify(par, e);
  const char* warning =
      "alpha was parsed as floating point and a deciding comparison landed "
      "within 1e-12 of a regime boundary; pass --alpha as a fraction a/b for "
      "an exact verdict";
  if (out.format == "text") {
    std::cout << "bounded=" << (v.bounded ? "true" : "false")
              << " compact=" << (v.compact ? "true" : "false")
              << " clause=" << v.clause << "\n";
    if (v.alpha_near_boundary) std::cout << "warning: " << warning << "\n";
    return 0;
  }
  json j;
  j["params"] = params_json(par);
  j["exponents"] = exponents_json(e);
  j["bounded"] = v.bounded;
  j["compact"] = v.compact;
  j["clause"] = v.clause;
  j["alpha_near_boundary"] = v.alpha_near_boundary;
  if (v.alpha_near_boundary) j["warning"] = warning;
  stamp_into(j, out);
  emit(j);
  return 0;
}

int cmd_diagram(const OperatorParams& par, int resolution, const std::string& format,
                const std::string& output_path) {
  std::string doc;
  if (format == "svg") {
    doc = bergman::diagram_region_svg(bergman::diagram_region(par));
  } else {
    doc = bergman::diagram_grid_csv(par, resolution);
  }
  if (output_path.empty()) {
    std::cout << doc;
    return 0;
  }
  std::ofstream file(output_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << output_path << " for writing\n";
    return 1;
  }
  file << doc;
  file.close();
  if (!file) {
    std::cerr << "error: failed while writing " << output_path << "\n";
    return 1;
  }
  return 0;
}

int cmd_norm(const OperatorParams& par, const Rat& ip, const Rat& iq,
             const OutputOpts& out) {
  const bergman::ExponentPair e{ip, iq};
  const bergman::Verdict v = bergman::classify(par, e);
  const bool p_one = ip == Rat(1);
  const bool p_inf = ip.num == 0;
  const bool q_one = iq == Rat(1);
  const bool q_inf = iq.num == 0;
  bergman::NormBound b;
  if (par.alpha <= 0.0) {
    b = bergman::upper_bound_general(par, e);
  } else if (p_one) {
    b = bergman::norm_l1_to_lq(par, exponent_double(iq));
  } else if (q_inf) {
    b = bergman::norm_lp_to_linf(par, exponent_double(ip));
  } else if (p_inf && q_one && par.d == 1 && par.alpha > 2.0 && par.alpha < 3.0) {
    b = bergman::norm_linf_to_l1_exact_d1(par.alpha);
  } else {
    b = bergman::upper_bound_general(par, e);
  }
  if (out.format == "text") {
    std::printf("%.17g (%s, %s)\n", b.value, b.kind.c_str(), b.source.c_str());
    return 0;
  }
  json j;
  j["params"] = params_json(par);
  j["exponents"] = exponents_json(e);
  j["value"] = b.value;
  j["kind"] = b.kind;
  j["formula_source"] = b.source;
  j["method"] = "closed-form";
  j["verdict"] = json{{"bounded", v.bounded},
                      {"compact", v.compact},
                      {"clause", v.clause}};
  stamp_into(j, out);
  emit(j);
  return 0;
}

int cmd_trace(const OperatorParams& par, const OutputOpts& out) {
  const double value = bergman::hs_trace(par.d, par.alpha);
  if (out.format == "text") {
    std::printf("%.17g\n", value);
    return 0;
  }
  json j;
  j["params"] = params_json(par);
  j["value"] = value;
  j["method"] = "closed-form";
  j["formula_source"] =
      par.d == 1 ? "quadratic-gamma-ratio" : "radial-second-moment";
  stamp_into(j, out);
  emit(j);
  return 0;
}

int cmd_spectrum(const OperatorParams& par, long n, long truncation,
                 const OutputOpts& out) {
  if (n < 1) throw bergman::domain_error("spectrum: --n must be >= 1");
  const bergman::DiagonalSpectrum head = bergman::diagonal_spectrum(par, n - 1);
  std::string display;
  for (long i = 0; i < n; ++i) {
    if (i) display += ", ";
    display += fraction_or_decimal(head.coefficients[static_cast<std::size_t>(i)]);
  }
  if (out.format == "text") {
    std::cout << display << "\n";
    return 0;
  }
  json j;
  j["params"] = params_json(par);
  j["eigenvalues"] = head.coefficients;
  j["display"] = display;
  j["method"] = "closed-form";
  j["formula_source"] = "gamma-ratio-diagonal";
  if (par.d == 1) {
    const bergman::SpectralReport rep = bergman::l2_spectral_report(par, truncation);
    j["l2_summary"] = json{{"operator_norm", rep.operator_norm},
                           {"norm_is_top_coefficient", rep.norm_is_top_coefficient},
                           {"hilbert_schmidt", rep.hilbert_schmidt},
                           {"squared_sum", num_or_label(rep.squared_sum)},
                           {"truncation", rep.spectrum.truncation}};
  }
  stamp_into(j, out);
  emit(j);
  return 0;
}

int cmd_identity(const OperatorParams& par, long truncation, const OutputOpts& out) {
  const bergman::IdentityCheck chk = bergman::euler_jacobi_check(par.alpha, truncation);
  if (out.format == "text") {
    std::printf("residual=%.3e series=%.17g closed=%.17g\n", chk.residual,
                chk.series_value, chk.closed_form);
    return 0;
  }
  json j;
  j["params"] = params_json(par);
  j["series_value"] = chk.series_value;
  j["closed_form"] = chk.closed_form;
  j["residual"] = chk.residual;
  j["truncation"] = truncation;
  j["method"] = "series";
  j["formula_source"] = "squared-coefficient-sum";
  stamp_into(j, out);
  emit(j);
  return 0;
}

int cmd_integral(int d, double beta, double gamma, double r, std::uint64_t samples,
                 std::uint64_t seed, const OutputOpts& out) {
  if (r < 0.0 || r > 1.0)
    throw bergman::domain_error("integral: --r must lie in [0, 1]");
  const double value = bergman::rudin_integral(d, beta, gamma, r);
  if (out.format == "text") {
    std::printf("%.17g\n", value);
    return 0;
  }
  json j;
  j["params"] = json{{"d", d}, {"beta", beta}, {"gamma", gamma}, {"r", r}};
  j["value"] = value;
  j["method"] = "closed-form";
  j["formula_source"] = "weighted-kernel-moment";
  if (samples > 0) {
    bergman::BallPoint z(static_cast<std::size_t>(d), bergman::cplx(0.0, 0.0));
    z[0] = bergman::cplx(std::sqrt(r), 0.0);
    const bergman::McEstimate mc = bergman::mc_rudin(d, beta, gamma, z, samples, seed);
    j["monte_carlo"] = json{{"value", mc.value},
                            {"std_error", mc.std_error},
                            {"n", mc.n},
                            {"seed", seed},
                            {"method", "monte-carlo"}};
  }
  stamp_into(j, out);
  emit(j);
  return 0;
}

int cmd_verify_hls(const OperatorParams& par, const std::string& p_text,
                   const std::string& s_text, long trials, std::uint64_t seed,
                   const OutputOpts& out) {
  const double p = exponent_double(parse_exponent(p_text, "--p"));
  const double s = exponent_double(parse_exponent(s_text, "--s"));
  const bergman::VerificationReport rep = bergman::verify_hls(par, p, s, trials, seed);
  std::cout << bergman::verification_report_json(rep,
                                                 out.no_stamp ? "" : utc_stamp());
  return 0;
}

int cmd_verify_weak(const OperatorParams& par, long trials, std::uint64_t seed,
                    const OutputOpts& out) {
  const bergman::VerificationReport rep = bergman::verify_weak_type(par, trials, seed);
  std::cout << bergman::verification_report_json(rep,
                                                 out.no_stamp ? "" : utc_stamp());
  return 0;
}

int cmd_verify_sweep(const OperatorParams& par, int k_max, long n_z,
                     std::uint64_t seed, const OutputOpts& out) {
  const bergman::ConcentrationSweep sw =
      bergman::weak_type_concentration_sweep(par, k_max, n_z, seed);
  json j;
  j["params"] = params_json(sw.params);
  j["target_exponent"] = sw.target_exponent;
  json quasi = json::array();
  for (const auto& pt : sw.quasinorm) quasi.push_back(json::array({pt.parameter, pt.value}));
  json strong = json::array();
  for (const auto& pt : sw.strong_norm)
    strong.push_back(json::array({pt.parameter, pt.value}));
  j["quasinorm"] = quasi;
  j["strong_norm"] = strong;
  j["quasinorm_growth"] = sw.quasinorm_growth;
  j["strong_growth"] = sw.strong_growth;
  j["seed"] = sw.seed;
  stamp_into(j, out);
  emit(j);
  return 0;
}

int cmd_verify_probe(const OperatorParams& par, const Rat& ip, const Rat& iq,
                     std::uint64_t seed, const OutputOpts& out) {
  const bergman::ExponentPair e{ip, iq};
  const bergman::GrowthReport rep = bergman::probe_boundedness(par, e, seed);
  std::cout << bergman::growth_report_json(rep, par, e,
                                           out.no_stamp ? "" : utc_stamp());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for kernel operators on the complex unit ball"};
  app.require_subcommand(1);

  int d = 1;
  std::string alpha_text, p_text, q_text, s_text;
  OutputOpts out;

  // classify
  auto* classify = app.add_subcommand(
      "classify", "Decide L^p -> L^q boundedness and compactness");
  classify->add_option("--d", d, "Complex dimension")->capture_default_str();
  classify->add_option("--alpha", alpha_text, "Kernel power (decimal or a/b)")
      ->required();
  classify->add_option("--p", p_text, "Source exponent (>= 1, a/b, or inf)")
      ->required();
  classify->add_option("--q", q_text, "Target exponent (>= 1, a/b, or inf)")
      ->required();
  OutputOpts classify_out;
  add_output_flags(classify, &classify_out, true);

  // diagram
  auto* diagram =
      app.add_subcommand("diagram", "Emit the type diagram as SVG or CSV");
  diagram->add_option("--d", d, "Complex dimension")->capture_default_str();
  diagram->add_option("--alpha", alpha_text, "Kernel power (decimal or a/b)")
      ->required();
  int resolution = 40;
  diagram->add_option("--resolution", resolution, "CSV grid steps per axis")
      ->capture_default_str();
  std::string diagram_format = "svg";
  diagram->add_option("--format", diagram_format, "Output format")
      ->check(CLI::IsMember({"svg", "csv"}))
      ->capture_default_str();
  std::string output_path;
  diagram->add_option("--output", output_path, "Output file (stdout if omitted)");
  bool diagram_no_stamp = false;  // SVG/CSV carry no timestamp; accepted for uniformity
  diagram->add_flag("--no-timestamp", diagram_no_stamp,
                    "Accepted for uniformity; diagram output never carries a timestamp");

  // norm
  auto* norm = app.add_subcommand(
      "norm", "Closed-form operator norm or upper bound for a bounded pair");
  norm->add_option("--d", d, "Complex dimension")->capture_default_str();
  norm->add_option("--alpha", alpha_text, "Kernel power (decimal or a/b)")
      ->required();
  norm->add_option("--p", p_text, "Source exponent (>= 1, a/b, or inf)")->required();
  norm->add_option("--q", q_text, "Target exponent (>= 1, a/b, or inf)")->required();
  OutputOpts norm_out;
  add_output_flags(norm, &norm_out, true);

  // trace
  auto* trace =
      app.add_subcommand("trace", "Squared Hilbert-Schmidt norm of the kernel");
  trace->add_option("--d", d, "Complex dimension")->capture_default_str();
  trace->add_option("--alpha", alpha_text, "Kernel power (decimal or a/b)")
      ->required();
  OutputOpts trace_out;
  add_output_flags(trace, &trace_out, true);

  // spectrum
  auto* spectrum = app.add_subcommand(
      "spectrum", "Diagonal eigenvalues on slice monomials, with L^2 summary");
  spectrum->add_option("--d", d, "Complex dimension")->capture_default_str();
  spectrum->add_option("--alpha", alpha_text, "Kernel power (decimal or a/b)")
      ->required();
  long spectrum_n = 5;
  spectrum->add_option("--n", spectrum_n, "Number of eigenvalues to report")
      ->capture_default_str();
  long spectrum_truncation = 100000;
  spectrum
      ->add_option("--truncation", spectrum_truncation,
                   "Symbol length for the L^2 summary (d = 1)")
      ->capture_default_str();
  OutputOpts spectrum_out;
  add_output_flags(spectrum, &spectrum_out, true);

  // identity
  auto* identity = app.add_subcommand(
      "identity", "Squared-coefficient series against its closed form (d = 1)");
  identity->add_option("--d", d, "Complex dimension")->capture_default_str();
  identity->add_option("--alpha", alpha_text, "Kernel power (decimal or a/b)")
      ->required();
  long identity_n = 1000000;
  identity->add_option("--n", identity_n, "Series truncation")->capture_default_str();
  OutputOpts identity_out;
  add_output_flags(identity, &identity_out, true);

  // integral
  auto* integral = app.add_subcommand(
      "integral", "Weighted kernel moment over the ball, closed form");
  integral->add_option("--d", d, "Complex dimension")->capture_default_str();
  double beta = 0.0, gamma = 0.0, r = 0.0;
  integral->add_option("--beta", beta, "Kernel half-power")->required();
  integral->add_option("--gamma", gamma, "Boundary weight power")->required();
  integral->add_option("--r", r, "Squared radius of the evaluation point")
      ->required();
  std::uint64_t integral_samples = 0;
  integral
      ->add_option("--samples", integral_samples,
                   "Monte Carlo cross-check sample count (0 = off)")
      ->capture_default_str();
  std::uint64_t seed = 42;
  integral->add_option("--seed", seed, "Random seed")->capture_default_str();
  OutputOpts integral_out;
  add_output_flags(integral, &integral_out, true);

  // verify + nested suites
  auto* verify =
      app.add_subcommand("verify", "Randomized checks of bounds and probes");
  verify->require_subcommand(1);

  auto* hls = verify->add_subcommand(
      "hls", "Stress the closed bilinear pairing constant");
  hls->add_option("--d", d, "Complex dimension")->capture_default_str();
  hls->add_option("--alpha", alpha_text, "Kernel power (decimal or a/b)")
      ->required();
  hls->add_option("--p", p_text, "First pairing exponent")->required();
  hls->add_option("--s", s_text, "Second pairing exponent")->required();
  long hls_trials = 200;
  hls->add_option("--trials", hls_trials, "Trial count")->capture_default_str();
  hls->add_option("--seed", seed, "Random seed")->capture_default_str();
  OutputOpts hls_out;
  add_output_flags(hls, &hls_out, false);

  auto* weak = verify->add_subcommand(
      "weak", "Weak-type quasinorms of random cap mixtures at the L^1 endpoint");
  weak->add_option("--d", d, "Complex dimension")->capture_default_str();
  weak->add_option("--alpha", alpha_text, "Kernel power (decimal or a/b)")
      ->required();
  long weak_trials = 8;
  weak->add_option("--trials", weak_trials, "Trial count")->capture_default_str();
  weak->add_option("--seed", seed, "Random seed")->capture_default_str();
  OutputOpts weak_out;
  add_output_flags(weak, &weak_out, false);

  auto* sweep = verify->add_subcommand(
      "sweep", "Concentrating-bump weak/strong norm comparison");
  sweep->add_option("--d", d, "Complex dimension")->capture_default_str();
  sweep->add_option("--alpha", alpha_text, "Kernel power (decimal or a/b)")
      ->required();
  int sweep_k = 8;
  sweep->add_option("--k", sweep_k, "Deepest cap scale 2^-k")->capture_default_str();
  long sweep_nz = 4000;
  sweep->add_option("--n-z", sweep_nz, "Importance samples per cap")
      ->capture_default_str();
  sweep->add_option("--seed", seed, "Random seed")->capture_default_str();
  OutputOpts sweep_out;
  add_output_flags(sweep, &sweep_out, false);

  auto* probe = verify->add_subcommand(
      "probe", "Classifier-blind growth probe for one exponent pair");
  probe->add_option("--d", d, "Complex dimension")->capture_default_str();
  probe->add_option("--alpha", alpha_text, "Kernel power (decimal or a/b)")
      ->required();
  probe->add_option("--p", p_text, "Source exponent (>= 1, a/b, or inf)")
      ->required();
  probe->add_option("--q", q_text, "Target exponent (>= 1, a/b, or inf)")
      ->required();
  probe->add_option("--seed", seed, "Random seed")->capture_default_str();
  OutputOpts probe_out;
  add_output_flags(probe, &probe_out, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify->parsed()) {
      return cmd_classify(make_params(d, alpha_text),
                          parse_exponent(p_text, "--p"),
                          parse_exponent(q_text, "--q"), classify_out);
    }
    if (diagram->parsed()) {
      return cmd_diagram(make_params(d, alpha_text), resolution, diagram_format,
                         output_path);
    }
    if (norm->parsed()) {
      return cmd_norm(make_params(d, alpha_text), parse_exponent(p_text, "--p"),
                      parse_exponent(q_text, "--q"), norm_out);
    }
    if (trace->parsed()) return cmd_trace(make_params(d, alpha_text), trace_out);
    if (spectrum->parsed()) {
      return cmd_spectrum(make_params(d, alpha_text), spectrum_n,
                          spectrum_truncation, spectrum_out);
    }
    if (identity->parsed()) {
      return cmd_identity(make_params(d, alpha_text), identity_n, identity_out);
    }
    if (integral->parsed()) {
      return cmd_integral(d, beta, gamma, r, integral_samples, seed, integral_out);
    }
    if (verify->parsed()) {
      if (hls->parsed()) {
        return cmd_verify_hls(make_params(d, alpha_text), p_text, s_text,
                              hls_trials, seed, hls_out);
      }
      if (weak->parsed()) {
        return cmd_verify_weak(make_params(d, alpha_text), weak_trials, seed,
                               weak_out);
      }
      if (sweep->parsed()) {
        return cmd_verify_sweep(make_params(d, alpha_text), sweep_k, sweep_nz,
                                seed, sweep_out);
      }
      if (probe->parsed()) {
        return cmd_verify_probe(make_params(d, alpha_text),
                                parse_exponent(p_text, "--p"),
                                parse_exponent(q_text, "--q"), seed, probe_out);
      }
    }
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
