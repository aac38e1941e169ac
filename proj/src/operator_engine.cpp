#include "bergman/operator_engine.hpp"

#include <algorithm>
#include <cmath>

#include "bergman/errors.hpp"
#include "bergman/special_functions.hpp"

namespace bergman {

double kalpha_coefficient(const OperatorParams& params, long n) {
  if (params.d < 1)
    throw domain_error("kalpha_coefficient: dimension must be >= 1");
  if (n < 0) throw domain_error("kalpha_coefficient: degree must be >= 0");
  const double alpha = params.alpha;
  if (alpha > 0.0) {
    return std::exp(sf::log_gamma(params.d + 1.0) + sf::log_gamma(alpha + n) -
                    sf::log_gamma(alpha) - sf::log_gamma(params.d + 1.0 + n));
  }
  const double an = alpha + double(n);
  if (an <= 0.0 && an == std::floor(an))
    throw pole_error("kalpha_coefficient: Gamma ratio pole at alpha + n");
  long double acc = 1.0L;
  for (long i = 0; i < n; ++i)
    acc *= (alpha + (long double)i) / (params.d + 1.0L + i);
  return double(acc);
}

double radial_coefficient(const RadialOperator& op, const OperatorParams& params,
                          long n) {
  if (params.d < 1)
    throw domain_error("radial_coefficient: dimension must be >= 1");
  if (n < 0) throw domain_error("radial_coefficient: degree must be >= 0");
  const double d1 = params.d + 1.0;
  const double num1 = d1 + op.s;
  const double num2 = d1 + double(n) + op.s + op.t;
  const double den1 = d1 + op.s + op.t;
  const double den2 = d1 + double(n) + op.s;
  for (double arg : {num1, num2, den1, den2}) {
    if (arg <= 0.0 && arg == std::floor(arg))
      throw pole_error(
          "radial_coefficient: Gamma argument at a nonpositive integer");
  }
  const auto a = sf::log_gamma_signed(num1);
  const auto b = sf::log_gamma_signed(num2);
  const auto c = sf::log_gamma_signed(den1);
  const auto e = sf::log_gamma_signed(den2);
  return a.sign * b.sign * c.sign * e.sign *
         std::exp(a.log_abs + b.log_abs - c.log_abs - e.log_abs);
}

RadialOperator kernel_radial_operator(const OperatorParams& params) {
  return RadialOperator{0.0, params.alpha - params.d - 1.0};
}

DiagonalSpectrum diagonal_spectrum(const OperatorParams& params, long truncation) {
  if (params.d < 1)
    throw domain_error("diagonal_spectrum: dimension must be >= 1");
  if (!(params.alpha > 0.0))
    throw domain_error("diagonal_spectrum: alpha must be positive");
  if (truncation < 1)
    throw domain_error("diagonal_spectrum: truncation must be >= 1");
  DiagonalSpectrum out;
  out.params = params;
  out.truncation = truncation;
  out.coefficients.resize(std::size_t(truncation) + 1);
  out.coefficients[0] = 1.0;
  long double c = 1.0L;
  for (long n = 1; n <= truncation; ++n) {
    c *= (params.alpha + (n - 1.0L)) / (params.d + n + 0.0L);
    out.coefficients[std::size_t(n)] = double(c);
  }
  // c_j <= c_N ((d+1+N)/(d+1+j))^beta for j >= N when beta = d+1-alpha > 0,
  // so the squared tail is dominated by a convergent power integral.
  const double beta = params.d + 1.0 - params.alpha;
  if (2.0 * beta > 1.0) {
    const double cn = out.coefficients[std::size_t(truncation)];
    out.tail_bound = cn * cn * (params.d + 1.0 + truncation) / (2.0 * beta - 1.0);
  } else {
    out.tail_bound = INFINITY;
  }
  return out;
}

std::vector<cplx> apply_diagonal(const DiagonalSpectrum& spectrum,
                                 const std::vector<cplx>& series) {
  if (series.size() > spectrum.coefficients.size())
    throw domain_error("apply_diagonal: series outruns the stored symbol");
  std::vector<cplx> out(series.size());
  for (std::size_t i = 0; i < series.size(); ++i)
    out[i] = spectrum.coefficients[i] * series[i];
  return out;
}

SpectralReport l2_spectral_report(const OperatorParams& params, long truncation) {
  if (params.d != 1)
    throw domain_error(
        "l2_spectral_report: only the disc slice (d = 1) is supported");
  if (truncation < 64)
    throw domain_error("l2_spectral_report: truncation must be >= 64");
  SpectralReport rep;
  rep.spectrum = diagonal_spectrum(params, truncation);
  const double alpha = params.alpha;
  // c_{n+1}/c_n = (alpha+n)/(2+n): nonincreasing iff alpha <= 2, so the sup
  // is c_0 = 1 there and infinite beyond (c_n ~ n^{alpha-2} grows).
  rep.operator_norm = (alpha <= 2.0) ? 1.0 : INFINITY;
  rep.norm_is_top_coefficient = (alpha <= 2.0);
  rep.hilbert_schmidt = (alpha < 1.5);
  const std::vector<double>& c = rep.spectrum.coefficients;
  long double acc = 0.0L;
  for (std::size_t j = 0; j < c.size(); ++j)
    acc += (long double)c[j] * c[j];
  rep.squared_sum_partial = double(acc);
  if (!rep.hilbert_schmidt) {
    rep.squared_sum_tail = INFINITY;
    rep.squared_sum = INFINITY;
    return rep;
  }
  // c_j^2 j^kappa = A + C/j + O(1/j^2) with kappa = 2(2-alpha); fit (A, C)
  // over the last decade, then sum the fitted model past the truncation by
  // Euler-Maclaurin.
  const double kappa = 2.0 * (2.0 - alpha);
  const long lo = std::max<long>(16, truncation / 10);
  long double s00 = 0.0L, s01 = 0.0L, s11 = 0.0L, b0 = 0.0L, b1 = 0.0L;
  for (long j = lo; j <= truncation; ++j) {
    const long double u =
        (long double)c[std::size_t(j)] * c[std::size_t(j)] *
        powl((long double)j, (long double)kappa);
    const long double w = 1.0L / j;
    s00 += 1.0L;
    s01 += w;
    s11 += w * w;
    b0 += u;
    b1 += u * w;
  }
  const long double det = s00 * s11 - s01 * s01;
  const long double fa = (b0 * s11 - b1 * s01) / det;
  const long double fc = (b1 * s00 - b0 * s01) / det;
  auto ztail = [&](long double m) {
    const long double a = (long double)truncation + 1.0L;
    return powl(a, 1.0L - m) / (m - 1.0L) + 0.5L * powl(a, -m) +
           m * powl(a, -m - 1.0L) / 12.0L -
           m * (m + 1.0L) * (m + 2.0L) * powl(a, -m - 3.0L) / 720.0L;
  };
  const long double tail = fa * ztail(kappa) + fc * ztail(kappa + 1.0L);
  rep.squared_sum_tail = double(tail);
  rep.squared_sum = double(acc + tail);
  return rep;
}

IdentityCheck euler_jacobi_check(double alpha, long truncation) {
  if (!(alpha > 0.0) || !(alpha < 1.5))
    throw domain_error("euler_jacobi_check: alpha must lie in (0, 3/2)");
  OperatorParams params;
  params.d = 1;
  params.alpha = alpha;
  const SpectralReport rep = l2_spectral_report(params, truncation);
  IdentityCheck out;
  out.series_value = rep.squared_sum;
  out.closed_form = sf::gamma_ratio_quadratic(alpha - 1.0);
  out.residual = std::abs(out.series_value - out.closed_form);
  return out;
}

WitnessRatio witness_ratio(const OperatorParams& params, double p, double q,
                           double t, long truncation, double angular_tol) {
  if (params.d < 1)
    throw domain_error("witness_ratio: dimension must be >= 1");
  if (!(params.alpha > 0.0))
    throw domain_error("witness_ratio: alpha must be positive");
  if (!(p >= 1.0) || !(q >= 1.0))
    throw domain_error("witness_ratio: exponents must be >= 1");
  if (truncation < 16)
    throw domain_error("witness_ratio: truncation must be >= 16");
  std::vector<cplx> a(std::size_t(truncation) + 1, cplx(0.0, 0.0));
  for (long n = 1; n <= truncation; ++n)
    a[std::size_t(n)] = std::pow(double(n), t);
  WitnessRatio out;
  out.input_norm = slice_norm(a, p, params.d, angular_tol);
  long double c = 1.0L;
  for (long n = 1; n <= truncation; ++n) {
    c *= (params.alpha + (n - 1.0L)) / (params.d + n + 0.0L);
    a[std::size_t(n)] *= double(c);
  }
  out.image_norm = slice_norm(a, q, params.d, angular_tol);
  out.ratio = out.image_norm / out.input_norm;
  return out;
}

GrowthReport unboundedness_probe(const OperatorParams& params, double p, double q,
                                 int n_points, long truncation) {
  if (n_points < 2)
    throw domain_error("unboundedness_probe: need at least two sweep points");
  if (truncation < 1024)
    throw domain_error("unboundedness_probe: truncation must be >= 1024");
  const double t_upper = (params.d + 1.0) / p - 1.0;
  GrowthReport rep;
  rep.family = "power-series";
  bool inputs_settled = true;
  for (int k = 1; k <= n_points; ++k) {
    const double t = t_upper - 0.75 * std::pow(0.62, k);
    const WitnessRatio full = witness_ratio(params, p, q, t, truncation);
    const WitnessRatio half = witness_ratio(params, p, q, t, truncation / 2);
    ProbePoint pt;
    pt.t = t;
    pt.truncation = truncation;
    pt.input_norm = full.input_norm;
    pt.image_norm = full.image_norm;
    pt.ratio = full.ratio;
    pt.input_settled = std::abs(full.input_norm / half.input_norm - 1.0) <= 0.05;
    pt.image_settled = std::abs(full.image_norm / half.image_norm - 1.0) <= 0.05;
    inputs_settled = inputs_settled && pt.input_settled;
    rep.points.push_back(pt);
  }
  const double r1 = rep.points.front().ratio;
  double growth = 0.0;
  for (const ProbePoint& pt : rep.points)
    growth = std::max(growth, pt.ratio / r1);
  rep.growth = growth;
  if (growth >= 10.0) {
    rep.verdict = "blow-up";
  } else if (growth <= 3.0 && inputs_settled) {
    rep.verdict = "stable";
  } else {
    rep.verdict = "indeterminate";
  }
  return rep;
}

}  // namespace bergman
