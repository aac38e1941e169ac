#include "bergman/kernel_integrals.hpp"

#include <algorithm>
#include <cmath>

#include "bergman/errors.hpp"
#include "bergman/special_functions.hpp"

namespace bergman {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

cplx kernel_eval(double alpha, const BallPoint& z, const BallPoint& w) {
  const cplx base = 1.0 - hermitian_inner(z, w);
  // Re(1 - <z,w>) > 0 inside the ball, so the principal branch is smooth.
  return std::exp(-alpha * std::log(base));
}

double kernel_abs(double alpha, const BallPoint& z, const BallPoint& w) {
  return std::pow(std::abs(1.0 - hermitian_inner(z, w)), -alpha);
}

double rudin_integral(int d, double beta, double gamma, double z_abs_sq) {
  if (d < 1) throw domain_error("rudin_integral: dimension must be >= 1");
  if (!(gamma > -1.0)) throw domain_error("rudin_integral: need gamma > -1");
  // The Gamma ratio collapses to 1 at gamma = 0; skip the exp/log round trip
  // so the unweighted case is exact.
  const double prefactor =
      gamma == 0.0 ? 1.0
                   : std::exp(sf::log_gamma(1.0 + d) + sf::log_gamma(1.0 + gamma) -
                              sf::log_gamma(1.0 + d + gamma));
  return prefactor * sf::hyp2f1(beta, beta, 1.0 + d + gamma, z_abs_sq);
}

McEstimate mc_rudin(int d, double beta, double gamma, const BallPoint& z,
                    std::uint64_t n, std::uint64_t seed) {
  if (d < 1 || int(z.size()) != d) {
    throw domain_error("mc_rudin: point dimension mismatch");
  }
  if (!(gamma > -1.0)) throw domain_error("mc_rudin: need gamma > -1");
  if (n == 0) throw domain_error("mc_rudin: need at least one sample");
  const double r2 = norm_sq(z);
  if (!(r2 < 1.0)) throw domain_error("mc_rudin: z must lie inside the ball");

  Rng rng(seed);
  WeightedMeasure tilt(d, gamma);
  const double c_gamma = tilt.c_beta();

  // Kernel-pole component: concentrate part of the draws where the kernel
  // factor |1 - <z,w>| is small; pointless for central z or mild exponents.
  const PoleSampler pole(z, 2.0 * beta);
  const bool use_pole = pole.usable() && (beta > 0.25);

  const double lam_u = use_pole ? 1.0 / 3.0 : 0.5;
  const double lam_r = lam_u;
  const double lam_p = use_pole ? 1.0 / 3.0 : 0.0;

  double acc = 0.0, acc2 = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const double pick = rng.u01();
    BallPoint w;
    bool outside = false;
    if (pick < lam_u) {
      w = sample_ball_uniform(rng, d);
    } else if (pick < lam_u + lam_r) {
      w = tilt.sample(rng);
    } else {
      w = pole.sample(rng, outside);
    }
    double x = 0.0;
    if (!outside) {
      const double one_minus = std::max(0.0, 1.0 - norm_sq(w));
      const double f = std::pow(one_minus, gamma) *
                       std::pow(std::abs(1.0 - hermitian_inner(z, w)), -2.0 * beta);
      double m = lam_u + lam_r * c_gamma * std::pow(one_minus, gamma);
      if (use_pole) m += lam_p * pole.density(w);
      x = f / m;
    }
    acc += x;
    acc2 += x * x;
  }
  const double mean = acc / double(n);
  const double var = std::max(0.0, acc2 / double(n) - mean * mean);
  return {mean, std::sqrt(var / double(n)), n};
}

double kernel_mass(int d, double alpha, double z_abs_sq) {
  if (d < 1) throw domain_error("kernel_mass: dimension must be >= 1");
  return sf::hyp2f1(0.5 * alpha, 0.5 * alpha, d + 1.0, z_abs_sq);
}

double kernel_mass_boundary(int d, double alpha) {
  if (d < 1) throw domain_error("kernel_mass_boundary: dimension must be >= 1");
  if (!(alpha < d + 1.0)) {
    throw divergence_error("kernel_mass_boundary: diverges for alpha >= d+1");
  }
  return std::exp(sf::log_gamma(d + 1.0) + sf::log_gamma(d + 1.0 - alpha) -
                  2.0 * sf::log_gamma(d + 1.0 - 0.5 * alpha));
}

double hs_trace(int d, double alpha) {
  if (d < 1) throw domain_error("hs_trace: dimension must be >= 1");
  if (!(alpha < 0.5 * (d + 2.0))) {
    throw divergence_error("hs_trace: infinite for alpha >= (d+2)/2");
  }
  if (d == 1) {
    return sf::gamma_ratio_quadratic(alpha - 1.0);
  }
  // Int dv(z) of the kernel's second moment 2F1(alpha, alpha; d+1; |z|^2);
  // the integrand grows like (1-s)^{d+1-2 alpha} (> -1 exponent here).
  return radial_integral_boundary(
      d, [&](double oms) { return sf::hyp2f1_from_w(alpha, alpha, d + 1.0, oms); },
      1e-12, 1e-12);
}

CarlesonReport carleson_probe(int d, double alpha, double p, double q) {
  if (d < 1) throw domain_error("carleson_probe: dimension must be >= 1");
  if (!(alpha > 0.0 && alpha < d + 1.0)) {
    throw domain_error("carleson_probe: needs 0 < alpha < d+1");
  }
  if (!(p > 1.0) || !(q > 1.0) || std::isinf(p) || std::isinf(q)) {
    throw domain_error("carleson_probe: needs finite p, q > 1");
  }
  const double gamma = q * (d + 1.0 - alpha);
  const double e_star = (d + 1.0) * q * (1.0 / q + 1.0 - alpha / (d + 1.0) - 1.0 / p);
  // Window the weight so the hypergeometric factor sits in its divergent
  // regime: with 2 beta = s + q(d+1)/p the log-log slope of the probe tends
  // to e_star whenever s > e_star; s = e_star + 5/2 keeps the competing
  // branch a non-integer 5/2 powers behind.
  const double s_w = e_star + 2.5;
  const double beta = 0.5 * (s_w + q * (d + 1.0) / p);
  CarlesonReport rep;
  for (int k = 1; k <= 6; ++k) {
    const double omr = std::pow(10.0, -k);
    const double value = std::pow(omr, s_w) *
                         std::exp(sf::log_gamma(1.0 + d) + sf::log_gamma(1.0 + gamma) -
                                  sf::log_gamma(1.0 + d + gamma)) *
                         sf::hyp2f1_from_w(beta, beta, 1.0 + d + gamma, omr);
    rep.one_minus_r.push_back(omr);
    rep.value.push_back(value);
  }
  // Least-squares slope of log(value) against log(1-r) on the last four.
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const int lo = 2, hi = 6;
  for (int i = lo; i < hi; ++i) {
    const double xl = std::log(rep.one_minus_r[i]);
    const double yl = std::log(rep.value[i]);
    sx += xl;
    sy += yl;
    sxx += xl * xl;
    sxy += xl * yl;
  }
  const int m = hi - lo;
  rep.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  if (rep.slope > 0.05) {
    rep.verdict = "vanishing";
  } else if (rep.slope < -0.05) {
    rep.verdict = "blowup";
  } else {
    rep.verdict = "borderline";
  }
  return rep;
}

}  // namespace bergman
