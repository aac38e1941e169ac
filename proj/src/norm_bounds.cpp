#include "bergman/norm_bounds.hpp"

#include <cmath>

#include "bergman/errors.hpp"
#include "bergman/special_functions.hpp"

namespace bergman {

namespace {

void check_params(const OperatorParams& params) {
  if (params.d < 1) throw domain_error("norm bound: dimension must be at least 1");
  if (!std::isfinite(params.alpha)) throw domain_error("norm bound: alpha must be finite");
}

// Boundary limit of the L^q norm of one kernel column:
//   (Gamma(d+1) Gamma(d+1-u) / Gamma(d+1-u/2)^2)^{1/q},  u = q alpha < d+1.
double boundary_column_norm(int d, double alpha, double q) {
  const double u = q * alpha;
  if (!(u < d + 1.0))
    throw divergence_error("norm bound: kernel column leaves L^q at this exponent");
  const double lg = sf::log_gamma(d + 1.0) + sf::log_gamma(d + 1.0 - u) -
                    2.0 * sf::log_gamma(d + 1.0 - 0.5 * u);
  return std::exp(lg / q);
}

// Row/column mass bound along the slope-one line 1/p - 1/q = 1 - eta:
// the column norm at effective degree alpha/eta raised to eta.  Requires
// alpha/eta < d+1; eta = 1 is the plain Schur row-mass bound.
double slope_one_bound(int d, double alpha, double eta) {
  if (d + 1.0 - alpha / eta < 1e-9)
    throw domain_error(
        "norm bound: no closed form where the boundary kernel mass diverges");
  const double lg = sf::log_gamma(d + 1.0) + sf::log_gamma(d + 1.0 - alpha / eta) -
                    2.0 * sf::log_gamma(d + 1.0 - 0.5 * alpha / eta);
  return std::exp(eta * lg);
}

}  // namespace

NormBound norm_l1_to_lq(const OperatorParams& params, double q) {
  check_params(params);
  if (!(params.alpha > 0.0) || params.alpha > params.d + 1.0)
    throw domain_error("norm_l1_to_lq: requires 0 < alpha <= d+1");
  if (!(q >= 1.0) || std::isinf(q))
    throw domain_error("norm_l1_to_lq: requires a finite exponent q >= 1");
  return NormBound{boundary_column_norm(params.d, params.alpha, q), "exact",
                   "boundary-kernel-mass"};
}

NormBound norm_lp_to_linf(const OperatorParams& params, double p) {
  check_params(params);
  if (!(params.alpha > 0.0) || !(params.alpha < params.d + 1.0))
    throw domain_error("norm_lp_to_linf: requires 0 < alpha < d+1");
  if (!(p > 1.0)) throw domain_error("norm_lp_to_linf: requires p > 1");
  const double ip = std::isinf(p) ? 0.0 : 1.0 / p;
  const double p_conj = 1.0 / (1.0 - ip);
  return NormBound{boundary_column_norm(params.d, params.alpha, p_conj), "exact",
                   "boundary-kernel-mass"};
}

NormBound norm_linf_to_l1_exact_d1(double alpha) {
  if (!(alpha > 2.0) || !(alpha < 3.0))
    throw domain_error("norm_linf_to_l1_exact_d1: requires 2 < alpha < 3 on the disc");
  return NormBound{sf::gamma_ratio_quadratic(0.5 * alpha - 1.0), "exact",
                   "double-kernel-integral"};
}

NormBound upper_bound_linf_to_lq(const OperatorParams& params, double q) {
  check_params(params);
  const double off = params.alpha - params.d - 1.0;
  if (!(off > 0.0) || !(off < 1.0))
    throw domain_error("upper_bound_linf_to_lq: requires d+1 < alpha < d+2");
  if (!(q >= 1.0) || std::isinf(q))
    throw domain_error("upper_bound_linf_to_lq: requires a finite exponent q >= 1");
  if (!(q * off < 1.0))
    throw divergence_error(
        "upper_bound_linf_to_lq: kernel column mass leaves L^q at this exponent");
  const double d1 = params.d + 1.0;
  const double lg = (1.0 + 1.0 / q) * sf::log_gamma(d1) + sf::log_gamma(off) +
                    sf::log_gamma(q * (-off) + 1.0) / q -
                    2.0 * sf::log_gamma(0.5 * params.alpha) -
                    sf::log_gamma(q * (-off) + d1) / q;
  return NormBound{std::exp(lg), "upper", "boundary-asymptotic-majorant"};
}

NormBound upper_bound_general(const OperatorParams& params, const ExponentPair& e) {
  check_params(params);
  Verdict v = classify(params, e);
  if (!v.bounded)
    throw domain_error("upper_bound_general: the pair is unbounded, no norm exists");
  if (params.alpha <= 0.0)
    return NormBound{std::pow(2.0, -params.alpha), "upper", "kernel-sup-bound"};

  const double x = e.ip.to_double();
  const double y = e.iq.to_double();
  const double off = params.alpha - params.d - 1.0;
  if (off > 0.0) {
    // Supercritical: slide the boundary majorant bound along slope one.
    const double gap = y - x;
    return NormBound{upper_bound_linf_to_lq(params, 1.0 / gap).value, "upper",
                     "boundary-asymptotic-majorant"};
  }
  // 0 < alpha <= d+1: row-mass bound, smoothed along slope-one lines when
  // the target norm is weaker than the source norm.
  const double eta = y < x ? 1.0 - (x - y) : 1.0;
  const double value = slope_one_bound(params.d, params.alpha, eta);
  const bool edge = (e.ip == Rat(1)) || (e.iq == Rat(0));
  return NormBound{value, edge ? "exact" : "upper", "schur-riesz-thorin"};
}

NormBound interpolate_norm(const NormBound& b1, const ExponentPair& e1,
                           const NormBound& b2, const ExponentPair& e2,
                           const Rat& theta, const ExponentPair& target) {
  if (theta < Rat(0) || theta > Rat(1))
    throw domain_error("interpolate_norm: theta must lie in [0, 1]");
  if (!(b1.value > 0.0) || !(b2.value > 0.0) || !std::isfinite(b1.value) ||
      !std::isfinite(b2.value))
    throw domain_error("interpolate_norm: endpoint bounds must be positive and finite");
  const Rat one_minus = Rat(1) - theta;
  if (target.ip != theta * e1.ip + one_minus * e2.ip ||
      target.iq != theta * e1.iq + one_minus * e2.iq)
    throw domain_error(
        "interpolate_norm: target is not the stated convex combination of the endpoints");
  const double th = theta.to_double();
  const double value = std::exp(th * std::log(b1.value) + (1.0 - th) * std::log(b2.value));
  return NormBound{value, "upper", "riesz-thorin"};
}

NormBound hls_constants(const OperatorParams& params, double p, double s) {
  check_params(params);
  if (!(p > 1.0) || std::isinf(p) || !(s > 1.0) || std::isinf(s))
    throw domain_error("hls_constants: requires p, s in (1, infinity)");
  const double alpha = params.alpha;
  const double d1 = params.d + 1.0;
  if (alpha <= 0.0)
    return NormBound{std::pow(2.0, -alpha), "upper", "kernel-sup-bound"};

  const double sum = 1.0 / p + 1.0 / s;
  if (alpha <= d1) {
    if (sum + alpha / d1 > 2.0)
      throw domain_error("hls_constants: exponents outside the bounded region");
    if (sum < 1.0) {
      // Pairing sits above the diagonal: the plain row-mass bound applies.
      return NormBound{slope_one_bound(params.d, alpha, 1.0), "upper",
                       "boundary-row-mass"};
    }
    const double eta = 2.0 - sum;
    if (!(eta > alpha / d1))
      throw domain_error(
          "hls_constants: no closed form on the transition line of the pairing");
    return NormBound{slope_one_bound(params.d, alpha, eta), "upper",
                     "slope-one-interpolation"};
  }
  if (alpha < d1 + 1.0) {
    if (!(sum + alpha < params.d + 2.0))
      throw domain_error("hls_constants: exponents outside the bounded region");
    const double gap = 1.0 - sum;
    return NormBound{upper_bound_linf_to_lq(params, 1.0 / gap).value, "upper",
                     "boundary-asymptotic-majorant"};
  }
  throw domain_error("hls_constants: the form is unbounded for alpha >= d+2");
}

}  // namespace bergman
