#pragma once

#include <string>

#include "bergman/classifier.hpp"

namespace bergman {

// A norm value together with its status: kind is "exact" when the number
// is the operator norm of the modulus kernel, "upper" when it only
// dominates it.  source names the derivation route in plain words.
struct NormBound {
  double value = 0.0;
  std::string kind;    // "exact" | "upper"
  std::string source;  // e.g. "boundary-kernel-mass"
};

// L^1 -> L^q norm of the modulus kernel, 0 < alpha <= d+1.  Equals the
// boundary limit of the q-norm of a single kernel column:
//   (Gamma(d+1) Gamma(d+1-q alpha) / Gamma(d+1-q alpha/2)^2)^{1/q},
// finite exactly when q alpha < d+1 (divergence_error otherwise).
NormBound norm_l1_to_lq(const OperatorParams& params, double q);

// L^p -> L^infinity norm, 0 < alpha < d+1: the same boundary column norm
// taken in the conjugate exponent p' = p/(p-1); requires p' alpha < d+1,
// i.e. p > (d+1)/(d+1-alpha).  Exactly dual to norm_l1_to_lq.
NormBound norm_lp_to_linf(const OperatorParams& params, double p);

// L^infinity -> L^1 norm of the modulus kernel on the disc (d = 1),
// 2 < alpha < 3: the full double kernel integral, evaluated through the
// pole-free quadratic Gamma ratio at alpha/2 - 1.  Exact for the modulus
// kernel and an upper bound for the signed kernel.
NormBound norm_linf_to_l1_exact_d1(double alpha);

// Closed upper bound for L^infinity -> L^q, d+1 < alpha < d+2, built from
// the boundary majorant of the kernel column mass; finite exactly when
// q (alpha - d - 1) < 1 (divergence_error otherwise).
NormBound upper_bound_linf_to_lq(const OperatorParams& params, double q);

// Closed bound for any bounded pair (1/p, 1/q), dispatching on the degree:
//   alpha <= 0          kernel sup bound 2^{-alpha};
//   0 < alpha < d+1     Schur row/column mass interpolated along lines of
//                       slope one (exact on the p = 1 and q = infinity
//                       edges);
//   alpha = d+1         no closed form (domain_error);
//   d+1 < alpha < d+2   the boundary majorant bound at 1/q~ = 1/q - 1/p.
// Unbounded pairs and transition-line equalities raise domain_error.
NormBound upper_bound_general(const OperatorParams& params, const ExponentPair& e);

// Riesz-Thorin combinator: target must be the exact rational convex
// combination theta * e1 + (1-theta) * e2 (componentwise), else
// domain_error.  Returns the geometric mean of the two bound values.
NormBound interpolate_norm(const NormBound& b1, const ExponentPair& e1,
                           const NormBound& b2, const ExponentPair& e2,
                           const Rat& theta, const ExponentPair& target);

// Constant C with |<K^+ g, f>| <= C ||f||_p ||g||_s for p, s in (1, inf):
// the bilinear form of the modulus kernel.  Routes through the boundary
// row mass when 1/p + 1/s < 1 and through the slope-one interpolated
// bound otherwise; for d+1 < alpha < d+2 through the boundary majorant.
// Hypotheses outside the closed-form region raise domain_error.
NormBound hls_constants(const OperatorParams& params, double p, double s);

}  // namespace bergman
