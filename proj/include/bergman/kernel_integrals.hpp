#ifndef BERGMAN_KERNEL_INTEGRALS_HPP
#define BERGMAN_KERNEL_INTEGRALS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bergman/ball_geometry.hpp"

namespace bergman {

// (1 - <z,w>)^{-alpha} and its modulus |1 - <z,w>|^{-alpha}.
cplx kernel_eval(double alpha, const BallPoint& z, const BallPoint& w);
double kernel_abs(double alpha, const BallPoint& z, const BallPoint& w);

// Closed form of Int_B (1-|w|^2)^gamma |1 - <z,w>|^{-2 beta} dv(w):
//   [Gamma(1+d)Gamma(1+gamma)/Gamma(1+d+gamma)]
//     * 2F1(beta, beta; 1+d+gamma; |z|^2).
// Needs gamma > -1.  Finite for |z| < 1; at |z| = 1 finite iff
// 1+d+gamma-2 beta > 0 (divergence_error otherwise).
double rudin_integral(int d, double beta, double gamma, double z_abs_sq);

// Monte Carlo estimate of the same integral from a defensive importance
// mixture (uniform + boundary-weight tilt + kernel-pole tilt).
struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t n = 0;
};
McEstimate mc_rudin(int d, double beta, double gamma, const BallPoint& z,
                    std::uint64_t n, std::uint64_t seed);

// Int_B |1 - <z,w>|^{-alpha} dv(w) = 2F1(alpha/2, alpha/2; d+1; |z|^2),
// and its boundary limit Gamma(d+1)Gamma(d+1-alpha)/Gamma(d+1-alpha/2)^2,
// finite iff alpha < d+1 (divergence_error otherwise).
double kernel_mass(int d, double alpha, double z_abs_sq);
double kernel_mass_boundary(int d, double alpha);

// Int Int |1 - <z,w>|^{-2 alpha} dv(z) dv(w): the squared L^2 kernel mass.
// Finite iff alpha < (d+2)/2 (divergence_error otherwise).  d = 1 uses the
// closed form (Gamma(3-2a)/Gamma(2-a)^2 - 1)/(a-1)^2; d >= 2 integrates
// the kernel's second moment radially.
double hs_trace(int d, double alpha);

// Boundary-decay diagnostic for the (p, q) pair: a closed-form weighted
// kernel moment, normalized so that its log-log slope in 1-r tends to
//   (d+1) q (1/q + 1 - alpha/(d+1) - 1/p)
// as r -> 1.  Positive slope ("vanishing") matches compactness, negative
// ("blowup") unboundedness, and near-zero ("borderline") the edge case.
struct CarlesonReport {
  std::vector<double> one_minus_r;  // 10^{-1} .. 10^{-6}
  std::vector<double> value;        // probe values at r = 1 - 10^{-k}
  double slope = 0.0;               // least-squares slope on the last 4
  std::string verdict;              // "vanishing" | "borderline" | "blowup"
};
CarlesonReport carleson_probe(int d, double alpha, double p, double q);

}  // namespace bergman

#endif
