#pragma once

#include <string>
#include <vector>

#include "bergman/ball_geometry.hpp"
#include "bergman/classifier.hpp"

namespace bergman {

// Diagonal action of the kernel operator on the slice monomials z_1^n:
//   c_n = Gamma(d+1) Gamma(alpha+n) / (Gamma(alpha) Gamma(d+1+n)),
// i.e. the Pochhammer ratio (alpha)_n / (d+1)_n.  The product form extends
// to alpha <= 0 wherever the Gamma ratio stays finite; arguments that land
// on a pole of the ratio raise pole_error.
double kalpha_coefficient(const OperatorParams& params, long n);

// Two-parameter diagonal radial operator acting on z_1^n with symbol
//   Gamma(d+1+s) Gamma(d+1+n+s+t) / (Gamma(d+1+s+t) Gamma(d+1+n+s)).
// Requires d+s and d+s+t to avoid negative integers; composing with the
// inverse (s+t, -t) gives the identity symbol at every degree.
struct RadialOperator {
  double s = 0.0;
  double t = 0.0;
  RadialOperator inverse() const { return RadialOperator{s + t, -t}; }
};

double radial_coefficient(const RadialOperator& op, const OperatorParams& params,
                          long n);

// The kernel operator itself as a radial operator: (s, t) = (0, alpha-d-1).
RadialOperator kernel_radial_operator(const OperatorParams& params);

// Truncated diagonal symbol c_0..c_N plus a rigorous bound on the
// discarded squared tail sum_{n>N} c_n^2 (infinite when that sum
// diverges, i.e. when alpha >= d + 1/2).
struct DiagonalSpectrum {
  OperatorParams params;
  std::vector<double> coefficients;
  long truncation = 0;
  double tail_bound = 0.0;
};

DiagonalSpectrum diagonal_spectrum(const OperatorParams& params, long truncation);

// Termwise product c_n * series[n].  The series must not outrun the stored
// symbol.
std::vector<cplx> apply_diagonal(const DiagonalSpectrum& spectrum,
                                 const std::vector<cplx>& series);

// L^2 summary of the diagonal symbol on the disc slice (d = 1 only):
// operator norm, Hilbert-Schmidt status, and the squared eigenvalue sum
// with a fitted tail correction.  A divergent squared sum is reported as
// infinite, never thrown.
struct SpectralReport {
  DiagonalSpectrum spectrum;
  double operator_norm = 0.0;        // sup_n c_n, from monotonicity of ratios
  bool norm_is_top_coefficient = false;  // true when c_0 attains the sup
  bool hilbert_schmidt = false;
  double squared_sum_partial = 0.0;  // sum over n <= truncation
  double squared_sum_tail = 0.0;     // fitted estimate of the rest
  double squared_sum = 0.0;          // partial + tail, or infinity
};

SpectralReport l2_spectral_report(const OperatorParams& params, long truncation);

// Truncated squared eigenvalue sum on the disc versus its closed form
//   ((Gamma(3-2a)/Gamma(2-a)^2) - 1) / (a-1)^2,  a = alpha in (0, 3/2),
// evaluated through the pole-free quadratic-ratio routine.
struct IdentityCheck {
  double series_value = 0.0;
  double closed_form = 0.0;
  double residual = 0.0;
};

IdentityCheck euler_jacobi_check(double alpha, long truncation = 1000000);

// One measurement of the power-witness family f_t = sum_{n>=1} n^t z_1^n:
// its truncated L^p norm, the truncated L^q norm of its image under the
// diagonal symbol, and the ratio.
struct WitnessRatio {
  double input_norm = 0.0;
  double image_norm = 0.0;
  double ratio = 0.0;
};

WitnessRatio witness_ratio(const OperatorParams& params, double p, double q,
                           double t, long truncation, double angular_tol = 3e-3);

struct ProbePoint {
  double t = 0.0;
  long truncation = 0;
  double input_norm = 0.0;
  double image_norm = 0.0;
  double ratio = 0.0;
  bool input_settled = false;  // halved truncation moves the norm < 5%
  bool image_settled = false;
};

// Growth diagnostic along a witness sweep.  growth = max_k R_k / R_1;
// verdict: "blow-up" (>= 10x), "stable" (<= 3x with settled inputs),
// "indeterminate" otherwise.  Unsettled points are reported, not hidden.
struct GrowthReport {
  std::string family;
  std::vector<ProbePoint> points;
  double growth = 0.0;
  std::string verdict;
};

// Sweeps t_k = (d+1)/p - 1 - 0.75 * 0.62^k, k = 1..n_points, toward the
// membership edge of the power-witness family and reports the ratio
// growth.  Pairs with a genuine witness window blow up; bounded pairs
// stay within a small factor of the first ratio.
GrowthReport unboundedness_probe(const OperatorParams& params, double p, double q,
                                 int n_points = 8, long truncation = 32768);

}  // namespace bergman
