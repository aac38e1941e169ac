#ifndef BERGMAN_BALL_GEOMETRY_HPP
#define BERGMAN_BALL_GEOMETRY_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace bergman {

using cplx = std::complex<double>;

// Point of C^d (d = size()); inside the unit ball when norm_sq < 1.
using BallPoint = std::vector<cplx>;

cplx hermitian_inner(const BallPoint& z, const BallPoint& w);  // sum z_k conj(w_k)
double norm_sq(const BallPoint& z);

// Deterministic random stream.  Uniforms come from the top 53 bits of
// mt19937_64 and normals from Box-Muller, so sequences are reproducible
// across standard libraries (std::*_distribution is not pinned down).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double u01();    // uniform in [0, 1)
  double gauss();  // standard normal

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Uniform point of the unit ball of C^d under the normalized volume measure.
BallPoint sample_ball_uniform(Rng& rng, int d);

// Globally adaptive Gauss-Kronrod 7/15 integral of f over [lo, hi].
// Interior-node rule, so integrable endpoint singularities are handled by
// the adaptive refinement.  Throws convergence_error if the segment budget
// is exhausted before reaching max(abs_tol, rel_tol * |I|).
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol = 1e-11, double rel_tol = 1e-11);

// d * Int_0^1 g(s) s^{d-1} ds: radial part of dv in the s = |z|^2 variable,
// normalized so that g == 1 integrates to 1.  Mild boundary singularities
// (exponent >= -1/2) resolve to ~1e-7; use the boundary form below when
// the integrand blows up faster.
double radial_integral(int d, const std::function<double(double)>& g,
                       double abs_tol = 1e-11, double rel_tol = 1e-11);

// Same integral with the integrand written as h(1 - s): h receives the
// exact distance to the boundary, which sidesteps the rounding of 1 - s
// for s near 1, and a boundary-clustering substitution resolves any
// integrable power singularity to full accuracy.
double radial_integral_boundary(int d, const std::function<double(double)>& h,
                                double abs_tol = 1e-11, double rel_tol = 1e-11);

// L^p(B^d) norm of the slice function z -> sum_n coeffs[n] z_1^n.
// Exact for single monomials and for p = 2; quadrature otherwise.
// p = INFINITY gives the sup norm over the closed ball.  High degrees
// (> 64) switch to a fixed graded rule tuned for growth-ratio probes;
// angular_tol trades accuracy of that rule for speed (growth probes pass
// a loose tolerance, everything else keeps the default).
double slice_norm(const std::vector<cplx>& coeffs, double p, int d,
                  double angular_tol = 1e-8);

// Weighted measure dv_beta = c_beta (1-|z|^2)^beta dv on B^d, beta > -1.
class WeightedMeasure {
 public:
  WeightedMeasure(int d, double beta);
  int dim() const { return d_; }
  double beta() const { return beta_; }
  double c_beta() const { return c_beta_; }  // Gamma(d+1+beta)/(Gamma(d+1)Gamma(1+beta))
  double radial_density(double s) const;     // density of s = |z|^2 in [0,1]
  double sample_radial(Rng& rng) const;      // inverse-CDF table lookup
  BallPoint sample(Rng& rng) const;

 private:
  int d_;
  double beta_;
  double c_beta_;
  std::vector<double> s_, cdf_, pdf_;
};

// Importance sampler concentrated where 1 - <z, anchor/|anchor|> is small:
// in the frame whose first axis is the anchor direction, the first
// coordinate is drawn from a density ~ rho^{-apow} (area measure) around
// c0 = 1/|anchor|, rho in [1/|anchor| - 1, 1/|anchor| + 1]; the remaining
// coordinates fill the fiber uniformly.  Disabled for anchors closer than
// 0.05 to the center, where plain uniform sampling already covers the
// kernel factor.
class PoleSampler {
 public:
  PoleSampler(const BallPoint& anchor, double apow);
  bool usable() const { return usable_; }
  // Draws a point; sets outside = true (and returns an invalid point) when
  // the annulus draw misses the ball, which callers must skip: the
  // mixture density below is conditioned on nothing, so skipped draws
  // score zero in a self-normalized mixture estimate.
  BallPoint sample(Rng& rng, bool& outside) const;
  // Density w.r.t. dv at z inside the ball (zero when disabled).
  double density(const BallPoint& z) const;

 private:
  int d_ = 0;
  double apow_ = 0.0, r_ = 0.0, c0_ = 0.0, delta_ = 0.0, rho_max_ = 0.0,
         norm_ = 0.0;
  bool log_radial_ = false, usable_ = false;
  BallPoint anchor_;
  std::vector<BallPoint> frame_;
};

// dv-mass of the disc-type region {w in B^d : |c - w_1| < rho}, c >= 0.
double disc_region_mass(double c, double rho, int d);

// Uniform sample from the cap {w in B^d : |1 - w_1| < eps}
// (its mass is disc_region_mass(1, eps, d)).
BallPoint sample_cap(Rng& rng, int d, double eps);

// Unitary matrix (as a list of orthonormal columns) whose first column is u
// (|u| must be 1); apply_unitary maps x to sum_j x_j * column_j.
std::vector<BallPoint> unitary_from_first_column(const BallPoint& u);
BallPoint apply_unitary(const std::vector<BallPoint>& U, const BallPoint& x);

}  // namespace bergman

#endif
