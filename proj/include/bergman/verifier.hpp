#pragma once

#include <cstdint>
#include <vector>

#include "bergman/classifier.hpp"
#include "bergman/norm_bounds.hpp"
#include "bergman/operator_engine.hpp"

namespace bergman {

struct CurvePoint {
  double parameter = 0.0;  // trial index, shell depth, or witness offset
  double value = 0.0;
};

// Outcome of a randomized check of one closed-form bound: the worst
// observed ratio estimate/(bound * norms) over all trials, and the number
// of trials whose estimate exceeded the bound beyond four standard errors.
struct VerificationReport {
  OperatorParams params;
  double p = 0.0;
  double q = 0.0;  // second exponent of the pairing or target space
  long n_trials = 0;
  std::uint64_t seed = 0;
  double max_ratio = 0.0;
  NormBound bound;
  long violations = 0;
  std::vector<CurvePoint> curve;  // per-trial ratios
};

// Monte Carlo stress test of the bilinear pairing constant
// hls_constants(params, p, s): random slice polynomials (degree <= 32)
// alternate with radial power pairs (1-|.|^2)^{-theta}; each trial
// estimates |Int Int f(w) g(z) |1-<z,w>|^{-alpha}| with a defensive
// mixture that concentrates part of the z-draws near the kernel
// singularity of each sampled w, so weights stay bounded by small
// constants.  Trials run in parallel (capped by BERGMAN_LAB_THREADS) with
// per-trial seeds seed+i, so results are independent of scheduling.
VerificationReport verify_hls(const OperatorParams& params, double p, double s,
                              long n_trials, std::uint64_t seed);

// Weak-type concentration study at the L^1 endpoint, 0 < alpha < d+1:
// random L^1-normalized mixtures of one to three boundary caps are pushed
// through the modulus kernel and the weak quasinorm
//   sup_lambda lambda * dv{K^+ f > lambda}^{alpha/(d+1)}
// is estimated by importance sampling near the cap centers.  There is no
// closed-form constant: the report carries an infinite bound, zero
// violations by definition, and the per-trial quasinorms in the curve.
VerificationReport verify_weak_type(const OperatorParams& params, long n_trials,
                                    std::uint64_t seed);

// Concentrating-bump comparison at the L^1 endpoint: f_k is the
// normalized indicator of the cap |1 - z_1| < 2^{-k}.  The weak quasinorm
// of K^+ f_k stays bounded in k while the strong L^{(d+1)/alpha} norm
// creeps up like a power of k (a log of the cap width); both curves are
// reported with their end-to-end growth factors.
struct ConcentrationSweep {
  OperatorParams params;
  double target_exponent = 0.0;        // (d+1)/alpha
  std::vector<CurvePoint> quasinorm;   // parameter = k
  std::vector<CurvePoint> strong_norm; // parameter = k
  double quasinorm_growth = 0.0;       // max / first
  double strong_growth = 0.0;
  std::uint64_t seed = 0;
};

ConcentrationSweep weak_type_concentration_sweep(const OperatorParams& params,
                                                 int k_max, long n_z,
                                                 std::uint64_t seed);

// Numerical boundedness probe for one exponent pair, blind to the
// classifier.  Routes by regime:
//   alpha <= 0        the kernel is bounded, nothing to probe ("stable");
//   1/p = 0           shell norms of the constant witness's image;
//   alpha <= d+1      truncation ladder of the power witness placed one
//                     unit past its membership edge, where both norms are
//                     truncation-dominated and the ratio grows like
//                     N^{(d+1)(1/p - 1/q + alpha/(d+1) - 1)};
//   alpha >  d+1      radial witnesses (1-|z|^2)^{-theta} swept toward
//                     the integrability edge theta -> 1/p against a deep
//                     boundary-shell image norm.
// The verdict is a least-squares growth slope: >= 0.04 per log step (or
// a 10x ratio spread) reads "blow-up", <= 0.02 with spread <= 3 reads
// "stable", anything else "indeterminate".  The probe is deterministic;
// the seed is echoed into reports for reproducibility bookkeeping only.
GrowthReport probe_boundedness(const OperatorParams& params, const ExponentPair& e,
                               std::uint64_t seed);

}  // namespace bergman
