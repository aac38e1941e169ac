#include "bergman/operator_engine.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "bergman/ball_geometry.hpp"
#include "bergman/errors.hpp"
#include "bergman/kernel_integrals.hpp"
#include "bergman/special_functions.hpp"
#include "doctest.h"

using namespace bergman;

namespace {

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

OperatorParams make(int d, double alpha) { return OperatorParams{d, alpha, {}}; }

}  // namespace

TEST_CASE("diagonal symbol: pinned values") {
  // n = 0 always gives 1 (empty Pochhammer product).
  CHECK(kalpha_coefficient(make(1, 0.7), 0) == 1.0);
  CHECK(kalpha_coefficient(make(3, 2.9), 0) == 1.0);
  CHECK(kalpha_coefficient(make(2, -1.5), 0) == 1.0);
  // alpha = d+1 is the identity symbol at every degree.
  for (long n : {0L, 1L, 7L, 100L, 100000L}) {
    CHECK(close(kalpha_coefficient(make(1, 2.0), n), 1.0, 1e-13));
    CHECK(close(kalpha_coefficient(make(3, 4.0), n), 1.0, 1e-13));
  }
  // d = 1, alpha = 1, n = 3: (1)_3 / (2)_3 = 6 / 24.
  CHECK(close(kalpha_coefficient(make(1, 1.0), 3), 0.25, 1e-14));
  // Generic value against the direct Pochhammer ratio.
  CHECK(close(kalpha_coefficient(make(2, 1.3), 5),
              sf::pochhammer(1.3, 5) / sf::pochhammer(3.0, 5), 1e-13));
}

TEST_CASE("diagonal symbol: nonpositive degrees of the kernel") {
  // alpha <= 0 works through the finite product wherever the Gamma ratio
  // stays finite; integer alpha truncates the symbol to a polynomial.
  CHECK(kalpha_coefficient(make(1, -2.0), 3) == 0.0);
  CHECK(kalpha_coefficient(make(2, -2.0), 5) == 0.0);
  CHECK(close(kalpha_coefficient(make(1, -0.5), 2), (-0.5) * (0.5) / (2.0 * 3.0), 1e-14));
  // Gamma(alpha + n) sits on a pole when alpha + n is a nonpositive integer.
  CHECK_THROWS_AS((void)kalpha_coefficient(make(1, -2.0), 0), pole_error);
  CHECK_THROWS_AS((void)kalpha_coefficient(make(1, -2.0), 1), pole_error);
  CHECK_THROWS_AS((void)kalpha_coefficient(make(1, -2.0), 2), pole_error);
  CHECK_THROWS_AS((void)kalpha_coefficient(make(2, -5.0), 5), pole_error);
  // Validation.
  CHECK_THROWS_AS((void)kalpha_coefficient(make(0, 1.0), 1), domain_error);
  CHECK_THROWS_AS((void)kalpha_coefficient(make(1, 1.0), -1), domain_error);
}

TEST_CASE("radial operator: identity, kernel symbol, composition") {
  // t = 0 is the identity at every degree, any s.
  for (double s : {0.0, 0.8, -0.4, 3.0}) {
    RadialOperator id{s, 0.0};
    for (long n : {0L, 1L, 13L, 500L})
      CHECK(close(radial_coefficient(id, make(2, 1.0), n), 1.0, 1e-13));
  }
  // (0, alpha - d - 1) reproduces the kernel's diagonal symbol.
  for (double alpha : {0.6, 1.0, 2.7}) {
    OperatorParams par = make(1, alpha);
    RadialOperator op = kernel_radial_operator(par);
    CHECK(op.s == 0.0);
    CHECK(op.t == alpha - 2.0);
    for (long n = 0; n <= 1000; ++n)
      CHECK(close(radial_coefficient(op, par, n), kalpha_coefficient(par, n), 1e-12));
  }
  // Composition with the inverse gives 1 at every degree.
  for (auto st : std::vector<std::pair<double, double>>{{0.3, 1.7}, {1.0, -0.5}, {0.0, 2.2}}) {
    RadialOperator op{st.first, st.second};
    RadialOperator inv = op.inverse();
    OperatorParams par = make(2, 1.0);
    for (long n = 0; n <= 1000; ++n) {
      double prod = radial_coefficient(op, par, n) * radial_coefficient(inv, par, n);
      CHECK(close(prod, 1.0, 1e-12));
    }
  }
  // Parameters that land the Gamma arguments on poles are rejected.
  CHECK_THROWS_AS((void)radial_coefficient(RadialOperator{-3.0, 0.5}, make(1, 1.0), 2),
                  pole_error);
  CHECK_THROWS_AS((void)radial_coefficient(RadialOperator{0.5, -4.5}, make(1, 1.0), 0),
                  pole_error);
}

TEST_CASE("truncated symbol and termwise action") {
  DiagonalSpectrum spec = diagonal_spectrum(make(1, 1.0), 64);
  REQUIRE(spec.coefficients.size() == 65);
  for (long n = 0; n <= 64; ++n)
    CHECK(close(spec.coefficients[n], 1.0 / (n + 1.0), 1e-14));

  std::vector<cplx> series = {cplx(1, 0), cplx(0, 2), cplx(-3, 1)};
  std::vector<cplx> out = apply_diagonal(spec, series);
  REQUIRE(out.size() == 3);
  CHECK(close(std::abs(out[0] - cplx(1, 0)), 0.0, 1e-14));
  CHECK(close(std::abs(out[1] - cplx(0, 1)), 0.0, 1e-14));
  CHECK(close(std::abs(out[2] - cplx(-1, 1.0 / 3.0)), 0.0, 1e-14));

  // alpha = d + 1 acts as the identity on truncated series.
  DiagonalSpectrum id = diagonal_spectrum(make(2, 3.0), 32);
  std::vector<cplx> probe = {cplx(0.3, -0.1), cplx(2, 5), cplx(0, -4)};
  std::vector<cplx> same = apply_diagonal(id, probe);
  for (std::size_t k = 0; k < probe.size(); ++k)
    CHECK(std::abs(same[k] - probe[k]) <= 1e-15);

  // A series longer than the stored symbol is rejected.
  std::vector<cplx> toolong(34, cplx(1, 0));
  CHECK_THROWS_AS((void)apply_diagonal(id, toolong), domain_error);
  CHECK_THROWS_AS((void)diagonal_spectrum(make(1, 0.0), 64), domain_error);
  CHECK_THROWS_AS((void)diagonal_spectrum(make(1, 1.0), 0), domain_error);
}

TEST_CASE("symbol asymptotics: c_n ~ Gamma(d+1)/Gamma(alpha) n^{alpha-d-1}") {
  const long n = 10000;
  for (auto da : std::vector<std::pair<int, double>>{{1, 0.7}, {2, 1.3}, {1, 2.5}, {3, 3.1}}) {
    OperatorParams par = make(da.first, da.second);
    double limit = sf::gamma_fn(da.first + 1.0) / sf::gamma_fn(da.second);
    double scaled =
        kalpha_coefficient(par, n) * std::pow(double(n), da.first + 1.0 - da.second);
    CHECK(std::abs(scaled - limit) <= 0.01 * std::abs(limit));
  }
}

TEST_CASE("disc symbol monotonicity trichotomy") {
  DiagonalSpectrum dec = diagonal_spectrum(make(1, 1.5), 2048);
  DiagonalSpectrum flat = diagonal_spectrum(make(1, 2.0), 2048);
  DiagonalSpectrum inc = diagonal_spectrum(make(1, 2.5), 2048);
  for (long n = 0; n < 2048; ++n) {
    CHECK(dec.coefficients[n + 1] < dec.coefficients[n]);
    CHECK(close(flat.coefficients[n], 1.0, 1e-13));
    CHECK(inc.coefficients[n + 1] > inc.coefficients[n]);
  }
  // Squared-tail bound is finite exactly when alpha < d + 1/2.
  CHECK(std::isfinite(diagonal_spectrum(make(1, 1.4), 256).tail_bound));
  CHECK(std::isinf(diagonal_spectrum(make(1, 1.6), 256).tail_bound));
  CHECK(std::isfinite(diagonal_spectrum(make(2, 2.4), 256).tail_bound));
}

TEST_CASE("disc spectral report: eigenvalues, norm, squared sums") {
  SpectralReport rep = l2_spectral_report(make(1, 1.0), 100000);
  for (long j = 0; j <= 100; ++j)
    CHECK(std::abs(rep.spectrum.coefficients[j] - 1.0 / (j + 1.0)) <= 1e-12);
  CHECK(rep.operator_norm == 1.0);
  CHECK(rep.norm_is_top_coefficient);
  CHECK(rep.hilbert_schmidt);
  const double pi = 3.14159265358979323846;
  CHECK(std::abs(rep.squared_sum - pi * pi / 6.0) <= 1e-9);

  SpectralReport half = l2_spectral_report(make(1, 0.5), 1000000);
  CHECK(half.operator_norm == 1.0);
  CHECK(half.hilbert_schmidt);
  CHECK(std::abs(half.squared_sum - 1.092958178940650745) <= 1e-8);

  // At the square-summability edge and beyond the report flags divergence
  // instead of throwing.
  for (double alpha : {1.5, 1.8}) {
    SpectralReport div = l2_spectral_report(make(1, alpha), 4096);
    CHECK_FALSE(div.hilbert_schmidt);
    CHECK(std::isinf(div.squared_sum));
    CHECK(std::isfinite(div.squared_sum_partial));
  }

  // Norm trichotomy from the monotone coefficient ratio.
  CHECK(l2_spectral_report(make(1, 2.0), 128).operator_norm == 1.0);
  CHECK(std::isinf(l2_spectral_report(make(1, 2.5), 128).operator_norm));
  CHECK_FALSE(l2_spectral_report(make(1, 2.5), 128).norm_is_top_coefficient);

  CHECK_THROWS_AS((void)l2_spectral_report(make(2, 1.0), 4096), domain_error);
  CHECK_THROWS_AS((void)l2_spectral_report(make(1, 1.0), 32), domain_error);
}

TEST_CASE("squared-sum identity against the closed form") {
  for (double alpha : {0.25, 0.5, 0.75, 1.0, 1.25, 1.4}) {
    IdentityCheck chk = euler_jacobi_check(alpha);
    CHECK(chk.residual <= 1e-8);
    CHECK(close(chk.series_value, chk.closed_form, 1e-8));
  }
  // Closed form at alpha = 1 is zeta(2) via the quadratic-ratio limit.
  const double pi = 3.14159265358979323846;
  CHECK(std::abs(euler_jacobi_check(1.0).closed_form - pi * pi / 6.0) <= 1e-12);
  CHECK_THROWS_AS((void)euler_jacobi_check(0.0), domain_error);
  CHECK_THROWS_AS((void)euler_jacobi_check(1.5), domain_error);
  CHECK_THROWS_AS((void)euler_jacobi_check(-0.3), domain_error);
}

TEST_CASE("power witness ratio: validation and basic shape") {
  OperatorParams par = make(1, 1.0);
  WitnessRatio w = witness_ratio(par, 2.0, 2.0, 0.2, 4096);
  CHECK(w.input_norm > 0.0);
  CHECK(w.image_norm > 0.0);
  CHECK(close(w.ratio, w.image_norm / w.input_norm, 1e-13));
  // The identity symbol maps the witness to itself: ratio is exactly 1.
  WitnessRatio id = witness_ratio(make(1, 2.0), 2.0, 2.0, 0.4, 2048);
  CHECK(close(id.ratio, 1.0, 1e-12));
  CHECK_THROWS_AS((void)witness_ratio(par, 0.5, 2.0, 0.2, 4096), domain_error);
  CHECK_THROWS_AS((void)witness_ratio(par, 2.0, 2.0, 0.2, 4), domain_error);
  CHECK_THROWS_AS((void)witness_ratio(make(1, -1.0), 2.0, 2.0, 0.2, 4096), domain_error);
}

TEST_CASE("growth probe: bounded pair stays put") {
  // d = 1, alpha = 1, p = q = 2 is bounded; the sweep must stay within 3x.
  GrowthReport rep = unboundedness_probe(make(1, 1.0), 2.0, 2.0);
  CHECK(rep.family == "power-series");
  CHECK(rep.points.size() == 8);
  CHECK(rep.verdict == "stable");
  CHECK(rep.growth <= 3.0);
  for (const ProbePoint& pt : rep.points) {
    CHECK(pt.input_settled);
    CHECK(pt.ratio > 0.0);
  }
  // t_k increases toward the membership edge t = (d+1)/p - 1 = 0.
  for (std::size_t k = 1; k < rep.points.size(); ++k) {
    CHECK(rep.points[k].t > rep.points[k - 1].t);
    CHECK(rep.points[k].t < 0.0);
  }
}

TEST_CASE("growth probe: projection degree fixes the witness family") {
  // alpha = d + 1, p = q = 2: every witness is reproduced exactly.
  GrowthReport rep = unboundedness_probe(make(1, 2.0), 2.0, 2.0, 6, 2048);
  CHECK(rep.verdict == "stable");
  for (const ProbePoint& pt : rep.points) CHECK(close(pt.ratio, 1.0, 1e-12));
}

TEST_CASE("growth probe: unbounded pair blows up") {
  // d = 1, alpha = 2, L^2 -> L^4 is unbounded; ratios grow past 10x.
  GrowthReport rep = unboundedness_probe(make(1, 2.0), 2.0, 4.0);
  CHECK(rep.verdict == "blow-up");
  CHECK(rep.growth >= 10.0);
}

TEST_CASE("diagonal action agrees with Monte Carlo integration") {
  // Integrating the kernel against a low-degree slice polynomial must
  // reproduce the termwise symbol action at interior points, within the
  // Monte Carlo error bars.
  for (auto da : std::vector<std::pair<int, double>>{{1, 1.2}, {2, 2.6}}) {
    const int d = da.first;
    const double alpha = da.second;
    OperatorParams par = make(d, alpha);
    Rng rng(20240 + d);
    std::vector<cplx> coeffs(7);
    for (cplx& c : coeffs) c = cplx(2.0 * rng.u01() - 1.0, 2.0 * rng.u01() - 1.0);
    DiagonalSpectrum spec = diagonal_spectrum(par, 6);
    std::vector<cplx> image = apply_diagonal(spec, coeffs);

    const long n_samples = 40000;
    for (int trial = 0; trial < 5; ++trial) {
      BallPoint z(d);
      for (int j = 0; j < d; ++j)
        z[j] = cplx(0.35 * (2.0 * rng.u01() - 1.0), 0.35 * (2.0 * rng.u01() - 1.0));
      cplx expected = 0.0;
      cplx zpow = 1.0;
      for (std::size_t n = 0; n < image.size(); ++n, zpow *= z[0]) expected += image[n] * zpow;

      cplx sum = 0.0;
      double sum_re2 = 0.0, sum_im2 = 0.0;
      for (long s = 0; s < n_samples; ++s) {
        BallPoint w = sample_ball_uniform(rng, d);
        cplx fw = 0.0;
        cplx wpow = 1.0;
        for (std::size_t n = 0; n < coeffs.size(); ++n, wpow *= w[0]) fw += coeffs[n] * wpow;
        cplx val = kernel_eval(alpha, z, w) * fw;
        sum += val;
        sum_re2 += val.real() * val.real();
        sum_im2 += val.imag() * val.imag();
      }
      cplx mean = sum / double(n_samples);
      double se_re = std::sqrt(std::max(0.0, sum_re2 / n_samples - mean.real() * mean.real()) /
                               n_samples);
      double se_im = std::sqrt(std::max(0.0, sum_im2 / n_samples - mean.imag() * mean.imag()) /
                               n_samples);
      CHECK(std::abs(mean.real() - expected.real()) <= 4.0 * se_re + 1e-12);
      CHECK(std::abs(mean.imag() - expected.imag()) <= 4.0 * se_im + 1e-12);
    }
  }
}
