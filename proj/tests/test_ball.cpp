#include "bergman/ball_geometry.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "bergman/errors.hpp"
#include "bergman/special_functions.hpp"
#include "doctest.h"

using namespace bergman;

namespace {

constexpr double kPi = 3.14159265358979323846;

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

}  // namespace

TEST_CASE("inner product and norms") {
  BallPoint z = {cplx(0.3, 0.4), cplx(0.0, -0.5)};
  BallPoint w = {cplx(1.0, 0.0), cplx(0.0, 1.0)};
  cplx ip = hermitian_inner(z, w);
  CHECK(close(ip.real(), 0.3 - 0.5, 1e-15));  // (-0.5i) * conj(i) = -0.5
  CHECK(close(ip.imag(), 0.4, 1e-15));
  CHECK(close(norm_sq(z), 0.09 + 0.16 + 0.25, 1e-15));
}

TEST_CASE("rng determinism and moments") {
  Rng a(42), b(42), c(43);
  bool same = true, diff = false;
  for (int i = 0; i < 5; ++i) {
    double ua = a.u01(), ub = b.u01(), uc = c.u01();
    same = same && (ua == ub);
    diff = diff || (ua != uc);
    CHECK(ua >= 0.0);
    CHECK(ua < 1.0);
  }
  CHECK(same);
  CHECK(diff);

  Rng g(7);
  double mean = 0.0, var = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    double x = g.gauss();
    mean += x;
    var += x * x;
  }
  mean /= n;
  var = var / n - mean * mean;
  CHECK(std::abs(mean) < 0.02);
  CHECK(std::abs(var - 1.0) < 0.03);
}

TEST_CASE("adaptive quadrature on smooth and singular integrands") {
  CHECK(close(integrate([](double x) { return x * x; }, 0.0, 1.0), 1.0 / 3.0, 1e-14));
  CHECK(close(integrate([](double x) { return std::sin(x); }, 0.0, kPi), 2.0, 1e-12));
  CHECK(close(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-11, 1e-11),
              2.0, 1e-7));
  CHECK(close(integrate([](double x) { return 1.0 / std::sqrt(1.0 - x); }, 0.0, 1.0, 1e-11, 1e-11),
              2.0, 1e-7));
}

TEST_CASE("radial integral handles boundary singularities") {
  for (int d = 1; d <= 3; ++d) {
    CHECK(close(radial_integral(d, [](double) { return 1.0; }), 1.0, 1e-12));
    // mean of |z|^2 under dv is d/(d+1)
    CHECK(close(radial_integral(d, [](double s) { return s; }), d / (d + 1.0), 1e-12));
  }
  // Mild singularity through the plain form: Int_0^1 (1-s)^(-1/2) ds = 2.
  CHECK(close(radial_integral(1, [](double s) { return 1.0 / std::sqrt(1.0 - s); }),
              2.0, 1e-7));
  // Strong singularities through the boundary-distance form.
  // Int_0^1 (1-s)^(-0.8) ds = 5.
  CHECK(close(radial_integral_boundary(1, [](double oms) { return std::pow(oms, -0.8); }),
              5.0, 1e-9));
  // 2 Int_0^1 s (1-s)^(-0.8) ds = 2 B(2, 0.2) = 2 / (0.2 * 1.2)
  CHECK(close(radial_integral_boundary(2, [](double oms) { return std::pow(oms, -0.8); }),
              2.0 / 0.24, 1e-9));
  CHECK(close(radial_integral_boundary(1, [](double oms) { return std::pow(oms, -0.85); }),
              1.0 / 0.15, 1e-9));
  CHECK_THROWS_AS(radial_integral(0, [](double) { return 1.0; }), domain_error);
}

TEST_CASE("uniform ball sampling matches radial law") {
  for (int d = 1; d <= 3; ++d) {
    Rng rng(7 + d);
    const int n = 200000;
    double mean = 0.0;
    for (int i = 0; i < n; ++i) {
      BallPoint z = sample_ball_uniform(rng, d);
      double s = norm_sq(z);
      CHECK(s < 1.0);
      mean += s;
    }
    mean /= n;
    CHECK(std::abs(mean - d / (d + 1.0)) < 0.005);
  }
}

TEST_CASE("slice norms: exact paths") {
  // || z_1 ||_2 = sqrt(1/(1+d))
  CHECK(close(slice_norm({0.0, 1.0}, 2.0, 1), std::sqrt(0.5), 1e-13));
  CHECK(close(slice_norm({0.0, 1.0}, 2.0, 2), std::sqrt(1.0 / 3.0), 1e-13));
  // || z_1^2 ||_4^4 = B(5,1) = 1/5 in d = 1
  CHECK(close(slice_norm({0.0, 0.0, 1.0}, 4.0, 1), std::pow(0.2, 0.25), 1e-13));
  // ||1 + z_1||_2^2 = 1 + 1/(1+d)
  CHECK(close(slice_norm({1.0, 1.0}, 2.0, 1), std::sqrt(1.5), 1e-13));
  CHECK(close(slice_norm({1.0, 1.0}, 2.0, 2), std::sqrt(4.0 / 3.0), 1e-13));
  // monomial recurrence consistency at higher degree
  double w5 = 1.0;
  for (int n = 1; n <= 5; ++n) w5 *= double(n) / (n + 3.0);
  std::vector<cplx> e5(6, cplx(0.0));
  e5[5] = 1.0;
  CHECK(close(slice_norm(e5, 2.0, 3), std::sqrt(w5), 1e-12));
  CHECK(close(slice_norm({}, 2.0, 1), 0.0, 1e-15));
  CHECK_THROWS_AS(slice_norm({1.0}, 0.0, 1), domain_error);
}

TEST_CASE("slice norms: quadrature path against moment expansions") {
  // ||1 + z_1||_4^4 = 1 + 2 E|z1|^2 + 4 E(Re z1)^2 + E|z1|^4
  // d=1: 1 + 1 + 1 + 1/3; d=2: 1 + 2/3 + 2/3 + 1/6.
  CHECK(close(slice_norm({1.0, 1.0}, 4.0, 1), std::pow(10.0 / 3.0, 0.25), 1e-9));
  CHECK(close(slice_norm({1.0, 1.0}, 4.0, 2), std::pow(2.5, 0.25), 1e-9));
  // Norm monotonicity in p and the trivial lower bound |a_0|.
  double n1 = slice_norm({1.0, 1.0}, 1.0, 1);
  double n2 = slice_norm({1.0, 1.0}, 2.0, 1);
  CHECK(n1 <= n2 + 1e-12);
  CHECK(n1 >= 1.0 - 1e-12);
}

TEST_CASE("slice norms: sup norm") {
  CHECK(close(slice_norm({1.0, 1.0}, INFINITY, 1), 2.0, 1e-12));  // positive fast path
  CHECK(close(slice_norm({1.0, -1.0}, INFINITY, 2), 2.0, 1e-9));
  CHECK(close(slice_norm({0.0, cplx(0.0, 1.0)}, INFINITY, 1), 1.0, 1e-12));
  // |3 + z^2| peaks at z = 1 and z = -1 with value 4.
  CHECK(close(slice_norm({3.0, 0.0, 1.0}, INFINITY, 1), 4.0, 1e-9));
}

TEST_CASE("slice norms: high-degree path consistent with adaptive path") {
  std::vector<cplx> lo(65, cplx(0.0)), hi(201, cplx(0.0));
  double fact = 1.0;
  for (int n = 0; n <= 200; ++n) {
    if (n > 0) fact *= n;
    if (n <= 64) lo[n] = 1.0 / fact;
    hi[n] = 1.0 / fact;
  }
  double a = slice_norm(lo, 4.0, 1);   // adaptive route (degree <= 64)
  double b = slice_norm(hi, 4.0, 1);   // graded fixed rule (degree > 64)
  CHECK(close(b, a, 5e-4));
}

TEST_CASE("weighted measure: normalization, density, sampling") {
  WeightedMeasure m1(1, 1.0);
  CHECK(close(m1.c_beta(), 2.0, 1e-12));  // Gamma(3)/(Gamma(2)Gamma(2))
  WeightedMeasure m2(2, 0.5);
  CHECK(close(m2.c_beta(), 1.875, 1e-12));

  WeightedMeasure m3(2, -0.4);
  CHECK(close(integrate([&](double s) { return m3.radial_density(s); }, 0.0, 1.0, 1e-10, 1e-10),
              1.0, 1e-8));

  {  // s ~ Beta(1, 3): mean 1/4
    WeightedMeasure m(1, 2.0);
    Rng rng(11);
    double mean = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) mean += m.sample_radial(rng);
    CHECK(std::abs(mean / n - 0.25) < 0.005);
  }
  {  // s ~ Beta(2, 0.5): mean 2/2.5 = 0.8, singular density at s = 1
    WeightedMeasure m(2, -0.5);
    Rng rng(12);
    double mean = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
      BallPoint z = m.sample(rng);
      CHECK(z.size() == 2);
      double s = norm_sq(z);
      CHECK(s < 1.0);
      mean += s;
    }
    CHECK(std::abs(mean / n - 0.8) < 0.005);
  }
  CHECK_THROWS_AS(WeightedMeasure(1, -1.0), domain_error);
  CHECK_THROWS_AS(WeightedMeasure(0, 0.0), domain_error);
}

TEST_CASE("disc region mass") {
  // Centered: 1 - (1 - rho^2)^d.
  CHECK(close(disc_region_mass(0.0, 0.5, 1), 0.25, 1e-12));
  CHECK(close(disc_region_mass(0.0, 0.5, 3), 1.0 - std::pow(0.75, 3), 1e-12));
  // Region covering the whole ball.
  CHECK(close(disc_region_mass(0.3, 1.4, 2), 1.0, 1e-10));
  // d = 1: compare with the two-circle lens area formula.
  auto lens = [](double c, double r) {
    double big = std::acos((c * c + 1.0 - r * r) / (2.0 * c));
    double small = r * r * std::acos((c * c + r * r - 1.0) / (2.0 * c * r));
    double k = std::sqrt((-c + r + 1.0) * (c + r - 1.0) * (c - r + 1.0) * (c + r + 1.0));
    return (big + small - 0.5 * k) / kPi;
  };
  CHECK(close(disc_region_mass(1.0, 0.5, 1), lens(1.0, 0.5), 1e-10));
  CHECK(close(disc_region_mass(0.7, 0.4, 1), lens(0.7, 0.4), 1e-10));
  // d = 2 Monte Carlo cross-check.
  {
    Rng rng(5);
    const int n = 300000;
    int hits = 0;
    for (int i = 0; i < n; ++i) {
      BallPoint w = sample_ball_uniform(rng, 2);
      if (std::abs(cplx(1.0, 0.0) - w[0]) < 0.3) ++hits;
    }
    double p = disc_region_mass(1.0, 0.3, 2);
    double se = std::sqrt(p * (1.0 - p) / n);
    CHECK(std::abs(double(hits) / n - p) < 4.0 * se);
  }
  CHECK_THROWS_AS(disc_region_mass(1.0, 0.0, 1), domain_error);
}

TEST_CASE("cap sampling stays in region and matches conditional moments") {
  const int d = 2;
  const double eps = 0.4;
  Rng rng(9);
  const int n = 50000;
  double mean = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    BallPoint w = sample_cap(rng, d, eps);
    CHECK(std::abs(cplx(1.0, 0.0) - w[0]) < eps);
    CHECK(norm_sq(w) < 1.0);
    double v = 1.0 - std::norm(w[0]);
    mean += v;
    sq += v * v;
  }
  mean /= n;
  sq = sq / n - mean * mean;
  // Conditional mean of 1-|w_1|^2 from the marginal density of x = |w_1|^2.
  auto frac = [&](double x) {
    double r = std::sqrt(x);
    double cosv = (1.0 + x - eps * eps) / (2.0 * r);
    cosv = std::min(1.0, std::max(-1.0, cosv));
    return std::acos(cosv) / kPi;
  };
  double denom = integrate([&](double x) { return d * std::pow(1.0 - x, d - 1.0) * frac(x); },
                           0.0, 1.0, 1e-12, 1e-12);
  double numer = integrate([&](double x) { return d * std::pow(1.0 - x, double(d)) * frac(x); },
                           0.0, 1.0, 1e-12, 1e-12);
  double expect = numer / denom;
  double se = std::sqrt(sq / n);
  CHECK(std::abs(mean - expect) < 4.0 * se);
  CHECK(close(denom, disc_region_mass(1.0, eps, d), 1e-9));
}

TEST_CASE("unitary completion") {
  BallPoint u = {cplx(0.6, 0.0), cplx(0.0, 0.8)};
  auto U = unitary_from_first_column(u);
  REQUIRE(U.size() == 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      cplx g = hermitian_inner(U[i], U[j]);
      CHECK(std::abs(g - (i == j ? cplx(1.0) : cplx(0.0))) < 1e-12);
    }
  }
  BallPoint e1 = {cplx(1.0), cplx(0.0)};
  BallPoint img = apply_unitary(U, e1);
  CHECK(std::abs(img[0] - u[0]) < 1e-12);
  CHECK(std::abs(img[1] - u[1]) < 1e-12);
  BallPoint x = {cplx(0.3, -0.2), cplx(0.1, 0.7)};
  CHECK(close(norm_sq(apply_unitary(U, x)), norm_sq(x), 1e-12));
  CHECK_THROWS_AS(unitary_from_first_column({cplx(0.5), cplx(0.0)}), domain_error);
}
