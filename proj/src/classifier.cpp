#include "bergman/classifier.hpp"

#include <cmath>

#include "bergman/errors.hpp"

namespace bergman {

namespace {

Verdict make(bool b, bool c, const char* clause, bool near = false) {
  Verdict v;
  v.bounded = b;
  v.compact = c;
  v.clause = clause;
  v.alpha_near_boundary = near;
  return v;
}

Verdict classify_exact(int d, const Rat& a, const ExponentPair& pq) {
  const Rat zero(0), one(1);
  const Rat dp1(d + 1), dp2(d + 2);
  const Rat& x = pq.ip;
  const Rat& y = pq.iq;
  if (a <= zero) return make(true, true, "bounded-kernel");
  if (a >= dp2) return make(false, false, "empty-region");
  if (a == dp1) {
    if (x == one) return make(false, false, "critical-source-endpoint");
    if (x == zero) {
      return make(y > zero, y > zero, "critical-bounded-source");
    }
    if (y > x) return make(true, true, "critical-above-diagonal");
    if (y == x) return make(true, false, "critical-diagonal-equality");
    return make(false, false, "critical-below-diagonal");
  }
  if (a < dp1) {
    const Rat cs = a / dp1;
    const Rat xt = one - cs;
    if (x == one) {
      return make(y > cs, y > cs, "subcritical-source-endpoint");
    }
    if (x > xt) {
      const Rat line = x + cs - one;
      if (y > line) return make(true, true, "subcritical-interior-line");
      if (y == line) return make(true, false, "subcritical-interior-line-equality");
      return make(false, false, "subcritical-interior-line");
    }
    if (x == xt) {
      return make(y > zero, y > zero, "subcritical-threshold-column");
    }
    return make(true, true, "subcritical-beyond-threshold");
  }
  // d+1 < a < d+2
  const Rat line = x + (a - dp1);
  if (y > line) return make(true, true, "supercritical-window");
  if (y == line) return make(false, false, "supercritical-outside-edge");
  return make(false, false, "supercritical-outside");
}

// Three-way compare with a 1e-12 ambiguity band; lands on "equal" inside
// the band and records that the call was a near-miss.
int cmp_tol(double l, double r, bool* near) {
  if (std::abs(l - r) <= 1e-12) {
    *near = true;
    return 0;
  }
  return l < r ? -1 : 1;
}

Verdict classify_double(int d, double a, const ExponentPair& pq) {
  bool near = false;
  const Rat zero(0), one(1);
  const Rat& xr = pq.ip;
  const Rat& yr = pq.iq;
  const double x = xr.to_double();
  const double y = yr.to_double();

  const int va0 = cmp_tol(a, 0.0, &near);
  if (va0 <= 0) return make(true, true, "bounded-kernel", near);
  const int vad2 = cmp_tol(a, d + 2.0, &near);
  if (vad2 >= 0) return make(false, false, "empty-region", near);
  const int vad1 = cmp_tol(a, d + 1.0, &near);
  if (vad1 == 0) {
    if (xr == one) return make(false, false, "critical-source-endpoint", near);
    if (xr == zero) {
      bool pos = yr > zero;
      return make(pos, pos, "critical-bounded-source", near);
    }
    if (yr > xr) return make(true, true, "critical-above-diagonal", near);
    if (yr == xr) return make(true, false, "critical-diagonal-equality", near);
    return make(false, false, "critical-below-diagonal", near);
  }
  if (vad1 < 0) {
    const double cs = a / (d + 1.0);
    const double xt = 1.0 - cs;
    if (xr == one) {
      int vy = cmp_tol(y, cs, &near);
      return make(vy > 0, vy > 0, "subcritical-source-endpoint", near);
    }
    const int vx = cmp_tol(x, xt, &near);
    if (vx > 0) {
      const int vy = cmp_tol(y, x + cs - 1.0, &near);
      if (vy > 0) return make(true, true, "subcritical-interior-line", near);
      if (vy == 0) return make(true, false, "subcritical-interior-line-equality", near);
      return make(false, false, "subcritical-interior-line", near);
    }
    if (vx == 0) {
      bool pos = yr > zero;
      return make(pos, pos, "subcritical-threshold-column", near);
    }
    return make(true, true, "subcritical-beyond-threshold", near);
  }
  const int vy = cmp_tol(y, x + (a - (d + 1.0)), &near);
  if (vy > 0) return make(true, true, "supercritical-window", near);
  if (vy == 0) return make(false, false, "supercritical-outside-edge", near);
  return make(false, false, "supercritical-outside", near);
}

}  // namespace

Verdict classify(const OperatorParams& par, const ExponentPair& pq) {
  if (par.d < 1) throw domain_error("classify: dimension must be >= 1");
  const Rat zero(0), one(1);
  if (pq.ip < zero || pq.ip > one || pq.iq < zero || pq.iq > one) {
    throw domain_error("classify: exponent pair must lie in the unit square");
  }
  if (par.alpha_exact) return classify_exact(par.d, *par.alpha_exact, pq);
  return classify_double(par.d, par.alpha, pq);
}

double weak_type_exponent(int d, double alpha) {
  if (d < 1) throw domain_error("weak_type_exponent: dimension must be >= 1");
  if (!(alpha > 0.0 && alpha < d + 1.0)) {
    throw domain_error("weak_type_exponent: needs 0 < alpha < d+1");
  }
  return (d + 1.0) / alpha;
}

bool witness_membership(int d, double t, double p) {
  if (d < 1) throw domain_error("witness_membership: dimension must be >= 1");
  if (!(p > 0.0)) throw domain_error("witness_membership: exponent must be positive");
  if (std::isinf(p)) return t < -1.0;
  return p * (t + 1.0) < d + 1.0;
}

DiagramRegion diagram_region(const OperatorParams& par) {
  if (par.d < 1) throw domain_error("diagram_region: dimension must be >= 1");
  const int d = par.d;
  const double a = par.alpha_exact ? par.alpha_exact->to_double() : par.alpha;
  DiagramRegion reg;
  reg.d = d;
  reg.alpha = a;
  if (a <= 0.0) {
    reg.regime = "bounded-kernel";
    reg.bounded_polygon = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    return reg;
  }
  if (a >= d + 2.0) {
    reg.regime = "empty-region";
    return reg;
  }
  if (a < d + 1.0) {
    reg.regime = "subcritical";
    reg.c_star = a / (d + 1.0);
    reg.x_threshold = 1.0 - reg.c_star;
    const double cs = reg.c_star, xt = reg.x_threshold;
    reg.bounded_polygon = {{0, 0}, {xt, 0}, {1, cs}, {1, 1}, {0, 1}};
    reg.boundary = {
        {0, 0, xt, 0, true, true, "all-targets-floor"},
        {xt, 0, 1, cs, true, false, "transition-line"},
        {1, cs, 1, 1, true, true, "source-endpoint-column"},
    };
    return reg;
  }
  if (a == d + 1.0) {
    reg.regime = "critical";
    reg.c_star = 1.0;
    reg.x_threshold = 0.0;
    reg.bounded_polygon = {{0, 0}, {1, 1}, {0, 1}};
    reg.boundary = {
        {0, 0, 1, 1, true, false, "transition-line"},
        {1, 0, 1, 1, false, false, "excluded-source-column"},
    };
    return reg;
  }
  reg.regime = "supercritical";
  reg.offset = a - (d + 1.0);
  const double off = reg.offset;
  const double xw = 1.0 - off;  // d+2-alpha
  reg.bounded_polygon = {{0, off}, {xw, 1}, {0, 1}};
  reg.boundary = {
      {0, off, xw, 1, false, false, "transition-line"},
  };
  return reg;
}

}  // namespace bergman
