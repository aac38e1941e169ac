#ifndef BERGMAN_CLASSIFIER_HPP
#define BERGMAN_CLASSIFIER_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bergman/rational.hpp"

namespace bergman {

// Exponent pair (1/p, 1/q) as exact rationals in [0,1]; the value 0 encodes
// an infinite exponent.
struct ExponentPair {
  Rat ip;  // 1/p
  Rat iq;  // 1/q
};

struct OperatorParams {
  int d = 1;
  double alpha = 0.0;
  // When present, all alpha-dependent comparisons are exact rational
  // arithmetic; otherwise doubles with a 1e-12 ambiguity flag.
  std::optional<Rat> alpha_exact;
};

struct Verdict {
  bool bounded = false;
  bool compact = false;
  std::string clause;  // name of the rule that decided this pair
  // Set when a deciding double comparison landed within 1e-12 of an edge
  // (never set on the exact path).
  bool alpha_near_boundary = false;
};

// L^p -> L^q boundedness/compactness of the kernel operator on the unit
// ball of C^d (identical for the modulus kernel).
Verdict classify(const OperatorParams& par, const ExponentPair& pq);

// Weak-type target exponent (d+1)/alpha for the L^1 endpoint;
// requires 0 < alpha < d+1.
double weak_type_exponent(int d, double alpha);

// Whether the lacunary/power witness sum_n n^t z_1^n lies in L^p(B^d):
// |f(z)| grows like |1 - z_1|^{-(t+1)}, so membership is p (t+1) < d+1
// (for p = infinity: t < -1).
bool witness_membership(int d, double t, double p);

// Geometry of the bounded/compact regions in the (1/p, 1/q) square,
// for rendering and tabulation.
struct DiagramSegment {
  double x0, y0, x1, y1;
  bool in_bounded;  // interior of the segment belongs to the bounded set
  bool in_compact;
  std::string label;
};

struct DiagramRegion {
  int d = 1;
  double alpha = 0.0;
  std::string regime;  // bounded-kernel | subcritical | critical |
                       // supercritical | empty-region
  double c_star = 0.0;       // alpha/(d+1) when meaningful
  double x_threshold = 0.0;  // 1 - c_star (subcritical)
  double offset = 0.0;       // alpha - (d+1) (supercritical)
  std::vector<std::array<double, 2>> bounded_polygon;  // closed outline
  std::vector<DiagramSegment> boundary;                // annotated edges
};

DiagramRegion diagram_region(const OperatorParams& par);

}  // namespace bergman

#endif
