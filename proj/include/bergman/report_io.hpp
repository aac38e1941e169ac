#ifndef BERGMAN_REPORT_IO_HPP
#define BERGMAN_REPORT_IO_HPP

#include <string>

#include "bergman/classifier.hpp"
#include "bergman/verifier.hpp"

namespace bergman {

// All emitters return complete documents as strings and are byte-stable:
// the same inputs always produce the same bytes, so outputs can be pinned
// by golden-file tests.

// Verification run as a JSON object (UTF-8, keys sorted, 2-space indent,
// trailing newline): {bound, curve, exponents, max_ratio, n_trials,
// params, seed, violations}.  A nonempty stamp adds a "timestamp" member;
// callers pass "" for reproducible output.
std::string verification_report_json(const VerificationReport& rep,
                                     const std::string& stamp);

// Growth probe as a JSON object with the same conventions: family,
// verdict, growth, and the per-point ladder.
std::string growth_report_json(const GrowthReport& rep, const OperatorParams& params,
                               const ExponentPair& e, const std::string& stamp);

// Type-diagram sample grid as RFC 4180 CSV (CRLF line endings, header
// row): columns inv_p, inv_q, bounded, compact, clause, with the
// exponent entries exact rationals "a/b".  Grid: (i/n, j/n) for
// 0 <= i, j <= n, row-major in i then j.  Requires 1 <= n <= 1000.
std::string diagram_grid_csv(const OperatorParams& params, int resolution);

// Type diagram as minimal SVG 1.1 in a fixed 800x800 viewport: the unit
// square of (1/p, 1/q) with 1/q increasing upward, the bounded region
// shaded, its compact interior cross-hatched, boundary segments solid
// when they belong to the bounded set and dashed otherwise, the
// anti-diagonal drawn, and the axes labeled 1/p and 1/q.
std::string diagram_region_svg(const DiagramRegion& region);

}  // namespace bergman

#endif
