#pragma once

#include <optional>

#include "cplx/collapse.hpp"

namespace cplx {

struct LcOptions {
  std::uint64_t seed = 1;
  // Collapse restarts per candidate triangle or facet.
  int restarts = 100;
  CollapseStrategy strategy = CollapseStrategy::Uniform;
  bool parallel = true;
};

// Success carries the removed face and a certificate on the punctured complex.
// Failure is inconclusive.
struct LcEvidence {
  bool success = false;
  // Boundary triangle (ball) or facet (sphere).
  std::optional<Simplex> removed;
  // The ball itself, or the sphere minus the removed facet.
  SimplicialComplex collapsed;
  std::optional<CollapseCertificate> certificate;
  int candidates_tried = 0;
  int restarts_used = 0;
};

// A 3-ball is LC iff it collapses onto its boundary minus one triangle.
LcEvidence check_lc_ball(const SimplicialComplex& ball, const LcOptions& opt);
LcEvidence check_lc_ball_triangle(const SimplicialComplex& ball, const Simplex& triangle, const LcOptions& opt);
// A 3-sphere is LC iff removing some facet leaves a collapsible ball.
LcEvidence check_lc_sphere(const SimplicialComplex& sphere, const LcOptions& opt);
LcEvidence check_lc_sphere_facet(const SimplicialComplex& sphere, const Simplex& facet, const LcOptions& opt);

}  // namespace cplx
