#pragma once

#include <optional>
#include <string>

#include "cplx/complex.hpp"

namespace cplx {

enum class ManifoldClass { Sphere3, Ball3, Other };

struct ManifoldReport {
  ManifoldClass kind = ManifoldClass::Other;
  std::string diagnostics;
  std::optional<Simplex> offending_face;
};

ManifoldReport manifold_check(const SimplicialComplex& c);
std::string to_string(ManifoldClass k);

enum class SurfaceClass { Sphere2, Disk2, Other };
// Exact check for pure 2-complexes: every vertex link is a cycle or a path,
// connected, then classified by Euler characteristic and boundary.
SurfaceClass classify_surface(const SimplicialComplex& c);

// Exact for dimension <= 2, homology-certified for dimension 3 as in manifold_check.
bool is_ball(const SimplicialComplex& c);

}  // namespace cplx
