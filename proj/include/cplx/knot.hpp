#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cplx/complex.hpp"
#include "cplx/group.hpp"

namespace cplx {

// Closed edge path; vertices[i] -- vertices[i+1] and back to vertices[0].
struct KnotCycle {
  std::vector<Vertex> vertices;
  std::size_t length() const { return vertices.size(); }
  std::vector<Edge> edges() const;
  std::string str() const;
};

// Parses "1 2 3" or "1-2-3".
KnotCycle parse_cycle(const std::string& text);
// Throws unless the cycle is simple, has at least 3 vertices and all edges lie in c.
void validate_cycle(const SimplicialComplex& c, const KnotCycle& k);

// Interior edges of a 3-ball with both endpoints on the boundary.
std::vector<Edge> spanning_edges(const SimplicialComplex& ball);
// e closed up by a shortest boundary path (BFS, smaller labels first).
KnotCycle close_cycle(const SimplicialComplex& ball, Edge e);

// Full subcomplex of sd(S) on the barycenters of faces that are not faces of K.
SimplicialComplex complement_complex(const SimplicialComplex& sphere, const KnotCycle& k);

// Edge-path group of the 2-skeleton.
GroupPresentation pi1_presentation(const SimplicialComplex& c);

struct KnotAnalysis {
  FVector complement_f;
  FVector spine_f;
  int raw_generators = 0;
  int raw_relators = 0;
  GroupPresentation simplified;
  HomologyGroup h1;
  std::uint64_t homs = 0;
  // Homs from Z, i.e. |G|.
  std::uint64_t cyclic_baseline = 0;
  bool nontrivial_witness() const { return homs > cyclic_baseline; }
};

KnotAnalysis analyze_knot(const SimplicialComplex& sphere, const KnotCycle& k, const FiniteGroup& g,
                          std::uint64_t seed = 1, bool parallel = true);

}  // namespace cplx
