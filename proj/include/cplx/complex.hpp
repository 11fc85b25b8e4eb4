#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "cplx/simplex.hpp"

namespace cplx {

// f_0, f_1, ..., f_d.
using FVector = std::vector<std::int64_t>;

class SimplicialComplex {
 public:
  // The void complex: no faces at all, not even the empty one.
  SimplicialComplex();

  // Keeps the inclusion-maximal faces. An empty list gives the void complex;
  // a list holding only the empty simplex gives {∅}.
  static SimplicialComplex from_facets(std::vector<Simplex> facets);
  static SimplicialComplex from_facets(const std::vector<std::vector<Vertex>>& facets);
  static SimplicialComplex empty_simplex();
  static SimplicialComplex simplex(const Simplex& s);
  static SimplicialComplex simplex_boundary(const Simplex& s);

  const std::vector<Simplex>& facets() const { return facets_; }
  std::size_t num_facets() const { return facets_.size(); }

  bool is_void() const { return facets_.empty(); }
  bool is_empty_simplex() const { return facets_.size() == 1 && facets_[0].empty(); }
  // A single nonempty facet.
  bool is_simplex() const { return facets_.size() == 1 && !facets_[0].empty(); }
  // -1 for {∅}, -2 for the void complex.
  int dim() const { return dim_; }
  bool is_pure() const;

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  bool has_vertex(Vertex v) const;
  bool has_face(const Simplex& s) const;

  // Nonempty faces of dimension k, sorted lexicographically.
  const std::vector<Simplex>& faces(int k) const;
  // All nonempty faces ordered by dimension, then lexicographically.
  std::vector<Simplex> all_faces() const;
  std::size_t num_faces() const;

  FVector f_vector() const;
  // Unreduced: the empty face is not counted.
  std::int64_t euler_characteristic() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.facets_ == b.facets_;
  }

 private:
  struct FaceCache {
    std::once_flag once;
    std::vector<std::vector<Simplex>> by_dim;
  };
  const FaceCache& cache() const;

  std::vector<Simplex> facets_;
  std::vector<Vertex> vertices_;
  int dim_ = -2;
  std::shared_ptr<FaceCache> cache_;
};

// (d-1)-faces lying in exactly one facet. Requires a pure complex of dim >= 1.
SimplicialComplex boundary_complex(const SimplicialComplex& c);
SimplicialComplex link(const SimplicialComplex& c, const Simplex& s);
SimplicialComplex link(const SimplicialComplex& c, Vertex v);
SimplicialComplex deletion(const SimplicialComplex& c, Vertex v);
// Full subcomplex on the vertices not in vs. Labels absent from c are errors.
SimplicialComplex deletion(const SimplicialComplex& c, const std::vector<Vertex>& vs);
SimplicialComplex closed_star(const SimplicialComplex& c, Vertex v);
SimplicialComplex cone(Vertex apex, const SimplicialComplex& c);
SimplicialComplex induced_subcomplex(const SimplicialComplex& c, const std::vector<Vertex>& keep);
SimplicialComplex remove_facet(const SimplicialComplex& c, const Simplex& facet);
SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex skeleton(const SimplicialComplex& c, int k);
SimplicialComplex relabel(const SimplicialComplex& c, const std::vector<Vertex>& old_to_new);

struct Subdivision {
  SimplicialComplex complex;
  // faces[i] is the face of the original complex whose barycenter is vertex i.
  std::vector<Simplex> faces;
};
Subdivision barycentric_subdivision_with_faces(const SimplicialComplex& c);
SimplicialComplex barycentric_subdivision(const SimplicialComplex& c);

bool is_connected(const SimplicialComplex& c);
// Sorted neighbour lists of the 1-skeleton.
std::map<Vertex, std::vector<Vertex>> adjacency(const SimplicialComplex& c);

Vertex max_vertex(const SimplicialComplex& c);

}  // namespace cplx
