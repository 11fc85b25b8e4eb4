#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cplx/flips.hpp"

namespace cplx::detail {

// Mutable closed 3-manifold with incidence counts for fast legality tests.
class FlipComplex {
 public:
  FlipComplex(const SimplicialComplex& s, const EdgeSet& protected_edges);

  // Empty when legal.
  std::string why_illegal(const FlipMove& m) const;
  void apply(const FlipMove& m);
  // All legal moves in a fixed order: by kind, then by pivot.
  std::vector<FlipMove> moves(bool allow_1_4) const;
  SimplicialComplex to_complex() const;

  std::size_t num_vertices() const { return vdeg_.size(); }
  std::size_t num_facets() const { return tets_.size(); }
  Vertex smallest_unused_label() const;

 private:
  static std::uint64_t tet_key(std::array<int, 4> t);
  static std::uint64_t tri_key(std::array<int, 3> t);
  static std::uint64_t edge_key(int a, int b);
  static std::array<int, 4> unpack_tet(std::uint64_t k);

  void add(std::array<int, 4> t);
  void remove(std::array<int, 4> t);
  bool has_edge(int a, int b) const;
  bool has_triangle(int a, int b, int c) const;
  bool has_tet(std::array<int, 4> t) const;
  std::vector<std::uint64_t> tets_with_edge(int a, int b) const;
  std::array<int, 3> edge_link(int a, int b) const;
  std::vector<int> vertex_link(int v) const;

  std::unordered_set<std::uint64_t> tets_;
  // triangle -> the apexes of its (at most two) facets
  std::unordered_map<std::uint64_t, std::array<int, 2>> tri_;
  std::unordered_map<std::uint64_t, int> edeg_;
  std::unordered_map<int, int> vdeg_;
  std::unordered_map<int, std::unordered_set<std::uint64_t>> star_;
  std::unordered_set<std::uint64_t> protected_;
  std::unordered_set<int> protected_vertex_;
};

}  // namespace cplx::detail
