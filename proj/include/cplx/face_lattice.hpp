#pragma once

#include <unordered_map>
#include <vector>

#include "cplx/complex.hpp"

namespace cplx {

// Hasse diagram of the nonempty faces. Ids follow dimension-then-lex order,
// so the ids of dimension k form the range [offset(k), offset(k+1)).
class FaceLattice {
 public:
  explicit FaceLattice(const SimplicialComplex& c);

  int size() const { return static_cast<int>(faces_.size()); }
  int top_dim() const { return static_cast<int>(offset_.size()) - 2; }
  int offset(int k) const { return offset_[k]; }
  const Simplex& face(int id) const { return faces_[id]; }
  int dim(int id) const { return faces_[id].dim(); }
  // -1 when s is not a face.
  int id(const Simplex& s) const;
  // Codimension-one faces; entry i drops vertex i.
  const std::vector<int>& facets_of(int id) const { return down_[id]; }
  const std::vector<int>& cofaces(int id) const { return up_[id]; }

 private:
  std::vector<Simplex> faces_;
  std::vector<int> offset_;
  std::unordered_map<Simplex, int, SimplexHash> index_;
  std::vector<std::vector<int>> down_, up_;
};

}  // namespace cplx
