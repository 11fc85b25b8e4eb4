#include "cplx/face_lattice.hpp"

namespace cplx {

FaceLattice::FaceLattice(const SimplicialComplex& c) {
  faces_ = c.all_faces();
  offset_.assign(std::max(c.dim(), -1) + 2, 0);
  for (int k = 0; k <= c.dim(); ++k) offset_[k + 1] = offset_[k] + static_cast<int>(c.faces(k).size());
  index_.reserve(faces_.size() * 2);
  for (int i = 0; i < size(); ++i) index_.emplace(faces_[i], i);
  down_.resize(faces_.size());
  up_.resize(faces_.size());
  for (int i = 0; i < size(); ++i) {
    if (faces_[i].size() < 2) continue;
    for (auto& r : faces_[i].boundary()) {
      int j = index_.at(r);
      down_[i].push_back(j);
      up_[j].push_back(i);
    }
  }
}

int FaceLattice::id(const Simplex& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : it->second;
}

}  // namespace cplx
