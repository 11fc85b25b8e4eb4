#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cplx/complex.hpp"

namespace cplx {

struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  // columns[j] holds (row, value) pairs sorted by row.
  std::vector<std::vector<std::pair<int, std::int64_t>>> columns;
};

// Matrix of ∂_k : C_k -> C_{k-1} with faces indexed in lexicographic order.
// k = 0 is the augmentation C_0 -> C_{-1} = Z.
struct BoundaryMatrix {
  int k = 0;
  SparseIntMatrix m;
};

BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int k);
SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);
bool is_zero(const SparseIntMatrix& m);

struct SmithResult {
  std::int64_t rank = 0;
  // Invariant factors greater than one, each dividing the next.
  std::vector<std::int64_t> torsion;
};

SmithResult smith_normal_form(const SparseIntMatrix& m);
std::int64_t rank_mod2(const SparseIntMatrix& m);

struct HomologyGroup {
  std::int64_t betti = 0;
  std::vector<std::int64_t> torsion;
  bool trivial() const { return betti == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// Reduced integral homology in dimensions -1..d.
class HomologyProfile {
 public:
  HomologyProfile() = default;
  explicit HomologyProfile(std::vector<HomologyGroup> from_minus_one) : g_(std::move(from_minus_one)) {}

  int max_dim() const { return static_cast<int>(g_.size()) - 2; }
  // Zero group outside the stored range.
  const HomologyGroup& at(int k) const;
  bool acyclic() const;
  // Betti numbers of the unreduced homology, dimensions 0..d.
  std::vector<std::int64_t> unreduced_betti() const;
  std::string str() const;

  friend bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
    return a.trimmed() == b.trimmed();
  }

 private:
  std::vector<HomologyGroup> trimmed() const;
  std::vector<HomologyGroup> g_;
};

HomologyProfile reduced_homology(const SimplicialComplex& c);
// Reduced homology vanishes. True for the void complex, false for {∅}.
bool is_acyclic(const SimplicialComplex& c);
// Reduced Betti numbers over GF(2), dimensions -1..d.
std::vector<std::int64_t> reduced_betti_mod2(const SimplicialComplex& c);

std::string group_str(const HomologyGroup& g);

}  // namespace cplx
