#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cplx {

using Vertex = int;

// A face as a strictly increasing list of vertex labels. The empty simplex is
// the unique face of dimension -1.
class Simplex {
 public:
  Simplex() = default;
  Simplex(std::initializer_list<Vertex> vs);
  explicit Simplex(std::vector<Vertex> vs);

  // Skips normalization; caller guarantees strictly increasing labels.
  static Simplex from_sorted(std::vector<Vertex> vs);

  int dim() const { return static_cast<int>(v_.size()) - 1; }
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  Vertex operator[](std::size_t i) const { return v_[i]; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  const std::vector<Vertex>& vertices() const { return v_; }

  bool contains(Vertex v) const;
  bool is_face_of(const Simplex& other) const;

  Simplex without(Vertex v) const;
  Simplex without_index(std::size_t i) const;
  Simplex with(Vertex v) const;
  Simplex minus(const Simplex& other) const;
  Simplex join(const Simplex& other) const;
  Simplex intersect(const Simplex& other) const;

  // All subsets, including the empty one and the simplex itself.
  std::vector<Simplex> faces() const;
  // Codimension-one faces, ordered by the index of the dropped vertex.
  std::vector<Simplex> boundary() const;

  std::string str() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex& a, const Simplex& b) { return a.v_ <=> b.v_; }

 private:
  std::vector<Vertex> v_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

// Orders faces by dimension first, then lexicographically.
struct DimLexLess {
  bool operator()(const Simplex& a, const Simplex& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using Edge = std::pair<Vertex, Vertex>;

}  // namespace cplx
