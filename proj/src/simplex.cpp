#include "cplx/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace cplx {

Simplex::Simplex(std::initializer_list<Vertex> vs) : Simplex(std::vector<Vertex>(vs)) {}

Simplex::Simplex(std::vector<Vertex> vs) : v_(std::move(vs)) {
  std::sort(v_.begin(), v_.end());
  if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
    throw std::invalid_argument("repeated vertex in face " + str());
  if (!v_.empty() && v_.front() < 0)
    throw std::invalid_argument("negative vertex label in face " + str());
}

Simplex Simplex::from_sorted(std::vector<Vertex> vs) {
  Simplex s;
  s.v_ = std::move(vs);
  return s;
}

bool Simplex::contains(Vertex v) const { return std::binary_search(v_.begin(), v_.end(), v); }

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

Simplex Simplex::without(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(v_.size());
  for (Vertex w : v_)
    if (w != v) out.push_back(w);
  return from_sorted(std::move(out));
}

Simplex Simplex::without_index(std::size_t i) const {
  std::vector<Vertex> out;
  out.reserve(v_.size() - 1);
  for (std::size_t j = 0; j < v_.size(); ++j)
    if (j != i) out.push_back(v_[j]);
  return from_sorted(std::move(out));
}

Simplex Simplex::with(Vertex v) const {
  std::vector<Vertex> out = v_;
  auto it = std::lower_bound(out.begin(), out.end(), v);
  if (it != out.end() && *it == v) return *this;
  out.insert(it, v);
  return from_sorted(std::move(out));
}

Simplex Simplex::minus(const Simplex& other) const {
  std::vector<Vertex> out;
  std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(), std::back_inserter(out));
  return from_sorted(std::move(out));
}

Simplex Simplex::join(const Simplex& other) const {
  std::vector<Vertex> out;
  std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(), std::back_inserter(out));
  return from_sorted(std::move(out));
}

Simplex Simplex::intersect(const Simplex& other) const {
  std::vector<Vertex> out;
  std::set_intersection(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(), std::back_inserter(out));
  return from_sorted(std::move(out));
}

std::vector<Simplex> Simplex::faces() const {
  if (v_.size() > 20) throw std::length_error("face enumeration of a simplex with more than 20 vertices");
  const std::size_t n = v_.size();
  std::vector<Simplex> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Vertex> f;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) f.push_back(v_[i]);
    out.push_back(from_sorted(std::move(f)));
  }
  return out;
}

std::vector<Simplex> Simplex::boundary() const {
  std::vector<Simplex> out;
  if (v_.empty()) return out;
  out.reserve(v_.size());
  for (std::size_t i = 0; i < v_.size(); ++i) out.push_back(without_index(i));
  return out;
}

std::string Simplex::str() const {
  std::string s;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v_[i]);
  }
  return s;
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Vertex v : s) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  h ^= s.size();
  return static_cast<std::size_t>(h);
}

}  // namespace cplx
