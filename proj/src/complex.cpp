#include "cplx/complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace cplx {

SimplicialComplex::SimplicialComplex() : cache_(std::make_shared<FaceCache>()) {}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Simplex> facets) {
  SimplicialComplex c;
  std::sort(facets.begin(), facets.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  std::vector<Simplex> kept;
  std::unordered_map<Vertex, std::vector<std::size_t>> by_vertex;
  for (auto& f : facets) {
    bool dominated = false;
    if (f.empty()) {
      dominated = !kept.empty();
    } else if (!kept.empty() && kept.front().size() > f.size()) {
      auto it = by_vertex.find(f[0]);
      if (it != by_vertex.end())
        for (std::size_t k : it->second)
          if (kept[k].size() > f.size() && f.is_face_of(kept[k])) {
            dominated = true;
            break;
          }
    }
    if (dominated) continue;
    for (Vertex v : f) by_vertex[v].push_back(kept.size());
    kept.push_back(std::move(f));
  }
  std::sort(kept.begin(), kept.end());
  c.facets_ = std::move(kept);

  std::vector<Vertex> vs;
  for (const auto& f : c.facets_) vs.insert(vs.end(), f.begin(), f.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  c.vertices_ = std::move(vs);
  c.dim_ = -2;
  for (const auto& f : c.facets_) c.dim_ = std::max(c.dim_, f.dim());
  return c;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<Vertex>>& facets) {
  std::vector<Simplex> fs;
  fs.reserve(facets.size());
  for (const auto& f : facets) fs.emplace_back(f);
  return from_facets(std::move(fs));
}

SimplicialComplex SimplicialComplex::empty_simplex() { return from_facets(std::vector<Simplex>{Simplex{}}); }

SimplicialComplex SimplicialComplex::simplex(const Simplex& s) { return from_facets(std::vector<Simplex>{s}); }

SimplicialComplex SimplicialComplex::simplex_boundary(const Simplex& s) { return from_facets(s.boundary()); }

bool SimplicialComplex::is_pure() const {
  for (const auto& f : facets_)
    if (f.dim() != dim_) return false;
  return true;
}

bool SimplicialComplex::has_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool SimplicialComplex::has_face(const Simplex& s) const {
  if (is_void()) return false;
  if (s.empty()) return true;
  if (s.dim() > dim_) return false;
  const auto& fs = faces(s.dim());
  return std::binary_search(fs.begin(), fs.end(), s);
}

const SimplicialComplex::FaceCache& SimplicialComplex::cache() const {
  std::call_once(cache_->once, [this] {
    auto& by_dim = cache_->by_dim;
    by_dim.assign(dim_ >= 0 ? dim_ + 1 : 0, {});
    std::vector<std::unordered_set<Simplex, SimplexHash>> sets(by_dim.size());
    for (const auto& f : facets_) {
      if (f.empty()) continue;
      for (auto& g : f.faces())
        if (!g.empty()) sets[g.dim()].insert(std::move(g));
    }
    for (std::size_t k = 0; k < sets.size(); ++k) {
      by_dim[k].assign(sets[k].begin(), sets[k].end());
      std::sort(by_dim[k].begin(), by_dim[k].end());
    }
  });
  return *cache_;
}

const std::vector<Simplex>& SimplicialComplex::faces(int k) const {
  static const std::vector<Simplex> none;
  const auto& c = cache();
  if (k < 0 || k >= static_cast<int>(c.by_dim.size())) return none;
  return c.by_dim[k];
}

std::vector<Simplex> SimplicialComplex::all_faces() const {
  std::vector<Simplex> out;
  for (const auto& layer : cache().by_dim) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

std::size_t SimplicialComplex::num_faces() const {
  std::size_t n = 0;
  for (const auto& layer : cache().by_dim) n += layer.size();
  return n;
}

FVector SimplicialComplex::f_vector() const {
  FVector f;
  for (const auto& layer : cache().by_dim) f.push_back(static_cast<std::int64_t>(layer.size()));
  return f;
}

std::int64_t SimplicialComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  auto f = f_vector();
  for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * f[k];
  return chi;
}

SimplicialComplex boundary_complex(const SimplicialComplex& c) {
  if (!c.is_pure()) throw std::invalid_argument("boundary of a non-pure complex is undefined");
  if (c.dim() < 1) throw std::invalid_argument("boundary needs a complex of dimension at least 1");
  std::unordered_map<Simplex, int, SimplexHash> count;
  for (const auto& f : c.facets())
    for (auto& r : f.boundary()) ++count[r];
  std::vector<Simplex> out;
  for (auto& [r, n] : count)
    if (n == 1) out.push_back(r);
  return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex link(const SimplicialComplex& c, const Simplex& s) {
  std::vector<Simplex> out;
  for (const auto& f : c.facets())
    if (s.is_face_of(f)) out.push_back(f.minus(s));
  if (out.empty()) throw std::invalid_argument("link: {" + s.str() + "} is not a face");
  return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex link(const SimplicialComplex& c, Vertex v) { return link(c, Simplex{v}); }

SimplicialComplex deletion(const SimplicialComplex& c, Vertex v) {
  if (!c.has_vertex(v)) throw std::invalid_argument("deletion: vertex " + std::to_string(v) + " absent");
  std::vector<Simplex> out;
  out.reserve(c.num_facets());
  for (const auto& f : c.facets()) out.push_back(f.contains(v) ? f.without(v) : f);
  return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex deletion(const SimplicialComplex& c, const std::vector<Vertex>& vs) {
  for (Vertex v : vs)
    if (!c.has_vertex(v)) throw std::invalid_argument("deletion: vertex " + std::to_string(v) + " absent");
  Simplex drop(vs);
  std::vector<Simplex> out;
  out.reserve(c.num_facets());
  for (const auto& f : c.facets()) out.push_back(f.minus(drop));
  return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex closed_star(const SimplicialComplex& c, Vertex v) {
  std::vector<Simplex> out;
  for (const auto& f : c.facets())
    if (f.contains(v)) out.push_back(f);
  if (out.empty()) throw std::invalid_argument("closed_star: vertex " + std::to_string(v) + " absent");
  return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex cone(Vertex apex, const SimplicialComplex& c) {
  if (c.has_vertex(apex)) throw std::invalid_argument("cone: apex " + std::to_string(apex) + " already present");
  std::vector<Simplex> out;
  for (const auto& f : c.facets()) out.push_back(f.with(apex));
  return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& c, const std::vector<Vertex>& keep) {
  std::vector<Vertex> k = keep;
  std::sort(k.begin(), k.end());
  std::vector<Vertex> drop;
  std::set_difference(c.vertices().begin(), c.vertices().end(), k.begin(), k.end(), std::back_inserter(drop));
  return deletion(c, drop);
}

SimplicialComplex remove_facet(const SimplicialComplex& c, const Simplex& facet) {
  auto fs = c.facets();
  auto it = std::lower_bound(fs.begin(), fs.end(), facet);
  if (it == fs.end() || *it != facet) throw std::invalid_argument("remove_facet: {" + facet.str() + "} is not a facet");
  fs.erase(it);
  for (auto& r : facet.boundary()) fs.push_back(r);
  return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b) {
  auto fs = a.facets();
  fs.insert(fs.end(), b.facets().begin(), b.facets().end());
  return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.is_void() || b.is_void()) return {};
  std::vector<Simplex> out;
  for (const auto& f : a.facets())
    for (const auto& g : b.facets()) out.push_back(f.intersect(g));
  return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex skeleton(const SimplicialComplex& c, int k) {
  if (c.dim() <= k) return c;
  std::vector<Simplex> out;
  for (int j = 0; j <= k; ++j)
    for (const auto& f : c.faces(j)) out.push_back(f);
  return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex relabel(const SimplicialComplex& c, const std::vector<Vertex>& old_to_new) {
  std::vector<Simplex> out;
  for (const auto& f : c.facets()) {
    std::vector<Vertex> g;
    for (Vertex v : f) g.push_back(old_to_new.at(v));
    out.emplace_back(std::move(g));
  }
  return SimplicialComplex::from_facets(std::move(out));
}

Subdivision barycentric_subdivision_with_faces(const SimplicialComplex& c) {
  Subdivision sd;
  sd.faces = c.all_faces();
  std::unordered_map<Simplex, Vertex, SimplexHash> label;
  for (std::size_t i = 0; i < sd.faces.size(); ++i) label.emplace(sd.faces[i], static_cast<Vertex>(i));

  std::vector<Simplex> chains;
  for (const auto& f : c.facets()) {
    if (f.empty()) continue;
    std::vector<Vertex> perm(f.begin(), f.end());
    do {
      // perm[0] ⊂ {perm[0],perm[1]} ⊂ ... ⊂ f
      std::vector<Vertex> chain;
      std::vector<Vertex> prefix;
      for (Vertex v : perm) {
        prefix.insert(std::lower_bound(prefix.begin(), prefix.end(), v), v);
        chain.push_back(label.at(Simplex::from_sorted(prefix)));
      }
      chains.emplace_back(std::move(chain));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  if (c.is_empty_simplex()) chains.push_back(Simplex{});
  sd.complex = SimplicialComplex::from_facets(std::move(chains));
  return sd;
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& c) {
  return barycentric_subdivision_with_faces(c).complex;
}

std::map<Vertex, std::vector<Vertex>> adjacency(const SimplicialComplex& c) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (Vertex v : c.vertices()) adj[v];
  for (const auto& e : c.faces(1)) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& [v, ns] : adj) std::sort(ns.begin(), ns.end());
  return adj;
}

bool is_connected(const SimplicialComplex& c) {
  if (c.num_vertices() == 0) return false;
  auto adj = adjacency(c);
  std::set<Vertex> seen{c.vertices().front()};
  std::queue<Vertex> q;
  q.push(c.vertices().front());
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : adj[v])
      if (seen.insert(w).second) q.push(w);
  }
  return seen.size() == c.num_vertices();
}

Vertex max_vertex(const SimplicialComplex& c) { return c.vertices().empty() ? -1 : c.vertices().back(); }

}  // namespace cplx
