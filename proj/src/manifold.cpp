#include "cplx/manifold.hpp"

#include <map>
#include <unordered_map>

#include "cplx/homology.hpp"

namespace cplx {

namespace {

enum class Link1 { Cycle, Path, Other };

// A 1-complex given as an edge list: a single cycle or a single path.
Link1 classify_graph(const std::vector<Edge>& edges) {
  if (edges.empty()) return Link1::Other;
  std::map<Vertex, std::vector<Vertex>> adj;
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  int ends = 0;
  for (auto& [v, ns] : adj) {
    if (ns.size() > 2) return Link1::Other;
    if (ns.size() == 1) ++ends;
  }
  // connectivity
  std::map<Vertex, bool> seen;
  std::vector<Vertex> stack{adj.begin()->first};
  seen[stack.back()] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != adj.size()) return Link1::Other;
  if (ends == 0) return adj.size() >= 3 ? Link1::Cycle : Link1::Other;
  return ends == 2 ? Link1::Path : Link1::Other;
}

}  // namespace

SurfaceClass classify_surface(const SimplicialComplex& c) {
  if (c.dim() != 2 || !c.is_pure() || !is_connected(c)) return SurfaceClass::Other;
  std::unordered_map<Vertex, std::vector<Edge>> vlink;
  std::unordered_map<Simplex, int, SimplexHash> edge_count;
  for (const auto& t : c.facets()) {
    vlink[t[0]].emplace_back(t[1], t[2]);
    vlink[t[1]].emplace_back(t[0], t[2]);
    vlink[t[2]].emplace_back(t[0], t[1]);
    for (auto& e : t.boundary()) ++edge_count[e];
  }
  bool any_path = false;
  for (auto& [v, edges] : vlink) {
    auto k = classify_graph(edges);
    if (k == Link1::Other) return SurfaceClass::Other;
    if (k == Link1::Path) any_path = true;
  }
  std::vector<Edge> bd;
  for (auto& [e, n] : edge_count) {
    if (n > 2) return SurfaceClass::Other;
    if (n == 1) bd.emplace_back(e[0], e[1]);
  }
  const auto chi = c.euler_characteristic();
  if (!any_path) return chi == 2 ? SurfaceClass::Sphere2 : SurfaceClass::Other;
  if (chi == 1 && classify_graph(bd) == Link1::Cycle) return SurfaceClass::Disk2;
  return SurfaceClass::Other;
}

std::string to_string(ManifoldClass k) {
  switch (k) {
    case ManifoldClass::Sphere3: return "3-sphere";
    case ManifoldClass::Ball3: return "3-ball";
    default: return "other";
  }
}

ManifoldReport manifold_check(const SimplicialComplex& c) {
  ManifoldReport r;
  if (c.dim() != 3 || !c.is_pure()) {
    r.diagnostics = "not a pure 3-dimensional complex";
    for (const auto& f : c.facets())
      if (f.dim() != c.dim()) {
        r.offending_face = f;
        break;
      }
    return r;
  }
  if (!is_connected(c)) {
    r.diagnostics = "disconnected";
    return r;
  }
  std::unordered_map<Simplex, int, SimplexHash> tri_count;
  for (const auto& f : c.facets())
    for (auto& t : f.boundary()) ++tri_count[t];
  bool has_boundary = false;
  for (auto& [t, n] : tri_count) {
    if (n > 2) {
      r.diagnostics = "triangle in " + std::to_string(n) + " facets";
      r.offending_face = t;
      return r;
    }
    if (n == 1) has_boundary = true;
  }
  // all vertex links in one pass over the facets
  std::unordered_map<Vertex, std::vector<Simplex>> links;
  for (const auto& f : c.facets())
    for (int i = 0; i < 4; ++i) links[f[i]].push_back(f.without_index(static_cast<std::size_t>(i)));
  for (Vertex v : c.vertices()) {
    auto k = classify_surface(SimplicialComplex::from_facets(links[v]));
    if (k == SurfaceClass::Other) {
      r.diagnostics = "vertex link is neither a 2-sphere nor a 2-disk";
      r.offending_face = Simplex{v};
      return r;
    }
  }
  auto h = reduced_homology(c);
  if (!has_boundary) {
    bool sphere = h.at(3) == HomologyGroup{1, {}};
    for (int k = -1; k < 3; ++k) sphere = sphere && h.at(k).trivial();
    if (sphere) {
      r.kind = ManifoldClass::Sphere3;
      r.diagnostics = "closed, vertex links are 2-spheres, homology of S^3";
    } else {
      r.diagnostics = "closed 3-manifold without the homology of S^3";
    }
  } else if (h.acyclic()) {
    r.kind = ManifoldClass::Ball3;
    r.diagnostics = "vertex links are 2-spheres or 2-disks, acyclic";
  } else {
    r.diagnostics = "3-manifold with boundary that is not acyclic";
  }
  return r;
}

bool is_ball(const SimplicialComplex& c) {
  switch (c.dim()) {
    case 0: return c.num_facets() == 1;
    case 1: {
      if (!c.is_pure()) return false;
      std::vector<Edge> edges;
      for (const auto& e : c.facets()) edges.emplace_back(e[0], e[1]);
      if (edges.size() == 1) return true;
      return classify_graph(edges) == Link1::Path;
    }
    case 2: return classify_surface(c) == SurfaceClass::Disk2 || c.is_simplex();
    case 3: return manifold_check(c).kind == ManifoldClass::Ball3;
    default: return c.is_simplex();
  }
}

}  // namespace cplx
