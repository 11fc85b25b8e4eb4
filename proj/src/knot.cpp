#include "cplx/knot.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "cplx/collapse.hpp"
#include "cplx/manifold.hpp"

namespace cplx {

std::vector<Edge> KnotCycle::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vertex a = vertices[i], b = vertices[(i + 1) % vertices.size()];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  return out;
}

std::string KnotCycle::str() const {
  std::string s;
  for (Vertex v : vertices) s += std::to_string(v) + "-";
  return vertices.empty() ? s : s + std::to_string(vertices.front());
}

KnotCycle parse_cycle(const std::string& text) {
  std::string t = text;
  std::replace_if(t.begin(), t.end(), [](char ch) { return ch == '-' || ch == ',' || ch == '\t'; }, ' ');
  std::istringstream in(t);
  KnotCycle k;
  Vertex v;
  while (in >> v) k.vertices.push_back(v);
  if (!in.eof()) throw std::invalid_argument("bad cycle '" + text + "'");
  if (k.vertices.size() > 1 && k.vertices.front() == k.vertices.back()) k.vertices.pop_back();
  return k;
}

void validate_cycle(const SimplicialComplex& c, const KnotCycle& k) {
  if (k.vertices.size() < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::set<Vertex> seen(k.vertices.begin(), k.vertices.end());
  if (seen.size() != k.vertices.size()) throw std::invalid_argument("cycle " + k.str() + " repeats a vertex");
  for (auto [a, b] : k.edges())
    if (!c.has_face(Simplex{a, b}))
      throw std::invalid_argument("cycle edge " + std::to_string(a) + " " + std::to_string(b) + " is not in the complex");
}

std::vector<Edge> spanning_edges(const SimplicialComplex& ball) {
  if (manifold_check(ball).kind != ManifoldClass::Ball3) throw std::invalid_argument("spanning_edges: not a 3-ball");
  SimplicialComplex bd = boundary_complex(ball);
  std::vector<Edge> out;
  for (const auto& e : ball.faces(1)) {
    if (bd.has_face(e)) continue;
    if (bd.has_vertex(e[0]) && bd.has_vertex(e[1])) out.emplace_back(e[0], e[1]);
  }
  return out;
}

KnotCycle close_cycle(const SimplicialComplex& ball, Edge e) {
  auto edges = spanning_edges(ball);
  Edge key{std::min(e.first, e.second), std::max(e.first, e.second)};
  if (std::find(edges.begin(), edges.end(), key) == edges.end())
    throw std::invalid_argument("close_cycle: " + std::to_string(e.first) + " " + std::to_string(e.second) +
                                " is not a spanning edge");
  auto adj = adjacency(boundary_complex(ball));
  std::map<Vertex, Vertex> parent;
  std::queue<Vertex> q;
  parent[e.first] = e.first;
  q.push(e.first);
  while (!q.empty() && !parent.count(e.second)) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : adj[u])
      if (!parent.count(w)) {
        parent[w] = u;
        q.push(w);
      }
  }
  if (!parent.count(e.second)) throw std::runtime_error("close_cycle: endpoints disconnected on the boundary");
  KnotCycle k;
  for (Vertex v = e.second;; v = parent[v]) {
    k.vertices.push_back(v);
    if (v == e.first) break;
  }
  std::reverse(k.vertices.begin(), k.vertices.end());
  return k;
}

SimplicialComplex complement_complex(const SimplicialComplex& sphere, const KnotCycle& k) {
  if (manifold_check(sphere).kind != ManifoldClass::Sphere3) throw std::invalid_argument("complement_complex: not a 3-sphere");
  auto sd = barycentric_subdivision_with_faces(sphere);
  if (k.vertices.empty()) return sd.complex;
  validate_cycle(sphere, k);
  std::set<Simplex> knot_faces;
  for (Vertex v : k.vertices) knot_faces.insert(Simplex{v});
  for (auto [a, b] : k.edges()) knot_faces.insert(Simplex{a, b});
  std::vector<Vertex> keep;
  for (std::size_t i = 0; i < sd.faces.size(); ++i)
    if (!knot_faces.count(sd.faces[i])) keep.push_back(static_cast<Vertex>(i));
  return induced_subcomplex(sd.complex, keep);
}

GroupPresentation pi1_presentation(const SimplicialComplex& c) {
  if (c.is_void() || c.is_empty_simplex() || !is_connected(c)) throw std::invalid_argument("pi1_presentation: complex not connected");
  auto adj = adjacency(c);
  std::set<Edge> tree;
  std::set<Vertex> seen{adj.begin()->first};
  std::queue<Vertex> q;
  q.push(adj.begin()->first);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : adj[u])
      if (seen.insert(w).second) {
        tree.emplace(std::min(u, w), std::max(u, w));
        q.push(w);
      }
  }
  std::map<Edge, int> gen;
  for (const auto& e : c.faces(1)) {
    Edge key{e[0], e[1]};
    if (!tree.count(key)) gen.emplace(key, static_cast<int>(gen.size()) + 1);
  }
  GroupPresentation p;
  p.generators = static_cast<int>(gen.size());
  auto letter = [&](Vertex a, Vertex b, Word& w) {
    auto it = gen.find({std::min(a, b), std::max(a, b)});
    if (it != gen.end()) w.push_back(a < b ? it->second : -it->second);
  };
  if (c.dim() >= 2)
    for (const auto& t : c.faces(2)) {
      Word w;
      letter(t[0], t[1], w);
      letter(t[1], t[2], w);
      letter(t[2], t[0], w);
      p.relators.push_back(std::move(w));
    }
  return p;
}

KnotAnalysis analyze_knot(const SimplicialComplex& sphere, const KnotCycle& k, const FiniteGroup& g, std::uint64_t seed,
                          bool parallel) {
  KnotAnalysis a;
  SimplicialComplex comp = complement_complex(sphere, k);
  a.complement_f = comp.f_vector();
  SimplicialComplex spine = collapse_until_stuck(comp, seed);
  a.spine_f = spine.f_vector();
  GroupPresentation raw = pi1_presentation(spine);
  a.raw_generators = raw.generators;
  a.raw_relators = static_cast<int>(raw.relators.size());
  a.simplified = tietze_simplify(raw);
  a.h1 = abelianization(a.simplified);
  HomCountOptions opt;
  opt.parallel = parallel;
  a.homs = count_homs(a.simplified, g, opt);
  a.cyclic_baseline = static_cast<std::uint64_t>(g.order);
  return a;
}

}  // namespace cplx
