#include <algorithm>
#include <memory>
#include <unordered_map>
#include <unordered_set>

#include "cplx/hierarchy.hpp"
#include "cplx/homology.hpp"
#include "cplx/manifold.hpp"

namespace cplx {

namespace {

using Key = std::vector<int>;

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : k) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

Key key_of(const SimplicialComplex& c) {
  Key k;
  for (const auto& f : c.facets()) {
    k.insert(k.end(), f.begin(), f.end());
    k.push_back(-1);
  }
  return k;
}

struct RidgeInfo {
  // Vertices on ridges that lie in a single facet.
  std::vector<char> boundary;
  bool pseudomanifold = false;
  bool has_boundary = false;
};

RidgeInfo ridge_info(const SimplicialComplex& c, std::unordered_map<Vertex, std::size_t>& pos) {
  RidgeInfo info;
  info.boundary.assign(c.num_vertices(), 0);
  if (!c.is_pure() || c.dim() < 1) return info;
  std::unordered_map<Simplex, int, SimplexHash> count;
  for (const auto& f : c.facets())
    for (auto& r : f.boundary()) ++count[r];
  info.pseudomanifold = true;
  for (auto& [r, n] : count) {
    info.pseudomanifold = info.pseudomanifold && n <= 2;
    if (n == 1) {
      info.has_boundary = true;
      for (Vertex v : r) info.boundary[pos[v]] = 1;
    }
  }
  return info;
}

// Shellable pseudomanifolds are balls or spheres, and VD complexes of positive
// dimension are connected.
bool vd_shape_ok(const SimplicialComplex& c) {
  if (c.dim() >= 1 && !is_connected(c)) return false;
  std::unordered_map<Vertex, std::size_t> pos;
  for (std::size_t i = 0; i < c.num_vertices(); ++i) pos[c.vertices()[i]] = i;
  RidgeInfo ri = ridge_info(c, pos);
  if (!ri.pseudomanifold) return true;
  switch (c.dim()) {
    case 2: return classify_surface(c) == (ri.has_boundary ? SurfaceClass::Disk2 : SurfaceClass::Sphere2);
    case 3: return manifold_check(c).kind == (ri.has_boundary ? ManifoldClass::Ball3 : ManifoldClass::Sphere3);
    default: return true;
  }
}

class Searcher {
 public:
  Searcher(bool vd, SearchBudget budget) : vd_(vd), budget_(budget) {}

  Verdict run(const SimplicialComplex& c, DecisionTree& out) {
    if (c.is_void() || c.is_empty_simplex()) return Verdict::False;
    if (vd_ && !c.is_pure()) return Verdict::False;
    if (c.is_simplex()) {
      out = DecisionTree::simplex_leaf();
      return Verdict::True;
    }
    if (c.dim() == 0) {
      if (!vd_) return Verdict::False;
      out = DecisionTree::points_leaf();
      return Verdict::True;
    }
    Key key = key_of(c);
    if (auto it = yes_.find(key); it != yes_.end()) {
      out = *it->second;
      return Verdict::True;
    }
    if (no_.count(key)) return Verdict::False;
    if (rejected(c, key)) return Verdict::False;
    if (++nodes_ > budget_.nodes) {
      exhausted_ = true;
      return Verdict::Inconclusive;
    }

    struct Cand {
      Vertex v;
      int boundary_rank;
      std::size_t link_size;
    };
    std::unordered_map<Vertex, std::size_t> pos;
    for (std::size_t i = 0; i < c.num_vertices(); ++i) pos[c.vertices()[i]] = i;
    std::vector<std::size_t> link_size(c.num_vertices(), 0);
    for (const auto& f : c.facets())
      for (Vertex v : f) ++link_size[pos[v]];
    RidgeInfo ri = vd_ ? ridge_info(c, pos) : RidgeInfo{std::vector<char>(c.num_vertices(), 0)};
    // A shellable pseudomanifold with boundary is a ball. Deleting an interior
    // vertex adds the vertex link as a second boundary cycle, so only boundary
    // vertices can be shedding vertices there.
    bool boundary_only = vd_ && ri.pseudomanifold && ri.has_boundary && c.dim() >= 2;
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < c.num_vertices(); ++i) {
      if (boundary_only && !ri.boundary[i]) continue;
      cands.push_back({c.vertices()[i], ri.boundary[i] ? 0 : 1, link_size[i]});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      if (a.boundary_rank != b.boundary_rank) return a.boundary_rank < b.boundary_rank;
      if (a.link_size != b.link_size) return a.link_size < b.link_size;
      return a.v < b.v;
    });

    bool open = false;
    for (const auto& cand : cands) {
      auto del = deletion(c, cand.v);
      if (vd_ && (!del.is_pure() || del.dim() != c.dim())) continue;
      Key dkey = key_of(del);
      if (no_.count(dkey) || rejected(del, dkey)) continue;
      DecisionTree lt, dt;
      Verdict r1 = run(link(c, cand.v), lt);
      if (r1 == Verdict::False) continue;
      if (exhausted_) return Verdict::Inconclusive;
      Verdict r2 = run(del, dt);
      if (exhausted_) return Verdict::Inconclusive;
      if (r2 == Verdict::False) continue;
      if (r1 == Verdict::True && r2 == Verdict::True) {
        out = DecisionTree::node(cand.v, std::move(lt), std::move(dt));
        yes_.emplace(std::move(key), std::make_shared<DecisionTree>(out));
        return Verdict::True;
      }
      open = true;
    }
    if (open) return Verdict::Inconclusive;
    no_.insert(std::move(key));
    return Verdict::False;
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  // Necessary conditions: NE needs an acyclic complex; VD a wedge of top-dimensional spheres.
  bool rejected(const SimplicialComplex& c, Key& key) {
    if (c.is_simplex()) return false;
    if (auto it = prefilter_.find(key); it != prefilter_.end()) return it->second;
    bool bad;
    if (!vd_) {
      bad = !is_acyclic(c);
    } else if (!vd_shape_ok(c)) {
      bad = true;
    } else {
      auto h = reduced_homology(c);
      bad = !h.at(c.dim()).torsion.empty();
      for (int k = -1; k < c.dim(); ++k) bad = bad || !h.at(k).trivial();
    }
    prefilter_.emplace(key, bad);
    if (bad) no_.insert(key);
    return bad;
  }

  bool vd_;
  SearchBudget budget_;
  std::int64_t nodes_ = 0;
  bool exhausted_ = false;
  std::unordered_map<Key, std::shared_ptr<DecisionTree>, KeyHash> yes_;
  std::unordered_set<Key, KeyHash> no_;
  std::unordered_map<Key, bool, KeyHash> prefilter_;
};

DecisionResult decide(const SimplicialComplex& c, SearchBudget budget, bool vd) {
  Searcher s(vd, budget);
  DecisionResult res;
  DecisionTree t;
  res.verdict = s.run(c, t);
  res.nodes = s.nodes();
  if (res.verdict == Verdict::True) res.tree = std::move(t);
  return res;
}

}  // namespace

DecisionResult is_nonevasive(const SimplicialComplex& c, SearchBudget budget) { return decide(c, budget, false); }

DecisionResult is_vertex_decomposable(const SimplicialComplex& c, SearchBudget budget) {
  return decide(c, budget, true);
}

}  // namespace cplx
