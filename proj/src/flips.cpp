#include "cplx/flips.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "cplx/io.hpp"
#include "flip_complex.hpp"

namespace cplx {

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::OneFour: return "1-4";
    case MoveKind::TwoThree: return "2-3";
    case MoveKind::ThreeTwo: return "3-2";
    default: return "4-1";
  }
}

std::string FlipMove::str() const {
  std::string s = to_string(kind) + " " + pivot.str();
  if (new_vertex) s += " " + std::to_string(*new_vertex);
  return s;
}

EdgeSet make_edge_set(const std::vector<Simplex>& edges) {
  EdgeSet out;
  for (const auto& e : edges) {
    if (e.size() != 2) throw std::invalid_argument("protected set entry {" + e.str() + "} is not an edge");
    out.emplace(e[0], e[1]);
  }
  return out;
}

std::vector<std::int64_t> f_vector_delta(MoveKind k) {
  switch (k) {
    case MoveKind::OneFour: return {1, 4, 6, 3};
    case MoveKind::TwoThree: return {0, 1, 2, 1};
    case MoveKind::ThreeTwo: return {0, -1, -2, -1};
    default: return {-1, -4, -6, -3};
  }
}

namespace detail {

namespace {

constexpr int kMaxLabel = 0xFFFF;

std::uint64_t pack(const int* v, int n) {
  std::uint64_t k = 0;
  for (int i = 0; i < n; ++i) k = (k << 16) | static_cast<std::uint64_t>(v[i]);
  return k;
}

}  // namespace

std::uint64_t FlipComplex::tet_key(std::array<int, 4> t) {
  std::sort(t.begin(), t.end());
  return pack(t.data(), 4);
}
std::uint64_t FlipComplex::tri_key(std::array<int, 3> t) {
  std::sort(t.begin(), t.end());
  return pack(t.data(), 3);
}
std::uint64_t FlipComplex::edge_key(int a, int b) {
  if (a > b) std::swap(a, b);
  int v[2] = {a, b};
  return pack(v, 2);
}

FlipComplex::FlipComplex(const SimplicialComplex& s, const EdgeSet& protected_edges) {
  if (s.dim() != 3 || !s.is_pure()) throw std::invalid_argument("flips: need a pure 3-dimensional complex");
  if (max_vertex(s) > kMaxLabel) throw std::invalid_argument("flips: vertex labels above 65535");
  for (const auto& f : s.facets()) add({f[0], f[1], f[2], f[3]});
  for (auto& [k, ap] : tri_) {
    (void)k;
    if (ap[1] < 0) throw std::invalid_argument("flips: complex is not closed (a triangle lies in one facet)");
  }
  for (auto [a, b] : protected_edges) {
    protected_.insert(edge_key(a, b));
    protected_vertex_.insert(a);
    protected_vertex_.insert(b);
  }
}

void FlipComplex::add(std::array<int, 4> t) {
  std::sort(t.begin(), t.end());
  if (!tets_.insert(tet_key(t)).second) throw std::logic_error("flips: duplicate facet");
  for (int i = 0; i < 4; ++i) {
    std::array<int, 3> tri;
    for (int j = 0, k = 0; j < 4; ++j)
      if (j != i) tri[k++] = t[j];
    auto [it, fresh] = tri_.try_emplace(tri_key(tri), std::array<int, 2>{t[i], -1});
    if (!fresh) {
      if (it->second[1] >= 0) throw std::invalid_argument("flips: a triangle lies in three or more facets");
      it->second[1] = t[i];
    }
    ++vdeg_[t[i]];
    star_[t[i]].insert(tet_key(t));
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) ++edeg_[edge_key(t[i], t[j])];
}

void FlipComplex::remove(std::array<int, 4> t) {
  std::sort(t.begin(), t.end());
  if (!tets_.erase(tet_key(t))) throw std::logic_error("flips: removing a missing facet");
  for (int i = 0; i < 4; ++i) {
    std::array<int, 3> tri;
    for (int j = 0, k = 0; j < 4; ++j)
      if (j != i) tri[k++] = t[j];
    auto it = tri_.find(tri_key(tri));
    auto& ap = it->second;
    if (ap[0] == t[i]) ap[0] = ap[1];
    ap[1] = -1;
    if (ap[0] < 0) tri_.erase(it);
    if (--vdeg_[t[i]] == 0) {
      vdeg_.erase(t[i]);
      star_.erase(t[i]);
    } else {
      star_[t[i]].erase(tet_key(t));
    }
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      auto it = edeg_.find(edge_key(t[i], t[j]));
      if (--it->second == 0) edeg_.erase(it);
    }
}

std::array<int, 4> FlipComplex::unpack_tet(std::uint64_t k) {
  return {static_cast<int>(k >> 48), static_cast<int>((k >> 32) & 0xFFFF), static_cast<int>((k >> 16) & 0xFFFF),
          static_cast<int>(k & 0xFFFF)};
}

bool FlipComplex::has_edge(int a, int b) const { return edeg_.count(edge_key(a, b)) > 0; }
bool FlipComplex::has_triangle(int a, int b, int c) const { return tri_.count(tri_key({a, b, c})) > 0; }
bool FlipComplex::has_tet(std::array<int, 4> t) const { return tets_.count(tet_key(t)) > 0; }

std::vector<std::uint64_t> FlipComplex::tets_with_edge(int a, int b) const {
  std::vector<std::uint64_t> out;
  auto it = star_.find(a);
  if (it == star_.end()) return out;
  for (auto k : it->second) {
    auto t = unpack_tet(k);
    if (std::find(t.begin(), t.end(), b) != t.end()) out.push_back(k);
  }
  return out;
}

Vertex FlipComplex::smallest_unused_label() const {
  Vertex v = 0;
  while (vdeg_.count(v)) ++v;
  return v;
}

std::string FlipComplex::why_illegal(const FlipMove& m) const {
  const auto& p = m.pivot;
  switch (m.kind) {
    case MoveKind::OneFour: {
      if (p.size() != 4) return "1-4 pivot must be a facet";
      if (!has_tet({p[0], p[1], p[2], p[3]})) return "1-4 pivot {" + p.str() + "} is not a facet";
      if (!m.new_vertex) return "1-4 move needs a new vertex label";
      if (*m.new_vertex != smallest_unused_label())
        return "1-4 new vertex must be the smallest unused label " + std::to_string(smallest_unused_label());
      return {};
    }
    case MoveKind::TwoThree: {
      if (p.size() != 3) return "2-3 pivot must be a triangle";
      auto it = tri_.find(tri_key({p[0], p[1], p[2]}));
      if (it == tri_.end()) return "2-3 pivot {" + p.str() + "} is not a triangle";
      auto [d, e] = it->second;
      if (d == e || e < 0) return "2-3 pivot cofacets do not span 5 vertices";
      if (has_edge(d, e)) return "2-3 opposite edge {" + std::to_string(std::min(d, e)) + " " +
                                 std::to_string(std::max(d, e)) + "} already present";
      return {};
    }
    case MoveKind::ThreeTwo: {
      if (p.size() != 2) return "3-2 pivot must be an edge";
      if (protected_.count(edge_key(p[0], p[1]))) return "3-2 pivot {" + p.str() + "} is protected";
      auto it = edeg_.find(edge_key(p[0], p[1]));
      if (it == edeg_.end()) return "3-2 pivot {" + p.str() + "} is not an edge";
      if (it->second != 3) return "3-2 pivot edge lies in " + std::to_string(it->second) + " facets, not 3";
      auto link = edge_link(p[0], p[1]);
      if (has_triangle(link[0], link[1], link[2])) return "3-2 link triangle already present";
      return {};
    }
    default: {
      if (p.size() != 1) return "4-1 pivot must be a vertex";
      if (protected_vertex_.count(p[0])) return "4-1 pivot " + p.str() + " is an endpoint of a protected edge";
      auto it = vdeg_.find(p[0]);
      if (it == vdeg_.end()) return "4-1 pivot " + p.str() + " is not a vertex";
      if (it->second != 4) return "4-1 pivot has degree " + std::to_string(it->second) + ", not 4";
      auto link = vertex_link(p[0]);
      if (link.size() != 4) return "4-1 link is not the boundary of a tetrahedron";
      if (has_tet({link[0], link[1], link[2], link[3]})) return "4-1 link tetrahedron already present";
      return {};
    }
  }
}

std::array<int, 3> FlipComplex::edge_link(int a, int b) const {
  std::array<int, 3> out{-1, -1, -1};
  int n = 0;
  std::vector<int> seen;
  for (auto k : tets_with_edge(a, b))
    for (int v : unpack_tet(k))
      if (v != a && v != b && std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
  std::sort(seen.begin(), seen.end());
  for (int v : seen)
    if (n < 3) out[n++] = v;
  return out;
}

std::vector<int> FlipComplex::vertex_link(int v) const {
  std::vector<int> vs;
  auto it = star_.find(v);
  if (it == star_.end()) return vs;
  for (auto k : it->second)
    for (int w : unpack_tet(k))
      if (w != v && std::find(vs.begin(), vs.end(), w) == vs.end()) vs.push_back(w);
  std::sort(vs.begin(), vs.end());
  return vs;
}

void FlipComplex::apply(const FlipMove& m) {
  if (auto why = why_illegal(m); !why.empty()) throw std::invalid_argument(why);
  const auto& p = m.pivot;
  switch (m.kind) {
    case MoveKind::OneFour: {
      int v = *m.new_vertex;
      remove({p[0], p[1], p[2], p[3]});
      for (int i = 0; i < 4; ++i) {
        std::array<int, 4> t{v, 0, 0, 0};
        for (int j = 0, k = 1; j < 4; ++j)
          if (j != i) t[k++] = p[j];
        add(t);
      }
      break;
    }
    case MoveKind::TwoThree: {
      auto [d, e] = tri_.at(tri_key({p[0], p[1], p[2]}));
      remove({p[0], p[1], p[2], d});
      remove({p[0], p[1], p[2], e});
      add({p[0], p[1], d, e});
      add({p[0], p[2], d, e});
      add({p[1], p[2], d, e});
      break;
    }
    case MoveKind::ThreeTwo: {
      auto l = edge_link(p[0], p[1]);
      for (auto k : tets_with_edge(p[0], p[1])) remove(unpack_tet(k));
      add({l[0], l[1], l[2], p[0]});
      add({l[0], l[1], l[2], p[1]});
      break;
    }
    default: {
      auto l = vertex_link(p[0]);
      for (int i = 0; i < 4; ++i) {
        std::array<int, 4> t{p[0], 0, 0, 0};
        for (int j = 0, k = 1; j < 4; ++j)
          if (j != i) t[k++] = l[j];
        remove(t);
      }
      add({l[0], l[1], l[2], l[3]});
      break;
    }
  }
}

std::vector<FlipMove> FlipComplex::moves(bool allow_1_4) const {
  std::vector<FlipMove> out;
  if (allow_1_4) {
    Vertex nv = smallest_unused_label();
    std::vector<std::uint64_t> ks(tets_.begin(), tets_.end());
    std::sort(ks.begin(), ks.end());
    for (auto k : ks) {
      auto t = unpack_tet(k);
      out.push_back({MoveKind::OneFour, Simplex::from_sorted({t[0], t[1], t[2], t[3]}), nv});
    }
  }
  std::vector<std::uint64_t> tris;
  for (auto& [k, ap] : tri_)
    if (ap[1] >= 0 && !has_edge(ap[0], ap[1])) tris.push_back(k);
  std::sort(tris.begin(), tris.end());
  for (auto k : tris)
    out.push_back({MoveKind::TwoThree,
                   Simplex::from_sorted({static_cast<int>(k >> 32), static_cast<int>((k >> 16) & 0xFFFF),
                                         static_cast<int>(k & 0xFFFF)}),
                   std::nullopt});
  std::vector<std::uint64_t> edges;
  for (auto& [k, deg] : edeg_)
    if (deg == 3 && !protected_.count(k)) edges.push_back(k);
  std::sort(edges.begin(), edges.end());
  for (auto k : edges) {
    int a = static_cast<int>(k >> 16), b = static_cast<int>(k & 0xFFFF);
    auto l = edge_link(a, b);
    if (!has_triangle(l[0], l[1], l[2])) out.push_back({MoveKind::ThreeTwo, Simplex::from_sorted({a, b}), std::nullopt});
  }
  std::vector<int> verts;
  for (auto& [v, deg] : vdeg_)
    if (deg == 4 && !protected_vertex_.count(v)) verts.push_back(v);
  std::sort(verts.begin(), verts.end());
  for (int v : verts) {
    auto l = vertex_link(v);
    if (l.size() == 4 && !has_tet({l[0], l[1], l[2], l[3]}))
      out.push_back({MoveKind::FourOne, Simplex::from_sorted({v}), std::nullopt});
  }
  return out;
}

SimplicialComplex FlipComplex::to_complex() const {
  std::vector<Simplex> fs;
  fs.reserve(tets_.size());
  for (auto k : tets_) {
    auto t = unpack_tet(k);
    fs.push_back(Simplex::from_sorted({t[0], t[1], t[2], t[3]}));
  }
  return SimplicialComplex::from_facets(std::move(fs));
}

}  // namespace detail

std::vector<FlipMove> legal_moves(const SimplicialComplex& s, const EdgeSet& protected_edges, bool allow_1_4) {
  return detail::FlipComplex(s, protected_edges).moves(allow_1_4);
}

SimplicialComplex apply_move(const SimplicialComplex& s, const FlipMove& m, const EdgeSet& protected_edges) {
  detail::FlipComplex fc(s, protected_edges);
  fc.apply(m);
  return fc.to_complex();
}

SimplicialComplex replay(const SimplicialComplex& s, const FlipLog& log, const EdgeSet& protected_edges) {
  if (canonical_hash(s) != log.initial_hash)
    throw std::invalid_argument("replay: initial hash " + hex64(canonical_hash(s)) + " does not match the log");
  detail::FlipComplex fc(s, protected_edges);
  for (std::size_t i = 0; i < log.moves.size(); ++i) {
    try {
      fc.apply(log.moves[i]);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("replay: step " + std::to_string(i) + " (" + log.moves[i].str() + "): " + e.what());
    }
  }
  auto out = fc.to_complex();
  if (canonical_hash(out) != log.final_hash)
    throw std::invalid_argument("replay: final hash " + hex64(canonical_hash(out)) + " does not match the log");
  return out;
}

std::string emit_flp(const FlipLog& log) {
  std::string out = "initial " + hex64(log.initial_hash) + "\n";
  for (const auto& m : log.moves) out += m.str() + "\n";
  out += "final " + hex64(log.final_hash) + "\n";
  return out;
}

FlipLog parse_flp(std::string_view text) {
  FlipLog log;
  std::size_t lineno = 0;
  bool have_initial = false, have_final = false;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string line(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) line.pop_back();
    std::size_t start = line.find_first_not_of(' ');
    if (start == std::string::npos) continue;
    line = line.substr(start);
    auto where = [&] { return "flip log line " + std::to_string(lineno) + ": "; };
    auto sp = line.find(' ');
    std::string head = line.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : line.substr(sp + 1);
    if (head == "initial" || head == "final") {
      std::uint64_t h = std::stoull(rest, nullptr, 16);
      if (head == "initial") {
        log.initial_hash = h;
        have_initial = true;
      } else {
        log.final_hash = h;
        have_final = true;
      }
      continue;
    }
    FlipMove m;
    std::size_t pivot_size;
    if (head == "1-4") m.kind = MoveKind::OneFour, pivot_size = 4;
    else if (head == "2-3") m.kind = MoveKind::TwoThree, pivot_size = 3;
    else if (head == "3-2") m.kind = MoveKind::ThreeTwo, pivot_size = 2;
    else if (head == "4-1") m.kind = MoveKind::FourOne, pivot_size = 1;
    else throw std::runtime_error(where() + "unknown move kind '" + head + "'");
    auto rows = parse_int_lines(rest);
    std::vector<Vertex> vs = rows.empty() ? std::vector<Vertex>{} : rows[0];
    if (vs.size() == pivot_size + 1 && m.kind == MoveKind::OneFour) {
      m.new_vertex = vs.back();
      vs.pop_back();
    }
    if (vs.size() != pivot_size) throw std::runtime_error(where() + "wrong number of pivot vertices");
    m.pivot = Simplex(vs);
    log.moves.push_back(std::move(m));
  }
  if (!have_initial || !have_final) throw std::runtime_error("flip log needs 'initial' and 'final' hash lines");
  return log;
}

}  // namespace cplx
