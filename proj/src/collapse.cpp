#include "cplx/collapse.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <stdexcept>

#include "cplx/io.hpp"
#include "cplx/random.hpp"

namespace cplx {

namespace detail {

CollapseState::CollapseState(const FaceLattice& lat)
    : lat_(lat),
      alive_(lat.size(), 1),
      protected_(lat.size(), 0),
      up_(lat.size()),
      free_pos_(lat.size(), -1),
      by_dim_(std::max(lat.top_dim() + 1, 0)),
      dim_pos_(lat.size()),
      alive_total_(lat.size()) {
  for (int i = 0; i < lat.size(); ++i) {
    up_[i] = static_cast<int>(lat.cofaces(i).size());
    dim_pos_[i] = static_cast<int>(by_dim_[lat.dim(i)].size());
    by_dim_[lat.dim(i)].push_back(i);
  }
  for (int i = 0; i < lat.size(); ++i) refresh(i);
}

void CollapseState::protect(int id) {
  protected_[id] = 1;
  refresh(id);
}

void CollapseState::refresh(int id) {
  bool want = is_free(id);
  bool have = free_pos_[id] >= 0;
  if (want == have) return;
  if (want) {
    free_pos_[id] = static_cast<int>(free_.size());
    free_.push_back(id);
  } else {
    int last = free_.back();
    free_[free_pos_[id]] = last;
    free_pos_[last] = free_pos_[id];
    free_.pop_back();
    free_pos_[id] = -1;
  }
}

int CollapseState::coface_of(int id) const {
  for (int t : lat_.cofaces(id))
    if (alive_[t]) return t;
  return -1;
}

int CollapseState::top_alive_dim() const {
  for (int k = static_cast<int>(by_dim_.size()) - 1; k >= 0; --k)
    if (!by_dim_[k].empty()) return k;
  return -1;
}

void CollapseState::remove(int id) {
  alive_[id] = 0;
  --alive_total_;
  refresh(id);
  auto& layer = by_dim_[lat_.dim(id)];
  int last = layer.back();
  layer[dim_pos_[id]] = last;
  dim_pos_[last] = dim_pos_[id];
  layer.pop_back();
  for (int f : lat_.facets_of(id)) {
    --up_[f];
    refresh(f);
  }
}

void CollapseState::collapse(int free_id) {
  int t = coface_of(free_id);
  remove(t);
  remove(free_id);
}

void CollapseState::remove_maximal(int id) { remove(id); }

int CollapseState::lookahead_score(int free_id) const {
  int t = coface_of(free_id);
  int score = 0;
  for (int f : lat_.facets_of(t))
    if (f != free_id && alive_[f] && !protected_[f] && up_[f] == 2) ++score;
  for (int f : lat_.facets_of(free_id))
    if (alive_[f] && !protected_[f] && up_[f] == 2) ++score;
  return score;
}

std::vector<int> CollapseState::alive_ids() const {
  std::vector<int> ids;
  for (int i = 0; i < lat_.size(); ++i)
    if (alive_[i]) ids.push_back(i);
  return ids;
}

SimplicialComplex CollapseState::residue() const {
  std::vector<Simplex> fs;
  for (int i = 0; i < lat_.size(); ++i)
    if (alive_[i] && up_[i] == 0) fs.push_back(lat_.face(i));
  return SimplicialComplex::from_facets(std::move(fs));
}

}  // namespace detail

std::string CollapseTarget::str() const {
  switch (kind) {
    case TargetKind::Point: return "point";
    case TargetKind::Empty: return "empty";
    default: {
      std::string s;
      for (const auto& f : complex.facets()) s += (s.empty() ? "" : ", ") + f.str();
      return s;
    }
  }
}

std::vector<Simplex> CollapseCertificate::critical_faces() const {
  std::vector<Simplex> out;
  for (const auto& s : steps)
    if (s.critical()) out.push_back(s.face);
  return out;
}

std::vector<CollapsePair> free_pairs(const SimplicialComplex& c) {
  FaceLattice lat(c);
  std::vector<CollapsePair> out;
  for (int i = 0; i < lat.size(); ++i)
    if (lat.cofaces(i).size() == 1) out.push_back({lat.face(i), lat.face(lat.cofaces(i)[0])});
  return out;
}

namespace {

// Runs steps until the first illegal one. Returns its index or steps.size().
std::size_t replay(detail::CollapseState& st, const FaceLattice& lat, const CollapseCertificate& cert, std::size_t n,
                   std::string& reason) {
  for (std::size_t k = 0; k < n; ++k) {
    const auto& step = cert.steps[k];
    int s = lat.id(step.face);
    if (s < 0 || !st.alive(s)) {
      reason = "face {" + step.face.str() + "} absent";
      return k;
    }
    if (step.critical()) {
      if (st.up_count(s) != 0) {
        reason = "critical face {" + step.face.str() + "} is not maximal";
        return k;
      }
      st.remove_maximal(s);
      continue;
    }
    int t = lat.id(*step.coface);
    if (t < 0 || !st.alive(t)) {
      reason = "coface {" + step.coface->str() + "} absent";
      return k;
    }
    if (step.coface->size() != step.face.size() + 1 || !step.face.is_face_of(*step.coface)) {
      reason = "{" + step.face.str() + "} is not a facet of {" + step.coface->str() + "}";
      return k;
    }
    if (st.up_count(s) != 1) {
      reason = "face {" + step.face.str() + "} is not free (" + std::to_string(st.up_count(s)) + " cofaces)";
      return k;
    }
    st.collapse(s);
  }
  return n;
}

}  // namespace

VerifyReport verify_certificate(const SimplicialComplex& c, const CollapseCertificate& cert) {
  VerifyReport rep;
  FaceLattice lat(c);
  detail::CollapseState st(lat);
  std::size_t k = replay(st, lat, cert, cert.steps.size(), rep.reason);
  rep.residue = st.residue();
  for (std::size_t i = 0; i < k; ++i)
    if (cert.steps[i].critical()) rep.critical.push_back(cert.steps[i].face);
  if (k < cert.steps.size()) {
    rep.failed_step = k;
    return rep;
  }
  switch (cert.target.kind) {
    case TargetKind::Point:
      rep.ok = rep.residue.num_facets() == 1 && rep.residue.dim() == 0;
      break;
    case TargetKind::Empty:
      rep.ok = rep.residue.is_void();
      break;
    case TargetKind::Subcomplex:
      rep.ok = rep.residue == cert.target.complex;
      break;
  }
  if (!rep.ok) {
    rep.failed_step = cert.steps.size();
    rep.reason = "residue has facets {" + CollapseTarget::subcomplex(rep.residue).str() + "}, expected " +
                 cert.target.str();
  }
  return rep;
}

SimplicialComplex residue_after(const SimplicialComplex& c, const CollapseCertificate& cert, std::size_t n) {
  FaceLattice lat(c);
  detail::CollapseState st(lat);
  std::string reason;
  n = std::min(n, cert.steps.size());
  if (replay(st, lat, cert, n, reason) != n) throw std::invalid_argument("residue_after: " + reason);
  return st.residue();
}

CollapseCertificate parse_clps(std::string_view text) {
  CollapseCertificate cert;
  bool have_target = false;
  std::size_t lineno = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) continue;
    auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
    auto face = [&](std::string_view s) {
      auto rows = parse_int_lines(s);
      if (rows.size() != 1) throw std::runtime_error(where() + "expected one face");
      return Simplex(rows[0]);
    };
    if (line.starts_with("target")) {
      auto rest = line.substr(6);
      while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
      if (rest == "point") cert.target = CollapseTarget::point();
      else if (rest == "empty") cert.target = CollapseTarget::empty();
      else cert.target = CollapseTarget::subcomplex(SimplicialComplex::from_facets(parse_simplex_list(rest)));
      have_target = true;
    } else if (line.starts_with("critical")) {
      cert.steps.push_back({face(line.substr(8)), std::nullopt});
    } else {
      auto arrow = line.find("->");
      if (arrow == std::string_view::npos) throw std::runtime_error(where() + "expected 'face -> coface'");
      cert.steps.push_back({face(line.substr(0, arrow)), face(line.substr(arrow + 2))});
    }
  }
  if (!have_target) throw std::runtime_error("certificate has no target line");
  return cert;
}

CollapseCertificate read_clps(const std::string& path) { return parse_clps(read_text(path)); }

std::string emit_clps(const CollapseCertificate& cert) {
  std::string out = "target " + cert.target.str() + "\n";
  for (const auto& s : cert.steps) {
    if (s.critical()) out += "critical " + s.face.str() + "\n";
    else out += s.face.str() + " -> " + s.coface->str() + "\n";
  }
  return out;
}

std::string to_string(CollapseStrategy s) { return s == CollapseStrategy::Uniform ? "uniform" : "lookahead"; }

namespace {

std::optional<CollapseCertificate> collapse_once(const FaceLattice& lat, const std::vector<int>& protect,
                                                 const CollapseTarget& target, CollapseStrategy strategy,
                                                 std::uint64_t seed) {
  detail::CollapseState st(lat);
  for (int id : protect) st.protect(id);
  Rng rng(seed);
  CollapseCertificate cert;
  cert.target = target;
  const int goal = target.kind == TargetKind::Point ? 1 : static_cast<int>(protect.size());
  while (st.free_count() > 0 && st.alive_count() > goal) {
    int pick = st.free_at(uniform_index(rng, st.free_count()));
    if (strategy == CollapseStrategy::Lookahead && st.free_count() > 1) {
      int best = st.lookahead_score(pick);
      for (int k = 0; k < 3; ++k) {
        int cand = st.free_at(uniform_index(rng, st.free_count()));
        int sc = st.lookahead_score(cand);
        if (sc > best) {
          best = sc;
          pick = cand;
        }
      }
    }
    int t = st.coface_of(pick);
    cert.steps.push_back({lat.face(pick), lat.face(t)});
    st.collapse(pick);
  }
  if (st.alive_count() != goal) return std::nullopt;
  if (target.kind == TargetKind::Point && lat.dim(st.alive_ids().front()) != 0) return std::nullopt;
  return cert;
}

}  // namespace

SearchResult search_collapse(const SimplicialComplex& c, const CollapseTarget& target, const SearchOptions& opt) {
  if (target.kind == TargetKind::Empty) throw std::invalid_argument("search_collapse: a collapse never reaches the void complex");
  FaceLattice lat(c);
  std::vector<int> protect;
  if (target.kind == TargetKind::Subcomplex) {
    for (const auto& f : target.complex.all_faces()) {
      int id = lat.id(f);
      if (id < 0) throw std::invalid_argument("search_collapse: target face {" + f.str() + "} is not in the complex");
      protect.push_back(id);
    }
  }
  SearchResult res;
  const int n = std::max(opt.restarts, 0);
  std::vector<std::optional<CollapseCertificate>> found(n);
  std::atomic<int> best{INT_MAX};
  std::atomic<int> run{0};
  auto body = [&](int r) {
    if (r > best.load()) return;
    found[r] = collapse_once(lat, protect, target, opt.strategy, run_seed(opt.seed, r));
    ++run;
    if (found[r]) {
      int cur = best.load();
      while (r < cur && !best.compare_exchange_weak(cur, r)) {
      }
    }
  };
  if (opt.parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int r = 0; r < n; ++r) body(r);
  } else {
    for (int r = 0; r < n && best.load() == INT_MAX; ++r) body(r);
  }
  res.restarts_run = run.load();
  if (best.load() != INT_MAX) {
    res.winner = best.load();
    res.winner_seed = run_seed(opt.seed, *res.winner);
    res.certificate = std::move(found[*res.winner]);
  }
  return res;
}

SimplicialComplex collapse_until_stuck(const SimplicialComplex& c, std::uint64_t seed) {
  FaceLattice lat(c);
  detail::CollapseState st(lat);
  Rng rng(seed);
  while (st.free_count() > 0) st.collapse(st.free_at(uniform_index(rng, st.free_count())));
  return st.residue();
}

}  // namespace cplx
