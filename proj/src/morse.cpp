#include "cplx/morse.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "cplx/face_lattice.hpp"
#include "cplx/homology.hpp"
#include "cplx/random.hpp"

namespace cplx {

namespace {

MorseResult morse_run(const FaceLattice& lat, int dim, std::uint64_t seed) {
  detail::CollapseState st(lat);
  Rng rng(seed);
  MorseResult res;
  res.certificate.target = CollapseTarget::empty();
  while (st.alive_count() > 0) {
    if (st.free_count() > 0) {
      int s = st.free_at(uniform_index(rng, st.free_count()));
      int t = st.coface_of(s);
      res.certificate.steps.push_back({lat.face(s), lat.face(t)});
      res.matching.pairs.push_back({lat.face(s), lat.face(t)});
      st.collapse(s);
    } else {
      int k = st.top_alive_dim();
      int s = st.alive_of_dim(k, uniform_index(rng, st.alive_count_of_dim(k)));
      res.certificate.steps.push_back({lat.face(s), std::nullopt});
      res.matching.critical.push_back(lat.face(s));
      st.remove_maximal(s);
    }
  }
  res.vector = morse_vector(res.matching, dim);
  return res;
}

}  // namespace

MorseResult random_discrete_morse(const SimplicialComplex& c, std::uint64_t seed) {
  FaceLattice lat(c);
  return morse_run(lat, c.dim(), seed);
}

MorseVector morse_vector(const MorseMatching& m, int dim) {
  MorseVector v(std::max(dim + 1, 0), 0);
  for (const auto& s : m.critical) {
    if (s.dim() < 0) continue;
    if (s.dim() >= static_cast<int>(v.size())) v.resize(s.dim() + 1, 0);
    ++v[s.dim()];
  }
  return v;
}

MorseMatching matching_from_certificate(const CollapseCertificate& cert) {
  MorseMatching m;
  for (const auto& s : cert.steps) {
    if (s.critical()) m.critical.push_back(s.face);
    else m.pairs.push_back({s.face, *s.coface});
  }
  return m;
}

bool is_acyclic_matching(const SimplicialComplex& c, const MorseMatching& m) {
  FaceLattice lat(c);
  std::vector<int> mate(lat.size(), -1);
  for (const auto& p : m.pairs) {
    int s = lat.id(p.free_face), t = lat.id(p.coface);
    if (s < 0 || t < 0 || p.coface.size() != p.free_face.size() + 1 || !p.free_face.is_face_of(p.coface)) return false;
    if (mate[s] >= 0 || mate[t] >= 0) return false;
    mate[s] = t;
    mate[t] = s;
  }
  // Edges: τ -> σ for σ ⊂ τ unmatched to each other; σ -> τ when matched.
  auto successors = [&](int v, std::vector<int>& out) {
    out.clear();
    for (int f : lat.facets_of(v))
      if (mate[v] != f) out.push_back(f);
    if (mate[v] >= 0 && lat.dim(mate[v]) == lat.dim(v) + 1) out.push_back(mate[v]);
  };
  std::vector<char> color(lat.size(), 0);
  std::vector<std::pair<int, std::vector<int>>> stack;
  for (int root = 0; root < lat.size(); ++root) {
    if (color[root]) continue;
    stack.clear();
    stack.emplace_back(root, std::vector<int>{});
    successors(root, stack.back().second);
    color[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next.empty()) {
        color[v] = 2;
        stack.pop_back();
        continue;
      }
      int w = next.back();
      next.pop_back();
      if (color[w] == 1) return false;
      if (color[w] == 0) {
        color[w] = 1;
        std::vector<int> nw;
        successors(w, nw);
        stack.emplace_back(w, std::move(nw));
      }
    }
  }
  return true;
}

bool satisfies_morse_inequalities(const SimplicialComplex& c, const MorseVector& v) {
  auto beta = reduced_homology(c).unreduced_betti();
  for (std::size_t i = 0; i < beta.size(); ++i)
    if ((i < v.size() ? v[i] : 0) < beta[i]) return false;
  return true;
}

MorseSearchResult morse_search(const SimplicialComplex& c, const MorseSearchOptions& opt) {
  const int n = std::max(opt.tries, 0);
  FaceLattice lat(c);
  std::vector<std::optional<MorseVector>> runs(n);
  std::atomic<int> first_goal{INT_MAX};
  auto body = [&](int i) {
    if (opt.goal && i > first_goal.load()) return;
    runs[i] = morse_run(lat, c.dim(), run_seed(opt.seed, i)).vector;
    if (opt.goal && *runs[i] == *opt.goal) {
      int cur = first_goal.load();
      while (i < cur && !first_goal.compare_exchange_weak(cur, i)) {
      }
    }
  };
  if (opt.parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (int i = 0; i < n; ++i) body(i);
  } else {
    for (int i = 0; i < n && first_goal.load() == INT_MAX; ++i) body(i);
  }
  MorseSearchResult res;
  // Only tries up to the goal hit count, so serial and parallel agree.
  const int limit = first_goal.load() == INT_MAX ? n : first_goal.load() + 1;
  std::int64_t best_total = LLONG_MAX;
  for (int i = 0; i < limit; ++i) {
    if (!runs[i]) continue;
    ++res.tries_run;
    ++res.histogram[*runs[i]];
    auto total = std::accumulate(runs[i]->begin(), runs[i]->end(), std::int64_t{0});
    if (total < best_total) {
      best_total = total;
      res.best_try = i;
    }
  }
  if (first_goal.load() != INT_MAX) {
    res.goal_reached = true;
    res.best_try = first_goal.load();
  }
  if (res.best_try >= 0) res.best = random_discrete_morse(c, run_seed(opt.seed, res.best_try));
  return res;
}

}  // namespace cplx
