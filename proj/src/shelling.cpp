#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "cplx/hierarchy.hpp"

namespace cplx {

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::uint64_t h = 0x84222325cbf29ce4ull;
    for (auto w : b) h = (h ^ w) * 0x100000001b3ull;
    return static_cast<std::size_t>(h);
  }
};

class Sheller {
 public:
  Sheller(const SimplicialComplex& c, std::int64_t budget) : facets_(c.facets()), budget_(budget) {
    const std::size_t n = facets_.size();
    nbrs_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        std::uint32_t notin = 0;
        bool meets = false;
        for (std::size_t p = 0; p < facets_[i].size(); ++p) {
          if (facets_[j].contains(facets_[i][p])) meets = true;
          else notin |= 1u << p;
        }
        if (meets) nbrs_[i].push_back({static_cast<int>(j), notin});
      }
    state_.assign((n + 63) / 64, 0);
  }

  Verdict run() {
    bool ok = dfs(0);
    if (ok) return Verdict::True;
    return exhausted_ ? Verdict::Inconclusive : Verdict::False;
  }

  std::vector<Simplex> order() const {
    std::vector<Simplex> out;
    for (int i : order_) out.push_back(facets_[i]);
    return out;
  }
  std::int64_t states() const { return states_; }

 private:
  struct Nbr {
    int j;
    std::uint32_t notin;
  };

  bool used(int j) const { return (state_[j >> 6] >> (j & 63)) & 1; }
  void flip(int j) { state_[j >> 6] ^= std::uint64_t{1} << (j & 63); }

  // Ridges of F already covered, or 0 when F ∩ (union so far) is not pure of codimension one.
  std::uint32_t attach_mask(int f) const {
    std::uint32_t ridges = 0;
    for (const auto& nb : nbrs_[f])
      if (used(nb.j) && std::popcount(nb.notin) == 1) ridges |= nb.notin;
    if (!ridges) return 0;
    for (const auto& nb : nbrs_[f])
      if (used(nb.j) && !(nb.notin & ridges)) return 0;
    return ridges;
  }

  bool dfs(std::size_t count) {
    const int n = static_cast<int>(facets_.size());
    if (count == facets_.size()) return true;
    if (failed_.count(state_)) return false;
    if (++states_ > budget_) {
      exhausted_ = true;
      return false;
    }
    std::vector<std::pair<int, int>> cands;
    for (int f = 0; f < n; ++f) {
      if (used(f)) continue;
      if (count == 0) {
        cands.emplace_back(0, f);
        continue;
      }
      auto m = attach_mask(f);
      if (m) cands.emplace_back(-std::popcount(m), f);
    }
    std::stable_sort(cands.begin(), cands.end());
    for (auto [score, f] : cands) {
      flip(f);
      order_.push_back(f);
      if (dfs(count + 1)) return true;
      order_.pop_back();
      flip(f);
      if (exhausted_) return false;
    }
    failed_.insert(state_);
    return false;
  }

  const std::vector<Simplex>& facets_;
  std::int64_t budget_;
  std::int64_t states_ = 0;
  bool exhausted_ = false;
  std::vector<std::vector<Nbr>> nbrs_;
  Bits state_;
  std::vector<int> order_;
  std::unordered_set<Bits, BitsHash> failed_;
};

std::string extend(const std::string& path, const std::string& step) { return path.empty() ? step : path + "/" + step; }

TreeCheck check(const SimplicialComplex& c, const ConstructibilityTree& t, const std::string& path) {
  if (!(t.complex == c)) return {false, path, "node complex differs from the complex it should describe"};
  if (!c.is_pure() || c.is_void()) return {false, path, "complex is not pure"};
  if (t.is_leaf()) {
    if (c.is_simplex() || c.dim() == 0) return {};
    return {false, path, "leaf is neither a simplex nor a set of points"};
  }
  if (t.parts.size() != 3) return {false, path, "a split needs two pieces and their intersection"};
  const auto& a = t.parts[0].complex;
  const auto& b = t.parts[1].complex;
  const int d = c.dim();
  if (!a.is_pure() || a.dim() != d || !b.is_pure() || b.dim() != d)
    return {false, path, "pieces are not pure of dimension " + std::to_string(d)};
  if (!(union_of(a, b) == c)) return {false, path, "pieces do not cover the complex"};
  auto meet = intersection(a, b);
  if (!(meet == t.parts[2].complex)) return {false, path, "stated intersection differs from the actual one"};
  if (meet.is_void() || !meet.is_pure() || meet.dim() != d - 1)
    return {false, path, "intersection is not pure of dimension " + std::to_string(d - 1)};
  const char* names[3] = {"piece 1", "piece 2", "intersection"};
  for (int i = 0; i < 3; ++i) {
    auto r = check(t.parts[i].complex, t.parts[i], extend(path, names[i]));
    if (!r.ok) return r;
  }
  return {};
}

ConstructibilityTree leaf(SimplicialComplex c) { return {std::move(c), {}}; }

}  // namespace

ShellResult is_shellable(const SimplicialComplex& c, std::int64_t budget) {
  ShellResult res;
  if (c.is_void() || !c.is_pure()) {
    res.verdict = Verdict::False;
    return res;
  }
  if (c.dim() <= 0) {
    res.verdict = Verdict::True;
    res.order = c.facets();
    return res;
  }
  if (c.dim() > 31) throw std::invalid_argument("is_shellable: dimension too large");
  Sheller s(c, budget);
  res.verdict = s.run();
  res.states = s.states();
  if (res.verdict == Verdict::True) res.order = s.order();
  return res;
}

bool is_shelling_order(const SimplicialComplex& c, const std::vector<Simplex>& order) {
  if (!c.is_pure()) return false;
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != c.facets()) return false;
  std::vector<Simplex> so_far;
  for (const auto& f : order) {
    if (!so_far.empty()) {
      auto meet = intersection(SimplicialComplex::from_facets(so_far), SimplicialComplex::simplex(f));
      if (meet.is_void() || !meet.is_pure() || meet.dim() != f.dim() - 1) return false;
    }
    so_far.push_back(f);
  }
  return true;
}

TreeCheck verify_constructibility(const SimplicialComplex& c, const ConstructibilityTree& tree) {
  return check(c, tree, "");
}

ConstructibilityTree constructibility_from_shelling(const std::vector<Simplex>& order) {
  if (order.empty()) throw std::invalid_argument("constructibility_from_shelling: empty order");
  ConstructibilityTree t = leaf(SimplicialComplex::simplex(order[0]));
  std::vector<Simplex> so_far{order[0]};
  for (std::size_t k = 1; k < order.size(); ++k) {
    auto piece = SimplicialComplex::simplex(order[k]);
    auto meet = intersection(t.complex, piece);
    ConstructibilityTree meet_tree =
        meet.dim() <= 0 ? leaf(meet) : constructibility_from_shelling(meet.facets());
    so_far.push_back(order[k]);
    ConstructibilityTree next{SimplicialComplex::from_facets(so_far), {}};
    next.parts.push_back(std::move(t));
    next.parts.push_back(leaf(piece));
    next.parts.push_back(std::move(meet_tree));
    t = std::move(next);
  }
  return t;
}

ConstructibilityTree constructibility_split(const SimplicialComplex& c, ConstructibilityTree a, ConstructibilityTree b,
                                            ConstructibilityTree meet) {
  ConstructibilityTree t{c, {}};
  t.parts.push_back(std::move(a));
  t.parts.push_back(std::move(b));
  t.parts.push_back(std::move(meet));
  return t;
}

}  // namespace cplx
