#include "cplx/group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cplx {

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("symmetric_group: n must lie in 1..6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  FiniteGroup g;
  g.name = "S" + std::to_string(n);
  g.order = static_cast<int>(perms.size());
  g.identity = 0;
  g.table.resize(g.order * g.order);
  g.inverse.resize(g.order);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) {
      // (a*b)(x) = a(b(x))
      std::vector<int> c(n);
      for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      g.table[a * g.order + b] = index.at(c);
    }
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (g.mul(a, b) == g.identity) g.inverse[a] = b;
  return g;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: n must be positive");
  FiniteGroup g;
  g.name = "C" + std::to_string(n);
  g.order = n;
  g.table.resize(n * n);
  g.inverse.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.table[a * n + b] = (a + b) % n;
    g.inverse[a] = (n - a) % n;
  }
  return g;
}

FiniteGroup group_by_name(const std::string& name) {
  if (name.size() >= 2 && (name[0] == 'S' || name[0] == 'C')) {
    int n = std::stoi(name.substr(1));
    return name[0] == 'S' ? symmetric_group(n) : cyclic_group(n);
  }
  throw std::invalid_argument("unknown group '" + name + "' (use S<n> or C<n>)");
}

std::size_t GroupPresentation::total_length() const {
  std::size_t n = 0;
  for (const auto& r : relators) n += r.size();
  return n;
}

std::string GroupPresentation::str() const {
  auto gen = [](int letter) {
    int g = std::abs(letter) - 1;
    std::string s = g < 26 ? std::string(1, static_cast<char>('a' + g)) : "x" + std::to_string(g);
    return letter < 0 ? s + "^-1" : s;
  };
  std::string s = "< ";
  for (int i = 0; i < generators; ++i) s += (i ? ", " : "") + gen(i + 1);
  s += " | ";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    if (r) s += ", ";
    for (std::size_t k = 0; k < relators[r].size(); ++k) s += (k ? " " : "") + gen(relators[r][k]);
  }
  return s + " >";
}

Word free_reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i] == -r[j - 1]) {
    ++i;
    --j;
  }
  return Word(r.begin() + i, r.begin() + j);
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

namespace {

// Smallest rotation of w or of its inverse, to spot duplicate relators.
Word canonical(const Word& w) {
  Word best = w;
  for (const Word& base : {w, inverse(w)})
    for (std::size_t k = 0; k < base.size(); ++k) {
      Word rot(base.begin() + k, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + k);
      if (rot < best) best = rot;
    }
  return best;
}

// Generators as words in surviving generators: x = root^sign, or trivial.
class SignedUnionFind {
 public:
  explicit SignedUnionFind(int n) : parent_(n), sign_(n, 1), trivial_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  // (root, sign) with x = root^sign; root -1 means x is trivial.
  std::pair<int, int> find(int x) {
    if (trivial_[x]) return {-1, 1};
    if (parent_[x] == x) return {x, 1};
    auto [r, s] = find(parent_[x]);
    if (r < 0) {
      trivial_[x] = 1;
      return {-1, 1};
    }
    parent_[x] = r;
    sign_[x] *= s;
    return {r, sign_[x]};
  }

  // Imposes a = b^s. Returns false when that only says root^2 = 1, which is kept as a relator.
  bool unite(int a, int b, int s) {
    auto [ra, sa] = find(a);
    auto [rb, sb] = find(b);
    if (ra < 0 && rb < 0) return true;
    if (ra < 0) return kill(rb), true;
    if (rb < 0) return kill(ra), true;
    int t = sb * s * sa;  // ra = rb^t
    if (ra == rb) return t == 1;
    parent_[ra] = rb;
    sign_[ra] = t;
    return true;
  }

  void kill(int x) {
    auto [r, s] = find(x);
    (void)s;
    if (r >= 0) trivial_[r] = 1;
  }

 private:
  std::vector<int> parent_, sign_;
  std::vector<char> trivial_;
};

Word rewrite(const Word& w, SignedUnionFind& uf) {
  Word out;
  for (int letter : w) {
    int g = std::abs(letter) - 1;
    auto [r, s] = uf.find(g);
    if (r < 0) continue;
    out.push_back((letter > 0 ? s : -s) * (r + 1));
  }
  return cyclic_reduce(out);
}

void normalize(GroupPresentation& p) {
  std::set<Word> seen;
  std::vector<Word> out;
  for (auto& r : p.relators) {
    Word w = cyclic_reduce(r);
    if (w.empty()) continue;
    if (seen.insert(canonical(w)).second) out.push_back(std::move(w));
  }
  p.relators = std::move(out);
}

// Substitutes short relators: x = 1 and x = y^±1. Returns the generators that
// were expressed through others.
std::vector<char> absorb_short_relators(GroupPresentation& p) {
  SignedUnionFind uf(p.generators);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Word> keep;
    for (auto& r : p.relators) {
      Word w = rewrite(r, uf);
      if (w.empty()) {
        changed = changed || !r.empty();
        continue;
      }
      if (w.size() == 1) {
        uf.kill(std::abs(w[0]) - 1);
        changed = true;
        continue;
      }
      if (w.size() == 2 && std::abs(w[0]) != std::abs(w[1])) {
        int e = w[0] > 0 ? 1 : -1, f = w[1] > 0 ? 1 : -1;
        // x^e y^f = 1  =>  x = y^(-f e)
        if (uf.unite(std::abs(w[0]) - 1, std::abs(w[1]) - 1, -f * e)) {
          changed = true;
          continue;
        }
      }
      keep.push_back(std::move(w));
    }
    p.relators = std::move(keep);
  }
  for (auto& r : p.relators) r = rewrite(r, uf);
  std::vector<char> gone(p.generators, 0);
  for (int g = 0; g < p.generators; ++g) gone[g] = uf.find(g).first != g;
  return gone;
}

// Drops eliminated generators and renumbers the rest.
void compact(GroupPresentation& p, const std::vector<char>& eliminated) {
  std::vector<int> map(p.generators, -1);
  int next = 0;
  for (int g = 0; g < p.generators; ++g)
    if (!eliminated[g]) map[g] = next++;
  for (auto& r : p.relators)
    for (int& x : r) x = (x > 0 ? 1 : -1) * (map[std::abs(x) - 1] + 1);
  p.generators = next;
}

}  // namespace

GroupPresentation tietze_simplify(const GroupPresentation& input, int budget) {
  GroupPresentation p = input;
  for (const auto& r : p.relators)
    for (int x : r)
      if (x == 0 || std::abs(x) > p.generators) throw std::invalid_argument("tietze_simplify: letter out of range");
  const std::size_t length_cap = std::max<std::size_t>(4 * input.total_length(), 4096);
  int eliminations = 0;
  while (true) {
    normalize(p);
    // Short relators first; they only shrink the presentation.
    compact(p, absorb_short_relators(p));
    normalize(p);
    if (eliminations >= budget) break;
    // Find x occurring exactly once in some relator r; solve r for x.
    std::vector<std::vector<int>> occ(p.generators, std::vector<int>(p.relators.size(), 0));
    for (std::size_t r = 0; r < p.relators.size(); ++r)
      for (int x : p.relators[r]) ++occ[std::abs(x) - 1][r];
    int best_g = -1, best_r = -1;
    std::size_t best_cost = SIZE_MAX;
    for (int g = 0; g < p.generators; ++g) {
      std::size_t elsewhere = 0;
      for (std::size_t r = 0; r < p.relators.size(); ++r) elsewhere += occ[g][r];
      for (std::size_t r = 0; r < p.relators.size(); ++r) {
        if (occ[g][r] != 1) continue;
        std::size_t cost = (p.relators[r].size() - 1) * (elsewhere - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_g = g;
          best_r = static_cast<int>(r);
        }
      }
    }
    if (best_g < 0) break;
    // r = u x^e v  =>  x^e = u^-1 v^-1 ... rotate so that r = x^e w, then x = w^(-e).
    Word r = p.relators[best_r];
    std::size_t at = 0;
    while (std::abs(r[at]) - 1 != best_g) ++at;
    Word rot(r.begin() + at, r.end());
    rot.insert(rot.end(), r.begin(), r.begin() + at);
    int e = rot[0] > 0 ? 1 : -1;
    Word w(rot.begin() + 1, rot.end());
    Word x_is = e > 0 ? inverse(w) : w;
    Word x_inv = inverse(x_is);
    std::vector<Word> next;
    std::size_t total = 0;
    for (std::size_t k = 0; k < p.relators.size(); ++k) {
      if (static_cast<int>(k) == best_r) continue;
      Word out;
      for (int letter : p.relators[k]) {
        if (std::abs(letter) - 1 == best_g) {
          const Word& sub = letter > 0 ? x_is : x_inv;
          out.insert(out.end(), sub.begin(), sub.end());
        } else {
          out.push_back(letter);
        }
      }
      out = cyclic_reduce(out);
      total += out.size();
      next.push_back(std::move(out));
    }
    if (total > length_cap) break;
    p.relators = std::move(next);
    std::vector<char> gone(p.generators, 0);
    gone[best_g] = 1;
    compact(p, gone);
    ++eliminations;
  }
  return p;
}

HomologyGroup abelianization(const GroupPresentation& p) {
  SparseIntMatrix m;
  m.rows = p.generators;
  m.cols = static_cast<int>(p.relators.size());
  m.columns.resize(p.relators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    std::map<int, std::int64_t> sums;
    for (int x : p.relators[r]) sums[std::abs(x) - 1] += x > 0 ? 1 : -1;
    for (auto [g, s] : sums)
      if (s != 0) m.columns[r].emplace_back(g, s);
  }
  auto snf = smith_normal_form(m);
  return {p.generators - snf.rank, snf.torsion};
}

namespace {

struct HomCounter {
  const GroupPresentation& p;
  const FiniteGroup& g;
  std::vector<std::vector<const Word*>> by_level;
  std::vector<int> image;

  HomCounter(const GroupPresentation& pres, const FiniteGroup& grp) : p(pres), g(grp), by_level(pres.generators), image(pres.generators, 0) {
    for (const auto& r : p.relators) {
      if (r.empty()) continue;
      int top = 0;
      for (int x : r) top = std::max(top, std::abs(x) - 1);
      by_level[top].push_back(&r);
    }
  }

  bool holds(const Word& r) const {
    int acc = g.identity;
    for (int x : r) {
      int im = image[std::abs(x) - 1];
      acc = g.mul(acc, x > 0 ? im : g.inverse[im]);
    }
    return acc == g.identity;
  }

  std::uint64_t count(int level) {
    if (level == p.generators) return 1;
    std::uint64_t n = 0;
    for (int a = 0; a < g.order; ++a) {
      image[level] = a;
      bool ok = true;
      for (const Word* r : by_level[level])
        if (!holds(*r)) {
          ok = false;
          break;
        }
      if (ok) n += count(level + 1);
    }
    return n;
  }
};

void check_bound(const GroupPresentation& p, const FiniteGroup& g, double bound) {
  double work = std::pow(static_cast<double>(g.order), p.generators);
  if (work > bound)
    throw std::runtime_error("count_homs: " + std::to_string(g.order) + "^" + std::to_string(p.generators) +
                             " assignments exceed the bound; simplify the presentation further");
}

}  // namespace

std::uint64_t count_homs_serial(const GroupPresentation& p, const FiniteGroup& g, double bound) {
  check_bound(p, g, bound);
  HomCounter hc(p, g);
  return hc.count(0);
}

std::uint64_t count_homs(const GroupPresentation& p, const FiniteGroup& g, const HomCountOptions& opt) {
  if (!opt.parallel || p.generators == 0) return count_homs_serial(p, g, opt.bound);
  check_bound(p, g, opt.bound);
  std::uint64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic, 1)
  for (int a = 0; a < g.order; ++a) {
    HomCounter hc(p, g);
    hc.image[0] = a;
    bool ok = true;
    for (const Word* r : hc.by_level[0])
      if (!hc.holds(*r)) ok = false;
    if (ok) total += hc.count(1);
  }
  return total;
}

}  // namespace cplx
