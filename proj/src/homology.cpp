#include "cplx/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace cplx {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

// Arithmetic that reports int64 overflow by throwing Overflow.
struct Checked64 {
  using T = std::int64_t;
  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T add(T a, T b) {
    T r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T abs(T a) {
    if (a == INT64_MIN) throw Overflow{};
    return a < 0 ? -a : a;
  }
};

struct Big {
  using T = BigInt;
  static T mul(const T& a, const T& b) { return a * b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T add(const T& a, const T& b) { return a + b; }
  static T abs(const T& a) { return a < 0 ? T(-a) : a; }
};

template <class A>
struct Eliminator {
  using T = typename A::T;
  using Row = std::vector<std::pair<int, T>>;

  int nrows, ncols;
  std::vector<Row> rows;
  std::vector<std::vector<int>> col_rows;
  std::vector<char> row_alive, col_alive;

  explicit Eliminator(const SparseIntMatrix& m)
      : nrows(m.rows), ncols(m.cols), rows(m.rows), col_rows(m.cols), row_alive(m.rows, 1), col_alive(m.cols, 1) {
    for (int j = 0; j < m.cols; ++j)
      for (auto [i, v] : m.columns[j]) {
        rows[i].emplace_back(j, T(v));
        col_rows[j].push_back(i);
      }
    for (auto& r : rows) std::sort(r.begin(), r.end(), [](auto& a, auto& b) { return a.first < b.first; });
  }

  const T* entry(int i, int j) const {
    const auto& r = rows[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, int c) { return e.first < c; });
    return (it != r.end() && it->first == j) ? &it->second : nullptr;
  }

  // Live rows with a nonzero in column j; also compacts the occurrence list.
  std::vector<int>& live_rows(int j) {
    auto& cr = col_rows[j];
    std::sort(cr.begin(), cr.end());
    cr.erase(std::unique(cr.begin(), cr.end()), cr.end());
    cr.erase(std::remove_if(cr.begin(), cr.end(), [&](int i) { return !row_alive[i] || !entry(i, j); }), cr.end());
    return cr;
  }

  // row t -= q * row r
  void axpy(int t, const T& q, int r) {
    Row out;
    const Row& a = rows[t];
    const Row& b = rows[r];
    out.reserve(a.size() + b.size());
    std::size_t x = 0, y = 0;
    while (x < a.size() || y < b.size()) {
      if (y == b.size() || (x < a.size() && a[x].first < b[y].first)) {
        out.push_back(a[x++]);
      } else if (x == a.size() || b[y].first < a[x].first) {
        T v = A::sub(T(0), A::mul(q, b[y].second));
        if (col_alive[b[y].first]) col_rows[b[y].first].push_back(t);
        out.emplace_back(b[y].first, std::move(v));
        ++y;
      } else {
        T v = A::sub(a[x].second, A::mul(q, b[y].second));
        if (v != 0) out.emplace_back(a[x].first, std::move(v));
        ++x;
        ++y;
      }
    }
    rows[t] = std::move(out);
  }

  static bool is_unit(const T& v) { return v == 1 || v == -1; }

  std::int64_t sparse_phase() {
    std::int64_t rank = 0;
    using Key = std::pair<std::size_t, int>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> pq;
    for (int j = 0; j < ncols; ++j) pq.emplace(col_rows[j].size(), j);
    std::vector<int> deferred;
    bool progress = true;
    while (progress) {
      progress = false;
      while (!pq.empty()) {
        auto [est, j] = pq.top();
        pq.pop();
        if (!col_alive[j]) continue;
        auto& cr = live_rows(j);
        if (cr.empty()) {
          col_alive[j] = 0;
          continue;
        }
        if (cr.size() != est) {
          pq.emplace(cr.size(), j);
          continue;
        }
        int piv = -1;
        for (int i : cr)
          if (is_unit(*entry(i, j)) && (piv < 0 || rows[i].size() < rows[piv].size())) piv = i;
        if (piv < 0) {
          deferred.push_back(j);
          continue;
        }
        T pv = *entry(piv, j);
        std::vector<int> targets = cr;
        for (int t : targets) {
          if (t == piv) continue;
          T q = A::mul(*entry(t, j), pv);
          axpy(t, q, piv);
        }
        row_alive[piv] = 0;
        col_alive[j] = 0;
        ++rank;
        progress = true;
      }
      for (int j : deferred)
        if (col_alive[j]) pq.emplace(0, j);
      deferred.clear();
      if (!progress) break;
    }
    return rank;
  }

  // Smith form of what is left, densely.
  void dense_phase(std::int64_t& rank, std::vector<T>& diag) {
    std::vector<int> rs, cs;
    std::vector<int> col_pos(ncols, -1);
    for (int j = 0; j < ncols; ++j)
      if (col_alive[j]) {
        col_pos[j] = static_cast<int>(cs.size());
        cs.push_back(j);
      }
    for (int i = 0; i < nrows; ++i) {
      if (!row_alive[i]) continue;
      bool any = false;
      for (auto& [j, v] : rows[i])
        if (col_alive[j] && v != 0) any = true;
      if (any) rs.push_back(i);
    }
    const int R = static_cast<int>(rs.size()), C = static_cast<int>(cs.size());
    if (R == 0 || C == 0) return;
    if (static_cast<long long>(R) * C > 50'000'000LL) throw std::runtime_error("homology: residual matrix too large");
    std::vector<std::vector<T>> a(R, std::vector<T>(C, T(0)));
    for (int x = 0; x < R; ++x)
      for (auto& [j, v] : rows[rs[x]])
        if (col_pos[j] >= 0) a[x][col_pos[j]] = v;

    int t = 0;
    while (t < R && t < C) {
      // smallest nonzero magnitude in the trailing block
      int pi = -1, pj = -1;
      T best = 0;
      for (int i = t; i < R; ++i)
        for (int j = t; j < C; ++j)
          if (a[i][j] != 0 && (pi < 0 || A::abs(a[i][j]) < best)) {
            best = A::abs(a[i][j]);
            pi = i;
            pj = j;
          }
      if (pi < 0) break;
      std::swap(a[t], a[pi]);
      for (int i = 0; i < R; ++i) std::swap(a[i][t], a[i][pj]);
      bool clean = false;
      while (!clean) {
        clean = true;
        for (int i = t + 1; i < R; ++i) {
          if (a[i][t] == 0) continue;
          T q = a[i][t] / a[t][t];
          for (int j = t; j < C; ++j) a[i][j] = A::sub(a[i][j], A::mul(q, a[t][j]));
          if (a[i][t] != 0) {
            std::swap(a[t], a[i]);
            clean = false;
          }
        }
        for (int j = t + 1; j < C; ++j) {
          if (a[t][j] == 0) continue;
          T q = a[t][j] / a[t][t];
          for (int i = t; i < R; ++i) a[i][j] = A::sub(a[i][j], A::mul(q, a[i][t]));
          if (a[t][j] != 0) {
            for (int i = 0; i < R; ++i) std::swap(a[i][t], a[i][j]);
            clean = false;
          }
        }
        if (clean) {
          // divisibility: fold an offending row into row t
          for (int i = t + 1; i < R && clean; ++i)
            for (int j = t + 1; j < C; ++j)
              if (a[i][j] % a[t][t] != 0) {
                for (int k = t; k < C; ++k) a[t][k] = A::add(a[t][k], a[i][k]);
                clean = false;
                break;
              }
        }
      }
      diag.push_back(A::abs(a[t][t]));
      ++rank;
      ++t;
    }
  }
};

template <class A>
SmithResult run_smith(const SparseIntMatrix& m) {
  Eliminator<A> e(m);
  SmithResult res;
  res.rank = e.sparse_phase();
  std::vector<typename A::T> diag;
  e.dense_phase(res.rank, diag);
  std::sort(diag.begin(), diag.end());
  for (auto& d : diag) {
    if (d == 1) continue;
    if (d > INT64_MAX) throw std::overflow_error("homology: torsion coefficient exceeds 64 bits");
    res.torsion.push_back(static_cast<std::int64_t>(d));
  }
  return res;
}

}  // namespace

BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int k) {
  if (k < 0 || k > c.dim()) throw std::out_of_range("boundary_matrix: dimension " + std::to_string(k) + " out of range");
  BoundaryMatrix b;
  b.k = k;
  const auto& cols = c.faces(k);
  b.m.cols = static_cast<int>(cols.size());
  b.m.columns.resize(cols.size());
  if (k == 0) {
    b.m.rows = 1;
    for (auto& col : b.m.columns) col.emplace_back(0, 1);
    return b;
  }
  const auto& rows = c.faces(k - 1);
  b.m.rows = static_cast<int>(rows.size());
  std::unordered_map<Simplex, int, SimplexHash> index;
  index.reserve(rows.size() * 2);
  for (std::size_t i = 0; i < rows.size(); ++i) index.emplace(rows[i], static_cast<int>(i));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto& col = b.m.columns[j];
    for (std::size_t i = 0; i < cols[j].size(); ++i)
      col.emplace_back(index.at(cols[j].without_index(i)), i % 2 == 0 ? 1 : -1);
    std::sort(col.begin(), col.end());
  }
  return b;
}

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("multiply: shape mismatch");
  SparseIntMatrix out;
  out.rows = a.rows;
  out.cols = b.cols;
  out.columns.resize(b.cols);
  for (int j = 0; j < b.cols; ++j) {
    std::map<int, std::int64_t> acc;
    for (auto [k, v] : b.columns[j])
      for (auto [i, w] : a.columns[k]) acc[i] += v * w;
    for (auto [i, v] : acc)
      if (v != 0) out.columns[j].emplace_back(i, v);
  }
  return out;
}

bool is_zero(const SparseIntMatrix& m) {
  for (const auto& c : m.columns)
    for (auto [i, v] : c)
      if (v != 0) return false;
  return true;
}

SmithResult smith_normal_form(const SparseIntMatrix& m) {
  try {
    return run_smith<Checked64>(m);
  } catch (const Overflow&) {
    return run_smith<Big>(m);
  }
}

std::int64_t rank_mod2(const SparseIntMatrix& m) {
  std::vector<int> owner(m.rows, -1);
  std::vector<std::vector<int>> reduced(m.cols);
  std::int64_t rank = 0;
  for (int j = 0; j < m.cols; ++j) {
    std::vector<int> col;
    for (auto [i, v] : m.columns[j])
      if (v % 2 != 0) col.push_back(i);
    while (!col.empty()) {
      int low = col.back();
      if (owner[low] < 0) {
        owner[low] = j;
        ++rank;
        break;
      }
      std::vector<int> sum;
      const auto& other = reduced[owner[low]];
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(), std::back_inserter(sum));
      col.swap(sum);
    }
    reduced[j] = std::move(col);
  }
  return rank;
}

const HomologyGroup& HomologyProfile::at(int k) const {
  static const HomologyGroup zero;
  if (k + 1 < 0 || k + 1 >= static_cast<int>(g_.size())) return zero;
  return g_[k + 1];
}

bool HomologyProfile::acyclic() const {
  return std::all_of(g_.begin(), g_.end(), [](const HomologyGroup& g) { return g.trivial(); });
}

std::vector<std::int64_t> HomologyProfile::unreduced_betti() const {
  std::vector<std::int64_t> b;
  for (int k = 0; k <= max_dim(); ++k) b.push_back(at(k).betti);
  // H_0 = H̃_0 ⊕ Z once there is a vertex.
  if (!b.empty()) b[0] += 1;
  return b;
}

std::vector<HomologyGroup> HomologyProfile::trimmed() const {
  auto g = g_;
  while (!g.empty() && g.back().trivial()) g.pop_back();
  return g;
}

std::string group_str(const HomologyGroup& g) {
  std::string s;
  if (g.betti > 0) s = g.betti == 1 ? "Z" : "Z^" + std::to_string(g.betti);
  for (auto t : g.torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + std::to_string(t);
  return s.empty() ? "0" : s;
}

std::string HomologyProfile::str() const {
  std::string s;
  for (int k = -1; k <= max_dim(); ++k)
    s += "H~" + std::to_string(k) + " = " + group_str(at(k)) + "\n";
  return s;
}

HomologyProfile reduced_homology(const SimplicialComplex& c) {
  if (c.is_void()) return {};
  const int d = c.dim();
  // ranks[k] = rank ∂_k for k = 0..d, torsion[k] from ∂_k
  std::vector<SmithResult> snf(d + 2);
  for (int k = 0; k <= d; ++k) snf[k] = smith_normal_form(boundary_matrix(c, k).m);
  std::vector<HomologyGroup> g(d + 2);
  auto chain_dim = [&](int k) -> std::int64_t {
    return k == -1 ? 1 : static_cast<std::int64_t>(c.faces(k).size());
  };
  for (int k = -1; k <= d; ++k) {
    std::int64_t rk = k >= 0 ? snf[k].rank : 0;
    std::int64_t rk1 = k + 1 <= d ? snf[k + 1].rank : 0;
    g[k + 1].betti = chain_dim(k) - rk - rk1;
    if (k + 1 <= d) g[k + 1].torsion = snf[k + 1].torsion;
  }
  return HomologyProfile(std::move(g));
}

std::vector<std::int64_t> reduced_betti_mod2(const SimplicialComplex& c) {
  if (c.is_void()) return {};
  const int d = c.dim();
  std::vector<std::int64_t> r(d + 2, 0);
  for (int k = 0; k <= d; ++k) r[k] = rank_mod2(boundary_matrix(c, k).m);
  std::vector<std::int64_t> b;
  for (int k = -1; k <= d; ++k) {
    std::int64_t n = k == -1 ? 1 : static_cast<std::int64_t>(c.faces(k).size());
    b.push_back(n - (k >= 0 ? r[k] : 0) - r[k + 1]);
  }
  return b;
}

bool is_acyclic(const SimplicialComplex& c) {
  if (c.is_void()) return true;
  if (c.is_empty_simplex()) return false;
  if (!is_connected(c)) return false;
  auto b2 = reduced_betti_mod2(c);
  if (std::any_of(b2.begin(), b2.end(), [](std::int64_t b) { return b != 0; })) return false;
  return reduced_homology(c).acyclic();
}

}  // namespace cplx
