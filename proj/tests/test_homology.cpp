#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <numeric>

#include "cplx/fixtures.hpp"
#include "cplx/homology.hpp"
#include "generators.hpp"

using namespace cplx;
using boost::multiprecision::cpp_int;

namespace {

using Dense = std::vector<std::vector<cpp_int>>;

Dense to_dense(const SparseIntMatrix& m) {
  Dense d(m.rows, std::vector<cpp_int>(m.cols, 0));
  for (int j = 0; j < m.cols; ++j)
    for (auto [i, v] : m.columns[j]) d[i][j] = v;
  return d;
}

SparseIntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& d) {
  SparseIntMatrix m;
  m.rows = static_cast<int>(d.size());
  m.cols = d.empty() ? 0 : static_cast<int>(d[0].size());
  m.columns.resize(m.cols);
  for (int j = 0; j < m.cols; ++j)
    for (int i = 0; i < m.rows; ++i)
      if (d[i][j] != 0) m.columns[j].push_back({i, d[i][j]});
  return m;
}

cpp_int det(Dense a) {
  // Bareiss fraction-free elimination
  std::size_t n = a.size();
  cpp_int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

void subsets(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> s(k);
  std::iota(s.begin(), s.end(), 0);
  if (k > n) return;
  while (true) {
    f(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) return;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

// Invariant factors as quotients of consecutive determinantal divisors.
SmithResult divisor_oracle(const SparseIntMatrix& m) {
  Dense d = to_dense(m);
  SmithResult r;
  cpp_int prev = 1;
  for (int k = 1; k <= std::min(m.rows, m.cols); ++k) {
    cpp_int g = 0;
    subsets(m.rows, k, [&](const std::vector<int>& rows) {
      subsets(m.cols, k, [&](const std::vector<int>& cols) {
        Dense sub(k, std::vector<cpp_int>(k));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub[i][j] = d[rows[i]][cols[j]];
        cpp_int x = abs(det(sub));
        g = gcd(g, x);
      });
    });
    if (g == 0) break;
    r.rank = k;
    cpp_int s = g / prev;
    if (s > 1) r.torsion.push_back(static_cast<std::int64_t>(s));
    prev = g;
  }
  return r;
}

SimplicialComplex rp2() {
  return SimplicialComplex::from_facets(std::vector<std::vector<Vertex>>{{1, 2, 3},
                                                                         {1, 2, 4},
                                                                         {1, 3, 5},
                                                                         {1, 4, 6},
                                                                         {1, 5, 6},
                                                                         {2, 3, 6},
                                                                         {2, 4, 5},
                                                                         {2, 5, 6},
                                                                         {3, 4, 5},
                                                                         {3, 4, 6}});
}

}  // namespace

TEST_CASE("smith normal form against determinantal divisors") {
  gen::Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    int rows = gen::uniform(rng, 1, 5), cols = gen::uniform(rng, 1, 5);
    auto m = gen::random_matrix(rng, rows, cols, 0.6, t < 100 ? 3 : 40);
    auto got = smith_normal_form(m);
    auto want = divisor_oracle(m);
    CHECK(got.rank == want.rank);
    CHECK(got.torsion == want.torsion);
  }
}

TEST_CASE("smith normal form with word-size entries") {
  // consecutive Fibonacci numbers: determinant ±1 while elimination overflows 64 bits
  std::vector<std::int64_t> fib{0, 1};
  while (fib.size() < 91) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  auto m = from_dense({{fib[90], fib[89]}, {fib[89], fib[88]}});
  auto r = smith_normal_form(m);
  CHECK(r.rank == 2);
  CHECK(r.torsion.empty());
  auto m2 = from_dense({{2 * fib[80], 2 * fib[79], 0}, {2 * fib[79], 2 * fib[78], 0}, {0, 0, 6}});
  auto r2 = smith_normal_form(m2);
  CHECK(r2.rank == 3);
  CHECK(r2.torsion == std::vector<std::int64_t>{2, 2, 6});
  CHECK(r2.torsion == divisor_oracle(m2).torsion);
  auto m3 = from_dense({{4, 0}, {0, 6}});
  CHECK(smith_normal_form(m3).torsion == std::vector<std::int64_t>{2, 12});
}

TEST_CASE("boundary matrices") {
  auto tri = SimplicialComplex::simplex({1, 2, 3});
  auto d1 = boundary_matrix(tri, 1);
  CHECK(d1.m.rows == 3);
  CHECK(d1.m.cols == 3);
  for (const auto& col : d1.m.columns) {
    std::int64_t s = 0;
    for (auto [i, v] : col) s += v < 0 ? -v : v;
    CHECK(s == 2);
  }
  auto s2 = gen::boundary_of_simplex(3);
  auto d2 = boundary_matrix(s2, 2);
  CHECK(d2.m.rows == 6);
  CHECK(d2.m.cols == 4);
  CHECK(smith_normal_form(d2.m).rank == 3);
  CHECK(divisor_oracle(d2.m).rank == 3);
  CHECK_THROWS(boundary_matrix(tri, 3));
}

TEST_CASE("boundary of boundary vanishes") {
  for (const char* name : {"B_12_38", "S_16_92", "R_14_41", "B_7_10"}) {
    auto c = load_fixture(name);
    for (int k = 1; k <= c.dim(); ++k)
      CHECK_MESSAGE(is_zero(multiply(boundary_matrix(c, k - 1).m, boundary_matrix(c, k).m)), name, " k=", k);
  }
}

TEST_CASE("reduced homology examples") {
  auto s2 = reduced_homology(gen::boundary_of_simplex(3));
  CHECK(s2.at(0).trivial());
  CHECK(s2.at(1).trivial());
  CHECK(s2.at(2) == HomologyGroup{1, {}});
  auto p = reduced_homology(rp2());
  CHECK(p.at(1) == HomologyGroup{0, {2}});
  CHECK(p.at(2).trivial());
  CHECK(rank_mod2(boundary_matrix(rp2(), 2).m) == 9);
  CHECK(smith_normal_form(boundary_matrix(rp2(), 2).m).rank == 10);
  CHECK(reduced_betti_mod2(rp2())[2] == 1);
  CHECK(reduced_homology(gen::boundary_of_simplex(4)).at(3) == HomologyGroup{1, {}});
  CHECK(reduced_homology(gen::cycle_graph(6)).at(1) == HomologyGroup{1, {}});
  auto two_points = SimplicialComplex::from_facets(std::vector<std::vector<Vertex>>{{1}, {2}});
  CHECK(reduced_homology(two_points).at(0) == HomologyGroup{1, {}});
  CHECK(reduced_homology(SimplicialComplex::empty_simplex()).at(-1) == HomologyGroup{1, {}});
}

TEST_CASE("acyclicity") {
  CHECK(is_acyclic(SimplicialComplex::simplex({0, 1, 2, 3})));
  CHECK(is_acyclic(SimplicialComplex()));
  CHECK_FALSE(is_acyclic(SimplicialComplex::empty_simplex()));
  auto b12 = load_fixture("B_12_38");
  CHECK(is_acyclic(deletion(b12, {4, 5, 8, 10, 11})));
  auto f3 = deletion(b12, {4, 6, 7, 9, 12});
  CHECK(is_acyclic(f3));
  for (Vertex v : f3.vertices()) CHECK_FALSE(is_acyclic(deletion(f3, v)));
  CHECK_FALSE(is_acyclic(rp2()));
  CHECK(is_acyclic(load_fixture("B_15_66")));
}

TEST_CASE("euler-poincare on fixtures") {
  for (const auto& name : fixture_names()) {
    auto c = load_fixture(name);
    auto betti = reduced_homology(c).unreduced_betti();
    std::int64_t alt = 0;
    for (std::size_t i = 0; i < betti.size(); ++i) alt += (i % 2 ? -1 : 1) * betti[i];
    CHECK_MESSAGE(alt == c.euler_characteristic(), name);
  }
}
