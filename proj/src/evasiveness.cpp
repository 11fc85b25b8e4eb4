#include <stdexcept>

#include "cplx/hierarchy.hpp"
#include "cplx/homology.hpp"

namespace cplx {

namespace {

std::vector<std::vector<Vertex>> k_subsets(const std::vector<Vertex>& vs, int k) {
  std::vector<std::vector<Vertex>> out;
  const int n = static_cast<int>(vs.size());
  if (k < 0 || k > n) throw std::invalid_argument("evasiveness_scan: subset size out of range");
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<Vertex> s;
    for (int i : idx) s.push_back(vs[i]);
    out.push_back(std::move(s));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

std::vector<ScanRow> evasiveness_scan_serial(const SimplicialComplex& c, int k) {
  std::vector<ScanRow> rows;
  for (auto& s : k_subsets(c.vertices(), k)) {
    bool a = is_acyclic(deletion(c, s));
    rows.push_back({std::move(s), a});
  }
  return rows;
}

std::vector<ScanRow> evasiveness_scan(const SimplicialComplex& c, int k) {
  auto subsets = k_subsets(c.vertices(), k);
  std::vector<ScanRow> rows(subsets.size());
  const long n = static_cast<long>(subsets.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) {
    rows[i].acyclic = is_acyclic(deletion(c, subsets[i]));
    rows[i].deleted = std::move(subsets[i]);
  }
  return rows;
}

}  // namespace cplx
