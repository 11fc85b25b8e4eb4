// Times the OpenMP kernels against their serial counterparts and checks that
// both produce the same answer.
#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>

#include "cplx/collapse.hpp"
#include "cplx/fixtures.hpp"
#include "cplx/flips.hpp"
#include "cplx/group.hpp"
#include "cplx/hierarchy.hpp"
#include "cplx/knot.hpp"
#include "cplx/morse.hpp"

using namespace cplx;

namespace {

template <class F>
double seconds(int reps, F&& f) {
  auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
}

void row(const std::string& name, double serial, double parallel, bool agree) {
  std::cout << std::left << std::setw(28) << name << std::right << std::fixed << std::setprecision(4) << std::setw(10)
            << serial << std::setw(10) << parallel << std::setw(8) << std::setprecision(2) << serial / parallel
            << (agree ? "  same" : "  DIFFERENT") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel kernel timings"};
  int reps = 3;
  app.add_option("--reps", reps);
  CLI11_PARSE(app, argc, argv);

  std::cout << "threads " << omp_get_max_threads() << "\n";
  std::cout << std::left << std::setw(28) << "kernel" << std::right << std::setw(10) << "serial" << std::setw(10)
            << "parallel" << std::setw(8) << "ratio" << "\n";

  auto b12 = load_fixture("B_12_38");
  {
    std::vector<ScanRow> a, b;
    double s = seconds(reps, [&] { a = evasiveness_scan_serial(b12, 5); });
    double p = seconds(reps, [&] { b = evasiveness_scan(b12, 5); });
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i].deleted == b[i].deleted && a[i].acyclic == b[i].acyclic;
    row("evasiveness scan B_12_38", s, p, same);
  }
  {
    GroupPresentation trefoil{2, {{1, 1, -2, -2, -2}}};
    auto s4 = symmetric_group(4);
    GroupPresentation three{3, {{1, 2, -1, -2}, {2, 3, -2, -3}}};
    std::uint64_t a = 0, b = 0;
    double s = seconds(reps, [&] { a = count_homs_serial(three, s4) + count_homs_serial(trefoil, s4); });
    double p = seconds(reps, [&] {
      b = count_homs(three, s4) + count_homs(trefoil, s4);
    });
    row("hom count into S4", s, p, a == b);
  }
  auto s18 = load_fixture("S_18_125");
  auto b16 = load_fixture("B_16_91");
  {
    SearchOptions so;
    so.restarts = 40;
    so.parallel = false;
    SearchResult a, b;
    auto target = CollapseTarget::point();
    double s = seconds(reps, [&] { a = search_collapse(b16, target, so); });
    so.parallel = true;
    double p = seconds(reps, [&] { b = search_collapse(b16, target, so); });
    row("collapse restarts B_16_91", s, p, a.winner == b.winner);
  }
  {
    MorseSearchOptions mo;
    mo.tries = 200;
    mo.parallel = false;
    MorseSearchResult a, b;
    double s = seconds(reps, [&] { a = morse_search(s18, mo); });
    mo.parallel = true;
    double p = seconds(reps, [&] { b = morse_search(s18, mo); });
    row("Morse tries S_18_125", s, p, a.histogram == b.histogram && a.best_try == b.best_try);
  }
  {
    ReduceOptions ro;
    ro.budget = 2000;
    ReduceResult a, b;
    // reduce_many runs in parallel; the serial reference is the same loop over reduce.
    double s = seconds(reps, [&] {
      for (int r = 0; r < 4; ++r) {
        ReduceOptions one = ro;
        one.seed = ro.seed + r;
        auto x = reduce(s18, one);
        if (r == 0 || x.final.f_vector() < a.final.f_vector()) a = x;
      }
    });
    double p = seconds(reps, [&] { b = reduce_many(s18, ro, 4); });
    row("flip annealing x4 S_18_125", s, p, a.final.f_vector() == b.final.f_vector());
  }
  return 0;
}
