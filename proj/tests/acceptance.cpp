// One PASS/FAIL line per criterion. Soft rows never change the exit status.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "cplx/collapse.hpp"
#include "cplx/fixtures.hpp"
#include "cplx/flips.hpp"
#include "cplx/group.hpp"
#include "cplx/hierarchy.hpp"
#include "cplx/homology.hpp"
#include "cplx/io.hpp"
#include "cplx/knot.hpp"
#include "cplx/lc.hpp"
#include "cplx/manifold.hpp"
#include "cplx/morse.hpp"
#include "cplx/random.hpp"

using namespace cplx;

namespace {

// Time limits in seconds.
constexpr double kLoadLimit = 1.0;
constexpr double kReplayLimit = 1.0;
constexpr double kScanLimit = 60.0;
constexpr double kDecisionLimit = 600.0;

// Budgets.
constexpr std::int64_t kVdExtendedNodes = 5'000'000;
constexpr int kLcRestarts = 100;
constexpr int kMorseTries = 10'000;
constexpr int kFlipBudget = 10'000;
constexpr std::uint64_t kFlipSeed = 1;
constexpr int kRandomFlips = 1000;
constexpr int kSubdivisionFacetCap = 60;
constexpr int kProtectedBudget = 40'000;
constexpr int kProtectedRuns = 8;

// Hom counts into S3 recorded on first computation.
constexpr std::uint64_t kHomsS16 = 30;
constexpr std::uint64_t kHomsS18 = 84;

int hard_failures = 0;
int soft_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const std::string& id, const std::string& what, bool ok, const std::string& detail, bool soft = false) {
  std::printf("%s %-5s %-58s %s%s\n", ok ? "PASS" : "FAIL", id.c_str(), what.c_str(), detail.c_str(),
              soft ? " [soft]" : "");
  std::fflush(stdout);
  if (!ok) ++(soft ? soft_failures : hard_failures);
}

// Runs f, catching exceptions as failures.
void run(const std::string& id, const std::string& what, const std::function<bool(std::string&)>& f,
         bool soft = false) {
  std::string detail;
  bool ok = false;
  try {
    ok = f(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report(id, what, ok, detail, soft);
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

bool timed(double limit, double took, std::string& detail) {
  detail += " in " + secs(took);
  return took < limit;
}

std::vector<std::pair<std::string, MorseVector>> produced_for;

}  // namespace

// Kind first, then a move of that kind, so 1-4 moves do not dominate.
static const FlipMove& pick_balanced(const std::vector<FlipMove>& moves, Rng& rng) {
  std::vector<MoveKind> kinds;
  for (const auto& m : moves)
    if (std::find(kinds.begin(), kinds.end(), m.kind) == kinds.end()) kinds.push_back(m.kind);
  auto k = kinds[uniform_index(rng, kinds.size())];
  std::vector<const FlipMove*> of_kind;
  for (const auto& m : moves)
    if (m.kind == k) of_kind.push_back(&m);
  return *of_kind[uniform_index(rng, of_kind.size())];
}

int main() {
  // 1
  for (auto [name, f] : std::vector<std::pair<std::string, FVector>>{{"S_33_192", {33, 225, 384, 192}},
                                                                     {"S_16_92", {16, 108, 184, 92}},
                                                                     {"S_44_284", {44, 328, 568, 284}},
                                                                     {"S_18_125", {18, 143, 250, 125}}}) {
    run("1", "f-vector of " + name, [&](std::string& d) {
      auto t0 = std::chrono::steady_clock::now();
      auto got = load_fixture(name).f_vector();
      double took = seconds_since(t0);
      d = format_vector(got);
      return timed(kLoadLimit, took, d) && got == f;
    });
  }

  // 2
  for (auto [name, table, n] : std::vector<std::tuple<std::string, std::string, std::size_t>>{
           {"B_12_38", "b12_38_boundary", 18}, {"B_15_66", "b15_66_boundary", 26}}) {
    run("2", "boundary of " + name + " equals the listed triangles", [&](std::string& d) {
      auto want = SimplicialComplex::from_facets(bundled_table(table));
      auto got = boundary_complex(load_fixture(name));
      d = std::to_string(got.num_facets()) + " triangles";
      return want.num_facets() == n && got == want;
    });
  }

  // 3
  run("3a", "B_12_38 collapse certificate onto a point", [](std::string& d) {
    auto c = load_fixture("B_12_38");
    auto cert = bundled_certificate("b12_38_collapse");
    auto t0 = std::chrono::steady_clock::now();
    auto r = verify_certificate(c, cert);
    double took = seconds_since(t0);
    d = std::to_string(cert.steps.size()) + " steps";
    return timed(kReplayLimit, took, d) && r.is_collapse() && r.residue.num_vertices() == 1 &&
           r.residue.dim() == 0;
  });
  run("3b", "B_16_91 certificate onto boundary minus 1 9 14", [](std::string& d) {
    auto c = load_fixture("B_16_91");
    auto cert = bundled_certificate("b16_91_lc");
    auto t0 = std::chrono::steady_clock::now();
    auto r = verify_certificate(c, cert);
    double took = seconds_since(t0);
    d = std::to_string(cert.steps.size()) + " steps";
    auto target = remove_facet(boundary_complex(c), Simplex{1, 9, 14});
    return timed(kReplayLimit, took, d) && r.is_collapse() && r.residue == target;
  });
  Simplex b15_triangle;
  run("3c", "B_15_66 Morse certificate: vertex, edge 13 16, one triangle", [&](std::string& d) {
    auto c = load_fixture("B_15_66");
    auto cert = bundled_certificate("b15_66_morse");
    auto t0 = std::chrono::steady_clock::now();
    auto r = verify_certificate(c, cert);
    double took = seconds_since(t0);
    auto m = matching_from_certificate(cert);
    auto v = morse_vector(m, 3);
    d = "critical";
    for (const auto& s : r.critical) d += " [" + s.str() + "]";
    bool shape = r.ok && v == MorseVector{1, 1, 1, 0} && is_acyclic_matching(c, m);
    bool edge = false;
    auto bd = boundary_complex(c);
    bool on_boundary = true;
    for (const auto& s : r.critical) {
      edge = edge || s == Simplex{13, 16};
      if (s.dim() == 2) b15_triangle = s;
      on_boundary = on_boundary && bd.has_face(s);
    }
    return timed(kReplayLimit, took, d) && shape && edge && on_boundary;
  });
  run(
      "3d", "B_15_66 critical triangle is 2 5 8",
      [&](std::string& d) {
        bool face = load_fixture("B_15_66").has_face(Simplex{2, 5, 8});
        d = "certificate gives " + b15_triangle.str() + "; 2 5 8 is " + (face ? "" : "not ") + "a face of B_15_66";
        return b15_triangle == Simplex{2, 5, 8};
      },
      true);

  // 4
  run("4", "B_12_38 5-subset evasiveness scan", [](std::string& d) {
    auto c = load_fixture("B_12_38");
    auto t0 = std::chrono::steady_clock::now();
    auto rows = evasiveness_scan(c, 5);
    std::vector<std::vector<Vertex>> hits;
    for (const auto& r : rows)
      if (r.acyclic) hits.push_back(r.deleted);
    bool further = true;
    for (const auto& h : hits) {
      auto rest = deletion(c, h);
      for (Vertex v : rest.vertices()) further = further && !is_acyclic(deletion(rest, v));
    }
    double took = seconds_since(t0);
    d = std::to_string(rows.size()) + " subsets, " + std::to_string(hits.size()) + " acyclic";
    std::vector<std::vector<Vertex>> want{{4, 5, 8, 10, 11}, {4, 5, 10, 11, 12}, {4, 6, 7, 9, 12}};
    return timed(kScanLimit, took, d) && rows.size() == 792 && hits == want && further;
  });

  // 5
  auto ne_row = [](const std::string& name, Verdict want) {
    run("5", "non-evasiveness of " + name + " is " + to_string(want), [&](std::string& d) {
      auto c = load_fixture(name);
      auto t0 = std::chrono::steady_clock::now();
      auto r = is_nonevasive(c);
      double took = seconds_since(t0);
      d = to_string(r.verdict) + ", " + std::to_string(r.nodes) + " nodes";
      bool tree_ok = want != Verdict::True || (r.tree && verify_ne_tree(c, *r.tree).ok);
      return timed(kDecisionLimit, took, d) && r.verdict == want && tree_ok;
    });
  };
  ne_row("B_7_10", Verdict::True);
  ne_row("B_9_18", Verdict::True);
  ne_row("R_14_41", Verdict::True);
  ne_row("B_12_38", Verdict::False);
  run("5", "B_7_10 deletion order 6 5 4 3 2 1 0 is accepted", [](std::string& d) {
    auto c = load_fixture("B_7_10");
    auto t = ne_tree_from_order(c, {6, 5, 4, 3, 2, 1, 0});
    d = t ? std::to_string(t->node_count()) + " tree nodes" : "no tree";
    return t && verify_ne_tree(c, *t).ok;
  });
  run("5", "Rudin ball tree from order 3 4 5 12 13 1 7 9 14 ...", [](std::string& d) {
    auto c = load_fixture("R_14_41");
    std::vector<Vertex> order{3, 4, 5, 12, 13, 1, 7, 9, 14, 8, 11, 10, 2, 6};
    auto t = ne_tree_from_order(c, order);
    if (!t) {
      d = "no tree";
      return false;
    }
    auto chk = verify_ne_tree(c, *t);
    auto spine = t->spine();
    d = std::to_string(spine.size()) + " spine deletions";
    if (!chk.ok) d += ", " + chk.path + ": " + chk.reason;
    return chk.ok && std::equal(spine.begin(), spine.end(), order.begin());
  });

  // 6
  run("6", "B_7_10 is shellable", [](std::string& d) {
    auto c = load_fixture("B_7_10");
    auto r = is_shellable(c);
    d = to_string(r.verdict) + ", " + std::to_string(r.states) + " states";
    return r.verdict == Verdict::True && is_shelling_order(c, r.order);
  });
  run("6", "B_9_18 is not shellable (exhaustive)", [](std::string& d) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = is_shellable(load_fixture("B_9_18"));
    d = to_string(r.verdict) + ", " + std::to_string(r.states) + " states";
    return timed(kDecisionLimit, seconds_since(t0), d) && r.verdict == Verdict::False;
  });

  // 7
  run("7", "B_7_10 is not vertex decomposable", [](std::string& d) {
    auto r = is_vertex_decomposable(load_fixture("B_7_10"));
    d = to_string(r.verdict) + ", " + std::to_string(r.nodes) + " nodes";
    return r.verdict == Verdict::False;
  });
  for (const char* name : {"sd:B_9_18", "sd:S_13_56"}) {
    run(
        "7", std::string(name) + " is vertex decomposable (extended budget)",
        [&](std::string& d) {
          auto c = load_fixture(name);
          auto t0 = std::chrono::steady_clock::now();
          auto r = is_vertex_decomposable(c, {kVdExtendedNodes});
          d = to_string(r.verdict) + ", " + std::to_string(r.nodes) + " nodes";
          d += " in " + secs(seconds_since(t0));
          return r.verdict == Verdict::True && verify_vd_tree(c, *r.tree).ok;
        },
        true);
  }

  // 8
  LcOptions lc;
  lc.restarts = kLcRestarts;
  run("8", "S_16_92 is LC", [&](std::string& d) {
    auto c = load_fixture("S_16_92");
    auto r = check_lc_sphere(c, lc);
    if (!r.success) return false;
    d = "removed " + r.removed->str() + " after " + std::to_string(r.candidates_tried) + " candidates";
    return verify_certificate(r.collapsed, *r.certificate).is_collapse();
  });
  run("8", "B_16_91 is LC", [&](std::string& d) {
    auto c = load_fixture("B_16_91");
    auto r = check_lc_ball(c, lc);
    if (!r.success) return false;
    d = "triangle " + r.removed->str() + " after " + std::to_string(r.candidates_tried) + " candidates";
    auto rep = verify_certificate(c, *r.certificate);
    return rep.is_collapse() && rep.residue == remove_facet(boundary_complex(c), *r.removed);
  });
  run("8", "S_13_56 is LC", [&](std::string& d) {
    auto r = check_lc_sphere(load_fixture("S_13_56"), lc);
    if (!r.success) return false;
    d = "removed " + r.removed->str();
    return verify_certificate(r.collapsed, *r.certificate).is_collapse();
  });
  run(
      "8", "B_12_38 LC search fails on all boundary triangles",
      [&](std::string& d) {
        auto r = check_lc_ball(load_fixture("B_12_38"), lc);
        d = std::to_string(r.candidates_tried) + " triangles tried, evidence only";
        return !r.success;
      },
      true);

  // 9
  auto morse_row = [](const std::string& name, MorseVector goal) {
    run("9", name + " attains Morse vector " + format_vector(goal), [&](std::string& d) {
      auto c = load_fixture(name);
      MorseSearchOptions opt;
      opt.tries = kMorseTries;
      opt.goal = goal;
      auto r = morse_search(c, opt);
      for (const auto& [v, n] : r.histogram) produced_for.push_back({name, v});
      d = "try " + std::to_string(r.best_try) + " of " + std::to_string(r.tries_run);
      return r.goal_reached && r.best.vector == goal && verify_certificate(c, r.best.certificate).ok &&
             is_acyclic_matching(c, r.best.matching);
    });
  };
  morse_row("S_18_125", {1, 1, 1, 1});
  morse_row("B_12_38", {1, 0, 0, 0});

  // 10
  run("10", "S_18_125 flips to the boundary of the 4-simplex", [](std::string& d) {
    auto c = load_fixture("S_18_125");
    ReduceOptions opt;
    opt.seed = kFlipSeed;
    opt.budget = kFlipBudget;
    auto r = reduce(c, opt);
    d = "seed " + std::to_string(kFlipSeed) + ", " + std::to_string(r.log.moves.size()) + " moves, " +
        std::to_string(r.steps_run) + " steps";
    if (!r.reached_boundary_of_4_simplex()) return false;
    auto text = emit_flp(r.log);
    auto again = replay(c, parse_flp(text));
    return again == r.final && emit_cplx(again) == emit_cplx(r.final) && emit_flp(parse_flp(text)) == text;
  });
  run(
      "10", "S_33_192 with knot edges protected reaches <= 18 vertices",
      [](std::string& d) {
        auto c = load_fixture("S_33_192");
        ReduceOptions opt;
        opt.budget = kProtectedBudget;
        opt.protected_edges = make_edge_set(parse_simplex_list("1 2,2 3,1 3"));
        auto t0 = std::chrono::steady_clock::now();
        auto r = reduce_many(c, opt, kProtectedRuns);
        auto f = r.final.f_vector();
        d = format_vector(f) + " seed " + std::to_string(r.seed) + " in " + secs(seconds_since(t0));
        bool edges = true;
        for (const auto& e : opt.protected_edges) edges = edges && r.final.has_face(Simplex{e.first, e.second});
        bool sphere = manifold_check(r.final).kind == ManifoldClass::Sphere3;
        if (f[0] > 16) d += " (16 not reached)";
        return edges && sphere && f[0] <= 18 && replay(c, r.log, opt.protected_edges) == r.final;
      },
      true);

  // 11
  auto s3 = symmetric_group(3);
  auto knot_row = [&](const std::string& what, const SimplicialComplex& s, const std::string& cycle,
                      const std::function<bool(std::uint64_t)>& want) {
    run("11", what, [&](std::string& d) {
      auto t0 = std::chrono::steady_clock::now();
      auto a = analyze_knot(s, parse_cycle(cycle), s3);
      d = std::to_string(a.homs) + " homs, " + std::to_string(a.raw_generators) + " -> " +
          std::to_string(a.simplified.generators) + " generators in " + secs(seconds_since(t0));
      return want(a.homs);
    });
  };
  auto d4 = boundary_complex(SimplicialComplex::simplex({0, 1, 2, 3, 4}));
  knot_row("unknot 0 1 2 in the boundary of the 4-simplex: 6 homs to S3", d4, "0 1 2",
           [](std::uint64_t n) { return n == 6; });
  knot_row("trefoil 1 2 3 in S_13_56: 12 homs to S3", load_fixture("S_13_56"), "1 2 3",
           [](std::uint64_t n) { return n == 12; });
  knot_row("double trefoil 1 2 3 in S_16_92: more than 6 homs", load_fixture("S_16_92"), "1 2 3",
           [](std::uint64_t n) { return n > 6 && n == kHomsS16; });
  knot_row("triple trefoil 1 2 3 in S_18_125: more than 6 homs", load_fixture("S_18_125"), "1 2 3",
           [](std::uint64_t n) { return n > 6 && n == kHomsS18; });

  // 12
  run("12", "Morse inequalities on every produced matching", [](std::string& d) {
    std::size_t checked = 0;
    bool ok = true;
    for (const auto& name : fixture_names()) {
      auto c = load_fixture(name);
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto r = random_discrete_morse(c, seed);
        ok = ok && satisfies_morse_inequalities(c, r.vector) && is_acyclic_matching(c, r.matching);
        ++checked;
      }
    }
    std::map<std::string, SimplicialComplex> cache;
    for (const auto& [name, v] : produced_for) {
      if (!cache.count(name)) cache.emplace(name, load_fixture(name));
      ok = ok && satisfies_morse_inequalities(cache.at(name), v);
      ++checked;
    }
    d = std::to_string(checked) + " vectors";
    return ok;
  });
  run("12", "boundary of boundary is zero on every fixture", [](std::string& d) {
    int products = 0;
    for (const auto& name : fixture_names()) {
      auto c = load_fixture(name);
      for (int k = 1; k <= c.dim(); ++k) {
        if (!is_zero(multiply(boundary_matrix(c, k - 1).m, boundary_matrix(c, k).m))) return false;
        ++products;
      }
    }
    d = std::to_string(products) + " products";
    return true;
  });
  run("12", "homology unchanged by subdivision (fixtures <= 60 facets)", [](std::string& d) {
    int n = 0;
    for (const auto& info : fixture_manifest()) {
      if (info.f_vector.back() > kSubdivisionFacetCap) continue;
      auto c = load_fixture(info.name);
      if (!(reduced_homology(barycentric_subdivision(c)) == reduced_homology(c))) {
        d = info.name;
        return false;
      }
      ++n;
    }
    d = std::to_string(n) + " fixtures";
    return true;
  });
  run("12", "1000 random flips keep every bundled sphere a sphere", [](std::string& d) {
    Rng rng(2024);
    int spheres = 0;
    for (const auto& info : fixture_manifest()) {
      if (info.kind != "sphere") continue;
      auto s = load_fixture(info.name);
      for (int i = 0; i < kRandomFlips; ++i) {
        auto moves = legal_moves(s);
        s = apply_move(s, pick_balanced(moves, rng));
        if (manifold_check(s).kind != ManifoldClass::Sphere3) {
          d = info.name + " after " + std::to_string(i + 1) + " flips";
          return false;
        }
      }
      ++spheres;
    }
    d = std::to_string(spheres) + " spheres";
    return true;
  });

  std::printf("%d hard failure(s), %d soft failure(s)\n", hard_failures, soft_failures);
  return hard_failures == 0 ? 0 : 1;
}
