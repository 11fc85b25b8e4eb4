// Command line front end. Exit status: 0 true/verified, 1 false/rejected,
// 2 inconclusive, 3 bad input.
#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

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
#include "cplx/report.hpp"

using namespace cplx;

namespace {

enum Exit { kTrue = 0, kFalse = 1, kInconclusive = 2, kBadInput = 3 };

int exit_for(Verdict v) { return v == Verdict::True ? kTrue : v == Verdict::False ? kFalse : kInconclusive; }

CollapseCertificate load_certificate(const std::string& path_or_name) {
  if (std::filesystem::exists(path_or_name)) return read_clps(path_or_name);
  return bundled_certificate(path_or_name);
}

MorseVector parse_vector(const std::string& s) {
  MorseVector v;
  std::string t = s;
  for (char& ch : t)
    if (ch == ',' || ch == '(' || ch == ')') ch = ' ';
  std::istringstream in(t);
  std::int64_t x;
  while (in >> x) v.push_back(x);
  return v;
}

void maybe_write(const std::string& path, const std::string& text) {
  if (!path.empty()) {
    write_text(path, text);
    std::cout << "wrote " << path << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite simplicial complexes: homology, collapses, decision trees, flips, knot groups."};
  app.require_subcommand(1);
  int code = kTrue;

  std::string file, second, out, target = "point", goal, protect, cycle, group = "S3", config, final_out;
  std::uint64_t seed = 1;
  int restarts = 100, tries = 1000, k = 5, budget = 10'000, runs = 1;
  std::int64_t nodes = SearchBudget{}.nodes, states = 50'000'000;
  bool lookahead = false, no_insert = false, vd = false, fast = false, close = false, serial = false;

  auto* homology = app.add_subcommand("homology", "Reduced integral homology, one line per dimension");
  homology->add_option("file", file, "complex (.cplx path or fixture name)")->required();
  homology->callback([&] {
    auto c = load_complex(file);
    auto h = reduced_homology(c);
    for (int d = -1; d <= std::max(h.max_dim(), c.dim()); ++d) std::cout << "H~" << d << " = " << group_str(h.at(d)) << "\n";
  });

  auto* collapse = app.add_subcommand("collapse", "Search for a collapse onto a target");
  collapse->add_option("file", file)->required();
  collapse->add_option("--target", target, "point, empty, or a .cplx file");
  collapse->add_option("--seed", seed);
  collapse->add_option("--restarts", restarts);
  collapse->add_flag("--lookahead", lookahead, "prefer pairs that free the most faces");
  collapse->add_flag("--serial", serial);
  collapse->add_option("--out", out, "write the certificate");
  collapse->callback([&] {
    auto c = load_complex(file);
    CollapseTarget t = target == "point" ? CollapseTarget::point()
                       : target == "empty" ? CollapseTarget::empty()
                                           : CollapseTarget::subcomplex(load_complex(target));
    SearchOptions so{seed, restarts, lookahead ? CollapseStrategy::Lookahead : CollapseStrategy::Uniform, !serial};
    auto res = search_collapse(c, t, so);
    if (res.certificate && verify_certificate(c, *res.certificate).ok) {
      std::cout << "verified: collapses onto " << t.str() << " (restart " << *res.winner << ", seed " << res.winner_seed
                << ", " << res.certificate->steps.size() << " steps)\n";
      maybe_write(out, emit_clps(*res.certificate));
    } else {
      std::cout << "inconclusive after " << res.restarts_run << " restarts\n";
      code = kInconclusive;
    }
  });

  auto* verify = app.add_subcommand("verify", "Replay a .clps certificate");
  verify->add_option("file", file)->required();
  verify->add_option("certificate", second, ".clps path or bundled certificate name")->required();
  verify->callback([&] {
    auto c = load_complex(file);
    auto cert = load_certificate(second);
    auto r = verify_certificate(c, cert);
    if (!r.ok) {
      std::cout << "rejected";
      if (r.failed_step) std::cout << " at step " << *r.failed_step + 1;
      std::cout << ": " << r.reason << "\n";
      code = kFalse;
      return;
    }
    std::cout << "verified: " << cert.steps.size() << " steps onto " << cert.target.str() << "\n";
    if (!r.critical.empty()) {
      std::cout << "critical:";
      for (const auto& s : r.critical) std::cout << " [" << s.str() << "]";
      std::cout << "\n";
    }
  });

  auto* morse = app.add_subcommand("morse", "Random discrete Morse search");
  morse->add_option("file", file)->required();
  morse->add_option("--tries", tries);
  morse->add_option("--seed", seed);
  morse->add_option("--goal", goal, "stop at this vector, e.g. 1,1,1,1");
  morse->add_flag("--serial", serial);
  morse->add_option("--out", out, "write the best run as a certificate");
  morse->callback([&] {
    auto c = load_complex(file);
    MorseSearchOptions mo;
    mo.seed = seed;
    mo.tries = tries;
    mo.parallel = !serial;
    if (!goal.empty()) mo.goal = parse_vector(goal);
    auto res = morse_search(c, mo);
    for (const auto& [v, n] : res.histogram) std::cout << format_vector(v) << "  x" << n << "\n";
    std::cout << "best " << format_vector(res.best.vector) << " at try " << res.best_try << " of " << res.tries_run << "\n";
    maybe_write(out, emit_clps(res.best.certificate));
    if (mo.goal && !res.goal_reached) code = kInconclusive;
  });

  auto* lc = app.add_subcommand("check-lc", "Local constructibility of a 3-ball or 3-sphere");
  lc->add_option("file", file)->required();
  lc->add_option("--seed", seed);
  lc->add_option("--restarts", restarts, "per candidate");
  lc->add_flag("--serial", serial);
  lc->add_option("--out", out, "write the certificate");
  lc->callback([&] {
    auto c = load_complex(file);
    LcOptions lo{seed, restarts, CollapseStrategy::Uniform, !serial};
    auto kind = manifold_check(c).kind;
    if (kind == ManifoldClass::Other) {
      std::cout << "not a 3-ball or 3-sphere\n";
      code = kBadInput;
      return;
    }
    auto ev = kind == ManifoldClass::Sphere3 ? check_lc_sphere(c, lo) : check_lc_ball(c, lo);
    if (ev.success) {
      std::cout << "verified: LC, removed " << (ev.removed ? ev.removed->str() : "nothing") << " after "
                << ev.candidates_tried << " candidates\n";
      if (ev.certificate) maybe_write(out, emit_clps(*ev.certificate));
    } else {
      std::cout << "inconclusive after " << ev.candidates_tried << " candidates\n";
      code = kInconclusive;
    }
  });

  auto decision = [&](const char* name, const char* help, bool is_vd) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("file", file)->required();
    cmd->add_option("--budget", nodes, "node budget");
    cmd->add_option("--out", out, "write the decision tree");
    cmd->callback([&, is_vd] {
      auto c = load_complex(file);
      auto res = is_vd ? is_vertex_decomposable(c, {nodes}) : is_nonevasive(c, {nodes});
      std::cout << to_string(res.verdict) << " (" << res.nodes << " nodes)\n";
      if (res.tree) maybe_write(out, emit_tree(*res.tree));
      code = exit_for(res.verdict);
    });
  };
  decision("check-ne", "Non-evasiveness by decision tree search", false);
  decision("check-vd", "Vertex decomposability by shedding search", true);

  auto* shell = app.add_subcommand("check-shellable", "Shellability by facet order search");
  shell->add_option("file", file)->required();
  shell->add_option("--budget", states, "state budget");
  shell->callback([&] {
    auto res = is_shellable(load_complex(file), states);
    std::cout << to_string(res.verdict) << " (" << res.states << " states)\n";
    for (const auto& f : res.order) std::cout << f.str() << "\n";
    code = exit_for(res.verdict);
  });

  auto* scan = app.add_subcommand("scan-evasive", "Acyclicity after deleting every k-subset of vertices");
  scan->add_option("file", file)->required();
  scan->add_option("-k", k);
  scan->add_flag("--serial", serial);
  scan->callback([&] {
    auto c = load_complex(file);
    auto rows = serial ? evasiveness_scan_serial(c, k) : evasiveness_scan(c, k);
    int n = 0;
    for (const auto& r : rows)
      if (r.acyclic) {
        ++n;
        for (std::size_t i = 0; i < r.deleted.size(); ++i) std::cout << (i ? " " : "") << r.deleted[i];
        std::cout << "\n";
      }
    std::cout << n << " of " << rows.size() << " deletions acyclic\n";
  });

  auto* vt = app.add_subcommand("verify-tree", "Check a non-evasiveness or VD decision tree");
  vt->add_option("file", file)->required();
  vt->add_option("tree", second)->required();
  vt->add_flag("--vd", vd, "check as a vertex decomposition");
  vt->callback([&] {
    auto c = load_complex(file);
    auto t = parse_tree(read_text(second));
    auto r = vd ? verify_vd_tree(c, t) : verify_ne_tree(c, t);
    if (r.ok) {
      std::cout << "verified\n";
    } else {
      std::cout << "rejected at '" << r.path << "': " << r.reason << "\n";
      code = kFalse;
    }
  });

  auto* flip = app.add_subcommand("flip-reduce", "Simulated annealing with bistellar flips");
  flip->add_option("file", file)->required();
  flip->add_option("--protect", protect, "edges that must survive, e.g. \"1 2,2 3,1 3\"");
  flip->add_flag("--no-insert", no_insert, "forbid 1-4 moves");
  flip->add_option("--seed", seed);
  flip->add_option("--budget", budget, "steps per run");
  flip->add_option("--runs", runs, "independent runs with seeds seed, seed+1, ...");
  flip->add_option("--config", config, "annealing parameters as JSON");
  flip->add_option("--out", out, "write the move log");
  flip->add_option("--final", final_out, "write the final complex");
  flip->callback([&] {
    auto s = load_complex(file);
    ReduceOptions ro;
    ro.seed = seed;
    ro.budget = budget;
    ro.allow_1_4 = !no_insert;
    if (!protect.empty()) ro.protected_edges = make_edge_set(parse_simplex_list(protect));
    if (!config.empty()) ro.anneal = anneal_config_from_json(read_text(config));
    auto res = reduce_many(s, ro, runs);
    std::cout << "f " << format_vector(s.f_vector()) << " -> " << format_vector(res.final.f_vector()) << " in "
              << res.log.moves.size() << " moves (seed " << res.seed << ")\n";
    if (res.reached_boundary_of_4_simplex()) std::cout << "reached the boundary of the 4-simplex\n";
    maybe_write(out, emit_flp(res.log));
    if (!final_out.empty()) write_cplx(final_out, res.final);
  });

  auto* freplay = app.add_subcommand("flip-replay", "Replay a .flp move log");
  freplay->add_option("file", file)->required();
  freplay->add_option("log", second)->required();
  freplay->add_option("--protect", protect);
  freplay->callback([&] {
    auto s = load_complex(file);
    EdgeSet p = protect.empty() ? EdgeSet{} : make_edge_set(parse_simplex_list(protect));
    auto log = parse_flp(read_text(second));
    auto fin = replay(s, log, p);
    std::cout << "verified: " << log.moves.size() << " moves, final f " << format_vector(fin.f_vector()) << "\n";
  });

  auto* knot = app.add_subcommand("knot-homs", "Homomorphisms from a knot group to a finite group");
  knot->add_option("file", file)->required();
  knot->add_option("--cycle", cycle, "knot as a vertex cycle, e.g. \"1 2 3\"")->required();
  knot->add_option("--group", group, "S<n> or C<n>");
  knot->add_option("--seed", seed);
  knot->callback([&] {
    auto s = load_complex(file);
    auto a = analyze_knot(s, parse_cycle(cycle), group_by_name(group), seed);
    std::cout << "complement f " << format_vector(a.complement_f) << ", spine f " << format_vector(a.spine_f) << "\n";
    std::cout << "presentation " << a.raw_generators << " generators, " << a.raw_relators << " relators -> "
              << a.simplified.str() << "\n";
    std::cout << "H1 = " << group_str(a.h1) << "\n";
    std::cout << "homs to " << group << ": " << a.homs << " (cyclic baseline " << a.cyclic_baseline << ")\n";
  });

  auto* span = app.add_subcommand("spanning-edges", "Interior edges of a 3-ball with both ends on the boundary");
  span->add_option("file", file)->required();
  span->add_flag("--close", close, "also close each edge by a shortest boundary path");
  span->callback([&] {
    auto b = load_complex(file);
    for (const auto& e : spanning_edges(b)) {
      std::cout << e.first << " " << e.second;
      if (close) std::cout << "  " << close_cycle(b, e).str();
      std::cout << "\n";
    }
  });

  auto* list = app.add_subcommand("list-fixtures", "Bundled complexes");
  list->callback([&] {
    for (const auto& f : fixture_manifest())
      std::cout << f.name << "  " << f.kind << "  f=" << format_vector(f.f_vector) << "  " << f.recipe
                << (f.reconstructed ? "  (reconstructed)" : "") << "\n";
  });

  auto* exp = app.add_subcommand("export", "Write a fixture as .cplx");
  exp->add_option("name", file)->required();
  exp->add_option("out", out)->required();
  exp->callback([&] {
    write_cplx(out, load_fixture(file), file);
    std::cout << "wrote " << out << "\n";
  });

  auto* all = app.add_subcommand("verify-all", "Check every fixture and bundled certificate");
  all->add_flag("--fast", fast, "skip searches");
  all->add_option("--seed", seed);
  all->add_option("--machine", out, "also write tab separated rows");
  all->callback([&] {
    ReportOptions ro;
    ro.fast = fast;
    ro.seed = seed;
    auto rep = verify_all(ro);
    std::cout << rep.table();
    maybe_write(out, rep.machine());
    if (!rep.ok()) {
      for (const auto& r : rep.rows)
        if (r.hard && r.status == RowStatus::Mismatch)
          std::cout << "FAIL " << r.fixture << " " << r.property << ": expected " << r.expected << ", " << r.detail << "\n";
      code = kFalse;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return code;
}
