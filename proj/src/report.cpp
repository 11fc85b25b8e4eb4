#include "cplx/report.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "cplx/collapse.hpp"
#include "cplx/fixtures.hpp"
#include "cplx/group.hpp"
#include "cplx/hierarchy.hpp"
#include "cplx/io.hpp"
#include "cplx/knot.hpp"
#include "cplx/lc.hpp"
#include "cplx/manifold.hpp"

namespace cplx {

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Verified: return "verified";
    case RowStatus::Evidence: return "evidence-only";
    case RowStatus::Cited: return "cited";
    case RowStatus::Inconclusive: return "inconclusive";
    case RowStatus::Mismatch: return "MISMATCH";
    case RowStatus::Skipped: return "skipped";
  }
  return "?";
}

bool Report::ok() const {
  for (const auto& r : rows)
    if (r.hard && r.status == RowStatus::Mismatch) return false;
  return true;
}

std::string Report::machine() const {
  std::ostringstream out;
  out << "fixture\tproperty\texpected\tstatus\tseconds\tdetail\n";
  for (const auto& r : rows)
    out << r.fixture << '\t' << r.property << '\t' << r.expected << '\t' << to_string(r.status) << '\t' << std::fixed
        << std::setprecision(3) << r.seconds << '\t' << r.detail << '\n';
  return out.str();
}

std::string Report::table() const {
  std::vector<std::string> fixtures;
  std::map<std::string, std::vector<const ReportRow*>> by;
  for (const auto& r : rows) {
    if (!by.count(r.fixture)) fixtures.push_back(r.fixture);
    by[r.fixture].push_back(&r);
  }
  std::ostringstream out;
  for (const auto& f : fixtures) {
    out << std::left << std::setw(12) << f;
    bool first = true;
    for (const ReportRow* r : by[f]) {
      out << (first ? "" : "; ") << r->property;
      if (!r->expected.empty()) out << "=" << r->expected;
      out << " [" << to_string(r->status) << "]";
      first = false;
    }
    out << '\n';
  }
  out << (ok() ? "all hard rows pass\n" : "HARD MISMATCH\n");
  return out.str();
}

namespace {

struct Task {
  ReportRow row;
  bool slow = false;
  std::function<void(ReportRow&)> run;
};

std::string yesno(bool b) { return b ? "true" : "false"; }

void verdict_row(ReportRow& r, Verdict v, bool expected, const std::string& what) {
  if (v == Verdict::Inconclusive) {
    r.status = RowStatus::Inconclusive;
    r.detail = what + " budget exhausted";
  } else if ((v == Verdict::True) == expected) {
    r.status = RowStatus::Verified;
    r.detail = what;
  } else {
    // A definite answer against the expectation fails the report.
    r.status = RowStatus::Mismatch;
    r.hard = true;
    r.detail = what + " returned " + to_string(v);
  }
}

void add_claim_tasks(std::vector<Task>& tasks, const FixtureInfo& info, const ReportOptions& opt) {
  const std::string& n = info.name;
  for (const auto& [prop, claim] : info.claims) {
    Task t;
    t.row = {n, prop, yesno(claim), RowStatus::Cited, "", false, 0};
    t.slow = true;
    std::uint64_t seed = opt.seed;
    if (prop == "collapsible" && claim) {
      t.run = [n, seed](ReportRow& r) {
        SearchOptions so;
        so.seed = seed;
        so.restarts = 200;
        auto res = search_collapse(load_fixture(n), CollapseTarget::point(), so);
        bool ok = res.certificate && verify_certificate(load_fixture(n), *res.certificate).is_collapse();
        r.status = ok ? RowStatus::Verified : RowStatus::Inconclusive;
        r.detail = ok ? "certificate from restart " + std::to_string(*res.winner) : "no collapse in 200 restarts";
      };
    } else if (prop == "collapsible" && !claim) {
      t.run = [n, seed](ReportRow& r) {
        SearchOptions so;
        so.seed = seed;
        so.restarts = 20;
        auto res = search_collapse(load_fixture(n), CollapseTarget::point(), so);
        if (res.certificate) {
          r.status = RowStatus::Mismatch;
          r.hard = true;
          r.detail = "search found a collapse";
          return;
        }
        r.status = RowStatus::Evidence;
        r.detail = "cited; no collapse in 20 restarts";
      };
    } else if (prop == "nonevasive" || prop == "evasive") {
      bool expect_ne = prop == "nonevasive" ? claim : !claim;
      t.run = [n, expect_ne](ReportRow& r) {
        auto res = is_nonevasive(load_fixture(n));
        verdict_row(r, res.verdict, expect_ne, "decision tree search, " + std::to_string(res.nodes) + " nodes");
        if (res.tree && !verify_ne_tree(load_fixture(n), *res.tree).ok) r.status = RowStatus::Mismatch;
      };
    } else if (prop == "vertex_decomposable") {
      t.run = [n, claim](ReportRow& r) {
        auto res = is_vertex_decomposable(load_fixture(n));
        verdict_row(r, res.verdict, claim, "shedding search, " + std::to_string(res.nodes) + " nodes");
        if (res.tree && !verify_vd_tree(load_fixture(n), *res.tree).ok) r.status = RowStatus::Mismatch;
      };
    } else if (prop == "shellable") {
      t.run = [n, claim](ReportRow& r) {
        auto res = is_shellable(load_fixture(n), 20'000'000);
        verdict_row(r, res.verdict, claim, "facet order search, " + std::to_string(res.states) + " states");
        if (res.verdict == Verdict::True && !is_shelling_order(load_fixture(n), res.order)) r.status = RowStatus::Mismatch;
      };
    } else if (prop == "lc" && claim) {
      bool sphere = info.kind == "sphere";
      t.run = [n, seed, sphere](ReportRow& r) {
        LcOptions lo;
        lo.seed = seed;
        lo.restarts = 100;
        auto c = load_fixture(n);
        auto ev = sphere ? check_lc_sphere(c, lo) : check_lc_ball(c, lo);
        if (ev.success && ev.certificate && verify_certificate(ev.collapsed, *ev.certificate).ok) {
          r.status = RowStatus::Verified;
          r.detail = "removed " + ev.removed->str();
        } else {
          r.status = RowStatus::Inconclusive;
          r.detail = std::to_string(ev.candidates_tried) + " candidates tried";
        }
      };
    } else if ((prop == "lc" || prop == "constructible") && !claim && info.trefoils > 0) {
      // Knot-theoretic obstruction: report the hom count of the knot group.
      t.run = [n](ReportRow& r) {
        auto s = load_fixture(n);
        if (manifold_check(s).kind != ManifoldClass::Sphere3) {
          r.status = RowStatus::Cited;
          r.detail = "knot-theoretic; no computation";
          return;
        }
        auto a = analyze_knot(s, KnotCycle{{1, 2, 3}}, symmetric_group(3));
        r.status = a.nontrivial_witness() ? RowStatus::Evidence : RowStatus::Cited;
        r.detail = "cited; knot 1-2-3 has " + std::to_string(a.homs) + " homs to S3 (unknot: 6)";
      };
    } else {
      t.slow = false;
      t.row.detail = "no computation";
    }
    tasks.push_back(std::move(t));
  }
}

}  // namespace

Report verify_all(const ReportOptions& opt) {
  std::vector<Task> tasks;
  {
    Task t;
    t.row = {"data", "checksums", "match", RowStatus::Skipped, "", true, 0};
    t.run = [](ReportRow& r) {
      std::string bad;
      for (const auto& c : verify_checksums())
        if (!c.ok()) bad += " " + c.path;
      r.status = bad.empty() ? RowStatus::Verified : RowStatus::Mismatch;
      r.detail = bad.empty() ? "all bundled files match" : "changed:" + bad;
    };
    tasks.push_back(std::move(t));
  }
  for (const auto& info : fixture_manifest()) {
    const std::string n = info.name;
    Task f;
    f.row = {n, "f-vector", format_vector(info.f_vector), RowStatus::Skipped, "", true, 0};
    f.run = [n, expected = info.f_vector](ReportRow& r) {
      auto got = load_fixture(n).f_vector();
      r.status = got == expected ? RowStatus::Verified : RowStatus::Mismatch;
      r.detail = "computed " + format_vector(got);
    };
    tasks.push_back(std::move(f));
    Task m;
    m.row = {n, "type", info.kind, RowStatus::Skipped, "", true, 0};
    m.run = [n, kind = info.kind](ReportRow& r) {
      auto rep = manifold_check(load_fixture(n));
      std::string got = rep.kind == ManifoldClass::Ball3 ? "ball" : rep.kind == ManifoldClass::Sphere3 ? "sphere" : "other";
      r.status = got == kind ? RowStatus::Verified : RowStatus::Mismatch;
      r.detail = got == kind ? "manifold check" : rep.diagnostics;
    };
    tasks.push_back(std::move(m));
    add_claim_tasks(tasks, info, opt);
  }
  for (const auto& [fixture, cert] : std::vector<std::pair<std::string, std::string>>{
           {"B_12_38", "b12_38_collapse"}, {"B_16_91", "b16_91_lc"}, {"B_15_66", "b15_66_morse"}}) {
    Task t;
    t.row = {fixture, "certificate " + cert, "replays", RowStatus::Skipped, "", true, 0};
    t.run = [fixture, cert](ReportRow& r) {
      auto v = verify_certificate(load_fixture(fixture), bundled_certificate(cert));
      r.status = v.ok ? RowStatus::Verified : RowStatus::Mismatch;
      std::string crit;
      for (const auto& s : v.critical) crit += (crit.empty() ? "" : ", ") + s.str();
      r.detail = v.ok ? (crit.empty() ? "collapse" : "critical " + crit) : v.reason;
    };
    tasks.push_back(std::move(t));
  }

  std::vector<ReportRow> rows(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) if (opt.parallel)
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    ReportRow r = tasks[i].row;
    if (!tasks[i].run) {
      // Claim without a computation.
    } else if (opt.fast && tasks[i].slow) {
      r.status = RowStatus::Skipped;
      r.detail = "skipped by --fast";
    } else {
      auto start = std::chrono::steady_clock::now();
      try {
        tasks[i].run(r);
      } catch (const std::exception& e) {
        r.status = RowStatus::Mismatch;
        r.detail = e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    rows[i] = std::move(r);
  }
  return Report{std::move(rows)};
}

}  // namespace cplx
