#include <doctest.h>

#include <algorithm>

#include "cplx/collapse.hpp"
#include "cplx/fixtures.hpp"
#include "cplx/hierarchy.hpp"
#include "cplx/homology.hpp"
#include "generators.hpp"

using namespace cplx;

namespace {

SimplicialComplex C(const std::vector<std::vector<Vertex>>& f) { return SimplicialComplex::from_facets(f); }

ConstructibilityTree shelled(const SimplicialComplex& c) {
  auto r = is_shellable(c);
  REQUIRE(r.verdict == Verdict::True);
  return constructibility_from_shelling(r.order);
}

}  // namespace

TEST_CASE("non-evasiveness base cases") {
  CHECK(is_nonevasive(SimplicialComplex::simplex({0, 1, 2, 3})).verdict == Verdict::True);
  CHECK(is_nonevasive(SimplicialComplex::simplex({4})).verdict == Verdict::True);
  CHECK(is_nonevasive(C({{1}, {2}})).verdict == Verdict::False);
  CHECK(is_nonevasive(gen::boundary_of_simplex(2)).verdict == Verdict::False);
  CHECK(is_nonevasive(SimplicialComplex::empty_simplex()).verdict == Verdict::False);
  // a path is non-evasive
  auto path = C({{1, 2}, {2, 3}, {3, 4}});
  auto r = is_nonevasive(path);
  REQUIRE(r.verdict == Verdict::True);
  CHECK(verify_ne_tree(path, *r.tree).ok);
}

TEST_CASE("non-evasive fixtures") {
  for (const char* name : {"B_7_10", "B_9_18", "R_14_41"}) {
    auto c = load_fixture(name);
    auto r = is_nonevasive(c);
    REQUIRE_MESSAGE(r.verdict == Verdict::True, name);
    CHECK_MESSAGE(verify_ne_tree(c, *r.tree).ok, name);
    // NE implies collapsible
    SearchOptions opt;
    opt.restarts = 50;
    CHECK_MESSAGE(search_collapse(c, CollapseTarget::point(), opt).certificate.has_value(), name);
  }
  CHECK(is_nonevasive(load_fixture("B_12_38")).verdict == Verdict::False);
}

TEST_CASE("deletion orders") {
  auto b7 = load_fixture("B_7_10");
  auto t7 = ne_tree_from_order(b7, {6, 5, 4, 3, 2, 1, 0});
  REQUIRE(t7.has_value());
  CHECK(verify_ne_tree(b7, *t7).ok);
  auto b9 = load_fixture("B_9_18");
  // after 1 0 6 3 7 the rest is the cone 2 * (4 5 8); 2 is interior and its link a circle
  CHECK_FALSE(ne_tree_from_order(b9, {1, 0, 6, 3, 7, 2, 4, 5, 8}).has_value());
  auto t9 = ne_tree_from_order(b9, {1, 0, 6, 3, 7, 4, 2, 5, 8});
  REQUIRE(t9.has_value());
  CHECK(verify_ne_tree(b9, *t9).ok);
  auto r = load_fixture("R_14_41");
  std::vector<Vertex> order{3, 4, 5, 12, 13, 1, 7, 9, 14, 8, 11, 10, 2, 6};
  auto tr = ne_tree_from_order(r, order);
  REQUIRE(tr.has_value());
  CHECK(verify_ne_tree(r, *tr).ok);
  auto spine = tr->spine();
  CHECK(std::equal(spine.begin(), spine.end(), order.begin()));
  // B_12_38 is evasive, so no order works
  CHECK_FALSE(ne_tree_from_order(load_fixture("B_12_38"), {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}).has_value());
}

TEST_CASE("tree checks locate failures") {
  // interior vertex of a 3-ball: its link is a 2-sphere
  auto ball = cone(9, gen::boundary_of_simplex(3));
  auto bad = DecisionTree::node(9, DecisionTree::node(0, DecisionTree::simplex_leaf(), DecisionTree::simplex_leaf()),
                                DecisionTree::simplex_leaf());
  auto chk = verify_ne_tree(ball, bad);
  CHECK_FALSE(chk.ok);
  CHECK(chk.path.starts_with("link 9"));

  auto b7 = load_fixture("B_7_10");
  auto t = *is_nonevasive(b7).tree;
  auto text = emit_tree(t);
  auto back = parse_tree(text);
  CHECK(emit_tree(back) == text);
  CHECK(verify_ne_tree(b7, back).ok);
  // replace the root vertex by one that is absent
  auto tampered = t;
  tampered.vertex = 42;
  auto tc = verify_ne_tree(b7, tampered);
  CHECK_FALSE(tc.ok);
  CHECK(tc.path.empty());
  CHECK_THROWS(parse_tree("v 1\n  simplex\n"));
  CHECK_THROWS(parse_tree("v x\n"));
}

TEST_CASE("vertex decomposability") {
  auto disk = C({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {2, 3, 6}});
  auto r = is_vertex_decomposable(disk);
  REQUIRE(r.verdict == Verdict::True);
  CHECK(verify_vd_tree(disk, *r.tree).ok);
  CHECK(verify_ne_tree(disk, *r.tree).ok);
  CHECK(is_vertex_decomposable(load_fixture("B_7_10")).verdict == Verdict::False);
  auto s8 = load_fixture("S_8_20");
  auto r8 = is_vertex_decomposable(s8);
  REQUIRE(r8.verdict == Verdict::True);
  CHECK(verify_vd_tree(s8, *r8.tree).ok);
  CHECK(is_vertex_decomposable(C({{1, 2, 3}, {3, 4}})).verdict == Verdict::False);
  CHECK(is_vertex_decomposable(C({{1}, {2}, {3}})).verdict == Verdict::True);
}

TEST_CASE("shedding vertices of balls lie on the boundary") {
  auto sd = load_fixture("sd:B_7_10");
  auto r = is_vertex_decomposable(sd);
  REQUIRE(r.verdict == Verdict::True);
  CHECK(verify_vd_tree(sd, *r.tree).ok);
  // walk the deletion spine: every removed vertex is on the boundary of the current ball
  auto cur = sd;
  for (Vertex v : r.tree->spine()) {
    if (cur.dim() < 3) break;
    CHECK(boundary_complex(cur).has_vertex(v));
    cur = deletion(cur, v);
  }
}

TEST_CASE("shellability") {
  auto t = is_shellable(SimplicialComplex::simplex({0, 1, 2, 3}));
  CHECK(t.verdict == Verdict::True);
  auto b7 = load_fixture("B_7_10");
  auto r7 = is_shellable(b7);
  REQUIRE(r7.verdict == Verdict::True);
  CHECK(is_shelling_order(b7, r7.order));
  auto r9 = is_shellable(load_fixture("B_9_18"));
  CHECK(r9.verdict == Verdict::False);
  CHECK(r9.states > 0);
  // two triangles meeting in a vertex are not shellable
  CHECK(is_shellable(C({{1, 2, 3}, {3, 4, 5}})).verdict == Verdict::False);
  CHECK_FALSE(is_shelling_order(C({{1, 2, 3}, {3, 4, 5}}), {Simplex{1, 2, 3}, Simplex{3, 4, 5}}));
}

TEST_CASE("constructibility of B_9_18") {
  auto b9 = load_fixture("B_9_18");
  auto b1 = union_of(closed_star(b9, 1), SimplicialComplex::simplex({0, 6, 7, 8}));
  auto b2 = C({{0, 2, 3, 4}, {2, 3, 4, 7}, {2, 3, 6, 7}, {2, 4, 6, 7}, {2, 4, 6, 8}, {4, 6, 7, 8}});
  CHECK(union_of(b1, b2) == b9);
  CHECK(b1.num_facets() + b2.num_facets() == 18);
  auto meet = intersection(b1, b2);
  CHECK(meet.dim() == 2);
  CHECK(meet.is_pure());
  std::vector<Simplex> order;
  for (auto f : std::vector<std::vector<Vertex>>{{0, 2, 3, 4}, {2, 3, 4, 7}, {2, 3, 6, 7}, {2, 4, 6, 7}, {2, 4, 6, 8},
                                                 {4, 6, 7, 8}})
    order.emplace_back(f);
  CHECK(is_shelling_order(b2, order));
  auto tree = constructibility_split(b9, shelled(b1), constructibility_from_shelling(order), shelled(meet));
  auto chk = verify_constructibility(b9, tree);
  CHECK_MESSAGE(chk.ok, chk.path, ": ", chk.reason);

  auto single = ConstructibilityTree{SimplicialComplex::simplex({0, 1, 2, 3}), {}};
  CHECK(verify_constructibility(single.complex, single).ok);

  // two tetrahedra meeting in an edge: the intersection has the wrong dimension
  auto a = SimplicialComplex::simplex({0, 1, 2, 3});
  auto b = SimplicialComplex::simplex({2, 3, 4, 5});
  auto edge = SimplicialComplex::simplex({2, 3});
  auto wrong = constructibility_split(union_of(a, b), {a, {}}, {b, {}}, {edge, {}});
  CHECK_FALSE(verify_constructibility(union_of(a, b), wrong).ok);
}

TEST_CASE("evasiveness scan") {
  auto t = evasiveness_scan(SimplicialComplex::simplex({0, 1, 2, 3}), 1);
  CHECK(t.size() == 4);
  for (const auto& row : t) CHECK(row.acyclic);

  auto b12 = load_fixture("B_12_38");
  auto rows = evasiveness_scan(b12, 5);
  CHECK(rows.size() == 792);
  std::vector<std::vector<Vertex>> hits;
  for (const auto& row : rows)
    if (row.acyclic) hits.push_back(row.deleted);
  CHECK(hits == std::vector<std::vector<Vertex>>{{4, 5, 8, 10, 11}, {4, 5, 10, 11, 12}, {4, 6, 7, 9, 12}});
  for (const auto& h : hits) {
    auto rest = deletion(b12, h);
    for (Vertex v : rest.vertices()) CHECK_FALSE(is_acyclic(deletion(rest, v)));
  }
  auto serial = evasiveness_scan_serial(b12, 5);
  REQUIRE(serial.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(serial[i].deleted == rows[i].deleted);
    CHECK(serial[i].acyclic == rows[i].acyclic);
  }
}
