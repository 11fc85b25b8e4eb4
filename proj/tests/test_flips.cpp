#include <doctest.h>

#include "cplx/fixtures.hpp"
#include "cplx/flips.hpp"
#include "cplx/io.hpp"
#include "cplx/manifold.hpp"
#include "generators.hpp"

using namespace cplx;

namespace {

FVector plus(FVector f, const std::vector<std::int64_t>& d) {
  for (std::size_t i = 0; i < f.size(); ++i) f[i] += d[i];
  return f;
}

// The move undoing m, read off the complex before the move.
FlipMove inverse_of(const SimplicialComplex& s, const FlipMove& m) {
  switch (m.kind) {
    case MoveKind::OneFour: return {MoveKind::FourOne, Simplex{*m.new_vertex}, std::nullopt};
    case MoveKind::FourOne: {
      auto lk = link(s, m.pivot);
      return {MoveKind::OneFour, lk.vertices().empty() ? Simplex{} : Simplex(lk.vertices()), m.pivot[0]};
    }
    case MoveKind::TwoThree: {
      std::vector<Vertex> apex;
      for (const auto& f : s.facets())
        if (m.pivot.is_face_of(f)) apex.push_back(f.minus(m.pivot)[0]);
      return {MoveKind::ThreeTwo, Simplex(apex), std::nullopt};
    }
    default: {
      auto lk = link(s, m.pivot);
      return {MoveKind::TwoThree, Simplex(lk.vertices()), std::nullopt};
    }
  }
}

}  // namespace

TEST_CASE("moves on the boundary of the 4-simplex") {
  auto s = gen::boundary_of_simplex(4);
  auto all = legal_moves(s);
  CHECK(all.size() == 5);
  for (const auto& m : all) CHECK(m.kind == MoveKind::OneFour);
  CHECK(legal_moves(s, {}, false).empty());
  CHECK_THROWS(apply_move(s, {MoveKind::ThreeTwo, Simplex{0, 1}, std::nullopt}));
  CHECK_THROWS(apply_move(s, {MoveKind::FourOne, Simplex{0}, std::nullopt}));
  auto t = apply_move(s, {MoveKind::OneFour, Simplex{0, 1, 2, 3}, 5});
  CHECK(t.f_vector() == FVector{6, 14, 16, 8});
  // labels for new vertices are the smallest unused ones
  CHECK_THROWS(apply_move(s, {MoveKind::OneFour, Simplex{0, 1, 2, 3}, 7}));
  CHECK(apply_move(t, {MoveKind::FourOne, Simplex{5}, std::nullopt}) == s);
  CHECK_THROWS(legal_moves(SimplicialComplex::simplex({0, 1, 2, 3})));
}

TEST_CASE("f-vector deltas and inverses") {
  gen::Rng rng(3);
  auto s = gen::stacked_sphere(rng, 4);
  REQUIRE(manifold_check(s).kind == ManifoldClass::Sphere3);
  int seen[4] = {0, 0, 0, 0};
  for (const auto& m : legal_moves(s)) {
    auto t = apply_move(s, m);
    ++seen[static_cast<int>(m.kind)];
    CHECK(t.f_vector() == plus(s.f_vector(), f_vector_delta(m.kind)));
    CHECK(manifold_check(t).kind == ManifoldClass::Sphere3);
    auto back = apply_move(t, inverse_of(s, m));
    CHECK_MESSAGE(back == s, m.str());
  }
  CHECK(seen[static_cast<int>(MoveKind::OneFour)] > 0);
  CHECK(seen[static_cast<int>(MoveKind::TwoThree)] > 0);
  CHECK(seen[static_cast<int>(MoveKind::FourOne)] > 0);
}

TEST_CASE("protected edges") {
  gen::Rng rng(5);
  auto s = gen::random_sphere(rng, 6, 40);
  EdgeSet all;
  for (const auto& e : s.faces(1)) all.insert({e[0], e[1]});
  for (const auto& m : legal_moves(s, all)) {
    CHECK(m.kind != MoveKind::ThreeTwo);
    CHECK(m.kind != MoveKind::FourOne);
  }
  auto s18 = load_fixture("S_18_125");
  EdgeSet knot = make_edge_set(parse_simplex_list("1 2,2 3,1 3"));
  ReduceOptions opt;
  opt.protected_edges = knot;
  opt.budget = 2000;
  auto r = reduce(s18, opt);
  for (const auto& e : knot) CHECK(r.final.has_face(Simplex{e.first, e.second}));
  CHECK(replay(s18, r.log, knot) == r.final);
  CHECK_THROWS(make_edge_set({Simplex{1, 2, 3}}));
}

TEST_CASE("flip logs") {
  auto s18 = load_fixture("S_18_125");
  ReduceOptions opt;
  opt.budget = 3000;
  auto r = reduce(s18, opt);
  CHECK(r.log.initial_hash == canonical_hash(s18));
  CHECK(r.log.final_hash == canonical_hash(r.final));
  auto text = emit_flp(r.log);
  auto back = parse_flp(text);
  CHECK(back.moves == r.log.moves);
  CHECK(emit_flp(back) == text);
  CHECK(replay(s18, back) == r.final);
  REQUIRE(r.log.moves.size() > 3);

  // break the third move: replay names its index
  auto bad = back;
  bad.moves[2].pivot = Simplex{1, 999};
  bad.moves[2].kind = MoveKind::ThreeTwo;
  bad.moves[2].new_vertex.reset();
  try {
    replay(s18, bad);
    FAIL("tampered log replayed");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("step 2") != std::string::npos);
  }
  auto wrong_start = back;
  wrong_start.initial_hash ^= 1;
  CHECK_THROWS(replay(s18, wrong_start));
  CHECK_THROWS(parse_flp("initial 00\n5-5 1 2\nfinal 00\n"));
}

TEST_CASE("reduction") {
  auto d = gen::boundary_of_simplex(4);
  ReduceOptions opt;
  opt.budget = 100;
  auto r = reduce(d, opt);
  CHECK(r.reached_boundary_of_4_simplex());
  CHECK(r.log.moves.empty());

  gen::Rng rng(9);
  auto s = gen::stacked_sphere(rng, 6);
  auto rs = reduce(s, opt);
  CHECK(rs.reached_boundary_of_4_simplex());

  auto many = reduce_many(load_fixture("S_18_125"), ReduceOptions{1, 10'000, {}, false, {}}, 2);
  CHECK(many.reached_boundary_of_4_simplex());
  CHECK(replay(load_fixture("S_18_125"), many.log) == many.final);
}

TEST_CASE("anneal config json") {
  AnnealConfig c;
  c.cooling = 0.9;
  c.plateau = 17;
  auto back = anneal_config_from_json(anneal_config_to_json(c));
  CHECK(back.cooling == doctest::Approx(0.9));
  CHECK(back.plateau == 17);
  auto partial = anneal_config_from_json(R"({"initial_temperature": 0.25})");
  CHECK(partial.initial_temperature == doctest::Approx(0.25));
  CHECK(partial.plateau == AnnealConfig{}.plateau);
  CHECK_THROWS(anneal_config_from_json("{\"cooling\": \"fast\"}"));
}
