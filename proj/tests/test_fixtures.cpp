#include <doctest.h>

#include "cplx/fixtures.hpp"
#include "cplx/io.hpp"
#include "cplx/manifold.hpp"

using namespace cplx;

TEST_CASE("manifest entries match the built complexes") {
  const auto& m = fixture_manifest();
  CHECK(m.size() == 18);
  for (const auto& info : m) {
    auto c = load_fixture(info.name);
    CHECK_MESSAGE(c.f_vector() == info.f_vector, info.name);
    auto kind = manifold_check(c).kind;
    CHECK_MESSAGE(kind == (info.kind == "ball" ? ManifoldClass::Ball3 : ManifoldClass::Sphere3), info.name);
  }
  CHECK(fixture_info("B_17_95").reconstructed);
  CHECK_FALSE(fixture_info("B_12_38").reconstructed);
  CHECK(fixture_info("B_9_18").claims.at("shellable") == false);
  CHECK(fixture_info("S_18_125").trefoils == 3);
  CHECK(is_fixture("S_16_92"));
  CHECK_FALSE(is_fixture("S_16_93"));
}

TEST_CASE("unknown names list the available fixtures") {
  try {
    fixture_info("B_99_1");
    FAIL("no error");
  } catch (const std::exception& e) {
    std::string msg = e.what();
    CHECK(msg.find("B_99_1") != std::string::npos);
    CHECK(msg.find("S_16_92") != std::string::npos);
  }
  CHECK_THROWS(load_fixture("sd:nothing"));
  CHECK_THROWS(load_complex("/no/such/file.cplx"));
}

TEST_CASE("subdivision prefix") {
  auto sd = load_fixture("sd:B_7_10");
  CHECK(sd == barycentric_subdivision(load_fixture("B_7_10")));
  CHECK(sd.num_vertices() == 7 + 21 + 25 + 10);
  CHECK(load_complex("sd:B_7_10") == sd);
}

TEST_CASE("bundled data checksums") {
  auto rows = verify_checksums();
  CHECK(rows.size() == bundled_paths().size() - 1);
  for (const auto& r : rows) CHECK_MESSAGE(r.ok(), r.path, " expected ", r.expected, " got ", r.actual);
  for (const auto& p : bundled_paths())
    if (p != "manifest.json") CHECK(hex64(fnv1a64(bundled_text(p))).size() == 16);
}

TEST_CASE("knot edges and membranes") {
  for (const auto& info : fixture_manifest()) {
    if (info.trefoils == 0 || info.kind != "sphere") continue;
    auto c = load_fixture(info.name);
    for (auto e : {Simplex{1, 2}, Simplex{2, 3}, Simplex{1, 3}}) CHECK_MESSAGE(c.has_face(e), info.name, " ", e.str());
  }
  auto b32 = load_fixture("B_32_140");
  for (const auto& t : bundled_table("double_trefoil_membranes")) CHECK_MESSAGE(b32.has_face(t), t.str());
  auto b43 = load_fixture("B_43_214");
  for (const auto& t : bundled_table("triple_trefoil_membranes")) CHECK_MESSAGE(b43.has_face(t), t.str());
}

TEST_CASE("cone tables are the cones over the ball boundaries") {
  auto b32 = load_fixture("B_32_140");
  CHECK(SimplicialComplex::from_facets(bundled_table("double_trefoil_cone")) == cone(33, boundary_complex(b32)));
  auto b43 = load_fixture("B_43_214");
  CHECK(SimplicialComplex::from_facets(bundled_table("triple_trefoil_cone")) == cone(44, boundary_complex(b43)));
}

TEST_CASE("derived fixtures") {
  auto s16 = load_fixture("S_16_92");
  CHECK(load_fixture("B_16_91") == remove_facet(s16, Simplex{1, 9, 14, 15}));
  CHECK(load_fixture("B_15_66") == deletion(s16, 1));
  auto s18 = load_fixture("S_18_125");
  CHECK(load_fixture("B_17_95") == deletion(s18, 2));
  CHECK(load_fixture("B_18_124") == remove_facet(s18, Simplex{1, 2, 4, 9}));
  auto s13 = load_fixture("S_13_56");
  CHECK(load_fixture("B_13_55") == remove_facet(s13, Simplex{1, 2, 6, 9}));
  CHECK(load_fixture("B_12_38") == deletion(s13, 1));
}
