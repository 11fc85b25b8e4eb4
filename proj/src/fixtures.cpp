#include "cplx/fixtures.hpp"

#include <filesystem>
#include <json.hpp>
#include <mutex>
#include <stdexcept>

#include "cplx/io.hpp"

namespace cplx::detail {
const std::map<std::string, std::string>& embedded_files();
}

namespace cplx {

namespace {

const nlohmann::json& manifest_json() {
  static const nlohmann::json j = nlohmann::json::parse(bundled_text("manifest.json"));
  return j;
}

SimplicialComplex table(const std::string& name) { return SimplicialComplex::from_facets(bundled_table(name)); }

SimplicialComplex close_with_cone(const SimplicialComplex& ball, Vertex apex) {
  return union_of(ball, cone(apex, boundary_complex(ball)));
}

SimplicialComplex minus_facet(const SimplicialComplex& c, const Simplex& f) {
  if (!c.has_face(f)) throw std::logic_error("fixture assembly: " + f.str() + " is not a facet");
  std::vector<Simplex> fs;
  for (const auto& g : c.facets())
    if (g != f) fs.push_back(g);
  return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex build(const std::string& name) {
  if (name == "B_7_10") return table("b7_10");
  if (name == "B_9_18") return table("b9_18");
  if (name == "B_12_38") return table("b12_38");
  if (name == "R_14_41") return table("rudin_14_41");
  if (name == "S_16_92") return table("s16_92");
  if (name == "S_18_125") return table("s18_125");
  if (name == "S_8_20") return close_with_cone(table("b7_10"), 7);
  if (name == "S_10_32") return close_with_cone(table("b9_18"), 9);
  if (name == "S_13_56") return close_with_cone(table("b12_38"), 1);
  if (name == "B_13_55") return minus_facet(build("S_13_56"), Simplex{1, 2, 6, 9});
  if (name == "B_15_66") return deletion(table("s16_92"), 1);
  if (name == "B_16_91") return minus_facet(table("s16_92"), Simplex{1, 9, 14, 15});
  if (name == "B_17_95") return deletion(table("s18_125"), 2);
  if (name == "B_18_124") {
    auto s = table("s18_125");
    return minus_facet(s, s.facets().front());
  }
  if (name == "B_32_140") return union_of(table("double_trefoil_spindles"), table("double_trefoil_thickening"));
  if (name == "S_33_192") return close_with_cone(build("B_32_140"), 33);
  if (name == "B_43_214") return union_of(table("triple_trefoil_spindles"), table("triple_trefoil_thickening"));
  if (name == "S_44_284") return close_with_cone(build("B_43_214"), 44);
  throw std::logic_error("no recipe for fixture " + name);
}

}  // namespace

const std::string& bundled_text(const std::string& path) {
  const auto& files = detail::embedded_files();
  auto it = files.find(path);
  if (it == files.end()) throw std::out_of_range("no bundled file " + path);
  return it->second;
}

std::vector<std::string> bundled_paths() {
  std::vector<std::string> out;
  for (const auto& [k, v] : detail::embedded_files()) out.push_back(k);
  return out;
}

std::vector<Simplex> bundled_table(const std::string& name) {
  std::vector<Simplex> out;
  for (auto& row : parse_int_lines(bundled_text("tables/" + name + ".cplx"))) out.emplace_back(std::move(row));
  return out;
}

CollapseCertificate bundled_certificate(const std::string& name) {
  return parse_clps(bundled_text("certificates/" + name + ".clps"));
}

const std::vector<FixtureInfo>& fixture_manifest() {
  static const std::vector<FixtureInfo> list = [] {
    std::vector<FixtureInfo> out;
    for (const auto& e : manifest_json().at("fixtures")) {
      FixtureInfo f;
      f.name = e.at("name");
      f.recipe = e.at("recipe");
      f.kind = e.at("kind");
      f.f_vector = e.at("f_vector").get<FVector>();
      f.trefoils = e.value("trefoils", 0);
      f.claims = e.value("claims", std::map<std::string, bool>{});
      f.reconstructed = e.value("reconstructed", false);
      out.push_back(std::move(f));
    }
    return out;
  }();
  return list;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : fixture_manifest()) out.push_back(f.name);
  return out;
}

const FixtureInfo& fixture_info(const std::string& name) {
  for (const auto& f : fixture_manifest())
    if (f.name == name) return f;
  std::string known;
  for (const auto& f : fixture_manifest()) known += " " + f.name;
  throw std::invalid_argument("unknown fixture '" + name + "'; available:" + known + " (prefix sd: for subdivisions)");
}

bool is_fixture(const std::string& name) {
  std::string base = name.rfind("sd:", 0) == 0 ? name.substr(3) : name;
  for (const auto& f : fixture_manifest())
    if (f.name == base) return true;
  return false;
}

SimplicialComplex load_fixture(const std::string& name) {
  if (name.rfind("sd:", 0) == 0) return barycentric_subdivision(load_fixture(name.substr(3)));
  static std::mutex mu;
  static std::map<std::string, SimplicialComplex> cache;
  fixture_info(name);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, build(name)).first;
  return it->second;
}

SimplicialComplex load_complex(const std::string& path_or_name) {
  if (std::filesystem::exists(path_or_name)) return read_cplx(path_or_name);
  if (is_fixture(path_or_name)) return load_fixture(path_or_name);
  throw std::invalid_argument("'" + path_or_name + "' is neither a readable file nor a fixture name");
}

std::vector<ChecksumRow> verify_checksums() {
  std::vector<ChecksumRow> rows;
  for (const auto& [path, expected] : manifest_json().at("tables").items()) {
    ChecksumRow r{path, expected.get<std::string>(), "missing"};
    const auto& files = detail::embedded_files();
    if (auto it = files.find(path); it != files.end()) r.actual = hex64(fnv1a64(it->second));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace cplx
