#pragma once

#include <map>
#include <string>
#include <vector>

#include "cplx/collapse.hpp"
#include "cplx/complex.hpp"

namespace cplx {

struct FixtureInfo {
  std::string name;
  std::string recipe;
  // "ball" or "sphere"
  std::string kind;
  FVector f_vector;
  int trefoils = 0;
  // Claimed properties, e.g. "shellable" -> true.
  std::map<std::string, bool> claims;
  // Built from a guess where the source leaves a choice open.
  bool reconstructed = false;
};

const std::vector<FixtureInfo>& fixture_manifest();
const FixtureInfo& fixture_info(const std::string& name);
std::vector<std::string> fixture_names();
bool is_fixture(const std::string& name);

// Accepts manifest names and "sd:<name>" for barycentric subdivisions.
SimplicialComplex load_fixture(const std::string& name);
// A path to a .cplx file, or a fixture name.
SimplicialComplex load_complex(const std::string& path_or_name);

// Raw bundled data, keyed by path below data/, e.g. "tables/b12_38.cplx".
const std::string& bundled_text(const std::string& path);
std::vector<std::string> bundled_paths();
// Facet list of a bundled table without normalization; name without extension.
std::vector<Simplex> bundled_table(const std::string& name);
CollapseCertificate bundled_certificate(const std::string& name);

struct ChecksumRow {
  std::string path;
  std::string expected;
  std::string actual;
  bool ok() const { return expected == actual; }
};
std::vector<ChecksumRow> verify_checksums();

}  // namespace cplx
