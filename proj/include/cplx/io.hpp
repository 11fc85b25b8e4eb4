#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cplx/complex.hpp"

namespace cplx {

// Parses whitespace separated integers; '#' starts a comment running to the end of the line.
std::vector<std::vector<Vertex>> parse_int_lines(std::string_view text);

SimplicialComplex parse_cplx(std::string_view text);
SimplicialComplex read_cplx(const std::string& path);
// Canonical form: one facet per line, facets in lexicographic order.
std::string emit_cplx(const SimplicialComplex& c);
void write_cplx(const std::string& path, const SimplicialComplex& c, const std::string& comment = "");

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t canonical_hash(const SimplicialComplex& c);
std::string hex64(std::uint64_t h);

std::string format_vector(const std::vector<std::int64_t>& v);

// "1 2,2 3,1 3" -> {{1,2},{2,3},{1,3}}
std::vector<Simplex> parse_simplex_list(std::string_view text);

}  // namespace cplx
