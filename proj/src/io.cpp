#include "cplx/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cplx {

namespace {

std::vector<Vertex> parse_ints(std::string_view line, std::size_t lineno) {
  std::vector<Vertex> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
    if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
      throw std::runtime_error("line " + std::to_string(lineno) + ": expected an integer near '" +
                               std::string(line.substr(i, 12)) + "'");
    out.push_back(v);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

std::vector<std::vector<Vertex>> parse_int_lines(std::string_view text) {
  std::vector<std::vector<Vertex>> rows;
  std::size_t lineno = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto row = parse_ints(line, lineno);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

SimplicialComplex parse_cplx(std::string_view text) { return SimplicialComplex::from_facets(parse_int_lines(text)); }

SimplicialComplex read_cplx(const std::string& path) { return parse_cplx(read_text(path)); }

std::string emit_cplx(const SimplicialComplex& c) {
  std::string out;
  for (const auto& f : c.facets()) {
    out += f.str();
    out += '\n';
  }
  return out;
}

void write_cplx(const std::string& path, const SimplicialComplex& c, const std::string& comment) {
  std::string text;
  if (!comment.empty()) text += "# " + comment + "\n";
  text += emit_cplx(c);
  write_text(path, text);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t canonical_hash(const SimplicialComplex& c) { return fnv1a64(emit_cplx(c)); }

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string format_vector(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::vector<Simplex> parse_simplex_list(std::string_view text) {
  std::vector<Simplex> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto part = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    auto vs = parse_ints(part, 1);
    if (!vs.empty()) out.emplace_back(std::move(vs));
  }
  return out;
}

}  // namespace cplx
