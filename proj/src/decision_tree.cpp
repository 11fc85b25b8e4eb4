#include <stdexcept>

#include "cplx/hierarchy.hpp"
#include "cplx/io.hpp"

namespace cplx {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    default: return "inconclusive";
  }
}

DecisionTree DecisionTree::node(Vertex v, DecisionTree link, DecisionTree del) {
  DecisionTree t;
  t.vertex = v;
  t.children.push_back(std::move(link));
  t.children.push_back(std::move(del));
  return t;
}

std::vector<Vertex> DecisionTree::spine() const {
  std::vector<Vertex> out;
  for (const DecisionTree* t = this; !t->is_leaf(); t = &t->deletion_tree()) out.push_back(*t->vertex);
  return out;
}

std::size_t DecisionTree::node_count() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.node_count();
  return n;
}

namespace {

void emit(const DecisionTree& t, int depth, std::string& out) {
  out.append(2 * depth, ' ');
  if (t.is_leaf()) {
    out += t.leaf == DecisionTree::Leaf::Points ? "points\n" : "simplex\n";
    return;
  }
  out += "v " + std::to_string(*t.vertex) + "\n";
  for (const auto& c : t.children) emit(c, depth + 1, out);
}

struct Line {
  int indent;
  std::string text;
  std::size_t lineno;
};

DecisionTree parse_node(const std::vector<Line>& lines, std::size_t& pos, int indent) {
  if (pos >= lines.size()) throw std::runtime_error("tree: unexpected end of input");
  const Line& l = lines[pos];
  if (l.indent != indent)
    throw std::runtime_error("tree line " + std::to_string(l.lineno) + ": expected indentation " +
                             std::to_string(indent));
  ++pos;
  if (l.text == "simplex" || l.text == "point") return DecisionTree::simplex_leaf();
  if (l.text == "points") return DecisionTree::points_leaf();
  if (l.text.size() > 2 && l.text.starts_with("v ")) {
    auto vs = parse_int_lines(l.text.substr(2));
    if (vs.size() != 1 || vs[0].size() != 1)
      throw std::runtime_error("tree line " + std::to_string(l.lineno) + ": expected 'v <label>'");
    auto link = parse_node(lines, pos, indent + 2);
    auto del = parse_node(lines, pos, indent + 2);
    return DecisionTree::node(vs[0][0], std::move(link), std::move(del));
  }
  throw std::runtime_error("tree line " + std::to_string(l.lineno) + ": unknown entry '" + l.text + "'");
}

std::string extend(const std::string& path, const std::string& step) { return path.empty() ? step : path + "/" + step; }

TreeCheck fail(const std::string& path, std::string reason) { return {false, path, std::move(reason)}; }

TreeCheck check(const SimplicialComplex& c, const DecisionTree& t, const std::string& path, bool vd) {
  if (vd && !c.is_pure()) return fail(path, "complex is not pure");
  if (t.is_leaf()) {
    if (c.is_simplex()) return {};
    if (vd && t.leaf == DecisionTree::Leaf::Points && c.dim() == 0) return {};
    return fail(path, "leaf on a complex with " + std::to_string(c.num_facets()) + " facets of dimension " +
                          std::to_string(c.dim()));
  }
  Vertex v = *t.vertex;
  if (!c.has_vertex(v)) return fail(path, "vertex " + std::to_string(v) + " is not in the complex");
  auto lk = link(c, v);
  auto del = deletion(c, v);
  if (vd && (!del.is_pure() || del.dim() != c.dim()))
    return fail(path, "deletion of " + std::to_string(v) + " is not pure of dimension " + std::to_string(c.dim()));
  auto r = check(lk, t.link_tree(), extend(path, "link " + std::to_string(v)), vd);
  if (!r.ok) return r;
  return check(del, t.deletion_tree(), extend(path, "del " + std::to_string(v)), vd);
}

}  // namespace

std::string emit_tree(const DecisionTree& t) {
  std::string out;
  emit(t, 0, out);
  return out;
}

DecisionTree parse_tree(std::string_view text) {
  std::vector<Line> lines;
  std::size_t lineno = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view s = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (auto h = s.find('#'); h != std::string_view::npos) s = s.substr(0, h);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
    std::size_t ind = 0;
    while (ind < s.size() && s[ind] == ' ') ++ind;
    if (ind == s.size()) continue;
    lines.push_back({static_cast<int>(ind), std::string(s.substr(ind)), lineno});
  }
  std::size_t pos = 0;
  auto t = parse_node(lines, pos, lines.empty() ? 0 : lines[0].indent);
  if (pos != lines.size()) throw std::runtime_error("tree line " + std::to_string(lines[pos].lineno) + ": trailing entry");
  return t;
}

TreeCheck verify_ne_tree(const SimplicialComplex& c, const DecisionTree& tree) { return check(c, tree, "", false); }

TreeCheck verify_vd_tree(const SimplicialComplex& c, const DecisionTree& tree) { return check(c, tree, "", true); }

std::optional<DecisionTree> ne_tree_from_order(const SimplicialComplex& c, const std::vector<Vertex>& order,
                                               SearchBudget budget) {
  // Built bottom-up along the spine.
  std::vector<std::pair<Vertex, DecisionTree>> links;
  SimplicialComplex cur = c;
  std::size_t i = 0;
  while (!cur.is_simplex()) {
    if (i == order.size()) return std::nullopt;
    Vertex v = order[i++];
    if (!cur.has_vertex(v)) return std::nullopt;
    auto res = is_nonevasive(link(cur, v), budget);
    if (res.verdict != Verdict::True) return std::nullopt;
    links.emplace_back(v, std::move(*res.tree));
    cur = deletion(cur, v);
  }
  DecisionTree t = DecisionTree::simplex_leaf();
  for (auto it = links.rbegin(); it != links.rend(); ++it) t = DecisionTree::node(it->first, std::move(it->second), std::move(t));
  return t;
}

}  // namespace cplx
