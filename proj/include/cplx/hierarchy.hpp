#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cplx/complex.hpp"

namespace cplx {

enum class Verdict { True, False, Inconclusive };
std::string to_string(Verdict v);

// Non-evasiveness and vertex-decomposability witness. A node removes a vertex
// and has two subtrees: children[0] for the link, children[1] for the deletion.
struct DecisionTree {
  enum class Leaf { None, Simplex, Points };
  std::optional<Vertex> vertex;
  Leaf leaf = Leaf::None;
  std::vector<DecisionTree> children;

  static DecisionTree simplex_leaf() { return {std::nullopt, Leaf::Simplex, {}}; }
  static DecisionTree points_leaf() { return {std::nullopt, Leaf::Points, {}}; }
  static DecisionTree node(Vertex v, DecisionTree link, DecisionTree del);
  bool is_leaf() const { return !vertex.has_value(); }
  const DecisionTree& link_tree() const { return children.at(0); }
  const DecisionTree& deletion_tree() const { return children.at(1); }
  // Vertices along the deletion spine, root first.
  std::vector<Vertex> spine() const;
  std::size_t node_count() const;
};

std::string emit_tree(const DecisionTree& t);
DecisionTree parse_tree(std::string_view text);

struct TreeCheck {
  bool ok = true;
  // Root-relative path such as "del 3/link 4", empty for the root.
  std::string path;
  std::string reason;
};

TreeCheck verify_ne_tree(const SimplicialComplex& c, const DecisionTree& tree);
TreeCheck verify_vd_tree(const SimplicialComplex& c, const DecisionTree& tree);

struct SearchBudget {
  // Maximum number of expanded nodes.
  std::int64_t nodes = 2'000'000;
};

struct DecisionResult {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<DecisionTree> tree;
  std::int64_t nodes = 0;
};

DecisionResult is_nonevasive(const SimplicialComplex& c, SearchBudget budget = {});
DecisionResult is_vertex_decomposable(const SimplicialComplex& c, SearchBudget budget = {});

// Deletes the vertices in the given order; link subtrees come from is_nonevasive.
// Stops with a leaf once the remaining complex is a simplex.
std::optional<DecisionTree> ne_tree_from_order(const SimplicialComplex& c, const std::vector<Vertex>& order,
                                               SearchBudget budget = {});

struct ShellResult {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<Simplex> order;
  std::int64_t states = 0;
};

// Depth-first search over sets of facets, with failed sets memoized; exhaustive when it returns False.
ShellResult is_shellable(const SimplicialComplex& c, std::int64_t budget = 50'000'000);
bool is_shelling_order(const SimplicialComplex& c, const std::vector<Simplex>& order);

// A node states complex = parts[0] ∪ parts[1] with parts[2] their intersection.
struct ConstructibilityTree {
  SimplicialComplex complex;
  std::vector<ConstructibilityTree> parts;
  bool is_leaf() const { return parts.empty(); }
};

TreeCheck verify_constructibility(const SimplicialComplex& c, const ConstructibilityTree& tree);
// Shelling F_1..F_n gives ((F_1 ∪ F_2) ∪ ...) ∪ F_n with each F_k ∩ (F_1 ∪ ... ∪ F_{k-1})
// shelled in lexicographic order.
ConstructibilityTree constructibility_from_shelling(const std::vector<Simplex>& order);
ConstructibilityTree constructibility_split(const SimplicialComplex& c, ConstructibilityTree a, ConstructibilityTree b,
                                            ConstructibilityTree meet);

struct ScanRow {
  std::vector<Vertex> deleted;
  bool acyclic = false;
};

// Every k-subset of the vertices, in lexicographic order, with the acyclicity of
// the complex left after deleting it.
std::vector<ScanRow> evasiveness_scan(const SimplicialComplex& c, int k);
std::vector<ScanRow> evasiveness_scan_serial(const SimplicialComplex& c, int k);

}  // namespace cplx
