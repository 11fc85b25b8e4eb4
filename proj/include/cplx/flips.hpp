#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cplx/complex.hpp"

namespace cplx {

enum class MoveKind { OneFour, TwoThree, ThreeTwo, FourOne };
std::string to_string(MoveKind k);

// pivot: a facet for 1-4, a triangle for 2-3, an edge for 3-2, a vertex for 4-1.
struct FlipMove {
  MoveKind kind = MoveKind::TwoThree;
  Simplex pivot;
  std::optional<Vertex> new_vertex;
  std::string str() const;
  friend bool operator==(const FlipMove&, const FlipMove&) = default;
};

using EdgeSet = std::set<Edge>;
EdgeSet make_edge_set(const std::vector<Simplex>& edges);

struct FlipLog {
  std::uint64_t initial_hash = 0;
  std::vector<FlipMove> moves;
  std::uint64_t final_hash = 0;
};

std::string emit_flp(const FlipLog& log);
FlipLog parse_flp(std::string_view text);

// Requires a closed pure 3-dimensional pseudomanifold.
std::vector<FlipMove> legal_moves(const SimplicialComplex& s, const EdgeSet& protected_edges = {},
                                  bool allow_1_4 = true);
// Throws with the violated condition when the move is illegal.
SimplicialComplex apply_move(const SimplicialComplex& s, const FlipMove& m, const EdgeSet& protected_edges = {});
// Throws with the step index on a hash mismatch or an illegal move.
SimplicialComplex replay(const SimplicialComplex& s, const FlipLog& log, const EdgeSet& protected_edges = {});

// Change of (f_0, f_1, f_2, f_3) caused by a move of the given kind.
std::vector<std::int64_t> f_vector_delta(MoveKind k);

struct AnnealConfig {
  // Probability of taking a 2-3 move although a 3-2 move is available, at the start of a cycle.
  double initial_temperature = 0.6;
  // Geometric cooling factor applied after each step.
  double cooling = 0.998;
  double min_temperature = 0.0;
  // Steps without improving the best complex before the temperature is reset.
  int plateau = 1000;
  // Probability of a 1-4 move per step when insertions are allowed.
  double insert_probability = 0.02;
};

AnnealConfig anneal_config_from_json(std::string_view json_text);
std::string anneal_config_to_json(const AnnealConfig& c);

struct ReduceOptions {
  std::uint64_t seed = 1;
  int budget = 10'000;
  EdgeSet protected_edges;
  bool allow_1_4 = false;
  AnnealConfig anneal;
};

struct ReduceResult {
  // Moves up to the best complex seen; replaying it gives `final`.
  FlipLog log;
  SimplicialComplex final;
  int steps_run = 0;
  std::uint64_t seed = 0;
  bool reached_boundary_of_4_simplex() const;
};

// Simulated annealing towards fewer vertices, then fewer facets.
ReduceResult reduce(const SimplicialComplex& s, const ReduceOptions& opt);
// Independent runs with seeds seed, seed+1, ...; the best result, ties going to the smallest seed.
ReduceResult reduce_many(const SimplicialComplex& s, const ReduceOptions& opt, int runs);

}  // namespace cplx
