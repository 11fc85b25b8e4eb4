#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cplx/collapse.hpp"
#include "cplx/complex.hpp"

namespace cplx {

struct MorseMatching {
  std::vector<CollapsePair> pairs;
  std::vector<Simplex> critical;
};

// c_0, ..., c_d
using MorseVector = std::vector<std::int64_t>;

struct MorseResult {
  MorseMatching matching;
  MorseVector vector;
  // The run as a replayable certificate onto the void complex.
  CollapseCertificate certificate;
};

// Collapses random free pairs; when stuck, removes a uniformly random face of
// the highest remaining dimension and declares it critical.
MorseResult random_discrete_morse(const SimplicialComplex& c, std::uint64_t seed);

MorseVector morse_vector(const MorseMatching& m, int dim);
MorseMatching matching_from_certificate(const CollapseCertificate& cert);

// Checks that every face is in at most one pair, the pairs are codimension one
// and the modified Hasse diagram has no directed cycle.
bool is_acyclic_matching(const SimplicialComplex& c, const MorseMatching& m);

// c_i >= β_i for unreduced Betti numbers.
bool satisfies_morse_inequalities(const SimplicialComplex& c, const MorseVector& v);

struct MorseSearchOptions {
  std::uint64_t seed = 1;
  int tries = 1000;
  // Stop at the lowest try index that attains this vector.
  std::optional<MorseVector> goal;
  bool parallel = true;
};

struct MorseSearchResult {
  // Lowest total, ties broken by try index; the goal hit when one was requested and found.
  MorseResult best;
  int best_try = -1;
  bool goal_reached = false;
  int tries_run = 0;
  std::map<MorseVector, int> histogram;
};

MorseSearchResult morse_search(const SimplicialComplex& c, const MorseSearchOptions& opt);

}  // namespace cplx
