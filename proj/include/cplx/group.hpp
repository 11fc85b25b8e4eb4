#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cplx/homology.hpp"

namespace cplx {

// Finite group on {0, ..., order-1} given by its multiplication table.
struct FiniteGroup {
  std::string name;
  int order = 0;
  int identity = 0;
  std::vector<int> table;
  std::vector<int> inverse;
  int mul(int a, int b) const { return table[a * order + b]; }
};

FiniteGroup symmetric_group(int n);
FiniteGroup cyclic_group(int n);
// "S3", "S4", "C6", ...
FiniteGroup group_by_name(const std::string& name);

// Letter +(i+1) is generator i, -(i+1) its inverse.
using Word = std::vector<int>;

struct GroupPresentation {
  int generators = 0;
  std::vector<Word> relators;
  std::size_t total_length() const;
  std::string str() const;
};

Word free_reduce(const Word& w);
// Free and cyclic reduction.
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);

// Returns a presentation of an isomorphic group. budget caps the number of
// generator eliminations by substitution of longer words.
GroupPresentation tietze_simplify(const GroupPresentation& p, int budget = 10'000);

// Abelianization as Z^betti plus torsion.
HomologyGroup abelianization(const GroupPresentation& p);

struct HomCountOptions {
  // Upper bound on |G|^generators.
  double bound = 1e8;
  bool parallel = true;
};

// Number of homomorphisms from the presented group to G.
std::uint64_t count_homs(const GroupPresentation& p, const FiniteGroup& g, const HomCountOptions& opt = {});
std::uint64_t count_homs_serial(const GroupPresentation& p, const FiniteGroup& g, double bound = 1e8);

}  // namespace cplx
