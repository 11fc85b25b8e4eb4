#pragma once

// Hand-rolled random inputs for property tests.
#include <random>
#include <vector>

#include "cplx/complex.hpp"
#include "cplx/group.hpp"
#include "cplx/homology.hpp"

namespace gen {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);

// Random facets of dimension <= max_dim on vertices 0..n-1.
cplx::SimplicialComplex random_complex(Rng& rng, int n, int facets, int max_dim);
// Glues tetrahedra one at a time onto boundary triangles, each with a new apex.
cplx::SimplicialComplex stacked_ball(Rng& rng, int tetrahedra);
// Boundary of the 4-simplex refined by random 1-4 moves.
cplx::SimplicialComplex stacked_sphere(Rng& rng, int extra_vertices);
// Random legal flips starting from a stacked sphere.
cplx::SimplicialComplex random_sphere(Rng& rng, int extra_vertices, int flips);
cplx::SimplicialComplex boundary_of_simplex(int dim);
cplx::SimplicialComplex cycle_graph(int n);

cplx::GroupPresentation random_presentation(Rng& rng, int generators, int relators, int max_len);
cplx::SparseIntMatrix random_matrix(Rng& rng, int rows, int cols, double density, int max_abs);

}  // namespace gen
