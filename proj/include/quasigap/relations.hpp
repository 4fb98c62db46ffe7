#pragma once

#include <optional>
#include <vector>

#include "quasigap/linalg.hpp"
#include "quasigap/surd.hpp"

namespace quasigap {

// Basis (as columns) of the lattice {x in Z^n : M x = 0}, computed by
// unimodular column reduction of [M; I].
ZMat integer_kernel(const ZMat& m);

// Clears denominators row by row.
ZMat scale_rows_to_integer(const QMat& m);

struct LatticeMin {
    std::vector<mpz_class> vec;  // sup-norm minimal nonzero lattice vector
    mpz_class supnorm;
};

// Exact sup-norm shortest nonzero vector of the lattice spanned by the
// columns of `basis` (empty result for the zero lattice).  Fincke-Pohst
// enumeration over a pairwise-reduced basis; exact rational pruning.
std::optional<LatticeMin> lattice_shortest_supnorm(const ZMat& basis);

// Minimal nonzero integer vector m with  sum_j m_j * x_j = 0  (exact
// equality in the compositum), or nothing when the x_j are Q-linearly
// independent.
std::optional<LatticeMin> integer_relation(const std::vector<Surd>& xs);

}  // namespace quasigap
