#pragma once

#include <optional>
#include <vector>

#include "mhilb/arith.hpp"

namespace mhilb {

using IntMatrix = std::vector<std::vector<Int>>;
using RatMatrix = std::vector<std::vector<Rat>>;

// U * A * V = diag(d_0, ..., d_{r-1}, 0, ...), with d_i | d_{i+1}, d_i > 0, U and V unimodular.
struct SmithForm {
    std::vector<Int> diagonal;  // nonzero invariant factors (length = rank)
    IntMatrix U;                // rows x rows
    IntMatrix V;                // cols x cols
};

SmithForm smith_normal_form(const IntMatrix& A, std::size_t cols);

// Basis of { y in Z^rows : y * A = 0 }.
IntMatrix left_kernel(const IntMatrix& A, std::size_t cols);

// Row-style Hermite basis of the lattice spanned by the rows (zero rows dropped).
IntMatrix hermite_basis(IntMatrix rows, std::size_t cols);

Int bareiss_determinant(IntMatrix M);

std::size_t rank(RatMatrix M);
// Basis of { x : M x = 0 } for an m x cols matrix.
RatMatrix nullspace(RatMatrix M, std::size_t cols);
Rat determinant(RatMatrix M);

// Find x >= 0 with A x = b (exact phase-one simplex, Bland's rule).
std::optional<std::vector<Rat>> lp_feasible(const RatMatrix& A, const std::vector<Rat>& b,
                                            std::size_t cols);

// Find lambda in Q^d with lambda . v_i >= 1 for every given vector (empty set gives the zero vector).
std::optional<std::vector<Rat>> positive_functional(const std::vector<std::vector<long long>>& vs,
                                                    std::size_t d);

}  // namespace mhilb
