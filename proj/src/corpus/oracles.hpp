#pragma once

// Reference computations used by the acceptance checks. They are written directly from the
// definitions and deliberately share no algorithms with the library code they check.

#include <set>
#include <vector>

#include "mhilb/arith.hpp"
#include "mhilb/hilbert_spec.hpp"

namespace mhilb::oracle {

using IVec = std::vector<long long>;
using RMat = std::vector<std::vector<Rat>>;

// Conformally minimal nonzero u with cols * u = 0 (free columns only) and |u|_1 <= max_l1,
// one representative per sign with first nonzero entry positive.
std::set<IVec> brute_force_graver(const std::vector<IVec>& cols, int max_l1);

// Castelnuovo-Mumford regularity of an ideal of k[x_0..x_{n-1}] given by monomial generators,
// from the Betti numbers beta_{i,b} = dim H~_{i-1}(K^b(I)) of upper Koszul simplicial complexes.
int monomial_regularity(int n, const std::vector<std::vector<int>>& gens);

// Saturated lex ideal with Hilbert polynomial g in n variables, built from the lex segment in degree D.
std::vector<std::vector<int>> saturated_lex_ideal(const UPoly& g, int n, int D);

// Rank and determinant by plain Gaussian elimination.
std::size_t rank(RMat M);
Rat det(RMat M);

// Monomials of total degree d in n variables, x0 > x1 > ... lexicographically descending.
std::vector<std::vector<int>> monomials_of_degree(int n, int d);

// Monomials u with cols * u = a, for columns with nonnegative entries and no zero column.
std::vector<std::vector<int>> brute_force_fiber(const std::vector<IVec>& cols, const IVec& a);

// Standard monomials of degree a of the ideal generated by gens (same column restrictions).
std::vector<std::vector<int>> brute_force_standard(const std::vector<IVec>& cols, const IVec& a,
                                                   const std::vector<std::vector<int>>& gens);

Rat eval_monomial(const std::vector<int>& m, const std::vector<Rat>& p);

// 2x2 determinant m1(p1) m2(p2) - m1(p2) m2(p1).
Rat two_point_bracket(const std::vector<int>& m1, const std::vector<int>& m2, const std::vector<Rat>& p1,
                      const std::vector<Rat>& p2);

// Rows spanning the kernel of the evaluation map k[x]_d -> k^2 at two points, columns in the given order.
RMat two_point_kernel(const std::vector<std::vector<int>>& X, const std::vector<Rat>& p1,
                      const std::vector<Rat>& p2);

}  // namespace mhilb::oracle
