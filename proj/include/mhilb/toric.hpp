#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mhilb/grading.hpp"

namespace mhilb {

using LatticeVector = std::vector<long long>;

// Basis of M = ker(Z^n -> A), torsion included.
std::vector<LatticeVector> kernel_lattice(const Grading& g);
std::vector<LatticeVector> kernel_lattice(const ColumnSpace& S);

struct GraverOptions {
    std::size_t max_elements = 20000;
    long long max_norm = 1000;
};

// Primitive partition identities of the lattice, one representative per sign pair
// (first nonzero entry positive), sorted.
std::vector<LatticeVector> graver_basis(const std::vector<LatticeVector>& basis, int n,
                                        const GraverOptions& opts = {});

// u conformal to v with |u_i| <= |v_i|.
bool conformal_leq(const LatticeVector& u, const LatticeVector& v);

std::set<Degree> graver_degrees(const Grading& g, const GraverOptions& opts = {});

bool is_prime_degree(const Grading& g, const Degree& a);

struct Polyhedron {
    std::vector<std::vector<Rat>> vertices;
    std::vector<std::vector<Rat>> rays;  // extreme rays of the recession cone
};

// Extreme points and rays of {u >= 0 : free part of deg u = a_free} by double description.
Polyhedron fiber_polyhedron(const Grading& g, const Degree& a);

struct IntegralityReport {
    bool integral = false;
    bool empty = false;
    std::vector<std::vector<Rat>> offending_vertices;
};

IntegralityReport integral_degree_report(const Grading& g, const Degree& a);
bool is_integral_degree(const Grading& g, const Degree& a);

bool is_unimodular(const Grading& g);
// Absolute values of the nonzero maximal minors of a lattice basis matrix.
std::set<Int> maximal_minor_values(const std::vector<LatticeVector>& basis, int n);

struct SupernormalEntry {
    Degree degree;
    bool prime = false;
    bool integral = false;
    bool violates() const { return prime && !integral; }
};

struct SupernormalReport {
    std::vector<SupernormalEntry> entries;
    bool supernormal_on_sample() const;
};

SupernormalReport supernormal_on(const Grading& g, const std::vector<Degree>& degrees);

}  // namespace mhilb
