#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mhilb/grading.hpp"

namespace mhilb {

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial mul(const Monomial& a, const Monomial& b);
Monomial quotient(const Monomial& b, const Monomial& a);  // b / a, requires a | b
int total_degree(const Monomial& a);
std::string monomial_str(const Monomial& a);  // e.g. "x0^2*x2"

// Minimal generators in descending lex order. The unit ideal is {0-vector}; the zero ideal is {}.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    MonomialIdeal(int n, std::vector<Monomial> gens);

    static MonomialIdeal unit(int n);

    int n() const { return n_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_unit() const;
    bool is_zero() const { return gens_.empty(); }
    bool contains(const Monomial& u) const;

    auto operator<=>(const MonomialIdeal&) const = default;
    bool operator==(const MonomialIdeal&) const = default;

private:
    int n_ = 0;
    std::vector<Monomial> gens_;
};

std::vector<Monomial> minimalize(std::vector<Monomial> gens);

// x^v * k[x_F]: the standard monomials are a disjoint union of such cones.
struct StanleyCone {
    Monomial v;
    std::vector<int> free_vars;
};

std::vector<StanleyCone> stanley_decomposition(const MonomialIdeal& I);

struct HilbertValue {
    bool infinite = false;
    unsigned long long count = 0;

    bool operator==(const HilbertValue&) const = default;
    std::string str() const;
};

// Exact dim_k (S/I)_a.
HilbertValue hilbert_value(const MonomialIdeal& I, const Grading& g, const Degree& a);

// Faster repeated evaluation for one ideal.
class HilbertCounter {
public:
    HilbertCounter(const MonomialIdeal& I, const Grading& g);
    HilbertValue value(const Degree& a) const;
    const std::vector<StanleyCone>& cones() const { return cones_; }
    // True iff every cone is a single monomial (finitely many standard monomials).
    bool finite() const;

private:
    const Grading* g_;
    std::vector<StanleyCone> cones_;
    std::vector<Degree> cone_degrees_;
    std::vector<std::shared_ptr<SubsetSemigroup>> semigroups_;
};

// Standard monomials of degree a, descending lex; INFINITE_SET if there are infinitely many.
std::vector<Monomial> standard_monomials(const MonomialIdeal& I, const Grading& g, const Degree& a);

std::set<Degree> pairwise_lcm_degrees(const MonomialIdeal& I, const Grading& g);

// Multigraded first Betti number beta_{1,b}(I) from the Taylor complex.
long long first_betti_at(const MonomialIdeal& I, const Monomial& b);
std::set<Monomial> minimal_syzygy_multidegrees(const MonomialIdeal& I);
std::set<Degree> minimal_syzygy_degrees(const MonomialIdeal& I, const Grading& g);

}  // namespace mhilb
