#pragma once

#include <compare>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mhilb/arith.hpp"

namespace mhilb {

using Monomial = std::vector<int>;  // exponent vector

// Element of Z^d + Z/m_1 + ... + Z/m_t; torsion entries are kept reduced.
struct Degree {
    std::vector<long long> free;
    std::vector<long long> torsion;

    auto operator<=>(const Degree&) const = default;
    bool operator==(const Degree&) const = default;
    std::vector<long long> flat() const;
    std::string str() const;
};

// A finitely generated abelian group Z^d + sum Z/m_j with n named column vectors (flat coordinates).
struct ColumnSpace {
    int free_rank = 0;
    std::vector<long long> moduli;
    std::vector<std::vector<long long>> columns;

    std::size_t width() const { return static_cast<std::size_t>(free_rank) + moduli.size(); }
    std::vector<long long> reduce(std::vector<long long> v) const;
    bool is_zero(const std::vector<long long>& v) const;
};

// Per-variable upper bounds used to truncate infinite fibers.
struct FiberBox {
    std::vector<int> upper;
    static FiberBox uniform(int n, int bound) { return FiberBox{std::vector<int>(n, bound)}; }
};

enum class Exhaustiveness { Certified, Truncated };

struct FiberResult {
    std::vector<Monomial> monomials;  // descending lex order
    Exhaustiveness exhaustive = Exhaustiveness::Certified;
};

class Grading {
public:
    Grading(int n, int free_rank, std::vector<long long> moduli, std::vector<Degree> columns);

    static Grading standard(int n);
    // Free-only grading from integer column vectors.
    static Grading from_columns(const std::vector<std::vector<long long>>& cols);

    int n() const { return n_; }
    int free_rank() const { return space_.free_rank; }
    const std::vector<long long>& moduli() const { return space_.moduli; }
    const Degree& column(int i) const { return columns_[static_cast<std::size_t>(i)]; }
    const std::vector<Degree>& columns() const { return columns_; }
    const ColumnSpace& space() const { return space_; }

    Degree zero() const;
    Degree normalize(Degree a) const;
    Degree from_flat(const std::vector<long long>& flat) const;
    Degree degree_of(const Monomial& u) const;
    Degree add(const Degree& a, const Degree& b) const;
    Degree sub(const Degree& a, const Degree& b) const;

    bool is_positive() const { return certificate_.has_value(); }
    // Integer functional lambda with lambda . a_i >= 1 for all i, when positive.
    const std::optional<std::vector<long long>>& certificate() const { return certificate_; }
    long long weight(const Degree& a) const;  // lambda . free part
    long long weight_of_var(int i) const { return weights_[static_cast<std::size_t>(i)]; }

    bool positive_on(const std::vector<int>& vars) const;

private:
    int n_;
    ColumnSpace space_;
    std::vector<Degree> columns_;
    std::optional<std::vector<long long>> certificate_;
    std::vector<long long> weights_;
};

// Integer positivity certificate for a subset of columns (free parts only).
std::optional<std::vector<long long>> positivity_certificate(const ColumnSpace& S,
                                                             const std::vector<int>& vars);

bool is_positive(const Grading& g);

FiberResult fiber(const Grading& g, const Degree& a, const std::optional<FiberBox>& box = std::nullopt);

// Number of u in N^vars with deg u = c for a subset on which the grading is positive.
unsigned long long count_on_positive(const Grading& g, const std::vector<int>& vars, const Degree& c);
// Enumerate u in N^vars with deg u = c (positive on vars); exponents outside vars are zero.
std::vector<Monomial> fiber_on_positive(const Grading& g, const std::vector<int>& vars, const Degree& c);

// Quotient of S by the subgroup generated by the given flat vectors, with columns pushed forward.
struct QuotientMap {
    ColumnSpace space;
    std::vector<std::vector<Int>> V;        // change of coordinates (width x width)
    std::vector<std::size_t> free_index;    // coordinates of yV that stay free
    std::vector<std::size_t> torsion_index; // coordinates of yV that become torsion
    std::vector<long long> apply(const std::vector<long long>& v) const;
};
QuotientMap quotient_by(const ColumnSpace& S, const std::vector<std::vector<long long>>& gens);

// Precomputed data for deg restricted to N^vars: a positivity certificate when one exists,
// otherwise the quotient by the degree-zero part (on which the rest is positive).
class SubsetSemigroup {
public:
    SubsetSemigroup(const ColumnSpace& S, std::vector<int> vars);
    bool positive() const { return positive_; }
    bool contains(const std::vector<long long>& c) const;
    unsigned long long count(const std::vector<long long>& c) const;          // positive only
    std::vector<Monomial> list(const std::vector<long long>& c) const;        // positive only

private:
    bool search(const std::vector<long long>& c, const std::function<bool(const std::vector<int>&)>& emit) const;
    const ColumnSpace* S_;
    std::vector<int> vars_;
    bool positive_ = false;
    std::vector<long long> lambda_;
    std::vector<long long> w_;
    std::shared_ptr<QuotientMap> quotient_;
    std::shared_ptr<SubsetSemigroup> rest_;
};

// Exact decision of c in deg(N^vars), for any grading.
bool semigroup_contains_on(const ColumnSpace& S, const std::vector<int>& vars,
                           const std::vector<long long>& c);
bool semigroup_contains(const Grading& g, const Degree& c);
bool semigroup_contains_on(const Grading& g, const std::vector<int>& vars, const Degree& c);

// Variables appearing in some nonconstant degree-zero monomial supported on vars.
std::vector<int> degree_zero_support(const ColumnSpace& S, const std::vector<int>& vars);

// Hilbert basis of the degree-zero monoid; empty when positive.
std::vector<Monomial> degree_zero_generators(const Grading& g);
// Minimal monomials of degree a (generators of S_a over S_0).
std::vector<Monomial> fiber_generators(const Grading& g, const Degree& a);

// Group generated by the columns equals the whole group.
bool columns_generate(const ColumnSpace& S);

}  // namespace mhilb
