#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mhilb/arith.hpp"
#include "mhilb/grading.hpp"

namespace mhilb {

enum class VarKind { Bracket, Stiefel, Chart, Toric, Named };
const char* var_kind_name(VarKind k);

// Bracket: degree + sorted monomial tuple (quotient Pluecker coordinate).
// Stiefel: row + column monomial. Chart: coordinate monos = {x, b}. Toric: degree + {u}.
struct SymVar {
    VarKind kind = VarKind::Named;
    Degree degree;
    std::vector<Monomial> monos;
    int row = 0;
    std::string name;

    auto operator<=>(const SymVar&) const = default;
    bool operator==(const SymVar&) const = default;
    std::string str() const;
};

SymVar bracket_var(const Degree& a, std::vector<Monomial> sorted_tuple);
SymVar stiefel_var(int row, const Monomial& col);
SymVar chart_var(const Monomial& x, const Monomial& b);
SymVar toric_var(const Degree& a, const Monomial& u);
SymVar named_var(const std::string& name);

class VarTable {
public:
    std::uint32_t intern(const SymVar& v);
    std::optional<std::uint32_t> find(const SymVar& v) const;
    const SymVar& at(std::uint32_t i) const { return vars_[i]; }
    std::size_t size() const { return vars_.size(); }
    const std::vector<SymVar>& vars() const { return vars_; }

private:
    std::vector<SymVar> vars_;
    std::map<SymVar, std::uint32_t> index_;
};

using SymMono = std::vector<std::pair<std::uint32_t, std::uint32_t>>;  // (var, exponent), sorted by var

// Graded lex, larger first when used with greater: total degree, then lex with var 0 most significant.
struct SymMonoLess {
    bool operator()(const SymMono& a, const SymMono& b) const;
};

SymMono mono_mul(const SymMono& a, const SymMono& b);
std::uint32_t mono_degree(const SymMono& a);

class SparsePoly {
public:
    SparsePoly() = default;
    static SparsePoly constant(const Int& c);
    static SparsePoly variable(std::uint32_t v, const Int& c = 1);

    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::map<SymMono, Int, SymMonoLess>& terms() const { return terms_; }
    std::uint32_t degree() const;
    // Terms in canonical (decreasing) order.
    std::vector<std::pair<SymMono, Int>> sorted_terms() const;

    void add_term(const SymMono& m, const Int& c);
    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly operator-() const;
    SparsePoly scaled(const Int& c) const;
    bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }
    bool operator<(const SparsePoly& o) const;

    // Divide by the content and make the leading coefficient positive.
    SparsePoly normalized() const;

    Rat evaluate(const std::function<Rat(std::uint32_t)>& value) const;
    SparsePoly substitute(const std::function<SparsePoly(std::uint32_t)>& value) const;
    std::vector<std::uint32_t> variables() const;

    std::string str(const VarTable& t) const;

private:
    std::map<SymMono, Int, SymMonoLess> terms_;
};

// Sorting a tuple of monomials into descending lex order; sign 0 if two entries coincide.
struct SignedTuple {
    int sign = 0;
    std::vector<Monomial> tuple;
};
SignedTuple sort_with_sign(std::vector<Monomial> seq);

// Signed bracket as a polynomial: [seq] with seq unsorted; the empty bracket is 1.
SparsePoly bracket_poly(VarTable& t, const Degree& a, const std::vector<Monomial>& seq);

class SymMatrix {
public:
    SymMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    SparsePoly& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const SparsePoly& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<SparsePoly> e_;
};

// Determinant of the submatrix on the given rows and columns (cofactor expansion with memoisation).
// Both index lists must be strictly increasing.
SparsePoly minor(const SymMatrix& M, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);

class MinorCache {
public:
    explicit MinorCache(const SymMatrix& M) : M_(&M) {}
    SparsePoly minor(std::uint64_t row_mask, const std::vector<std::size_t>& cols);

private:
    SparsePoly rec(std::uint64_t rows, std::uint64_t cols);
    const SymMatrix* M_;
    std::map<std::pair<std::uint64_t, std::uint64_t>, SparsePoly> memo_;
};

// Matrix with contiguous row blocks; within block b, matrix column j is either zero or the
// base column base[b][j] of a block matrix that is the same for every block.
struct BlockStructure {
    std::size_t block_rows = 0;
    std::vector<std::vector<int>> base;  // base[b][j] >= 0 or -1 (zero column)
};

// det of the square submatrix with the given columns, by generalized Laplace expansion along the
// row blocks; block_minor(sorted base columns) must return the corresponding block determinant.
SparsePoly block_laplace(const BlockStructure& B, const std::vector<int>& cols,
                         const std::function<SparsePoly(const std::vector<int>&)>& block_minor);

}  // namespace mhilb
