#pragma once

#include <map>
#include <string>
#include <vector>

#include "mhilb/arith.hpp"
#include "mhilb/grading.hpp"

namespace mhilb {

class MonomialIdeal;

// Univariate rational polynomial in d, coefficients in the power basis.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> coeffs);
    static UPoly constant(const Rat& c);
    static UPoly parse(const std::string& text);  // e.g. "3d+1", "(d^2+3d+2)/2", "2"
    // C(d + shift, k) as a polynomial in d.
    static UPoly binomial_shift(long shift, long k);

    const std::vector<Rat>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }
    Rat eval(const Rat& d) const;
    Int eval_int(long d) const;  // requires an integer value

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    std::string str() const;

private:
    void trim();
    std::vector<Rat> c_;
};

enum class TailKind { ZeroOutside, Constant, Polynomial };

// A Hilbert function given by a finite table plus a rule elsewhere.
struct HilbertSpec {
    std::map<Degree, long long> table;
    TailKind tail = TailKind::ZeroOutside;
    long long constant = 0;  // Constant: value on the degrees of monomials, zero elsewhere
    UPoly poly;              // Polynomial: g(d) for d >= threshold, full polynomial ring below
    long long threshold = 0;
    int n = 0;

    static HilbertSpec zero_outside(std::map<Degree, long long> table);
    static HilbertSpec constant_on_semigroup(long long c, std::map<Degree, long long> table = {});
    static HilbertSpec polynomial_tail(const UPoly& g, long long d0, int n, std::map<Degree, long long> table = {});

    long long value(const Grading& gr, const Degree& a) const;
    void validate(const Grading& gr) const;
};

// Table entries of a finite-support Hilbert function read off a monomial ideal with finitely many
// standard monomials.
HilbertSpec hilbert_spec_of_artinian(const MonomialIdeal& I, const Grading& g);

}  // namespace mhilb
