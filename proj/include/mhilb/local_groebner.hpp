#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mhilb/arith.hpp"
#include "mhilb/monomial.hpp"

namespace mhilb {

// Element of Z_(p)/p^m (residue z) or Q[t]/t^m (coefficients s).
struct Scalar {
    Int z;
    std::vector<Rat> s;
    bool operator==(const Scalar&) const = default;
};

class LocalRing {
public:
    enum class Kind { IntegersAtPrime, Univariate };

    static LocalRing integers_at(long p, int m);
    static LocalRing univariate(int m);

    Kind kind() const { return kind_; }
    long prime() const { return p_; }
    int precision() const { return m_; }
    std::string str() const;

    Scalar from_int(const Int& c) const;
    Scalar from_rat(const Rat& c) const;  // denominator must be a unit
    Scalar from_series(const std::vector<Rat>& coeffs) const;
    Scalar zero() const { return from_int(0); }
    Scalar one() const { return from_int(1); }
    Scalar uniformizer() const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    // Valuation; the precision m for zero.
    int ord(const Scalar& a) const;
    std::string str(const Scalar& a) const;

private:
    Kind kind_ = Kind::IntegersAtPrime;
    long p_ = 2;
    int m_ = 1;
    Int pm_ = 2;
};

enum class TermOrder { Lex, GrLex };
// Strict comparison of exponent vectors in the term order.
bool term_less(TermOrder o, const Monomial& a, const Monomial& b);

struct LocalPoly {
    int n = 0;
    std::map<Monomial, Scalar> terms;  // nonzero coefficients only

    bool is_zero() const { return terms.empty(); }
    void add_term(const LocalRing& R, const Monomial& e, const Scalar& c);
    std::string str(const LocalRing& R) const;
};

LocalPoly local_add(const LocalRing& R, const LocalPoly& a, const LocalPoly& b);
LocalPoly local_sub(const LocalRing& R, const LocalPoly& a, const LocalPoly& b);
// c * x^h * f
LocalPoly local_shift(const LocalRing& R, const LocalPoly& f, const Scalar& c, const Monomial& h);

struct InitialTerm {
    Scalar coefficient;
    Monomial exponent;
    int ord = 0;
};
// Term maximizing (-ord, exponent) lexicographically; requires p != 0.
InitialTerm initial_term(const LocalRing& R, const LocalPoly& p, TermOrder o);
// (-ord a, e) <= (-ord b, f)
bool pair_leq(TermOrder o, int ord_a, const Monomial& e, int ord_b, const Monomial& f);

// Checks that every element of F has initial coefficient 1.
void check_restriction(const LocalRing& R, const std::vector<LocalPoly>& F, TermOrder o);

LocalPoly s_polynomial(const LocalRing& R, const LocalPoly& f, const LocalPoly& g, TermOrder o);

struct ReductionStep {
    Scalar coefficient;
    Monomial shift;
    std::size_t index;  // element of F
};
struct Reduction {
    LocalPoly remainder;
    bool reducible = false;
    std::vector<ReductionStep> certificate;
};
Reduction reduce(const LocalRing& R, const LocalPoly& p, const std::vector<LocalPoly>& F, TermOrder o,
                 std::size_t max_steps = 1000000);

struct BuchbergerResult {
    bool groebner = true;
    std::size_t pairs_checked = 0;
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
    LocalPoly failing_remainder;
};
// pairs empty means all pairs.
BuchbergerResult buchberger_check(const LocalRing& R, const std::vector<LocalPoly>& F, TermOrder o,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& pairs = {});

// Monomial ideal of initial monomials of F.
MonomialIdeal initial_ideal(const LocalRing& R, const std::vector<LocalPoly>& F, TermOrder o);

}  // namespace mhilb
