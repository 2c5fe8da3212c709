#include "mhilb/local_groebner.hpp"

#include <sstream>

#include "mhilb/error.hpp"

namespace mhilb {

LocalRing LocalRing::integers_at(long p, int m) {
    if (p < 2 || !mpz_probab_prime_p(Int(p).get_mpz_t(), 30))
        fail(ErrorCode::InvalidInput, "local ring: " + std::to_string(p) + " is not prime");
    if (m < 1) fail(ErrorCode::InvalidInput, "local ring: precision must be at least 1");
    LocalRing R;
    R.kind_ = Kind::IntegersAtPrime;
    R.p_ = p;
    R.m_ = m;
    mpz_ui_pow_ui(R.pm_.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(m));
    return R;
}

LocalRing LocalRing::univariate(int m) {
    if (m < 1) fail(ErrorCode::InvalidInput, "local ring: precision must be at least 1");
    LocalRing R;
    R.kind_ = Kind::Univariate;
    R.p_ = 0;
    R.m_ = m;
    return R;
}

std::string LocalRing::str() const {
    if (kind_ == Kind::IntegersAtPrime) return "zp:" + std::to_string(p_) + " mod p^" + std::to_string(m_);
    return "qt mod t^" + std::to_string(m_);
}

Scalar LocalRing::from_int(const Int& c) const {
    Scalar s;
    if (kind_ == Kind::IntegersAtPrime) {
        s.z = c % pm_;
        if (s.z < 0) s.z += pm_;
    } else {
        s.s.assign(static_cast<std::size_t>(m_), Rat(0));
        s.s[0] = c;
    }
    return s;
}

Scalar LocalRing::from_rat(const Rat& c) const {
    if (kind_ == Kind::Univariate) return from_series({c});
    Int den = c.get_den();
    if (den % p_ == 0) fail(ErrorCode::InvalidInput, "local ring: denominator is not a unit");
    Int inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pm_.get_mpz_t());
    return from_int(c.get_num() * inv);
}

Scalar LocalRing::from_series(const std::vector<Rat>& coeffs) const {
    if (kind_ == Kind::IntegersAtPrime) fail(ErrorCode::InvalidInput, "local ring: series coefficient in Z_(p) model");
    Scalar s;
    s.s.assign(static_cast<std::size_t>(m_), Rat(0));
    for (std::size_t i = 0; i < coeffs.size() && i < s.s.size(); ++i) s.s[i] = coeffs[i];
    return s;
}

Scalar LocalRing::uniformizer() const {
    if (kind_ == Kind::IntegersAtPrime) return from_int(p_);
    return from_series({Rat(0), Rat(1)});
}

Scalar LocalRing::add(const Scalar& a, const Scalar& b) const {
    Scalar r;
    if (kind_ == Kind::IntegersAtPrime) {
        r.z = a.z + b.z;
        if (r.z >= pm_) r.z -= pm_;
    } else {
        r.s.resize(a.s.size());
        for (std::size_t i = 0; i < a.s.size(); ++i) r.s[i] = a.s[i] + b.s[i];
    }
    return r;
}

Scalar LocalRing::neg(const Scalar& a) const {
    Scalar r;
    if (kind_ == Kind::IntegersAtPrime) {
        r.z = a.z == 0 ? Int(0) : Int(pm_ - a.z);
    } else {
        r.s.resize(a.s.size());
        for (std::size_t i = 0; i < a.s.size(); ++i) r.s[i] = -a.s[i];
    }
    return r;
}

Scalar LocalRing::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar LocalRing::mul(const Scalar& a, const Scalar& b) const {
    Scalar r;
    if (kind_ == Kind::IntegersAtPrime) {
        r.z = (a.z * b.z) % pm_;
    } else {
        const std::size_t m = a.s.size();
        r.s.assign(m, Rat(0));
        for (std::size_t i = 0; i < m; ++i) {
            if (a.s[i] == 0) continue;
            for (std::size_t j = 0; i + j < m; ++j) r.s[i + j] += a.s[i] * b.s[j];
        }
    }
    return r;
}

bool LocalRing::is_zero(const Scalar& a) const {
    if (kind_ == Kind::IntegersAtPrime) return a.z == 0;
    for (const auto& c : a.s)
        if (c != 0) return false;
    return true;
}

bool LocalRing::is_one(const Scalar& a) const { return a == one(); }

int LocalRing::ord(const Scalar& a) const {
    if (kind_ == Kind::IntegersAtPrime) {
        if (a.z == 0) return m_;
        int k = 0;
        Int z = a.z;
        while (z % p_ == 0) {
            z /= p_;
            ++k;
        }
        return k;
    }
    for (std::size_t i = 0; i < a.s.size(); ++i)
        if (a.s[i] != 0) return static_cast<int>(i);
    return m_;
}

std::string LocalRing::str(const Scalar& a) const {
    if (kind_ == Kind::IntegersAtPrime) return a.z.get_str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.s.size(); ++i) {
        if (a.s[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << a.s[i].get_str() << ")";
        if (i > 0) os << "*t^" << i;
    }
    if (first) os << "0";
    return os.str();
}

bool term_less(TermOrder o, const Monomial& a, const Monomial& b) {
    if (o == TermOrder::GrLex) {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
    }
    return a < b;  // lex with x0 most significant
}

void LocalPoly::add_term(const LocalRing& R, const Monomial& e, const Scalar& c) {
    auto it = terms.find(e);
    if (it == terms.end()) {
        if (!R.is_zero(c)) terms.emplace(e, c);
        return;
    }
    it->second = R.add(it->second, c);
    if (R.is_zero(it->second)) terms.erase(it);
}

std::string LocalPoly::str(const LocalRing& R) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "[" << R.str(it->second) << "]*" << monomial_str(it->first);
    }
    return os.str();
}

LocalPoly local_add(const LocalRing& R, const LocalPoly& a, const LocalPoly& b) {
    LocalPoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(R, e, c);
    return r;
}

LocalPoly local_sub(const LocalRing& R, const LocalPoly& a, const LocalPoly& b) {
    LocalPoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(R, e, R.neg(c));
    return r;
}

LocalPoly local_shift(const LocalRing& R, const LocalPoly& f, const Scalar& c, const Monomial& h) {
    LocalPoly r;
    r.n = f.n;
    for (const auto& [e, a] : f.terms) r.add_term(R, mul(e, h), R.mul(c, a));
    return r;
}

bool pair_leq(TermOrder o, int ord_a, const Monomial& e, int ord_b, const Monomial& f) {
    if (ord_a != ord_b) return ord_a > ord_b;
    return !term_less(o, f, e);
}

InitialTerm initial_term(const LocalRing& R, const LocalPoly& p, TermOrder o) {
    if (p.is_zero()) fail(ErrorCode::InvalidInput, "initial term of the zero polynomial");
    const std::pair<const Monomial, Scalar>* best = nullptr;
    int best_ord = 0;
    for (const auto& t : p.terms) {
        int d = R.ord(t.second);
        if (!best || d < best_ord || (d == best_ord && term_less(o, best->first, t.first))) {
            best = &t;
            best_ord = d;
        }
    }
    return InitialTerm{best->second, best->first, best_ord};
}

void check_restriction(const LocalRing& R, const std::vector<LocalPoly>& F, TermOrder o) {
    for (std::size_t i = 0; i < F.size(); ++i) {
        if (F[i].is_zero()) fail(ErrorCode::InvalidInput, "local Groebner: zero element in F");
        if (!R.is_one(initial_term(R, F[i], o).coefficient))
            fail(ErrorCode::InvalidInput, "local Groebner: element " + std::to_string(i) +
                                              " does not have initial coefficient 1");
    }
}

LocalPoly s_polynomial(const LocalRing& R, const LocalPoly& f, const LocalPoly& g, TermOrder o) {
    auto inf = initial_term(R, f, o), ing = initial_term(R, g, o);
    Monomial L = lcm(inf.exponent, ing.exponent);
    return local_sub(R, local_shift(R, f, R.one(), quotient(L, inf.exponent)),
                     local_shift(R, g, R.one(), quotient(L, ing.exponent)));
}

Reduction reduce(const LocalRing& R, const LocalPoly& p, const std::vector<LocalPoly>& F, TermOrder o,
                 std::size_t max_steps) {
    check_restriction(R, F, o);
    std::vector<Monomial> inits;
    for (const auto& f : F) inits.push_back(initial_term(R, f, o).exponent);
    Reduction red;
    red.remainder = p;
    if (p.is_zero()) {
        red.reducible = true;
        return red;
    }
    const InitialTerm top = initial_term(R, p, o);
    for (std::size_t step = 0;; ++step) {
        if (red.remainder.is_zero()) {
            red.reducible = true;
            return red;
        }
        if (step > max_steps) fail(ErrorCode::Internal, "NONTERMINATION_GUARD: reduction exceeded step bound");
        InitialTerm in = initial_term(R, red.remainder, o);
        if (!pair_leq(o, in.ord, in.exponent, top.ord, top.exponent))
            fail(ErrorCode::Internal, "reduction left the filtration of the input");
        std::size_t k = 0;
        while (k < F.size() && !divides(inits[k], in.exponent)) ++k;
        if (k == F.size()) return red;
        Monomial h = quotient(in.exponent, inits[k]);
        red.remainder = local_sub(R, red.remainder, local_shift(R, F[k], in.coefficient, h));
        red.certificate.push_back(ReductionStep{in.coefficient, h, k});
    }
}

BuchbergerResult buchberger_check(const LocalRing& R, const std::vector<LocalPoly>& F, TermOrder o,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& pairs0) {
    check_restriction(R, F, o);
    auto pairs = pairs0;
    if (pairs.empty())
        for (std::size_t i = 0; i < F.size(); ++i)
            for (std::size_t j = i + 1; j < F.size(); ++j) pairs.emplace_back(i, j);
    BuchbergerResult res;
    for (auto [i, j] : pairs) {
        if (i >= F.size() || j >= F.size()) fail(ErrorCode::InvalidInput, "buchberger: pair index out of range");
        ++res.pairs_checked;
        auto red = reduce(R, s_polynomial(R, F[i], F[j], o), F, o);
        if (!red.reducible) {
            res.groebner = false;
            res.failing_pair = std::make_pair(i, j);
            res.failing_remainder = red.remainder;
            return res;
        }
    }
    return res;
}

MonomialIdeal initial_ideal(const LocalRing& R, const std::vector<LocalPoly>& F, TermOrder o) {
    std::vector<Monomial> gens;
    int n = 0;
    for (const auto& f : F) {
        n = f.n;
        gens.push_back(initial_term(R, f, o).exponent);
    }
    return MonomialIdeal(n, gens);
}

}  // namespace mhilb
