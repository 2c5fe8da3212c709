#include "mhilb/hilbert_spec.hpp"

#include <cctype>
#include <sstream>

#include "mhilb/error.hpp"
#include "mhilb/monomial.hpp"

namespace mhilb {

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::constant(const Rat& c) { return UPoly(std::vector<Rat>{c}); }

UPoly UPoly::binomial_shift(long shift, long k) {
    // prod_{i<k} (d + shift - i) / k!
    UPoly p = constant(1);
    for (long i = 0; i < k; ++i) p = p * UPoly(std::vector<Rat>{Rat(shift - i), Rat(1)});
    Int f = 1;
    for (long i = 2; i <= k; ++i) f *= i;
    for (auto& x : p.c_) x /= f;
    return p;
}

Rat UPoly::eval(const Rat& d) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * d + *it;
    return r;
}

Int UPoly::eval_int(long d) const {
    Rat r = eval(Rat(d));
    if (r.get_den() != 1) fail(ErrorCode::InvalidInput, "Hilbert polynomial is not integer valued at d=" + std::to_string(d));
    return r.get_num();
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UPoly(r);
}

UPoly UPoly::operator-(const UPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UPoly(r);
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (c_.empty() || o.c_.empty()) return UPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UPoly(r);
}

std::string UPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& a = c_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        Rat m = abs(a);
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        first = false;
        bool unit = (m == 1);
        if (i == 0 || !unit) os << m.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << "d";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

struct PolyParser {
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip();
        return pos < s.size() && s[pos] == c;
    }
    [[noreturn]] void error(const std::string& msg) {
        fail(ErrorCode::InvalidInput, "cannot parse polynomial '" + s + "': " + msg);
    }
    UPoly expr() {
        UPoly r = term();
        while (true) {
            if (peek('+')) {
                ++pos;
                r = r + term();
            } else if (peek('-')) {
                ++pos;
                r = r - term();
            } else {
                return r;
            }
        }
    }
    bool starts_primary() {
        skip();
        if (pos >= s.size()) return false;
        char c = s[pos];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'd' || c == 'n' || c == '(';
    }
    UPoly term() {
        UPoly r = factor();
        while (true) {
            if (peek('*')) {
                ++pos;
                r = r * factor();
            } else if (peek('/')) {
                ++pos;
                UPoly f = factor();
                if (f.degree() != 0) error("division by a non-constant");
                r = r * UPoly::constant(1 / f.coeffs()[0]);
            } else if (starts_primary()) {
                r = r * factor();
            } else {
                return r;
            }
        }
    }
    UPoly factor() {
        if (peek('-')) {
            ++pos;
            return UPoly::constant(-1) * factor();
        }
        if (peek('+')) {
            ++pos;
            return factor();
        }
        UPoly base = primary();
        if (peek('^')) {
            ++pos;
            skip();
            std::size_t st = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (st == pos) error("expected exponent");
            int e = std::stoi(s.substr(st, pos - st));
            UPoly r = UPoly::constant(1);
            for (int i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }
    UPoly primary() {
        skip();
        if (pos >= s.size()) error("unexpected end");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            UPoly r = expr();
            if (!peek(')')) error("expected ')'");
            ++pos;
            return r;
        }
        if (c == 'd' || c == 'n') {
            ++pos;
            return UPoly(std::vector<Rat>{0, 1});
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t st = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return UPoly::constant(Rat(Int(s.substr(st, pos - st))));
        }
        error(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

UPoly UPoly::parse(const std::string& text) {
    PolyParser p{text};
    UPoly r = p.expr();
    p.skip();
    if (p.pos != text.size()) p.error("trailing input");
    return r;
}

HilbertSpec HilbertSpec::zero_outside(std::map<Degree, long long> table) {
    HilbertSpec h;
    h.table = std::move(table);
    h.tail = TailKind::ZeroOutside;
    return h;
}

HilbertSpec HilbertSpec::constant_on_semigroup(long long c, std::map<Degree, long long> table) {
    HilbertSpec h;
    h.table = std::move(table);
    h.tail = TailKind::Constant;
    h.constant = c;
    return h;
}

HilbertSpec HilbertSpec::polynomial_tail(const UPoly& g, long long d0, int n, std::map<Degree, long long> table) {
    HilbertSpec h;
    h.table = std::move(table);
    h.tail = TailKind::Polynomial;
    h.poly = g;
    h.threshold = d0;
    h.n = n;
    return h;
}

void HilbertSpec::validate(const Grading& gr) const {
    for (const auto& [a, v] : table) {
        if (v < 0) fail(ErrorCode::InvalidInput, "negative Hilbert function value at " + a.str());
        gr.normalize(a);
    }
    if (tail == TailKind::Constant && constant < 0) fail(ErrorCode::InvalidInput, "negative constant tail");
    if (tail == TailKind::Polynomial) {
        bool standard = gr.free_rank() == 1 && gr.moduli().empty();
        for (const auto& c : gr.columns()) standard = standard && c.free[0] == 1;
        if (!standard) fail(ErrorCode::InvalidInput, "a polynomial tail needs the standard grading");
        if (n != gr.n()) fail(ErrorCode::DimensionMismatch, "polynomial tail built for a different n");
    }
}

long long HilbertSpec::value(const Grading& gr, const Degree& a0) const {
    Degree a = gr.normalize(a0);
    auto it = table.find(a);
    if (it != table.end()) return it->second;
    switch (tail) {
        case TailKind::ZeroOutside:
            return 0;
        case TailKind::Constant:
            return semigroup_contains(gr, a) ? constant : 0;
        case TailKind::Polynomial: {
            long long d = a.free[0];
            if (d < 0) return 0;
            Int v = d < threshold ? binomial(n + d - 1, d) : poly.eval_int(d);
            if (!v.fits_slong_p() || v < 0) fail(ErrorCode::InvalidInput, "Hilbert polynomial value out of range");
            return v.get_si();
        }
    }
    return 0;
}

HilbertSpec hilbert_spec_of_artinian(const MonomialIdeal& I, const Grading& g) {
    HilbertCounter hc(I, g);
    if (!hc.finite()) fail(ErrorCode::InfiniteSet, "ideal has infinitely many standard monomials");
    std::map<Degree, long long> t;
    for (const auto& c : hc.cones()) t[g.degree_of(c.v)] += 1;
    return HilbertSpec::zero_outside(t);
}

}  // namespace mhilb
