#include "mhilb/symbolic.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "mhilb/error.hpp"
#include "mhilb/monomial.hpp"

namespace mhilb {

const char* var_kind_name(VarKind k) {
    switch (k) {
        case VarKind::Bracket: return "bracket";
        case VarKind::Stiefel: return "stiefel";
        case VarKind::Chart: return "chart";
        case VarKind::Toric: return "toric";
        case VarKind::Named: return "named";
    }
    return "named";
}

std::string SymVar::str() const {
    std::ostringstream os;
    auto mons = [&](const char* sep) {
        for (std::size_t i = 0; i < monos.size(); ++i) os << (i ? sep : "") << monomial_str(monos[i]);
    };
    switch (kind) {
        case VarKind::Bracket:
            os << "[";
            mons(",");
            os << "]";
            break;
        case VarKind::Stiefel:
            os << "w" << row << "_";
            mons(",");
            break;
        case VarKind::Chart:
            os << "c{" << monomial_str(monos.at(0)) << "|" << monomial_str(monos.at(1)) << "}";
            break;
        case VarKind::Toric:
            os << "z" << degree.str() << "_" << monomial_str(monos.at(0));
            break;
        case VarKind::Named:
            os << name;
            break;
    }
    return os.str();
}

SymVar bracket_var(const Degree& a, std::vector<Monomial> t) {
    SymVar v;
    v.kind = VarKind::Bracket;
    v.degree = a;
    v.monos = std::move(t);
    return v;
}

SymVar stiefel_var(int row, const Monomial& col) {
    SymVar v;
    v.kind = VarKind::Stiefel;
    v.row = row;
    v.monos = {col};
    return v;
}

SymVar chart_var(const Monomial& x, const Monomial& b) {
    SymVar v;
    v.kind = VarKind::Chart;
    v.monos = {x, b};
    return v;
}

SymVar toric_var(const Degree& a, const Monomial& u) {
    SymVar v;
    v.kind = VarKind::Toric;
    v.degree = a;
    v.monos = {u};
    return v;
}

SymVar named_var(const std::string& name) {
    SymVar v;
    v.kind = VarKind::Named;
    v.name = name;
    return v;
}

std::uint32_t VarTable::intern(const SymVar& v) {
    auto it = index_.find(v);
    if (it != index_.end()) return it->second;
    auto id = static_cast<std::uint32_t>(vars_.size());
    vars_.push_back(v);
    index_.emplace(v, id);
    return id;
}

std::optional<std::uint32_t> VarTable::find(const SymVar& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::uint32_t mono_degree(const SymMono& a) {
    std::uint32_t d = 0;
    for (const auto& [v, e] : a) d += e;
    return d;
}

bool SymMonoLess::operator()(const SymMono& a, const SymMono& b) const {
    auto da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    std::size_t i = 0;
    for (; i < a.size() && i < b.size(); ++i) {
        if (a[i].first != b[i].first) return a[i].first > b[i].first;  // a lacks b's smaller variable
        if (a[i].second != b[i].second) return a[i].second < b[i].second;
    }
    return a.size() < b.size();
}

SymMono mono_mul(const SymMono& a, const SymMono& b) {
    SymMono r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) r.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first) r.push_back(b[j++]);
        else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

SparsePoly SparsePoly::constant(const Int& c) {
    SparsePoly p;
    if (c != 0) p.terms_.emplace(SymMono{}, c);
    return p;
}

SparsePoly SparsePoly::variable(std::uint32_t v, const Int& c) {
    SparsePoly p;
    if (c != 0) p.terms_.emplace(SymMono{{v, 1}}, c);
    return p;
}

std::uint32_t SparsePoly::degree() const {
    if (terms_.empty()) return 0;
    return mono_degree(terms_.rbegin()->first);
}

std::vector<std::pair<SymMono, Int>> SparsePoly::sorted_terms() const {
    return {terms_.rbegin(), terms_.rend()};
}

void SparsePoly::add_term(const SymMono& m, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly r = *this;
    r += o;
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    SparsePoly r = *this;
    r -= o;
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    SparsePoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(mono_mul(m1, m2), c1 * c2);
    return r;
}

SparsePoly SparsePoly::operator-() const { return scaled(-1); }

SparsePoly SparsePoly::scaled(const Int& c) const {
    SparsePoly r;
    if (c == 0) return r;
    for (const auto& [m, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, x * c);
    return r;
}

bool SparsePoly::operator<(const SparsePoly& o) const {
    auto a = sorted_terms(), b = o.sorted_terms();
    SymMonoLess less;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i].first != b[i].first) return less(b[i].first, a[i].first);
        if (a[i].second != b[i].second) return a[i].second < b[i].second;
    }
    return a.size() < b.size();
}

SparsePoly SparsePoly::normalized() const {
    if (terms_.empty()) return *this;
    Int g = 0;
    for (const auto& [m, c] : terms_) {
        Int t;
        mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        g = t;
    }
    if (terms_.rbegin()->second < 0) g = -g;
    SparsePoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, c / g);
    return r;
}

Rat SparsePoly::evaluate(const std::function<Rat(std::uint32_t)>& value) const {
    std::map<std::uint32_t, Rat> cache;
    Rat total = 0;
    for (const auto& [m, c] : terms_) {
        Rat t = Rat(c);
        for (const auto& [v, e] : m) {
            auto it = cache.find(v);
            if (it == cache.end()) it = cache.emplace(v, value(v)).first;
            Rat p;
            mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
            mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
            t *= p;
        }
        total += t;
    }
    return total;
}

SparsePoly SparsePoly::substitute(const std::function<SparsePoly(std::uint32_t)>& value) const {
    std::map<std::uint32_t, SparsePoly> cache;
    SparsePoly total;
    for (const auto& [m, c] : terms_) {
        SparsePoly t = SparsePoly::constant(c);
        for (const auto& [v, e] : m) {
            auto it = cache.find(v);
            if (it == cache.end()) it = cache.emplace(v, value(v)).first;
            for (std::uint32_t k = 0; k < e; ++k) t = t * it->second;
        }
        total += t;
    }
    return total;
}

std::vector<std::uint32_t> SparsePoly::variables() const {
    std::vector<std::uint32_t> vs;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

std::string SparsePoly::str(const VarTable& t) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : sorted_terms()) {
        Int a = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        bool unit = (a == 1);
        if (!unit || m.empty()) os << a.get_str();
        bool firstv = unit;
        for (const auto& [v, e] : m) {
            if (!firstv) os << "*";
            firstv = false;
            os << t.at(v).str();
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

SignedTuple sort_with_sign(std::vector<Monomial> seq) {
    SignedTuple r;
    int sign = 1;
    // insertion sort counting transpositions, descending lex
    for (std::size_t i = 1; i < seq.size(); ++i)
        for (std::size_t j = i; j > 0 && seq[j - 1] < seq[j]; --j) {
            std::swap(seq[j - 1], seq[j]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i] == seq[i - 1]) {
            r.sign = 0;
            return r;
        }
    r.sign = sign;
    r.tuple = std::move(seq);
    return r;
}

SparsePoly bracket_poly(VarTable& t, const Degree& a, const std::vector<Monomial>& seq) {
    if (seq.empty()) return SparsePoly::constant(1);
    auto st = sort_with_sign(seq);
    if (st.sign == 0) return {};
    return SparsePoly::variable(t.intern(bracket_var(a, st.tuple)), st.sign);
}

SparsePoly MinorCache::rec(std::uint64_t rows, std::uint64_t cols) {
    if (rows == 0) return SparsePoly::constant(1);
    auto key = std::make_pair(rows, cols);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const SymMatrix& M = *M_;
    // expand along the sparsest row
    int best_row = -1;
    int best_count = 1 << 30;
    for (std::uint64_t r = rows; r; r &= r - 1) {
        int i = std::countr_zero(r);
        int cnt = 0;
        for (std::uint64_t c = cols; c; c &= c - 1)
            if (!M.at(static_cast<std::size_t>(i), static_cast<std::size_t>(std::countr_zero(c))).is_zero()) ++cnt;
        if (cnt < best_count) {
            best_count = cnt;
            best_row = i;
        }
    }
    SparsePoly result;
    if (best_count > 0) {
        // sign of the row among remaining rows
        int row_pos = std::popcount(rows & ((std::uint64_t{1} << best_row) - 1));
        std::uint64_t rest_rows = rows & ~(std::uint64_t{1} << best_row);
        int col_pos = 0;
        for (std::uint64_t c = cols; c; c &= c - 1, ++col_pos) {
            int j = std::countr_zero(c);
            const SparsePoly& e = M.at(static_cast<std::size_t>(best_row), static_cast<std::size_t>(j));
            if (e.is_zero()) continue;
            SparsePoly sub = rec(rest_rows, cols & ~(std::uint64_t{1} << j));
            if (sub.is_zero()) continue;
            SparsePoly term = e * sub;
            if ((row_pos + col_pos) % 2) result -= term;
            else result += term;
        }
    }
    memo_.emplace(key, result);
    return result;
}

SparsePoly MinorCache::minor(std::uint64_t row_mask, const std::vector<std::size_t>& cols) {
    std::uint64_t cm = 0;
    for (auto c : cols) cm |= std::uint64_t{1} << c;
    if (std::popcount(row_mask) != std::popcount(cm)) fail(ErrorCode::ShapeMismatch, "minor: non-square selection");
    return rec(row_mask, cm);
}

SparsePoly minor(const SymMatrix& M, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size()) fail(ErrorCode::ShapeMismatch, "minor: non-square selection");
    if (M.rows() > 64 || M.cols() > 64) fail(ErrorCode::CapExceeded, "minor: matrix larger than 64x64");
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i] <= rows[i - 1]) fail(ErrorCode::InvalidInput, "minor: rows must be increasing");
    for (std::size_t i = 1; i < cols.size(); ++i)
        if (cols[i] <= cols[i - 1]) fail(ErrorCode::InvalidInput, "minor: columns must be increasing");
    std::uint64_t rm = 0;
    for (auto r : rows) rm |= std::uint64_t{1} << r;
    MinorCache mc(M);
    return mc.minor(rm, cols);
}

SparsePoly block_laplace(const BlockStructure& B, const std::vector<int>& cols0,
                         const std::function<SparsePoly(const std::vector<int>&)>& block_minor) {
    const std::size_t nb = B.base.size();
    if (cols0.size() != nb * B.block_rows) fail(ErrorCode::ShapeMismatch, "block_laplace: column count");
    std::vector<int> cols = cols0;
    std::sort(cols.begin(), cols.end());
    if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) return {};
    std::map<std::pair<std::size_t, std::vector<int>>, SparsePoly> memo;
    auto bm = [&](std::size_t b, const std::vector<int>& chosen) -> SparsePoly {
        std::vector<int> basecols;
        for (int c : chosen) basecols.push_back(B.base[b][static_cast<std::size_t>(c)]);
        // sort ascending with sign
        int sign = 1;
        for (std::size_t i = 1; i < basecols.size(); ++i)
            for (std::size_t j = i; j > 0 && basecols[j - 1] > basecols[j]; --j) {
                std::swap(basecols[j - 1], basecols[j]);
                sign = -sign;
            }
        if (std::adjacent_find(basecols.begin(), basecols.end()) != basecols.end()) return {};
        auto key = std::make_pair(b, basecols);
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, block_minor(basecols)).first;
        return sign > 0 ? it->second : -it->second;
    };
    SparsePoly total;
    std::vector<int> remaining = cols;
    std::function<void(std::size_t, std::vector<int>&, const SparsePoly&, int)> rec =
        [&](std::size_t b, std::vector<int>& rem, const SparsePoly& acc, int sign) {
            if (b == nb) {
                if (sign > 0) total += acc;
                else total -= acc;
                return;
            }
            std::vector<std::size_t> usable;
            for (std::size_t i = 0; i < rem.size(); ++i)
                if (B.base[b][static_cast<std::size_t>(rem[i])] >= 0) usable.push_back(i);
            const std::size_t k = B.block_rows;
            if (usable.size() < k) return;
            std::vector<std::size_t> pick(k);
            std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t depth, std::size_t start) {
                if (depth == k) {
                    std::vector<int> chosen;
                    std::vector<bool> taken(rem.size(), false);
                    for (auto p : pick) {
                        chosen.push_back(rem[usable[p]]);
                        taken[usable[p]] = true;
                    }
                    SparsePoly m = bm(b, chosen);
                    if (m.is_zero()) return;
                    // inversions: chosen column c before every unchosen smaller remaining column
                    long inv = 0;
                    for (std::size_t i = 0; i < rem.size(); ++i) {
                        if (!taken[i]) continue;
                        for (std::size_t j = 0; j < i; ++j)
                            if (!taken[j]) ++inv;
                    }
                    std::vector<int> next;
                    for (std::size_t i = 0; i < rem.size(); ++i)
                        if (!taken[i]) next.push_back(rem[i]);
                    rec(b + 1, next, acc * m, (inv % 2) ? -sign : sign);
                    return;
                }
                for (std::size_t i = start; i + (k - depth) <= usable.size(); ++i) {
                    pick[depth] = i;
                    choose(depth + 1, i + 1);
                }
            };
            choose(0, 0);
        };
    rec(0, remaining, SparsePoly::constant(1), 1);
    return total;
}

}  // namespace mhilb
