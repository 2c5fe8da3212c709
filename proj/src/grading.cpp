#include "mhilb/grading.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "mhilb/error.hpp"
#include "mhilb/linalg.hpp"
#include "mhilb/toric.hpp"

namespace mhilb {

std::vector<long long> Degree::flat() const {
    std::vector<long long> v = free;
    v.insert(v.end(), torsion.begin(), torsion.end());
    return v;
}

std::string Degree::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < free.size(); ++i) os << (i ? "," : "") << free[i];
    if (!torsion.empty()) {
        os << ";";
        for (std::size_t i = 0; i < torsion.size(); ++i) os << (i ? "," : "") << torsion[i];
    }
    os << ")";
    return os.str();
}

std::vector<long long> ColumnSpace::reduce(std::vector<long long> v) const {
    for (std::size_t j = 0; j < moduli.size(); ++j) {
        auto& x = v[static_cast<std::size_t>(free_rank) + j];
        x = mod_pos(x, moduli[j]);
    }
    return v;
}

bool ColumnSpace::is_zero(const std::vector<long long>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](long long x) { return x == 0; });
}

bool columns_generate(const ColumnSpace& S) {
    const std::size_t w = S.width();
    if (w == 0) return true;
    IntMatrix M;
    for (const auto& c : S.columns) {
        std::vector<Int> row;
        for (auto x : c) row.emplace_back(static_cast<long>(x));
        M.push_back(row);
    }
    for (std::size_t j = 0; j < S.moduli.size(); ++j) {
        std::vector<Int> row(w, 0);
        row[static_cast<std::size_t>(S.free_rank) + j] = static_cast<long>(S.moduli[j]);
        M.push_back(row);
    }
    if (M.empty()) return false;
    auto snf = smith_normal_form(M, w);
    if (snf.diagonal.size() != w) return false;
    return std::all_of(snf.diagonal.begin(), snf.diagonal.end(), [](const Int& x) { return x == 1; });
}

std::optional<std::vector<long long>> positivity_certificate(const ColumnSpace& S,
                                                             const std::vector<int>& vars) {
    std::vector<std::vector<long long>> vs;
    for (int i : vars) {
        const auto& c = S.columns[static_cast<std::size_t>(i)];
        vs.emplace_back(c.begin(), c.begin() + S.free_rank);
    }
    auto lam = positive_functional(vs, static_cast<std::size_t>(S.free_rank));
    if (!lam) return std::nullopt;
    Int den = 1;
    for (const auto& q : *lam) {
        Int l;
        mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
        den = l;
    }
    std::vector<long long> out;
    for (const auto& q : *lam) {
        Int v = q.get_num() * (den / q.get_den());
        if (!v.fits_slong_p()) fail(ErrorCode::CapExceeded, "positivity certificate too large");
        out.push_back(v.get_si());
    }
    return out;
}

Grading::Grading(int n, int free_rank, std::vector<long long> moduli, std::vector<Degree> columns)
    : n_(n) {
    if (n < 0 || free_rank < 0) fail(ErrorCode::InvalidInput, "grading: negative dimension");
    if (static_cast<int>(columns.size()) != n)
        fail(ErrorCode::DimensionMismatch, "grading: expected one column per variable");
    for (auto m : moduli)
        if (m < 2) fail(ErrorCode::InvalidInput, "grading: torsion moduli must be at least 2");
    space_.free_rank = free_rank;
    space_.moduli = std::move(moduli);
    for (auto& c : columns) {
        if (static_cast<int>(c.free.size()) != free_rank || c.torsion.size() != space_.moduli.size())
            fail(ErrorCode::DimensionMismatch, "grading: column shape does not match the group");
        c = normalize(c);
        space_.columns.push_back(c.flat());
    }
    columns_ = std::move(columns);
    if (!columns_generate(space_))
        fail(ErrorCode::InvalidInput, "grading: the degrees of the variables do not generate the group");
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    certificate_ = positivity_certificate(space_, all);
    if (certificate_) {
        for (int i = 0; i < n; ++i) weights_.push_back(weight(columns_[static_cast<std::size_t>(i)]));
    }
}

Grading Grading::standard(int n) {
    std::vector<Degree> cols(static_cast<std::size_t>(n), Degree{{1}, {}});
    return Grading(n, 1, {}, cols);
}

Grading Grading::from_columns(const std::vector<std::vector<long long>>& cols) {
    if (cols.empty()) fail(ErrorCode::InvalidInput, "grading: no variables");
    std::vector<Degree> ds;
    for (const auto& c : cols) ds.push_back(Degree{c, {}});
    return Grading(static_cast<int>(cols.size()), static_cast<int>(cols[0].size()), {}, ds);
}

Degree Grading::zero() const {
    return Degree{std::vector<long long>(static_cast<std::size_t>(space_.free_rank), 0),
                  std::vector<long long>(space_.moduli.size(), 0)};
}

Degree Grading::normalize(Degree a) const {
    if (static_cast<int>(a.free.size()) != space_.free_rank || a.torsion.size() != space_.moduli.size())
        fail(ErrorCode::DimensionMismatch, "degree shape does not match the grading group");
    for (std::size_t j = 0; j < a.torsion.size(); ++j) a.torsion[j] = mod_pos(a.torsion[j], space_.moduli[j]);
    return a;
}

Degree Grading::from_flat(const std::vector<long long>& flat) const {
    if (flat.size() != space_.width())
        fail(ErrorCode::DimensionMismatch, "degree has " + std::to_string(flat.size()) +
                                               " entries, expected " + std::to_string(space_.width()));
    Degree a;
    a.free.assign(flat.begin(), flat.begin() + space_.free_rank);
    a.torsion.assign(flat.begin() + space_.free_rank, flat.end());
    return normalize(a);
}

Degree Grading::degree_of(const Monomial& u) const {
    if (static_cast<int>(u.size()) != n_) fail(ErrorCode::DimensionMismatch, "monomial length != n");
    std::vector<long long> acc(space_.width(), 0);
    for (int i = 0; i < n_; ++i) {
        if (u[static_cast<std::size_t>(i)] == 0) continue;
        const auto& c = space_.columns[static_cast<std::size_t>(i)];
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += static_cast<long long>(u[static_cast<std::size_t>(i)]) * c[k];
    }
    return from_flat(acc);
}

Degree Grading::add(const Degree& a, const Degree& b) const {
    Degree r = a;
    for (std::size_t k = 0; k < r.free.size(); ++k) r.free[k] += b.free[k];
    for (std::size_t k = 0; k < r.torsion.size(); ++k) r.torsion[k] += b.torsion[k];
    return normalize(r);
}

Degree Grading::sub(const Degree& a, const Degree& b) const {
    Degree r = a;
    for (std::size_t k = 0; k < r.free.size(); ++k) r.free[k] -= b.free[k];
    for (std::size_t k = 0; k < r.torsion.size(); ++k) r.torsion[k] -= b.torsion[k];
    return normalize(r);
}

long long Grading::weight(const Degree& a) const {
    if (!certificate_) fail(ErrorCode::Internal, "weight requested for a nonpositive grading");
    long long w = 0;
    for (std::size_t k = 0; k < a.free.size(); ++k) w += (*certificate_)[k] * a.free[k];
    return w;
}

bool Grading::positive_on(const std::vector<int>& vars) const {
    if (certificate_) return true;
    return positivity_certificate(space_, vars).has_value();
}

bool is_positive(const Grading& g) { return g.is_positive(); }

namespace {

void positive_dfs(const ColumnSpace& S, const std::vector<int>& vars, const std::vector<long long>& w,
                  const std::vector<long long>& target, std::size_t k, long long rem,
                  std::vector<long long>& acc, std::vector<int>& expo,
                  const std::function<bool(const std::vector<int>&)>& emit, bool& stop) {
    if (k == vars.size()) {
        if (rem != 0) return;
        std::vector<long long> diff(acc.size());
        for (std::size_t i = 0; i < acc.size(); ++i) diff[i] = acc[i] - target[i];
        if (S.is_zero(diff) && !emit(expo)) stop = true;
        return;
    }
    const auto& col = S.columns[static_cast<std::size_t>(vars[k])];
    long long wk = w[k];
    long long emax = rem / wk;
    long long emin = 0;
    if (k + 1 == vars.size()) {
        if (rem % wk != 0) return;
        emin = emax;
    }
    for (long long e = emax; e >= emin && !stop; --e) {
        expo[static_cast<std::size_t>(vars[k])] = static_cast<int>(e);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += e * col[i];
        positive_dfs(S, vars, w, target, k + 1, rem - e * wk, acc, expo, emit, stop);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] -= e * col[i];
    }
    expo[static_cast<std::size_t>(vars[k])] = 0;
}

}  // namespace

SubsetSemigroup::SubsetSemigroup(const ColumnSpace& S, std::vector<int> vars) : S_(&S), vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    auto cert = positivity_certificate(S, vars_);
    if (cert) {
        positive_ = true;
        lambda_ = *cert;
        for (int i : vars_) {
            long long s = 0;
            for (int k = 0; k < S.free_rank; ++k)
                s += lambda_[static_cast<std::size_t>(k)] * S.columns[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            w_.push_back(s);
        }
        return;
    }
    // The degrees of N^U form a group G_U; on the remaining variables the grading is positive modulo G_U.
    auto U = degree_zero_support(S, vars_);
    if (U.empty()) fail(ErrorCode::Internal, "nonpositive subset without degree-zero support");
    std::vector<std::vector<long long>> gens;
    for (int j : U) gens.push_back(S.columns[static_cast<std::size_t>(j)]);
    quotient_ = std::make_shared<QuotientMap>(quotient_by(S, gens));
    std::vector<int> rest;
    for (int v : vars_)
        if (std::find(U.begin(), U.end(), v) == U.end()) rest.push_back(v);
    rest_ = std::make_shared<SubsetSemigroup>(quotient_->space, rest);
    if (!rest_->positive()) fail(ErrorCode::Internal, "quotient grading is not positive");
}

bool SubsetSemigroup::search(const std::vector<long long>& c,
                             const std::function<bool(const std::vector<int>&)>& emit) const {
    const ColumnSpace& S = *S_;
    int n = static_cast<int>(S.columns.size());
    std::vector<int> expo(static_cast<std::size_t>(n), 0);
    if (vars_.empty()) {
        if (S.is_zero(c)) return !emit(expo);
        return false;
    }
    long long W = 0;
    for (int k = 0; k < S.free_rank; ++k) W += lambda_[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(k)];
    if (W < 0) return false;
    std::vector<long long> acc(S.width(), 0);
    bool stop = false;
    positive_dfs(S, vars_, w_, c, 0, W, acc, expo, emit, stop);
    return stop;
}

bool SubsetSemigroup::contains(const std::vector<long long>& c) const {
    if (!positive_) return rest_->contains(quotient_->apply(c));
    return search(c, [](const std::vector<int>&) { return false; });
}

unsigned long long SubsetSemigroup::count(const std::vector<long long>& c) const {
    if (!positive_) fail(ErrorCode::InfiniteSet, "count on a nonpositive subset");
    unsigned long long k = 0;
    search(c, [&](const std::vector<int>&) {
        ++k;
        return true;
    });
    return k;
}

std::vector<Monomial> SubsetSemigroup::list(const std::vector<long long>& c) const {
    if (!positive_) fail(ErrorCode::InfiniteSet, "listing on a nonpositive subset");
    std::vector<Monomial> out;
    search(c, [&](const std::vector<int>& e) {
        out.push_back(e);
        return true;
    });
    return out;
}

unsigned long long count_on_positive(const Grading& g, const std::vector<int>& vars, const Degree& c) {
    SubsetSemigroup sg(g.space(), vars);
    if (!sg.positive()) fail(ErrorCode::Internal, "count_on_positive: grading not positive on subset");
    return sg.count(g.normalize(c).flat());
}

std::vector<Monomial> fiber_on_positive(const Grading& g, const std::vector<int>& vars, const Degree& c) {
    SubsetSemigroup sg(g.space(), vars);
    if (!sg.positive()) fail(ErrorCode::Internal, "fiber_on_positive: grading not positive on subset");
    return sg.list(g.normalize(c).flat());
}

FiberResult fiber(const Grading& g, const Degree& a0, const std::optional<FiberBox>& box) {
    Degree a = g.normalize(a0);
    std::vector<int> all(static_cast<std::size_t>(g.n()));
    std::iota(all.begin(), all.end(), 0);
    FiberResult r;
    if (g.is_positive()) {
        r.monomials = fiber_on_positive(g, all, a);
        return r;
    }
    if (!semigroup_contains(g, a)) return r;  // empty, hence exact
    if (!box) fail(ErrorCode::UnboundedFiber, "fiber of degree " + a.str() + " is infinite; a box is required");
    if (static_cast<int>(box->upper.size()) != g.n()) fail(ErrorCode::DimensionMismatch, "box length != n");
    const auto& S = g.space();
    auto target = a.flat();
    std::vector<int> expo(static_cast<std::size_t>(g.n()), 0);
    std::vector<long long> acc(S.width(), 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == g.n()) {
            std::vector<long long> diff(acc.size());
            for (std::size_t i = 0; i < acc.size(); ++i) diff[i] = acc[i] - target[i];
            if (S.is_zero(diff)) r.monomials.push_back(expo);
            return;
        }
        const auto& col = S.columns[static_cast<std::size_t>(k)];
        for (int e = box->upper[static_cast<std::size_t>(k)]; e >= 0; --e) {
            expo[static_cast<std::size_t>(k)] = e;
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += e * col[i];
            rec(k + 1);
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] -= e * col[i];
        }
        expo[static_cast<std::size_t>(k)] = 0;
    };
    rec(0);
    // a nonempty fiber of a nonpositive grading is infinite
    r.exhaustive = Exhaustiveness::Truncated;
    return r;
}

std::vector<int> degree_zero_support(const ColumnSpace& S, const std::vector<int>& vars) {
    std::vector<int> U;
    const std::size_t d = static_cast<std::size_t>(S.free_rank);
    const std::size_t k = vars.size();
    for (std::size_t j = 0; j < k; ++j) {
        RatMatrix A(d + 1, std::vector<Rat>(k, 0));
        std::vector<Rat> b(d + 1, 0);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < k; ++c)
                A[r][c] = Rat(static_cast<long>(S.columns[static_cast<std::size_t>(vars[c])][r]));
        A[d][j] = 1;
        b[d] = 1;
        if (lp_feasible(A, b, k)) U.push_back(vars[j]);
    }
    return U;
}

std::vector<long long> QuotientMap::apply(const std::vector<long long>& v) const {
    std::vector<long long> out;
    auto coord = [&](std::size_t j) {
        Int s = 0;
        for (std::size_t i = 0; i < v.size(); ++i) s += Int(static_cast<long>(v[i])) * V[i][j];
        if (!s.fits_slong_p()) fail(ErrorCode::CapExceeded, "quotient coordinates overflow");
        return static_cast<long long>(s.get_si());
    };
    for (auto j : free_index) out.push_back(coord(j));
    for (auto j : torsion_index) out.push_back(coord(j));
    return space.reduce(out);
}

QuotientMap quotient_by(const ColumnSpace& S, const std::vector<std::vector<long long>>& gens) {
    const std::size_t w = S.width();
    IntMatrix K;
    for (std::size_t j = 0; j < S.moduli.size(); ++j) {
        std::vector<Int> row(w, 0);
        row[static_cast<std::size_t>(S.free_rank) + j] = static_cast<long>(S.moduli[j]);
        K.push_back(row);
    }
    for (const auto& g : gens) {
        std::vector<Int> row;
        for (auto x : g) row.emplace_back(static_cast<long>(x));
        K.push_back(row);
    }
    QuotientMap q;
    if (w == 0) return q;
    auto snf = K.empty() ? SmithForm{{}, {}, {}} : smith_normal_form(K, w);
    if (K.empty()) {
        snf.V.assign(w, std::vector<Int>(w, 0));
        for (std::size_t i = 0; i < w; ++i) snf.V[i][i] = 1;
    }
    q.V = snf.V;
    const std::size_t r = snf.diagonal.size();
    for (std::size_t i = r; i < w; ++i) q.free_index.push_back(i);
    for (std::size_t i = 0; i < r; ++i) {
        if (snf.diagonal[i] == 1) continue;
        if (!snf.diagonal[i].fits_slong_p()) fail(ErrorCode::CapExceeded, "torsion modulus overflow");
        q.torsion_index.push_back(i);
        q.space.moduli.push_back(snf.diagonal[i].get_si());
    }
    q.space.free_rank = static_cast<int>(q.free_index.size());
    for (const auto& c : S.columns) q.space.columns.push_back(q.apply(c));
    return q;
}

bool semigroup_contains_on(const ColumnSpace& S, const std::vector<int>& vars,
                           const std::vector<long long>& c) {
    return SubsetSemigroup(S, vars).contains(S.reduce(c));
}

bool semigroup_contains(const Grading& g, const Degree& c) {
    std::vector<int> all(static_cast<std::size_t>(g.n()));
    std::iota(all.begin(), all.end(), 0);
    return semigroup_contains_on(g.space(), all, g.normalize(c).flat());
}

bool semigroup_contains_on(const Grading& g, const std::vector<int>& vars, const Degree& c) {
    return semigroup_contains_on(g.space(), vars, g.normalize(c).flat());
}

std::vector<Monomial> degree_zero_generators(const Grading& g) {
    if (g.is_positive()) return {};
    auto basis = kernel_lattice(g);
    auto graver = graver_basis(basis, g.n());
    std::vector<Monomial> out;
    for (const auto& u : graver) {
        bool nonneg = std::all_of(u.begin(), u.end(), [](long long x) { return x >= 0; });
        bool nonpos = std::all_of(u.begin(), u.end(), [](long long x) { return x <= 0; });
        if (!nonneg && !nonpos) continue;
        Monomial m;
        for (auto x : u) m.push_back(static_cast<int>(nonneg ? x : -x));
        out.push_back(m);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Monomial> fiber_generators(const Grading& g, const Degree& a0) {
    Degree a = g.normalize(a0);
    if (g.is_positive()) return fiber(g, a).monomials;
    if (!semigroup_contains(g, a)) return {};
    // minimal solutions of deg u = a are the Hilbert basis elements of {(u,t) : deg u = t a} with t = 1
    ColumnSpace ext = g.space();
    auto neg = a.flat();
    for (auto& x : neg) x = -x;
    ext.columns.push_back(ext.reduce(neg));
    auto basis = kernel_lattice(ext);
    auto graver = graver_basis(basis, g.n() + 1);
    std::vector<Monomial> out;
    for (const auto& u : graver) {
        long long t = u.back();
        if (t != 1 && t != -1) continue;
        bool ok = true;
        Monomial m;
        for (int i = 0; i < g.n(); ++i) {
            long long x = u[static_cast<std::size_t>(i)] * t;
            if (x < 0) {
                ok = false;
                break;
            }
            m.push_back(static_cast<int>(x));
        }
        if (ok) out.push_back(m);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace mhilb
