#include "mhilb/equations.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mhilb/combinatorics.hpp"
#include "mhilb/enumeration.hpp"
#include "mhilb/error.hpp"

namespace mhilb {

void EquationSet::canonicalize(bool dedup) {
    std::multiset<SparsePoly> uniq;
    for (const auto& p : equations)
        if (!p.is_zero() && (!dedup || !uniq.count(p.normalized()))) uniq.insert(p.normalized());
    // renumber the variables that occur, in SymVar order
    std::set<std::uint32_t> used;
    for (const auto& p : uniq)
        for (auto v : p.variables()) used.insert(v);
    std::vector<std::uint32_t> ids(used.begin(), used.end());
    std::sort(ids.begin(), ids.end(), [&](std::uint32_t a, std::uint32_t b) { return vars.at(a) < vars.at(b); });
    VarTable fresh;
    std::map<std::uint32_t, std::uint32_t> remap;
    for (auto id : ids) remap[id] = fresh.intern(vars.at(id));
    std::multiset<SparsePoly> out;
    for (const auto& p : uniq) {
        SparsePoly q;
        for (const auto& [m, c] : p.terms()) {
            SymMono nm;
            for (const auto& [v, e] : m) nm.emplace_back(remap.at(v), e);
            std::sort(nm.begin(), nm.end());
            q.add_term(nm, c);
        }
        out.insert(q.normalized());
    }
    vars = std::move(fresh);
    equations.assign(out.begin(), out.end());
}

namespace {

std::vector<Monomial> finite_fiber(const Grading& g, const Degree& a) {
    if (!g.is_positive())
        fail(ErrorCode::UnboundedFiber, "equation emitters need finite fibers (a positive grading)");
    return fiber(g, a).monomials;
}

bool before(const Grading& g, const Degree& a, const Degree& b) {
    // a < b in the semigroup order: b - a is the degree of a nonconstant monomial
    if (a == b) return false;
    return semigroup_contains(g, g.sub(b, a));
}

std::vector<Degree> canonical_degrees(const Grading& g, const std::vector<Degree>& D) {
    return processing_order(g, D);
}

void record_raw(EquationMeta& meta, const SparsePoly& p) {
    ++meta.raw_count;
    ++meta.raw_by_terms[p.num_terms()];
}

}  // namespace

EquationSet quadratic_equations(const Grading& g, const HilbertSpec& h, const std::vector<Degree>& D0,
                                const EquationOptions& opts) {
    h.validate(g);
    EquationSet es;
    es.meta.emitter = "quadratic";
    auto D = canonical_degrees(g, D0);
    for (const auto& a : D)
        for (const auto& b : D) {
            if (!before(g, a, b)) continue;
            auto Xa = finite_fiber(g, a);
            auto Xb = finite_fiber(g, b);
            auto U = finite_fiber(g, g.sub(b, a));
            long long ha = h.value(g, a), hb = h.value(g, b);
            if (ha > static_cast<long long>(Xa.size()) || hb > static_cast<long long>(Xb.size()))
                fail(ErrorCode::InvalidInput, "h exceeds the number of monomials in a degree of D");
            if (hb == 0 || ha == static_cast<long long>(Xa.size())) continue;
            for (const auto& u : U)
                for_each_combination(static_cast<int>(Xa.size()), static_cast<int>(ha + 1), [&](const std::vector<int>& Bi) {
                    auto B = pick(Xa, Bi);
                    for_each_combination(static_cast<int>(Xb.size()), static_cast<int>(hb - 1), [&](const std::vector<int>& Ci) {
                        auto C = pick(Xb, Ci);
                        SparsePoly eq;
                        for (std::size_t j = 0; j < B.size(); ++j) {
                            std::vector<Monomial> rest;
                            for (std::size_t k = 0; k < B.size(); ++k)
                                if (k != j) rest.push_back(B[k]);
                            std::vector<Monomial> Cx = C;
                            Cx.push_back(mul(u, B[j]));
                            SparsePoly t = bracket_poly(es.vars, a, rest) * bracket_poly(es.vars, b, Cx);
                            if (j % 2) eq -= t;
                            else eq += t;
                        }
                        record_raw(es.meta, eq);
                        if (es.meta.raw_count > opts.max_equations)
                            fail(ErrorCode::CapExceeded, "quadratic equations exceed the equation cap");
                        es.equations.push_back(std::move(eq));
                        return true;
                    });
                    return true;
                });
        }
    es.canonicalize();
    return es;
}

GammaMatrix gamma_matrix(const Grading& g, const HilbertSpec& h, const std::vector<Degree>& D0, const Degree& e0) {
    h.validate(g);
    Degree e = g.normalize(e0);
    GammaMatrix G;
    G.columns = finite_fiber(g, e);
    std::map<Monomial, std::size_t> col_index;
    for (std::size_t i = 0; i < G.columns.size(); ++i) col_index[G.columns[i]] = i;
    std::vector<std::vector<std::pair<std::size_t, SparsePoly>>> rows;
    for (const auto& d : canonical_degrees(g, D0)) {
        if (!before(g, d, e)) continue;
        auto Xd = finite_fiber(g, d);
        auto U = finite_fiber(g, g.sub(e, d));
        long long hd = h.value(g, d);
        for (const auto& u : U)
            for_each_combination(static_cast<int>(Xd.size()), static_cast<int>(hd + 1), [&](const std::vector<int>& Bi) {
                auto B = pick(Xd, Bi);
                std::vector<std::pair<std::size_t, SparsePoly>> row;
                for (std::size_t j = 0; j < B.size(); ++j) {
                    std::vector<Monomial> rest;
                    for (std::size_t k = 0; k < B.size(); ++k)
                        if (k != j) rest.push_back(B[k]);
                    SparsePoly c = bracket_poly(G.vars, d, rest);
                    if (j % 2) c = -c;
                    row.emplace_back(col_index.at(mul(u, B[j])), c);
                }
                rows.push_back(std::move(row));
                return true;
            });
    }
    G.matrix = SymMatrix(rows.size(), G.columns.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (auto& [j, c] : rows[i]) G.matrix.at(i, j) += c;
    return G;
}

EquationSet determinantal_equations(const Grading& g, const HilbertSpec& h, const std::vector<Degree>& D,
                                    const Degree& e, const EquationOptions& opts) {
    GammaMatrix G = gamma_matrix(g, h, D, e);
    EquationSet es;
    es.meta.emitter = "fitting";
    es.vars = G.vars;
    const long long r = static_cast<long long>(G.columns.size());
    const long long k = r - h.value(g, e) + 1;
    const long long rows = static_cast<long long>(G.matrix.rows());
    es.meta.info["rows"] = std::to_string(rows);
    es.meta.info["cols"] = std::to_string(r);
    es.meta.info["minor_size"] = std::to_string(k);
    if (k <= 0 || k > rows || k > r) {
        es.meta.warnings.push_back("MINOR_SIZE_EXCEEDS_MATRIX");
        return es;
    }
    Int count = binomial(rows, k) * binomial(r, k);
    if (count > Int(static_cast<unsigned long>(opts.max_minors)))
        fail(ErrorCode::CapExceeded, "determinantal equations: " + count.get_str() + " minors exceed the cap");
    if (rows > 64 || r > 64) fail(ErrorCode::CapExceeded, "determinantal equations: matrix exceeds 64 rows or columns");
    MinorCache mc(G.matrix);
    for_each_combination(static_cast<int>(rows), static_cast<int>(k), [&](const std::vector<int>& R) {
        std::uint64_t rm = 0;
        for (int i : R) rm |= std::uint64_t{1} << i;
        for_each_combination(static_cast<int>(r), static_cast<int>(k), [&](const std::vector<int>& Cc) {
            std::vector<std::size_t> cols(Cc.begin(), Cc.end());
            SparsePoly m = mc.minor(rm, cols);
            record_raw(es.meta, m);
            es.equations.push_back(std::move(m));
            return true;
        });
        return true;
    });
    es.canonicalize();
    return es;
}

int stiefel_sign(const std::vector<int>& pos, std::size_t h) {
    long s = static_cast<long>(h * (h + 1) / 2);
    for (int p : pos) s += p + 1;
    return (s % 2) ? -1 : 1;
}

BayerLayout bayer_layout(int n, int d0, long long h, long long h_next) {
    if (n < 1 || d0 < 0) fail(ErrorCode::InvalidInput, "bayer: need n >= 1 and d0 >= 0");
    Grading g = Grading::standard(n);
    BayerLayout L;
    L.n = n;
    L.d0 = d0;
    L.h = h;
    L.h_next = h_next;
    L.X = fiber(g, Degree{{d0}, {}}).monomials;
    L.Xnext = fiber(g, Degree{{d0 + 1}, {}}).monomials;
    const long long r = static_cast<long long>(L.X.size());
    if (h < 0 || h > r) fail(ErrorCode::InvalidInput, "bayer: h out of range");
    std::map<Monomial, int> xi;
    for (std::size_t i = 0; i < L.X.size(); ++i) xi[L.X[i]] = static_cast<int>(i);
    // Omega (x) S_1 with, for each monomial of degree d0+1, the copy from its largest dividing variable removed
    for (const auto& M : L.Xnext) {
        int last = -1;
        for (int j = 0; j < n; ++j)
            if (M[static_cast<std::size_t>(j)] > 0) last = j;
        for (int j = 0; j < n; ++j) {
            if (M[static_cast<std::size_t>(j)] == 0 || j == last) continue;
            Monomial m = M;
            --m[static_cast<std::size_t>(j)];
            L.reduced.emplace_back(j, m);
        }
    }
    const std::size_t ncols = L.Xnext.size() + L.reduced.size();
    L.blocks.block_rows = static_cast<std::size_t>(r - h);
    L.blocks.base.assign(static_cast<std::size_t>(n), std::vector<int>(ncols, -1));
    for (int i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < L.Xnext.size(); ++c) {
            const auto& M = L.Xnext[c];
            if (M[static_cast<std::size_t>(i)] == 0) continue;
            Monomial m = M;
            --m[static_cast<std::size_t>(i)];
            L.blocks.base[static_cast<std::size_t>(i)][c] = xi.at(m);
        }
        for (std::size_t c = 0; c < L.reduced.size(); ++c)
            if (L.reduced[c].first == i)
                L.blocks.base[static_cast<std::size_t>(i)][L.Xnext.size() + c] = xi.at(L.reduced[c].second);
    }
    return L;
}

SparsePoly bayer_minor(const BayerLayout& L, VarTable& vars, const std::vector<int>& cols) {
    Degree a{{L.d0}, {}};
    const int r = static_cast<int>(L.X.size());
    const std::size_t hh = static_cast<std::size_t>(L.h);
    auto block_minor = [&](const std::vector<int>& sigma) {
        std::vector<int> T;
        std::size_t s = 0;
        for (int i = 0; i < r; ++i) {
            if (s < sigma.size() && sigma[s] == i) {
                ++s;
                continue;
            }
            T.push_back(i);
        }
        std::vector<Monomial> tuple;
        for (int t : T) tuple.push_back(L.X[static_cast<std::size_t>(t)]);
        SparsePoly p = bracket_poly(vars, a, tuple);
        return stiefel_sign(T, hh) > 0 ? p : -p;
    };
    return block_laplace(L.blocks, cols, block_minor);
}

EquationSet bayer_equations(int n, int d0, long long h, long long h_next, const EquationOptions& opts) {
    BayerLayout L = bayer_layout(n, d0, h, h_next);
    EquationSet es;
    es.meta.emitter = "bayer";
    const long long r = static_cast<long long>(L.X.size());
    const long long r1 = static_cast<long long>(L.Xnext.size());
    const long long rows = static_cast<long long>(n) * (r - h);
    const long long k1 = r1 - h_next + 1;
    const long long k2 = rows - k1;
    const long long nred = static_cast<long long>(L.reduced.size());
    es.meta.info["omega_hat_cols"] = std::to_string(r1);
    es.meta.info["reduced_cols"] = std::to_string(nred);
    es.meta.info["rows"] = std::to_string(rows);
    es.meta.info["from_omega_hat"] = std::to_string(k1);
    es.meta.info["from_reduced"] = std::to_string(k2);
    if (k1 < 0 || k1 > r1 || k2 < 0 || k2 > nred) {
        es.meta.warnings.push_back("MINOR_SIZE_EXCEEDS_MATRIX");
        return es;
    }
    Int count = binomial(r1, k1) * binomial(nred, k2);
    if (count > Int(static_cast<unsigned long>(opts.max_minors)))
        fail(ErrorCode::CapExceeded, "bayer: " + count.get_str() + " minors exceed the cap");
    for_each_combination(static_cast<int>(r1), static_cast<int>(k1), [&](const std::vector<int>& A) {
        for_each_combination(static_cast<int>(nred), static_cast<int>(k2), [&](const std::vector<int>& Bc) {
            std::vector<int> cols = A;
            for (int b : Bc) cols.push_back(static_cast<int>(r1) + b);
            SparsePoly p = bayer_minor(L, es.vars, cols);
            record_raw(es.meta, p);
            es.equations.push_back(std::move(p));
            return true;
        });
        return true;
    });
    // one equation per column selection; distinct minors up to scalars are counted separately
    std::set<SparsePoly> distinct;
    for (const auto& p : es.equations)
        if (!p.is_zero()) distinct.insert(p.normalized());
    es.meta.info["distinct_up_to_scalar"] = std::to_string(distinct.size());
    es.meta.info["drop_rule"] = "largest dividing variable";
    es.canonicalize(false);
    return es;
}

EquationSet toric_binomials(const Grading& g, const std::vector<Degree>& D0, const EquationOptions& opts) {
    EquationSet es;
    es.meta.emitter = "toric";
    auto D = canonical_degrees(g, D0);
    for (const auto& a : D)
        for (const auto& b : D) {
            if (!before(g, a, b)) continue;
            auto Xa = finite_fiber(g, a);
            auto W = finite_fiber(g, g.sub(b, a));
            for (std::size_t i = 0; i < Xa.size(); ++i)
                for (std::size_t j = 0; j < Xa.size(); ++j) {
                    if (i == j) continue;
                    for (const auto& w : W) {
                        auto z = [&](const Degree& d, const Monomial& m) {
                            return SparsePoly::variable(es.vars.intern(toric_var(d, m)));
                        };
                        SparsePoly p = z(a, Xa[i]) * z(b, mul(Xa[j], w)) - z(a, Xa[j]) * z(b, mul(Xa[i], w));
                        record_raw(es.meta, p);
                        if (es.meta.raw_count > opts.max_equations)
                            fail(ErrorCode::CapExceeded, "toric binomials exceed the equation cap");
                        es.equations.push_back(std::move(p));
                    }
                }
        }
    es.canonicalize();
    return es;
}

StandardChoice standard_choice_of(const MonomialIdeal& I, const Grading& g, const std::vector<Degree>& D) {
    StandardChoice B;
    for (const auto& a : canonical_degrees(g, D)) B[a] = standard_monomials(I, g, a);
    return B;
}

EquationSet chart_equations(const Grading& g, const HilbertSpec& h, const std::vector<Degree>& D0,
                            const StandardChoice& B0, const EquationOptions& opts) {
    h.validate(g);
    EquationSet es;
    es.meta.emitter = "chart";
    auto D = canonical_degrees(g, D0);
    StandardChoice B;
    for (const auto& a : D) {
        auto it = B0.find(a);
        if (it == B0.end()) fail(ErrorCode::InvalidInput, "chart: no standard set given for degree " + a.str());
        auto S = it->second;
        std::sort(S.begin(), S.end(), std::greater<>());
        if (static_cast<long long>(S.size()) != h.value(g, a))
            fail(ErrorCode::InvalidInput, "chart: standard set size differs from h in degree " + a.str());
        auto X = finite_fiber(g, a);
        for (const auto& s : S)
            if (!std::binary_search(X.begin(), X.end(), s, std::greater<>()))
                fail(ErrorCode::InvalidInput, "chart: standard monomial of wrong degree in " + a.str());
        B[a] = S;
    }
    auto in_B = [&](const Degree& a, const Monomial& x) {
        const auto& S = B.at(a);
        return std::binary_search(S.begin(), S.end(), x, std::greater<>());
    };
    // coordinate gamma^x_b, with the delta convention on standard monomials
    auto coord = [&](const Degree& a, const Monomial& x, const Monomial& b) {
        if (in_B(a, x)) return SparsePoly::constant(x == b ? 1 : 0);
        return SparsePoly::variable(es.vars.intern(chart_var(x, b)));
    };
    for (const auto& a : D)
        for (const auto& x : B.at(a))
            for (const auto& b : B.at(a)) {
                SparsePoly p = SparsePoly::variable(es.vars.intern(chart_var(x, b))) -
                               SparsePoly::constant(x == b ? 1 : 0);
                record_raw(es.meta, p);
                es.equations.push_back(std::move(p));
            }
    for (const auto& a : D)
        for (const auto& c : D) {
            if (!before(g, a, c)) continue;
            auto X = finite_fiber(g, a);
            auto F = finite_fiber(g, g.sub(c, a));
            for (const auto& f : F)
                for (const auto& x : X)
                    for (const auto& b : B.at(c)) {
                        SparsePoly p = coord(c, mul(f, x), b);
                        for (const auto& bp : B.at(a)) p -= coord(a, x, bp) * coord(c, mul(f, bp), b);
                        if (p.is_zero()) continue;
                        record_raw(es.meta, p);
                        if (es.meta.raw_count > opts.max_equations)
                            fail(ErrorCode::CapExceeded, "chart equations exceed the equation cap");
                        es.equations.push_back(std::move(p));
                    }
        }
    es.canonicalize();
    return es;
}

Rat evaluate_at_monomial_point(const SparsePoly& p, const VarTable& vars, const MonomialIdeal& I, const Grading& g) {
    std::map<Degree, std::vector<Monomial>> std_cache;
    return p.evaluate([&](std::uint32_t v) -> Rat {
        const SymVar& s = vars.at(v);
        if (s.kind != VarKind::Bracket) return 0;
        auto it = std_cache.find(s.degree);
        if (it == std_cache.end()) it = std_cache.emplace(s.degree, standard_monomials(I, g, s.degree)).first;
        return it->second == s.monos ? 1 : 0;
    });
}

}  // namespace mhilb
