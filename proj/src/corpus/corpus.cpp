#include "corpus/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <optional>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "corpus/oracles.hpp"
#include "mhilb/enumeration.hpp"
#include "mhilb/equations.hpp"
#include "mhilb/error.hpp"
#include "mhilb/grothendieck.hpp"
#include "mhilb/io.hpp"
#include "mhilb/local_groebner.hpp"
#include "mhilb/supportive.hpp"
#include "mhilb/tangent.hpp"
#include "mhilb/toric.hpp"

namespace mhilb::corpus {

namespace {

struct Checker {
    std::vector<std::string> lines;
    bool ok = true;
    void check(bool c, const std::string& what) {
        lines.push_back(std::string(c ? "ok   " : "FAIL ") + what);
        ok = ok && c;
    }
};

Degree deg1(long long d) { return Degree{{d}, {}}; }
Degree deg2(long long a, long long b) { return Degree{{a, b}, {}}; }

Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    return make_rat(num(rng), den(rng));
}

std::vector<Rat> random_point(std::mt19937_64& rng, int n) {
    std::vector<Rat> p;
    for (int i = 0; i < n; ++i) p.push_back(random_rat(rng));
    return p;
}

std::vector<oracle::IVec> flat_columns(const Grading& g) {
    std::vector<oracle::IVec> cols;
    for (const auto& c : g.columns()) cols.push_back(c.free);
    return cols;
}

// Bracket point of a monomial ideal, computed from brute-force standard monomials.
Rat oracle_monomial_point(const SparsePoly& p, const VarTable& vars, const MonomialIdeal& I, const Grading& g) {
    auto cols = flat_columns(g);
    std::vector<std::vector<int>> gens(I.generators().begin(), I.generators().end());
    return p.evaluate([&](std::uint32_t id) -> Rat {
        const SymVar& v = vars.at(id);
        if (v.kind != VarKind::Bracket) return 0;
        return oracle::brute_force_standard(cols, v.degree.free, gens) == v.monos ? 1 : 0;
    });
}

// ---------------------------------------------------------------------------------------------
// 1. The Z-grading (1,1,-1) with h = 2.

void criterion_1(Checker& c) {
    Grading g = Grading::from_columns({{1}, {1}, {-1}});
    HilbertSpec h = HilbertSpec::constant_on_semigroup(2);
    std::vector<Degree> D = {deg1(0), deg1(1), deg1(2)};
    std::set<MonomialIdeal> want = {
        MonomialIdeal(3, {{2, 0, 2}, {0, 1, 0}}),          MonomialIdeal(3, {{2, 0, 0}, {0, 1, 1}}),
        MonomialIdeal(3, {{2, 0, 1}, {1, 1, 0}, {0, 1, 1}}), MonomialIdeal(3, {{2, 0, 1}, {0, 2, 0}, {0, 1, 1}}),
        MonomialIdeal(3, {{0, 2, 2}, {1, 0, 0}}),          MonomialIdeal(3, {{0, 2, 0}, {1, 0, 1}}),
        MonomialIdeal(3, {{0, 2, 1}, {1, 1, 0}, {1, 0, 1}}), MonomialIdeal(3, {{0, 2, 1}, {2, 0, 0}, {1, 0, 1}}),
    };
    auto res = enumerate_on(g, h, D);
    std::set<MonomialIdeal> got(res.ideals.begin(), res.ideals.end());
    c.check(got == want && res.ideals.size() == 8,
            "enumeration on D={0,1,2} returns the 8 listed ideals (got " + std::to_string(res.ideals.size()) + ")");
    SupportOptions o;
    o.mode = SyzygyMode::Exact;
    auto rep = check_conditions(g, h, D, o);
    c.check(rep.very_supportive() && rep.s_mode == SyzygyMode::Exact,
            std::string("D={0,1,2} very supportive with exact syzygies: g=") + verdict_name(rep.g) +
                " h=" + verdict_name(rep.h) + " h'=" + verdict_name(rep.h_prime) + " s=" + verdict_name(rep.s) +
                " (" + rep.verification + ")");
    bool all4 = true;
    std::string dims;
    for (const auto& I : want) {
        auto d = tangent_dimension(I, g);
        all4 = all4 && d == 4;
        dims += std::to_string(d) + " ";
    }
    c.check(all4, "tangent dimension 4 at every ideal: " + dims);
}

// ---------------------------------------------------------------------------------------------
// 2. The Z^2-grading (1,0),(1,1),(0,1) with nine standard monomials.

void criterion_2(Checker& c) {
    Grading g = Grading::from_columns({{1, 0}, {1, 1}, {0, 1}});
    std::map<Degree, long long> table = {{deg2(2, 2), 1}, {deg2(2, 1), 1}, {deg2(1, 2), 1}, {deg2(2, 0), 1},
                                         {deg2(1, 1), 2}, {deg2(1, 0), 1}, {deg2(0, 1), 1}, {deg2(0, 0), 1}};
    HilbertSpec h = HilbertSpec::zero_outside(table);
    auto rep = compute_very_supportive(g, h);
    MonomialIdeal I0(3, {{3, 0, 0}, {1, 2, 0}, {2, 1, 0}, {0, 3, 0}, {2, 0, 1}, {1, 1, 1}, {0, 2, 1}, {0, 0, 2}});
    MonomialIdeal Ia(3, {{3, 0, 0}, {1, 2, 0}, {2, 1, 0}, {0, 3, 0}, {1, 1, 0}, {1, 1, 1}, {0, 2, 1}, {0, 0, 2}});
    MonomialIdeal Ib(3, {{3, 0, 0}, {1, 2, 0}, {2, 1, 0}, {0, 3, 0}, {2, 0, 1}, {0, 2, 0}, {0, 2, 1}, {0, 0, 2}});
    std::set<MonomialIdeal> want = {I0, Ia, Ib};
    std::set<MonomialIdeal> got(rep.ideals.begin(), rep.ideals.end());
    c.check(rep.very_supportive() && got == want,
            "very supportive D (" + std::to_string(rep.D.size()) + " degrees) gives the 3 fixed points of the family (got " +
                std::to_string(rep.ideals.size()) + ")");
    bool colength9 = true;
    for (const auto& I : rep.ideals) {
        HilbertCounter hc(I, g);
        colength9 = colength9 && hc.finite() && hc.cones().size() == 9;
    }
    c.check(colength9, "each ideal has colength 9");

    auto B = standard_choice_of(I0, g, rep.D);
    auto es = chart_equations(g, h, rep.D, B);
    c.check(!es.equations.empty(), "chart at the intersection point has " + std::to_string(es.equations.size()) + " relations");
    const Monomial x2z{2, 0, 1}, xy{1, 1, 0}, xyz{1, 1, 1}, y2{0, 2, 0};
    int mismatches = 0;
    for (int al = -2; al <= 2; ++al)
        for (int be = -2; be <= 2; ++be) {
            // I(a,b) = I0 with x^2 z replaced by x^2 z - a xy and xyz by xyz - b y^2
            auto value = [&](std::uint32_t id) -> Rat {
                const SymVar& v = es.vars.at(id);
                const Monomial& x = v.monos.at(0);
                const Monomial& b = v.monos.at(1);
                if (x == x2z && b == xy) return al;
                if (x == xyz && b == y2) return be;
                for (const auto& [a, S] : B)
                    if (std::find(S.begin(), S.end(), x) != S.end()) return x == b ? 1 : 0;
                return 0;
            };
            bool vanish = true;
            for (const auto& p : es.equations)
                if (p.evaluate(value) != 0) {
                    vanish = false;
                    break;
                }
            if (vanish != (al * be == 0)) ++mismatches;
        }
    c.check(mismatches == 0, "chart relations vanish on the 25-point grid exactly when a1*b1 = 0 (" +
                                 std::to_string(mismatches) + " mismatches)");
}

// ---------------------------------------------------------------------------------------------
// 3. Two points in the plane: quadratic equations on D={2,3}.

void criterion_3(Checker& c) {
    Grading g = Grading::standard(3);
    HilbertSpec h = hilbert_function_from_polynomial({UPoly::constant(2), 3});
    auto es = quadratic_equations(g, h, {deg1(2), deg1(3)});
    std::map<std::size_t, std::size_t> by_terms;
    for (const auto& p : es.equations) ++by_terms[p.num_terms()];
    c.check(es.equations.size() == 600, "600 equations after dedup (got " + std::to_string(es.equations.size()) + ")");
    c.check(by_terms[2] == 180 && by_terms[3] == 420 && by_terms.size() == 2,
            "180 two-term and 420 three-term (got " + std::to_string(by_terms[2]) + " and " +
                std::to_string(by_terms[3]) + ")");
    const Monomial x2z{2, 0, 1}, xy2{1, 2, 0}, xyz{1, 1, 1}, y2z{0, 2, 1}, yz{0, 1, 1}, xy{1, 1, 0}, xz{1, 0, 1};
    VarTable vars = es.vars;
    auto br = [&](long long d, const Monomial& a, const Monomial& b) { return bracket_poly(vars, deg1(d), {a, b}); };
    SparsePoly two = br(3, xy2, xyz) * br(2, yz, xy) + br(3, xy2, y2z) * br(2, xy, xz);
    SparsePoly three = br(3, x2z, xy2) * br(2, xz, yz) + br(3, x2z, xyz) * br(2, yz, xy) + br(3, x2z, y2z) * br(2, xy, xz);
    std::set<SparsePoly> all(es.equations.begin(), es.equations.end());
    bool same_vars = vars.size() == es.vars.size();
    c.check(same_vars && all.count(two.normalized()), "displayed two-term relation present up to sign");
    c.check(same_vars && all.count(three.normalized()), "displayed three-term relation present up to sign");
    std::mt19937_64 rng(3);
    int bad = 0, bad_all = 0;
    for (int trial = 0; trial < 20; ++trial) {
        auto p1 = random_point(rng, 3), p2 = random_point(rng, 3);
        auto value = [&](const VarTable& t) {
            return [&, p1, p2](std::uint32_t id) {
                const auto& m = t.at(id).monos;
                return oracle::two_point_bracket(m.at(0), m.at(1), p1, p2);
            };
        };
        if (two.evaluate(value(vars)) != 0 || three.evaluate(value(vars)) != 0) ++bad;
        for (const auto& p : es.equations)
            if (p.evaluate(value(es.vars)) != 0) ++bad_all;
    }
    c.check(bad == 0, "both displayed relations vanish at 20 random pairs of distinct points");
    c.check(bad_all == 0, "all 600 equations vanish at the same 20 pairs (" + std::to_string(bad_all) + " failures)");
}

// ---------------------------------------------------------------------------------------------
// 4. Bayer equations for two points in the plane.

void criterion_4(Checker& c) {
    BayerLayout L = bayer_layout(3, 2, 2, 2);
    const std::size_t rows = static_cast<std::size_t>(L.n) * (L.X.size() - static_cast<std::size_t>(L.h));
    c.check(rows == 12 && L.Xnext.size() == 10, "Omega-hat is " + std::to_string(rows) + "x" + std::to_string(L.Xnext.size()));
    c.check(L.reduced.size() == 8, "reduced tensor matrix is " + std::to_string(rows) + "x" + std::to_string(L.reduced.size()));
    c.check(L.Xnext.size() + L.reduced.size() == 18, "concatenation is 12x18");
    // columns of the displayed reduced matrix: (variable, base monomial)
    const Monomial a2{1, 1, 0}, a3{1, 0, 1}, a4{0, 2, 0}, a5{0, 1, 1}, a6{0, 0, 2};
    std::vector<std::pair<int, Monomial>> displayed = {{0, a2}, {0, a3}, {0, a4}, {0, a5},
                                                       {1, a3}, {0, a6}, {1, a5}, {1, a6}};
    c.check(L.reduced == displayed, "reduced columns match the displayed matrix");

    auto es = bayer_equations(3, 2, 2, 2);
    c.check(es.equations.size() == 560, "560 equations (got " + std::to_string(es.equations.size()) + ", " +
                                            es.meta.info["distinct_up_to_scalar"] + " distinct up to scalars)");
    bool homogeneous = true;
    for (const auto& p : es.equations)
        for (const auto& [m, coef] : p.terms()) {
            homogeneous = homogeneous && mono_degree(m) == 3;
            for (const auto& [v, e] : m) homogeneous = homogeneous && es.vars.at(v).kind == VarKind::Bracket;
        }
    c.check(homogeneous, "every equation is homogeneous of degree 3 in the brackets");

    // brackets from Stiefel coordinates: [T] = sign(T) det Omega_{X - T}
    std::vector<std::vector<int>> X(L.X.begin(), L.X.end());
    auto bracket_from_stiefel = [&](const oracle::RMat& Om, const std::vector<Monomial>& T) -> Rat {
        std::vector<std::size_t> comp;
        std::vector<int> pos;
        for (std::size_t i = 0; i < X.size(); ++i) {
            if (std::find(T.begin(), T.end(), X[i]) != T.end()) pos.push_back(static_cast<int>(i));
            else comp.push_back(i);
        }
        oracle::RMat sub(Om.size(), std::vector<Rat>(comp.size()));
        for (std::size_t r = 0; r < Om.size(); ++r)
            for (std::size_t k = 0; k < comp.size(); ++k) sub[r][k] = Om[r][comp[k]];
        return Rat(stiefel_sign(pos, static_cast<std::size_t>(L.h))) * oracle::det(sub);
    };
    std::mt19937_64 rng(4);
    int bad = 0, not_proportional = 0;
    for (int trial = 0; trial < 20; ++trial) {
        auto p1 = random_point(rng, 3), p2 = random_point(rng, 3);
        auto Om = oracle::two_point_kernel(X, p1, p2);
        // the Stiefel brackets are proportional to the 2x2 evaluation minors
        std::optional<Rat> ratio;
        for (std::size_t i = 0; i < X.size(); ++i)
            for (std::size_t j = i + 1; j < X.size(); ++j) {
                Rat s = bracket_from_stiefel(Om, {L.X[i], L.X[j]});
                Rat e = oracle::two_point_bracket(X[i], X[j], p1, p2);
                if (e == 0 && s == 0) continue;
                if (e == 0 || s == 0) {
                    ++not_proportional;
                    continue;
                }
                if (!ratio) ratio = s / e;
                else if (*ratio != s / e) ++not_proportional;
            }
        for (const auto& p : es.equations)
            if (p.evaluate([&](std::uint32_t id) { return bracket_from_stiefel(Om, es.vars.at(id).monos); }) != 0) ++bad;
    }
    c.check(not_proportional == 0, "Stiefel brackets of two points agree with the evaluation minors up to a scalar");
    c.check(bad == 0, "all equations vanish at 20 random pairs of points (" + std::to_string(bad) + " failures)");

    // each selected minor against a direct numeric determinant for a generic Omega
    int minor_mismatch = 0;
    for (int trial = 0; trial < 2; ++trial) {
        oracle::RMat Om(4, std::vector<Rat>(6));
        for (auto& row : Om)
            for (auto& x : row) x = random_rat(rng);
        auto index_of = [&](const Monomial& m) {
            return static_cast<std::size_t>(std::find(X.begin(), X.end(), m) - X.begin());
        };
        std::vector<std::vector<Rat>> columns;  // 12-vectors: Omega-hat then displayed reduced columns
        for (const auto& M : L.Xnext) {
            std::vector<Rat> col(12, Rat(0));
            for (int i = 0; i < 3; ++i) {
                if (M[static_cast<std::size_t>(i)] == 0) continue;
                Monomial b = M;
                --b[static_cast<std::size_t>(i)];
                for (std::size_t k = 0; k < 4; ++k) col[static_cast<std::size_t>(i) * 4 + k] = Om[k][index_of(b)];
            }
            columns.push_back(col);
        }
        for (const auto& [i, b] : displayed) {
            std::vector<Rat> col(12, Rat(0));
            for (std::size_t k = 0; k < 4; ++k) col[static_cast<std::size_t>(i) * 4 + k] = Om[k][index_of(b)];
            columns.push_back(col);
        }
        VarTable vt;
        std::vector<int> sel(12);
        for (int skip = 0; skip < 10; ++skip)
            for (int a = 0; a < 8; ++a)
                for (int b = a + 1; b < 8; ++b)
                    for (int d = b + 1; d < 8; ++d) {
                        sel.clear();
                        for (int k = 0; k < 10; ++k)
                            if (k != skip) sel.push_back(k);
                        for (int k : {a, b, d}) sel.push_back(10 + k);
                        oracle::RMat M(12, std::vector<Rat>(12));
                        for (std::size_t r = 0; r < 12; ++r)
                            for (std::size_t k = 0; k < 12; ++k) M[r][k] = columns[static_cast<std::size_t>(sel[k])][r];
                        SparsePoly p = bayer_minor(L, vt, sel);
                        Rat v = p.evaluate([&](std::uint32_t id) { return bracket_from_stiefel(Om, vt.at(id).monos); });
                        if (v != oracle::det(M)) ++minor_mismatch;
                    }
    }
    c.check(minor_mismatch == 0, "Laplace-expanded minors equal direct 12x12 determinants for generic Omega (" +
                                     std::to_string(minor_mismatch) + " mismatches)");

    Grading g = Grading::standard(3);
    HilbertSpec h = hilbert_function_from_polynomial({UPoly::constant(2), 3});
    auto C = enumerate_on(g, h, {deg1(2), deg1(3)}).ideals;
    int mono_bad = 0;
    for (const auto& I : C)
        for (const auto& p : es.equations)
            if (oracle_monomial_point(p, es.vars, I, g) != 0) ++mono_bad;
    c.check(!C.empty() && mono_bad == 0, "all equations vanish at the bracket points of the " +
                                             std::to_string(C.size()) + " monomial ideals");
}

// ---------------------------------------------------------------------------------------------
// 5. Twisted cubic.

void criterion_5(Checker& c) {
    Grading g = Grading::standard(2);
    HilbertSpec h = HilbertSpec::polynomial_tail(UPoly::constant(1), 0, 2);
    auto G = gamma_matrix(g, h, {deg1(3)}, deg1(4));
    c.check(G.matrix.rows() == 12 && G.matrix.cols() == 5,
            "Gamma is " + std::to_string(G.matrix.rows()) + "x" + std::to_string(G.matrix.cols()));
    auto es = determinantal_equations(g, h, {deg1(3)}, deg1(4));
    VarTable vars = es.vars;
    SparsePoly s = SparsePoly::variable(vars.intern(named_var("s")));
    SparsePoly t = SparsePoly::variable(vars.intern(named_var("t")));
    auto power = [](const SparsePoly& x, int k) {
        SparsePoly r = SparsePoly::constant(1);
        for (int i = 0; i < k; ++i) r = r * x;
        return r;
    };
    auto veronese = [&](const Monomial& m) { return power(s, m[0]) * power(t, m[1]); };
    bool vanish = true;
    for (const auto& p : es.equations)
        vanish = vanish && p.substitute([&](std::uint32_t id) { return veronese(es.vars.at(id).monos.at(0)); }).is_zero();
    c.check(!es.equations.empty() && vanish,
            std::to_string(es.equations.size()) + " distinct 5x5 minors vanish identically on the parametrization");
    // (c123 : c124 : c134 : c234) = (1:0:0:1); [x^3] = c234, [x^2y] = -c134, [xy^2] = c124, [y^3] = -c123
    std::map<Monomial, Rat> off = {{{3, 0}, 1}, {{2, 1}, 0}, {{1, 2}, 0}, {{0, 3}, -1}};
    std::size_t nonzero = 0;
    for (const auto& p : es.equations)
        if (p.evaluate([&](std::uint32_t id) { return off.at(es.vars.at(id).monos.at(0)); }) != 0) ++nonzero;
    c.check(nonzero > 0, std::to_string(nonzero) + " minors are nonzero at the off-curve point (1:0:0:1)");
    SparsePoly c234 = veronese({3, 0}), c134 = -veronese({2, 1}), c124 = veronese({1, 2}), c123 = -veronese({0, 3});
    bool quadrics = (c134 * c124 - c123 * c234).is_zero() && (c124 * c124 - c123 * c134).is_zero() &&
                    (c134 * c134 - c124 * c234).is_zero();
    c.check(quadrics, "the three displayed quadrics vanish on the parametrization");
}

// ---------------------------------------------------------------------------------------------
// 6. Gotzmann numbers.

void criterion_6(Checker& c) {
    c.check(gotzmann_number({UPoly::constant(2), 3}) == 2, "two points in the plane: d0 = 2");
    for (int m = 1; m <= 5; ++m) {
        long d0 = gotzmann_number({UPoly::constant(m), 3});
        int reg = oracle::monomial_regularity(3, oracle::saturated_lex_ideal(UPoly::constant(m), 3, 12));
        c.check(d0 == m && reg == m, "g = " + std::to_string(m) + ": d0 = " + std::to_string(d0) +
                                         ", lex ideal regularity " + std::to_string(reg));
    }
    std::vector<HilbertPolynomial> polys = {{UPoly::constant(2), 3}, {UPoly::parse("d+1"), 3},
                                            {UPoly::parse("3d+1"), 4}, {UPoly::parse("2d+2"), 4}};
    for (int m = 1; m <= 5; ++m) polys.push_back({UPoly::constant(m), 3});
    for (const auto& hp : polys) {
        long d0 = gotzmann_number(hp);
        HilbertSpec h = hilbert_function_from_polynomial(hp);
        Grading g = Grading::standard(hp.n);
        bool round = macaulay_representation(hp.g).evaluate() == hp.g;
        for (long d = d0; d <= d0 + 5; ++d) round = round && Int(static_cast<long>(h.value(g, deg1(d)))) == hp.g.eval_int(d);
        c.check(round, "g = " + hp.g.str() + ": representation and Hilbert function agree with g on [d0, d0+5]");
    }
    for (const auto& [text, n] : std::vector<std::pair<std::string, int>>{{"d+1", 3}, {"3d+1", 4}, {"2d+2", 4}}) {
        UPoly g = UPoly::parse(text);
        long d0 = gotzmann_number({g, n});
        int reg = oracle::monomial_regularity(n, oracle::saturated_lex_ideal(g, n, 12));
        c.check(d0 == reg, "g = " + text + ": d0 = " + std::to_string(d0) + ", lex ideal regularity " + std::to_string(reg));
    }
}

// ---------------------------------------------------------------------------------------------
// 7. Toric predicates.

void criterion_7(Checker& c) {
    auto graver_matches = [&](const std::vector<std::vector<long long>>& cols, const std::string& name) {
        Grading g = Grading::from_columns(cols);
        auto gb = graver_basis(kernel_lattice(g), g.n());
        std::set<oracle::IVec> got(gb.begin(), gb.end());
        auto want = oracle::brute_force_graver(cols, 6);
        c.check(got == want, name + ": Graver basis matches brute force over |u|_1 <= 6 (" +
                                 std::to_string(got.size()) + " elements)");
        return got;
    };
    auto g12 = graver_matches({{1}, {2}}, "deg = (1,2)");
    c.check(g12 == std::set<oracle::IVec>{{2, -1}}, "deg = (1,2): Graver basis is {x^2 - y}");
    auto gs = graver_matches({{1}, {1}}, "standard n=2");
    c.check(gs == std::set<oracle::IVec>{{1, -1}}, "standard n=2: Graver basis is {x - y}");

    Grading g = Grading::from_columns({{1}, {2}});
    auto gd = graver_degrees(g);
    std::vector<Degree> D(gd.begin(), gd.end());
    auto rep = check_conditions(g, HilbertSpec::constant_on_semigroup(1), D);
    c.check(rep.g == Verdict::Pass && rep.h_prime == Verdict::Pass,
            std::string("Graver degrees pass (g) and (h'): g=") + verdict_name(rep.g) + " h'=" + verdict_name(rep.h_prime));

    Grading e = Grading::from_columns({{1, 0}, {1, 0}, {0, 1}, {2, 1}});
    int prime_bad = 0, integral_bad = 0;
    std::vector<Degree> grid;
    for (long long al = 0; al <= 6; ++al)
        for (long long be = 0; be <= 6; ++be) {
            Degree a = deg2(al, be);
            grid.push_back(a);
            if (is_prime_degree(e, a) != (al >= 2 * be)) ++prime_bad;
            if (is_integral_degree(e, a) != (al >= 2 * be || al % 2 == 0)) ++integral_bad;
        }
    c.check(prime_bad == 0, "prime degrees on the 7x7 grid are exactly alpha >= 2 beta");
    c.check(integral_bad == 0, "integral degrees on the 7x7 grid are exactly alpha >= 2 beta or alpha even");
    c.check(!is_unimodular(e), "the grading is not unimodular");
    c.check(supernormal_on(e, grid).supernormal_on_sample(), "no prime non-integral degree on the grid");
}

// ---------------------------------------------------------------------------------------------
// 8. Local Groebner criterion.

LocalPoly make_poly(const LocalRing& R, int n, const std::vector<std::pair<Int, Monomial>>& terms) {
    LocalPoly f;
    f.n = n;
    for (const auto& [c, e] : terms) f.add_term(R, e, R.from_int(c));
    return f;
}

std::vector<std::vector<LocalPoly>> groebner_sets(const LocalRing& R) {
    const Int p = Int(R.prime());
    const Monomial x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1}, one{0, 0, 0};
    auto m = [](int a, int b, int c) { return Monomial{a, b, c}; };
    auto P = [&](std::vector<std::pair<Int, Monomial>> t) { return make_poly(R, 3, t); };
    return {
        {P({{1, x}}), P({{1, y}})},
        {P({{1, m(2, 0, 0)}}), P({{1, m(1, 1, 0)}}), P({{1, m(0, 3, 0)}})},
        {P({{1, x}, {-p, y}}), P({{1, y}})},
        {P({{1, x}, {p, m(0, 2, 0)}})},
        {P({{1, m(2, 0, 0)}, {p, y}}), P({{1, m(0, 2, 0)}, {p, x}})},
        {P({{1, x}, {-p * p, y}, {-p, z}}), P({{1, y}, {-p, z}}), P({{1, z}})},
        {P({{1, m(2, 0, 0)}, {-p, y}}), P({{1, m(1, 1, 0)}}), P({{1, m(0, 2, 0)}})},
        {P({{1, m(3, 0, 0)}, {-p, m(0, 2, 0)}}), P({{1, m(0, 2, 0)}, {-p, z}}), P({{1, m(0, 0, 2)}})},
        {P({{1, m(2, 0, 0)}, {p, m(1, 1, 0)}}), P({{1, y}})},
        {P({{1, m(1, 1, 0)}, {-p, z}}), P({{1, z}}), P({{1, m(2, 0, 0)}})},
    };
}

LocalPoly random_combination(const LocalRing& R, const std::vector<LocalPoly>& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> terms(1, 4), coef(-20, 20), e(0, 2);
    std::uniform_int_distribution<std::size_t> pick(0, F.size() - 1);
    LocalPoly s;
    s.n = 3;
    int k = terms(rng);
    for (int i = 0; i < k; ++i) {
        Monomial h{e(rng), e(rng), e(rng)};
        s = local_add(R, s, local_shift(R, F[pick(rng)], R.from_int(coef(rng)), h));
    }
    return s;
}

void criterion_8(Checker& c) {
    std::mt19937_64 rng(8);
    int failures = 0, property_failures = 0, monotone_failures = 0;
    std::size_t samples = 0;
    for (long p : {2L, 3L, 5L}) {
        std::vector<bool> prev;
        for (int m = 1; m <= 4; ++m) {
            LocalRing R = LocalRing::integers_at(p, m);
            auto sets = groebner_sets(R);
            std::vector<bool> now;
            for (std::size_t k = 0; k < sets.size(); ++k) {
                auto res = buchberger_check(R, sets[k], TermOrder::Lex);
                now.push_back(res.groebner);
                if (!res.groebner) ++failures;
                MonomialIdeal in = initial_ideal(R, sets[k], TermOrder::Lex);
                for (int s = 0; s < 200; ++s) {
                    LocalPoly q = random_combination(R, sets[k], rng);
                    ++samples;
                    if (q.is_zero()) continue;
                    if (!in.contains(initial_term(R, q, TermOrder::Lex).exponent)) ++property_failures;
                }
            }
            for (std::size_t k = 0; k < prev.size(); ++k)
                if (prev[k] && !now[k]) ++monotone_failures;
            prev = now;
        }
    }
    c.check(failures == 0, "Buchberger criterion holds for 10 sets over Z_(p), p in {2,3,5}, m in 1..4 (" +
                               std::to_string(failures) + " failures)");
    c.check(property_failures == 0, std::to_string(samples) + " random ideal elements have initial terms in <in(F)> (" +
                                        std::to_string(property_failures) + " failures)");
    c.check(monotone_failures == 0, "raising m never turns a passing check into a failing one");
    LocalRing R = LocalRing::integers_at(3, 3);
    auto bad = {make_poly(R, 3, {{1, {1, 1, 0}}, {-3, {0, 0, 0}}}), make_poly(R, 3, {{1, {2, 0, 0}}})};
    auto res = buchberger_check(R, std::vector<LocalPoly>(bad), TermOrder::Lex);
    c.check(!res.groebner && res.failing_pair == std::make_pair(std::size_t{0}, std::size_t{1}),
            "{xy - 3, x^2} over Z_(3) mod 27 fails with pair (0,1), remainder " + res.failing_remainder.str(R));
}

// ---------------------------------------------------------------------------------------------
// 9. Randomized global properties.

struct RandomProblem {
    Grading g;
    MonomialIdeal J;
    HilbertSpec h;
};

std::optional<RandomProblem> draw_problem(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nd(2, 4), rd(1, 2), ed(1, 3);
    int n = nd(rng), r = rd(rng);
    std::vector<std::vector<long long>> cols;
    for (int i = 0; i < n; ++i) {
        std::vector<long long> col;
        do {
            col.clear();
            for (int k = 0; k < r; ++k) col.push_back(std::uniform_int_distribution<int>(r == 1 ? 1 : 0, 2)(rng));
        } while (std::all_of(col.begin(), col.end(), [](long long v) { return v == 0; }));
        cols.push_back(col);
    }
    try {
        Grading g = Grading::from_columns(cols);
        std::vector<Monomial> gens;
        Monomial top(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            top[static_cast<std::size_t>(i)] = ed(rng);
            Monomial m(static_cast<std::size_t>(n), 0);
            m[static_cast<std::size_t>(i)] = top[static_cast<std::size_t>(i)];
            gens.push_back(m);
        }
        int extra = std::uniform_int_distribution<int>(0, 2)(rng);
        for (int k = 0; k < extra; ++k) {
            Monomial m(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                m[static_cast<std::size_t>(i)] = std::uniform_int_distribution<int>(0, top[static_cast<std::size_t>(i)] - 1)(rng);
            if (total_degree(m) > 0) gens.push_back(m);
        }
        MonomialIdeal J(n, gens);
        return RandomProblem{g, J, hilbert_spec_of_artinian(J, g)};
    } catch (const Error&) {
        return std::nullopt;
    }
}

struct PipelineOutput {
    SupportReport supportive, very;
    EquationSet quadratic, determinantal;
    std::string artifact;
};

PipelineOutput run_pipeline(const RandomProblem& P) {
    PipelineOutput out;
    out.supportive = compute_supportive(P.g, P.h);
    out.very = compute_very_supportive(P.g, P.h);
    EquationOptions caps;
    caps.max_equations = 20000;
    caps.max_minors = 5000;
    out.quadratic = quadratic_equations(P.g, P.h, out.very.D, caps);
    auto order = processing_order(P.g, out.very.D);
    out.determinantal = determinantal_equations(P.g, P.h, out.very.D, order.back(), caps);
    io::json j{{"supportive", io::support_report_to_json(out.supportive)},
               {"very", io::support_report_to_json(out.very)},
               {"quadratic", io::equations_to_json(out.quadratic)},
               {"determinantal", io::equations_to_json(out.determinantal)}};
    out.artifact = j.dump();
    return out;
}

void criterion_9(Checker& c) {
    std::mt19937_64 rng(9);
    int accepted = 0, rejected = 0;
    int monotone_bad = 0, antichain_bad = 0, contains_bad = 0, hilbert_bad = 0, vanish_bad = 0, determinism_bad = 0;
    std::size_t equations = 0, points = 0;
    while (accepted < 30) {
        auto P = draw_problem(rng);
        if (!P) {
            ++rejected;
            continue;
        }
        PipelineOutput out;
        try {
            out = run_pipeline(*P);
        } catch (const Error& e) {
            if (exit_status_for(e.code()) != 3) throw;
            ++rejected;  // over the equation caps
            continue;
        }
        ++accepted;
        std::set<Degree> Ds(out.supportive.D.begin(), out.supportive.D.end());
        std::set<Degree> Dv(out.very.D.begin(), out.very.D.end());
        bool mono = out.supportive.supportive() && out.very.very_supportive() &&
                    std::includes(Dv.begin(), Dv.end(), Ds.begin(), Ds.end()) &&
                    check_conditions(P->g, P->h, out.very.D).very_supportive();
        if (!mono) ++monotone_bad;
        const auto& C = out.very.ideals;
        std::set<MonomialIdeal> distinct(C.begin(), C.end());
        if (distinct.size() != C.size()) ++antichain_bad;
        for (const auto& I : C) {
            const auto& gens = I.generators();
            for (std::size_t a = 0; a < gens.size(); ++a)
                for (std::size_t b = 0; b < gens.size(); ++b)
                    if (a != b && divides(gens[a], gens[b])) ++antichain_bad;
        }
        if (!distinct.count(P->J)) ++contains_bad;
        auto cols = flat_columns(P->g);
        for (const auto& I : C) {
            std::vector<std::vector<int>> gens(I.generators().begin(), I.generators().end());
            for (const auto& [a, v] : P->h.table)
                if (static_cast<long long>(oracle::brute_force_standard(cols, a.free, gens).size()) != v) ++hilbert_bad;
            for (const auto& a : out.very.D)
                if (static_cast<long long>(oracle::brute_force_standard(cols, a.free, gens).size()) != P->h.value(P->g, a))
                    ++hilbert_bad;
        }
        for (const EquationSet* es : {&out.quadratic, &out.determinantal}) {
            equations += es->equations.size();
            for (const auto& I : C) {
                ++points;
                for (const auto& p : es->equations)
                    if (oracle_monomial_point(p, es->vars, I, P->g) != 0) ++vanish_bad;
            }
        }
        if (run_pipeline(*P).artifact != out.artifact) ++determinism_bad;
    }
    c.check(monotone_bad == 0, "supportive D is contained in the very supportive D, which passes all conditions (" +
                                   std::to_string(monotone_bad) + " failures)");
    c.check(antichain_bad == 0, "enumerated ideals are distinct with antichain generators");
    c.check(contains_bad == 0, "the ideal inducing h is among the enumerated ideals");
    c.check(hilbert_bad == 0, "every enumerated ideal has Hilbert function h (brute-force count)");
    c.check(vanish_bad == 0, std::to_string(equations) + " emitted equations vanish at every monomial bracket point (" +
                                 std::to_string(vanish_bad) + " failures)");
    c.check(determinism_bad == 0, "artifacts are byte-identical across reruns");
    c.check(accepted == 30, "30 problems checked (" + std::to_string(rejected) + " draws rejected: invalid grading or over caps)");
}

struct Spec {
    int id;
    const char* title;
    double limit;
    void (*run)(Checker&);
};

const std::vector<Spec>& specs() {
    static const std::vector<Spec> s = {
        {1, "grading (1,1,-1), h=2: eight ideals, very supportive, tangent dimension 4", 10, criterion_1},
        {2, "Z^2 grading with nine points: three fixed points, chart vanishing iff a1*b1=0", 30, criterion_2},
        {3, "two points in the plane: 600 quadratic equations (180/420)", 60, criterion_3},
        {4, "Bayer construction: shapes, 560 cubic equations, vanishing", 300, criterion_4},
        {5, "twisted cubic: determinantal minors and quadrics", 10, criterion_5},
        {6, "Gotzmann numbers against lex ideal regularity", 5, criterion_6},
        {7, "Graver bases, prime and integral degrees, unimodularity", 60, criterion_7},
        {8, "local Groebner criterion property suite", 30, criterion_8},
        {9, "randomized global properties on 30 positive gradings", 600, criterion_9},
    };
    return s;
}

}  // namespace

std::vector<int> criterion_ids() {
    std::vector<int> ids;
    for (const auto& s : specs()) ids.push_back(s.id);
    return ids;
}

CriterionResult run_criterion(int id) {
    for (const auto& s : specs()) {
        if (s.id != id) continue;
        CriterionResult r;
        r.id = s.id;
        r.title = s.title;
        r.limit_seconds = s.limit;
        Checker c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            s.run(c);
        } catch (const std::exception& e) {
            c.check(false, std::string("exception: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.check(r.seconds < r.limit_seconds, "runtime within limit");
        r.pass = c.ok;
        r.checks = c.lines;
        return r;
    }
    fail(ErrorCode::InvalidInput, "no acceptance criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_all() {
    std::vector<CriterionResult> out;
    for (int id : criterion_ids()) out.push_back(run_criterion(id));
    return out;
}

std::string summary_line(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << " (" << std::fixed;
    os.precision(2);
    os << r.seconds << " s / limit " << static_cast<long>(r.limit_seconds) << " s)";
    return os.str();
}

std::string corpus_dir() {
    if (const char* d = std::getenv("MHILB_CORPUS_DIR")) return d;
    return MHILB_CORPUS_DIR;
}

}  // namespace mhilb::corpus
