#include "corpus/oracles.hpp"
#include "doctest.h"
#include "mhilb/enumeration.hpp"
#include "mhilb/equations.hpp"
#include "mhilb/error.hpp"
#include "mhilb/grothendieck.hpp"
#include "mhilb/io.hpp"
#include "mhilb/supportive.hpp"

using namespace mhilb;

namespace {

Degree d1(long long a) { return Degree{{a}, {}}; }

HilbertSpec two_points() { return hilbert_function_from_polynomial({UPoly::constant(2), 3}); }

// Bracket point from brute-force standard monomials.
Rat oracle_point(const SparsePoly& p, const VarTable& vars, const MonomialIdeal& I, const Grading& g) {
    std::vector<std::vector<long long>> cols;
    for (const auto& c : g.columns()) cols.push_back(c.free);
    std::vector<std::vector<int>> gens(I.generators().begin(), I.generators().end());
    return p.evaluate([&](std::uint32_t id) -> Rat {
        const SymVar& v = vars.at(id);
        if (v.kind != VarKind::Bracket) return 0;
        return oracle::brute_force_standard(cols, v.degree.free, gens) == v.monos ? 1 : 0;
    });
}

void check_fixed_points(const EquationSet& es, const std::vector<MonomialIdeal>& C, const Grading& g) {
    REQUIRE_FALSE(C.empty());
    std::size_t bad = 0, disagree = 0;
    for (const auto& I : C)
        for (const auto& p : es.equations) {
            Rat v = oracle_point(p, es.vars, I, g);
            bad += v != 0;
            disagree += v != evaluate_at_monomial_point(p, es.vars, I, g);
        }
    CHECK(bad == 0);
    CHECK(disagree == 0);
}

}  // namespace

TEST_CASE("two points: 600 quadratic equations") {
    auto es = quadratic_equations(Grading::standard(3), two_points(), {d1(2), d1(3)});
    CHECK(es.equations.size() == 600);
    std::size_t two = 0, three = 0;
    for (const auto& p : es.equations) {
        two += p.num_terms() == 2;
        three += p.num_terms() == 3;
    }
    CHECK(two == 180);
    CHECK(three == 420);
    CHECK(es.meta.raw_count >= 600);
}

TEST_CASE("quadratic equations are bilinear in the two degrees") {
    auto es = quadratic_equations(Grading::standard(3), two_points(), {d1(2), d1(3)});
    for (const auto& p : es.equations)
        for (const auto& [m, c] : p.terms()) {
            REQUIRE(mono_degree(m) == 2);
            int deg2 = 0, deg3 = 0;
            for (const auto& [v, e] : m) {
                const SymVar& s = es.vars.at(v);
                CHECK(s.kind == VarKind::Bracket);
                deg2 += (s.degree == d1(2)) * static_cast<int>(e);
                deg3 += (s.degree == d1(3)) * static_cast<int>(e);
            }
            CHECK(deg2 == 1);
            CHECK(deg3 == 1);
        }
}

TEST_CASE("emission is deterministic and canonicalization idempotent") {
    auto a = quadratic_equations(Grading::standard(3), two_points(), {d1(2), d1(3)});
    auto b = quadratic_equations(Grading::standard(3), two_points(), {d1(2), d1(3)});
    CHECK(io::equations_to_json(a).dump() == io::equations_to_json(b).dump());
    auto c = a;
    c.canonicalize();
    CHECK(c.equations == a.equations);
    CHECK(c.vars.vars() == a.vars.vars());
}

TEST_CASE("full fibers give no quadratic equations") {
    Grading g = Grading::standard(2);
    std::map<Degree, long long> t = {{d1(0), 1}, {d1(1), 2}, {d1(2), 3}};
    auto h = HilbertSpec::zero_outside(t);
    CHECK(quadratic_equations(g, h, {d1(1), d1(2)}).equations.empty());
}

TEST_CASE("fixed points annihilate quadratic, determinantal and Bayer equations") {
    Grading g = Grading::standard(3);
    auto h = two_points();
    auto C = enumerate_on(g, h, {d1(2), d1(3)}).ideals;
    CHECK(C.size() == 9);
    check_fixed_points(quadratic_equations(g, h, {d1(2), d1(3)}), C, g);
    check_fixed_points(bayer_equations(3, 2, 2, 2), C, g);

    Grading t = Grading::standard(2);
    auto h1 = HilbertSpec::polynomial_tail(UPoly::constant(1), 0, 2);
    auto C1 = enumerate_on(t, h1, {d1(3), d1(4)}).ideals;
    check_fixed_points(determinantal_equations(t, h1, {d1(3)}, d1(4)), C1, t);
    check_fixed_points(quadratic_equations(t, h1, {d1(3), d1(4)}), C1, t);

    Grading b = Grading::from_columns({{1, 0}, {1, 1}, {0, 1}});
    std::map<Degree, long long> tab = {{Degree{{2, 2}, {}}, 1}, {Degree{{2, 1}, {}}, 1}, {Degree{{1, 2}, {}}, 1},
                                       {Degree{{2, 0}, {}}, 1}, {Degree{{1, 1}, {}}, 2}, {Degree{{1, 0}, {}}, 1},
                                       {Degree{{0, 1}, {}}, 1}, {Degree{{0, 0}, {}}, 1}};
    auto hb = HilbertSpec::zero_outside(tab);
    auto rep = compute_very_supportive(b, hb);
    check_fixed_points(quadratic_equations(b, hb, rep.D), rep.ideals, b);
}

TEST_CASE("determinantal minors need more fiber monomials than the minor size") {
    Grading g = Grading::standard(2);
    auto h1 = HilbertSpec::polynomial_tail(UPoly::constant(1), 0, 2);
    auto G = gamma_matrix(g, h1, {d1(3)}, d1(4));
    CHECK(G.matrix.rows() == 12);
    CHECK(G.matrix.cols() == 5);
    CHECK(G.columns.size() == 5);
    // h(e) = 0 bounds nothing: minors would exceed the column count
    std::map<Degree, long long> t0 = {{d1(1), 1}, {d1(2), 0}};
    CHECK(determinantal_equations(g, HilbertSpec::zero_outside(t0), {d1(1)}, d1(2)).equations.empty());
    // h(e) = |fiber(e)| forces rank 0: every nonzero entry is an equation
    std::map<Degree, long long> t3 = {{d1(1), 1}, {d1(2), 3}};
    auto es = determinantal_equations(g, HilbertSpec::zero_outside(t3), {d1(1)}, d1(2));
    CHECK(es.meta.info.at("minor_size") == "1");
    CHECK_FALSE(es.equations.empty());
    for (const auto& p : es.equations) CHECK(p.num_terms() == 1);
}

TEST_CASE("Bayer equations: shapes and degrees") {
    auto L = bayer_layout(3, 2, 2, 2);
    CHECK(L.X.size() == 6);
    CHECK(L.Xnext.size() == 10);
    CHECK(L.reduced.size() == 8);
    auto es = bayer_equations(3, 2, 2, 2);
    CHECK(es.equations.size() == 560);
    CHECK(es.meta.info.at("distinct_up_to_scalar") == "540");
    for (const auto& p : es.equations) {
        CHECK_FALSE(p.is_zero());
        for (const auto& [m, c] : p.terms()) CHECK(mono_degree(m) == 3);
    }
}

TEST_CASE("Stiefel sign") {
    // quadrics in x, y, z: [yz, z^2] = +det of the first four columns, [y^2, z^2] = -det
    CHECK(stiefel_sign({4, 5}, 2) == 1);
    CHECK(stiefel_sign({3, 5}, 2) == -1);
    CHECK(stiefel_sign({}, 0) == 1);
    // moving one bracket entry past one column flips the sign
    for (std::size_t a = 0; a + 1 < 6; ++a) CHECK(stiefel_sign({a, 5}, 2) == -stiefel_sign({a + 1, 5}, 2));
}

TEST_CASE("toric binomials") {
    Grading g = Grading::from_columns({{1}, {2}});
    // fiber(2) = {x^2, y}, fiber(1) = {x}
    auto es = toric_binomials(g, {d1(2), d1(3)});
    CHECK_FALSE(es.equations.empty());
    for (const auto& p : es.equations) CHECK(p.num_terms() == 2);
    // a one-element fiber in the lower degree gives no binomials
    CHECK(toric_binomials(g, {d1(1), d1(2)}).equations.empty());
}

TEST_CASE("chart at a single degree has only delta relations") {
    Grading g = Grading::standard(2);
    auto h1 = HilbertSpec::polynomial_tail(UPoly::constant(1), 0, 2);
    StandardChoice B{{d1(3), {{0, 3}}}};
    auto es = chart_equations(g, h1, {d1(3)}, B);
    CHECK(es.equations.size() == 1);
    CHECK_THROWS_AS(chart_equations(g, h1, {d1(3)}, StandardChoice{{d1(3), {{0, 3}, {1, 2}}}}), Error);
}

TEST_CASE("chart relations vanish at the monomial ideal itself") {
    Grading g = Grading::standard(3);
    auto h = two_points();
    std::vector<Degree> D = {d1(2), d1(3)};
    for (const auto& I : enumerate_on(g, h, D).ideals) {
        auto B = standard_choice_of(I, g, D);
        auto es = chart_equations(g, h, D, B);
        // origin of the chart: gamma = delta on B, zero elsewhere
        for (const auto& p : es.equations) {
            Rat v = p.evaluate([&](std::uint32_t id) -> Rat {
                const auto& m = es.vars.at(id).monos;
                return m.at(0) == m.at(1) ? 1 : 0;
            });
            CHECK(v == 0);
        }
    }
}

TEST_CASE("infinite fibers are rejected") {
    Grading g = Grading::from_columns({{1}, {1}, {-1}});
    CHECK_THROWS_AS(quadratic_equations(g, HilbertSpec::constant_on_semigroup(2), {d1(0), d1(1)}), Error);
}
