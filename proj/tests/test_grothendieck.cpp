#include <random>

#include "corpus/oracles.hpp"
#include "doctest.h"
#include "mhilb/enumeration.hpp"
#include "mhilb/equations.hpp"
#include "mhilb/error.hpp"
#include "mhilb/grothendieck.hpp"

using namespace mhilb;

namespace {

Degree d1(long long a) { return Degree{{a}, {}}; }

HilbertPolynomial constant(long m, int n) { return {UPoly::constant(Rat(m)), n}; }

}  // namespace

TEST_CASE("Gotzmann numbers") {
    CHECK(gotzmann_number(constant(2, 3)) == 2);
    CHECK(gotzmann_number(constant(1, 3)) == 1);
    CHECK(gotzmann_number({UPoly::parse("d+1"), 3}) == 1);
    CHECK(gotzmann_number({UPoly::parse("3d+1"), 4}) == 4);
    CHECK(gotzmann_number({UPoly::parse("(d^2+3d+2)/2"), 4}) == 1);
    CHECK_THROWS_AS(gotzmann_number({UPoly::parse("(d^2+3d+2)/2"), 3}), Error);
    CHECK_THROWS_AS(gotzmann_number({UPoly::parse("-d"), 3}), Error);
}

TEST_CASE("Gotzmann number of m points is the lex ideal regularity") {
    for (long m = 1; m <= 6; ++m) {
        int reg = oracle::monomial_regularity(3, oracle::saturated_lex_ideal(UPoly::constant(Rat(m)), 3, 12));
        CHECK(gotzmann_number(constant(m, 3)) == reg);
        CHECK(gotzmann_number(constant(m, 3)) == m);
        CHECK(macaulay_representation(UPoly::constant(Rat(m))).evaluate() == UPoly::constant(Rat(m)));
    }
}

TEST_CASE("property: Macaulay representations round-trip") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<long> b;
        long top = static_cast<long>(rng() % 3);
        int terms = 1 + static_cast<int>(rng() % 8);
        for (int i = 0; i < terms; ++i) {
            b.push_back(top);
            if (top > 0 && rng() % 2) --top;
        }
        MacaulayRepresentation rep{b};
        UPoly g = rep.evaluate();
        CHECK(macaulay_representation(g).b == b);
        CHECK(gotzmann_number({g, 5}) == static_cast<long>(b.size()));
    }
}

TEST_CASE("Hilbert function of a Hilbert polynomial") {
    Grading g3 = Grading::standard(3);
    auto h = hilbert_function_from_polynomial(constant(2, 3));
    CHECK(h.value(g3, d1(0)) == 1);
    CHECK(h.value(g3, d1(1)) == 3);
    CHECK(h.value(g3, d1(2)) == 2);
    CHECK(h.value(g3, d1(3)) == 2);
    CHECK(h.value(g3, d1(30)) == 2);
    Grading g2 = Grading::standard(2);
    auto h1 = hilbert_function_from_polynomial(constant(1, 2));
    for (long d = 1; d <= 10; ++d) CHECK(h1.value(g2, d1(d)) == 1);
    auto hl = hilbert_function_from_polynomial({UPoly::parse("d+1"), 3});
    for (long d = 1; d <= 10; ++d) CHECK(hl.value(g3, d1(d)) == d + 1);
}

TEST_CASE("Bayer flavor through the Gotzmann number") {
    auto es = grothendieck_equations(constant(2, 3), GrothendieckFlavor::Bayer);
    CHECK(es.equations.size() == 560);
    CHECK(es.meta.info.at("gotzmann_number") == "2");
    CHECK(es.meta.info.at("flavor") == "bayer");
    auto q = grothendieck_equations(constant(2, 3), GrothendieckFlavor::GotzmannPair);
    CHECK(q.equations.size() == 600);
}

TEST_CASE("Gotzmann pair and Bayer cut out the same coordinate points") {
    Grading g = Grading::standard(3);
    auto h = hilbert_function_from_polynomial(constant(2, 3));
    auto C = enumerate_on(g, h, {d1(2), d1(3)}).ideals;
    auto q = grothendieck_equations(constant(2, 3), GrothendieckFlavor::GotzmannPair);
    auto b = grothendieck_equations(constant(2, 3), GrothendieckFlavor::Bayer);
    auto X2 = fiber(g, d1(2)).monomials, X3 = fiber(g, d1(3)).monomials;
    auto vanishes = [](const EquationSet& es, const std::vector<Monomial>& B2, const std::vector<Monomial>& B3) {
        for (const auto& p : es.equations) {
            Rat v = p.evaluate([&](std::uint32_t id) -> Rat {
                const auto& s = es.vars.at(id);
                return (s.degree == d1(2) ? s.monos == B2 : s.monos == B3) ? 1 : 0;
            });
            if (v != 0) return false;
        }
        return true;
    };
    // the Bayer equations only see degree 2; the pair equations need some degree 3 partner
    std::size_t on_bayer = 0;
    for (std::size_t i = 0; i < X2.size(); ++i)
        for (std::size_t j = i + 1; j < X2.size(); ++j) {
            std::vector<Monomial> B2{X2[i], X2[j]};
            bool vb = vanishes(b, B2, {});
            bool vq = false;
            for (std::size_t k = 0; k < X3.size(); ++k)
                for (std::size_t l = k + 1; l < X3.size(); ++l) vq |= vanishes(q, B2, {X3[k], X3[l]});
            CHECK(vq == vb);
            on_bayer += vb;
        }
    CHECK(on_bayer == C.size());
    for (const auto& I : C) {
        CHECK(vanishes(q, standard_monomials(I, g, d1(2)), standard_monomials(I, g, d1(3))));
        CHECK(vanishes(b, standard_monomials(I, g, d1(2)), {}));
    }
}

TEST_CASE("Iarrobino-Kleiman minors vanish at a point and not generically") {
    // one point on the line, degrees 2 and 3: a single 4 x 4 determinant
    auto es = iarrobino_kleiman_equations(2, 2, 1, 1);
    CHECK(es.meta.info.at("rows") == "4");
    CHECK(es.meta.info.at("cols") == "4");
    CHECK(es.meta.info.at("minor_size") == "4");
    REQUIRE(es.equations.size() == 1);
    auto X = fiber(Grading::standard(2), d1(2)).monomials;
    std::vector<std::vector<int>> Xv(X.begin(), X.end());
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<Rat> p = {Rat(1 + static_cast<long>(rng() % 5)), make_rat(static_cast<long>(rng() % 5) - 2, 1 + rng() % 3)};
        auto Om = oracle::two_point_kernel(Xv, p, p);
        REQUIRE(Om.size() == 2);
        auto col = [&](const Monomial& m) { return static_cast<std::size_t>(std::find(X.begin(), X.end(), m) - X.begin()); };
        for (const auto& f : es.equations) {
            Rat v = f.evaluate([&](std::uint32_t id) {
                const auto& s = es.vars.at(id);
                return Om[static_cast<std::size_t>(s.row)][col(s.monos.at(0))];
            });
            CHECK(v == 0);
        }
        oracle::RMat G(2, std::vector<Rat>(3));
        for (auto& row : G)
            for (auto& x : row) x = static_cast<long>(rng() % 9) - 4;
        bool some_nonzero = false;
        for (const auto& f : es.equations)
            some_nonzero |= f.evaluate([&](std::uint32_t id) {
                const auto& s = es.vars.at(id);
                return G[static_cast<std::size_t>(s.row)][col(s.monos.at(0))];
            }) != 0;
        CHECK(some_nonzero);
    }
}

TEST_CASE("Iarrobino-Kleiman imposes nothing on a point of the line in degree 1") {
    auto es = iarrobino_kleiman_equations(2, 1, 1, 1);
    CHECK(es.equations.empty());
    CHECK(es.meta.info.at("minor_size") == "3");
}

TEST_CASE("Iarrobino-Kleiman respects the minor cap") {
    CHECK_THROWS_AS(iarrobino_kleiman_equations(3, 2, 2, 2, EquationOptions{5000000, 10}), Error);
}
