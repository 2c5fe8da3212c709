#include <random>
#include <set>

#include "corpus/oracles.hpp"
#include "doctest.h"
#include "mhilb/enumeration.hpp"
#include "mhilb/supportive.hpp"

using namespace mhilb;

namespace {

Degree d1(long long a) { return Degree{{a}, {}}; }

void check_antichain(const std::vector<MonomialIdeal>& C) {
    for (std::size_t i = 0; i < C.size(); ++i)
        for (std::size_t j = 0; j < C.size(); ++j) {
            if (i == j) continue;
            CHECK(C[i] != C[j]);
            // C[i] contained in C[j]: every generator of C[i] lies in C[j]
            bool inside = true;
            for (const auto& m : C[i].generators()) inside = inside && C[j].contains(m);
            CHECK_FALSE(inside);
        }
}

}  // namespace

TEST_CASE("eight ideals for the grading (1,1,-1) with h = 2") {
    Grading g = Grading::from_columns({{1}, {1}, {-1}});
    auto h = HilbertSpec::constant_on_semigroup(2);
    std::vector<Degree> D = {d1(0), d1(1), d1(2)};
    auto res = enumerate_on(g, h, D);
    CHECK(res.ideals.size() == 8);
    CHECK(std::find(res.ideals.begin(), res.ideals.end(), MonomialIdeal(3, {{2, 0, 1}, {1, 1, 0}, {0, 1, 1}})) !=
          res.ideals.end());
    check_antichain(res.ideals);
    for (const auto& I : res.ideals)
        for (const auto& a : D) CHECK(hilbert_value(I, g, a).count == 2);
    CHECK(enumerate_on(g, h, D).ideals == res.ideals);
}

TEST_CASE("three fixed points for the nine-point family") {
    Grading g = Grading::from_columns({{1, 0}, {1, 1}, {0, 1}});
    std::map<Degree, long long> t = {{Degree{{2, 2}, {}}, 1}, {Degree{{2, 1}, {}}, 1}, {Degree{{1, 2}, {}}, 1},
                                     {Degree{{2, 0}, {}}, 1}, {Degree{{1, 1}, {}}, 2}, {Degree{{1, 0}, {}}, 1},
                                     {Degree{{0, 1}, {}}, 1}, {Degree{{0, 0}, {}}, 1}};
    auto C = enumerate_admissible(g, HilbertSpec::zero_outside(t));
    CHECK(C.size() == 3);
    check_antichain(C);
}

TEST_CASE("projective line: two ideals in the standard grading") {
    Grading g = Grading::standard(2);
    auto h = HilbertSpec::polynomial_tail(UPoly::constant(1), 0, 2);
    auto res = enumerate_on(g, h, {d1(0), d1(1), d1(2), d1(3)});
    std::set<MonomialIdeal> got(res.ideals.begin(), res.ideals.end());
    CHECK(got == std::set<MonomialIdeal>{MonomialIdeal(2, {{1, 0}}), MonomialIdeal(2, {{0, 1}})});
}

TEST_CASE("finite support bigrading gives at most one ideal") {
    Grading g = Grading::from_columns({{1, 0}, {0, 1}});
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        std::map<Degree, long long> t;
        for (long long a = 0; a <= 2; ++a)
            for (long long b = 0; b <= 2; ++b)
                if (rng() % 2) t[Degree{{a, b}, {}}] = 1;
        auto C = enumerate_admissible(g, HilbertSpec::zero_outside(t));
        CHECK(C.size() <= 1);
    }
}

TEST_CASE("Z/2 grading with h(0) = h(1) = 1 has two fixed points") {
    Grading g(2, 0, {2}, {Degree{{}, {1}}, Degree{{}, {1}}});
    std::map<Degree, long long> t = {{Degree{{}, {0}}, 1}, {Degree{{}, {1}}, 1}};
    auto C = enumerate_admissible(g, HilbertSpec::zero_outside(t));
    std::set<MonomialIdeal> got(C.begin(), C.end());
    CHECK(got == std::set<MonomialIdeal>{MonomialIdeal(2, {{1, 0}, {0, 2}}), MonomialIdeal(2, {{0, 1}, {2, 0}})});
}

TEST_CASE("zero Hilbert function gives the unit ideal") {
    Grading g = Grading::standard(2);
    auto res = enumerate_on(g, HilbertSpec::zero_outside({}), {d1(0)});
    REQUIRE(res.ideals.size() == 1);
    CHECK(res.ideals[0].is_unit());
}

TEST_CASE("processing order follows the grading") {
    Grading g = Grading::standard(2);
    CHECK(processing_order(g, {d1(3), d1(1), d1(2)}) == std::vector<Degree>{d1(1), d1(2), d1(3)});
}

TEST_CASE("property: random Artinian ideals are recovered with exact Hilbert functions") {
    std::mt19937_64 rng(42);
    std::vector<Grading> gradings = {Grading::standard(3), Grading::from_columns({{1, 0}, {1, 1}, {0, 1}}),
                                     Grading::from_columns({{1}, {2}, {1}})};
    for (int trial = 0; trial < 24; ++trial) {
        const Grading& g = gradings[static_cast<std::size_t>(trial) % gradings.size()];
        std::uniform_int_distribution<int> e(1, 3);
        std::vector<Monomial> gens = {{e(rng), 0, 0}, {0, e(rng), 0}, {0, 0, e(rng)}};
        gens.push_back({static_cast<int>(rng() % 2), static_cast<int>(rng() % 2), static_cast<int>(rng() % 2)});
        if (total_degree(gens.back()) == 0) gens.pop_back();
        MonomialIdeal J(3, gens);
        HilbertSpec h = hilbert_spec_of_artinian(J, g);
        auto C = enumerate_admissible(g, h);
        CHECK(std::find(C.begin(), C.end(), J) != C.end());
        check_antichain(C);
        std::vector<std::vector<long long>> cols;
        for (const auto& c : g.columns()) cols.push_back(c.free);
        for (const auto& I : C) {
            std::vector<std::vector<int>> ig(I.generators().begin(), I.generators().end());
            for (const auto& [a, v] : h.table)
                CHECK(static_cast<long long>(oracle::brute_force_standard(cols, a.free, ig).size()) == v);
        }
        CHECK(enumerate_admissible(g, h) == C);
    }
}

TEST_CASE("standard set candidates have the requested size") {
    Grading g = Grading::standard(3);
    auto cands = standard_set_candidates(g, d1(2), 2, {}, 100000);
    CHECK(cands.size() == 15);
    for (const auto& c : cands) CHECK(c.size() == 2);
}
