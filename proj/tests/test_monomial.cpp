#include <algorithm>
#include <random>

#include "corpus/oracles.hpp"
#include "doctest.h"
#include "mhilb/monomial.hpp"

using namespace mhilb;

namespace {

Degree d1(long long a) { return Degree{{a}, {}}; }

MonomialIdeal random_ideal(std::mt19937_64& rng, int n, int max_exp, int max_gens) {
    std::uniform_int_distribution<int> e(0, max_exp), k(1, max_gens);
    std::vector<Monomial> gens;
    int m = k(rng);
    for (int i = 0; i < m; ++i) {
        Monomial u(static_cast<std::size_t>(n));
        for (auto& x : u) x = e(rng);
        if (total_degree(u) > 0) gens.push_back(u);
    }
    return MonomialIdeal(n, gens);
}

std::vector<std::vector<long long>> flat(const Grading& g) {
    std::vector<std::vector<long long>> c;
    for (const auto& d : g.columns()) c.push_back(d.free);
    return c;
}

}  // namespace

TEST_CASE("minimal generators") {
    CHECK(MonomialIdeal(2, {{2, 0}, {2, 1}, {0, 1}}).generators() == std::vector<Monomial>{{2, 0}, {0, 1}});
    CHECK(MonomialIdeal(2, {}).is_zero());
    MonomialIdeal I(3, {{2, 0, 1}, {1, 1, 0}, {0, 1, 1}});
    CHECK(I.generators() == std::vector<Monomial>{{2, 0, 1}, {1, 1, 0}, {0, 1, 1}});
    CHECK(MonomialIdeal::unit(2).is_unit());
}

TEST_CASE("membership") {
    MonomialIdeal I(2, {{2, 0}, {0, 1}});
    CHECK(I.contains({3, 1}));
    CHECK_FALSE(I.contains({1, 0}));
    CHECK_FALSE(MonomialIdeal(2, {}).contains({5, 5}));
}

TEST_CASE("hilbert values") {
    Grading g = Grading::from_columns({{1}, {1}, {-1}});
    MonomialIdeal I(3, {{2, 0, 2}, {0, 1, 0}});
    auto v = hilbert_value(I, g, d1(0));
    CHECK_FALSE(v.infinite);
    CHECK(v.count == 2);
    CHECK(hilbert_value(MonomialIdeal(3, {}), Grading::standard(3), d1(2)).count == 6);
    CHECK(hilbert_value(MonomialIdeal(1, {{1}}), Grading::standard(1), d1(0)).count == 1);
    CHECK(hilbert_value(MonomialIdeal(3, {}), g, d1(0)).infinite);
}

TEST_CASE("standard monomials") {
    Grading g = Grading::from_columns({{1}, {1}, {-1}});
    MonomialIdeal I(3, {{2, 0, 2}, {0, 1, 0}});
    CHECK(standard_monomials(I, g, d1(1)) == std::vector<Monomial>{{2, 0, 1}, {1, 0, 0}});
    CHECK(standard_monomials(MonomialIdeal(2, {}), Grading::standard(2), d1(1)) == std::vector<Monomial>{{1, 0}, {0, 1}});
    CHECK(standard_monomials(MonomialIdeal(2, {{1, 0}, {0, 1}}), Grading::standard(2), d1(1)).empty());
    CHECK_THROWS(standard_monomials(MonomialIdeal(3, {}), g, d1(0)));
}

TEST_CASE("lcm and syzygy degrees") {
    Grading g = Grading::from_columns({{1}, {1}, {-1}});
    MonomialIdeal I(3, {{2, 0, 1}, {1, 1, 0}, {0, 1, 1}});
    CHECK(pairwise_lcm_degrees(I, g) == std::set<Degree>{d1(1), d1(2)});
    Grading s = Grading::standard(2);
    CHECK(pairwise_lcm_degrees(MonomialIdeal(2, {{2, 0}, {0, 1}}), s) == std::set<Degree>{d1(3)});
    CHECK(pairwise_lcm_degrees(MonomialIdeal(2, {{2, 0}}), s).empty());
    CHECK(minimal_syzygy_degrees(MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 2}}), s) == std::set<Degree>{d1(3)});
    CHECK(minimal_syzygy_multidegrees(MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 2}})).size() == 2);
    CHECK(minimal_syzygy_degrees(MonomialIdeal(2, {{1, 0}, {0, 1}}), s) == std::set<Degree>{d1(2)});
    CHECK(minimal_syzygy_degrees(MonomialIdeal(2, {{1, 0}}), s).empty());
}

TEST_CASE("stanley decomposition counts standard monomials") {
    MonomialIdeal I(3, {{2, 0, 0}, {0, 1, 1}});
    auto cones = stanley_decomposition(I);
    Grading g = Grading::standard(3);
    for (long long d = 0; d <= 6; ++d) {
        std::size_t count = 0;
        for (const auto& m : fiber(g, d1(d)).monomials) count += !I.contains(m);
        CHECK(hilbert_value(I, g, d1(d)).count == count);
    }
    CHECK_FALSE(cones.empty());
}

TEST_CASE("property: minimal syzygy degrees lie among pairwise lcm degrees") {
    std::mt19937_64 rng(31);
    Grading g = Grading::from_columns({{1, 0}, {1, 1}, {0, 1}});
    for (int trial = 0; trial < 80; ++trial) {
        auto I = random_ideal(rng, 3, 3, 5);
        auto syz = minimal_syzygy_degrees(I, g);
        auto lcms = pairwise_lcm_degrees(I, g);
        CHECK(std::includes(lcms.begin(), lcms.end(), syz.begin(), syz.end()));
        for (const auto& b : minimal_syzygy_multidegrees(I)) CHECK(first_betti_at(I, b) > 0);
    }
}

TEST_CASE("property: the zero ideal counts the whole fiber") {
    Grading g = Grading::from_columns({{1, 0}, {1, 1}, {0, 1}});
    MonomialIdeal zero(3, {});
    for (long long a = 0; a <= 4; ++a)
        for (long long b = 0; b <= 4; ++b) {
            Degree d{{a, b}, {}};
            auto f = fiber(g, d);
            REQUIRE(f.exhaustive == Exhaustiveness::Certified);
            CHECK(hilbert_value(zero, g, d).count == f.monomials.size());
        }
}

TEST_CASE("property: hilbert values agree with brute-force counting") {
    std::mt19937_64 rng(32);
    std::vector<Grading> gradings = {Grading::standard(3), Grading::from_columns({{1, 0}, {1, 1}, {0, 1}}),
                                     Grading::from_columns({{1}, {2}, {3}})};
    for (int trial = 0; trial < 60; ++trial) {
        auto I = random_ideal(rng, 3, 3, 4);
        const Grading& g = gradings[static_cast<std::size_t>(trial) % gradings.size()];
        std::vector<std::vector<int>> gens(I.generators().begin(), I.generators().end());
        HilbertCounter hc(I, g);
        for (int x = 0; x <= 3; ++x)
            for (int y = 0; y <= 3; ++y) {
                Degree d = g.degree_of({x, y, 1});
                auto want = oracle::brute_force_standard(flat(g), d.free, gens);
                auto v = hilbert_value(I, g, d);
                REQUIRE_FALSE(v.infinite);
                CHECK(v.count == want.size());
                CHECK(hc.value(d) == v);
                CHECK(standard_monomials(I, g, d) == want);
            }
    }
}

TEST_CASE("property: larger ideals have pointwise smaller hilbert values") {
    std::mt19937_64 rng(33);
    Grading g = Grading::standard(3);
    for (int trial = 0; trial < 60; ++trial) {
        auto I = random_ideal(rng, 3, 3, 3);
        auto extra = random_ideal(rng, 3, 3, 2);
        std::vector<Monomial> more = I.generators();
        more.insert(more.end(), extra.generators().begin(), extra.generators().end());
        MonomialIdeal J(3, more);
        for (long long d = 0; d <= 7; ++d) CHECK(hilbert_value(I, g, d1(d)).count >= hilbert_value(J, g, d1(d)).count);
    }
}
