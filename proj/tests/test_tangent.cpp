#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "mhilb/enumeration.hpp"
#include "mhilb/error.hpp"
#include "mhilb/supportive.hpp"
#include "mhilb/tangent.hpp"

using namespace mhilb;

namespace {

MonomialIdeal permuted(const MonomialIdeal& I, const std::vector<int>& perm) {
    std::vector<Monomial> gens;
    for (const auto& m : I.generators()) {
        Monomial p(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) p[static_cast<std::size_t>(perm[i])] = m[i];
        gens.push_back(p);
    }
    return MonomialIdeal(I.n(), gens);
}

}  // namespace

TEST_CASE("the eight ideals for (1,1,-1) are smooth points of dimension 4") {
    Grading g = Grading::from_columns({{1}, {1}, {-1}});
    auto C = enumerate_on(g, HilbertSpec::constant_on_semigroup(2), {Degree{{0}, {}}, Degree{{1}, {}}, Degree{{2}, {}}}).ideals;
    REQUIRE(C.size() == 8);
    for (const auto& I : C) {
        auto r = tangent_space(I, g);
        CHECK(r.dimension == 4);
        CHECK(r.dimension + r.rank == r.unknowns);
        // the x <-> y mirror has the same dimension
        CHECK(tangent_dimension(permuted(I, {1, 0, 2}), g) == 4);
    }
}

TEST_CASE("projective line and the Z/2 example") {
    CHECK(tangent_dimension(MonomialIdeal(2, {{1, 0}}), Grading::standard(2)) == 1);
    Grading z2(2, 0, {2}, {Degree{{}, {1}}, Degree{{}, {1}}});
    CHECK(tangent_dimension(MonomialIdeal(2, {{1, 0}, {0, 2}}), z2) == 2);
    CHECK(tangent_dimension(MonomialIdeal(2, {{0, 1}, {2, 0}}), z2) == 2);
}

TEST_CASE("nine-point family: the intersection point is singular") {
    Grading g = Grading::from_columns({{1, 0}, {1, 1}, {0, 1}});
    std::map<Degree, long long> t = {{Degree{{2, 2}, {}}, 1}, {Degree{{2, 1}, {}}, 1}, {Degree{{1, 2}, {}}, 1},
                                     {Degree{{2, 0}, {}}, 1}, {Degree{{1, 1}, {}}, 2}, {Degree{{1, 0}, {}}, 1},
                                     {Degree{{0, 1}, {}}, 1}, {Degree{{0, 0}, {}}, 1}};
    auto C = enumerate_admissible(g, HilbertSpec::zero_outside(t));
    REQUIRE(C.size() == 3);
    std::multiset<std::size_t> dims;
    for (const auto& I : C) dims.insert(tangent_dimension(I, g));
    CHECK(dims == std::multiset<std::size_t>{1, 1, 2});
}

TEST_CASE("property: permuting variables of the standard grading preserves the dimension") {
    std::mt19937_64 rng(81);
    Grading g = Grading::standard(3);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> e(1, 3);
        std::vector<Monomial> gens = {{e(rng), 0, 0}, {0, e(rng), 0}, {0, 0, e(rng)}};
        for (int k = 0; k < 2; ++k) gens.push_back({e(rng) - 1, e(rng) - 1, e(rng) - 1});
        MonomialIdeal I(3, gens);
        std::vector<int> perm = {0, 1, 2};
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(tangent_dimension(I, g) == tangent_dimension(permuted(I, perm), g));
    }
}

TEST_CASE("degenerate ideals") {
    CHECK(tangent_dimension(MonomialIdeal(2, {}), Grading::standard(2)) == 0);
    CHECK(tangent_dimension(MonomialIdeal::unit(2), Grading::standard(2)) == 0);
    Grading g = Grading::from_columns({{1}, {1}, {-1}});
    CHECK_THROWS_AS(tangent_dimension(MonomialIdeal(3, {{0, 1, 0}}), g), Error);
}
