#include <random>

#include "doctest.h"
#include "mhilb/error.hpp"
#include "mhilb/grading.hpp"

using namespace mhilb;

namespace {

Degree d1(long long a) { return Degree{{a}, {}}; }

Grading z2_grading() { return Grading(2, 0, {2}, {Degree{{}, {1}}, Degree{{}, {1}}}); }

Grading random_grading(std::mt19937_64& rng, int rows, int n, int lo, int hi) {
    // resample until the columns generate the group
    std::uniform_int_distribution<int> e(lo, hi);
    while (true) {
        std::vector<std::vector<long long>> cols(static_cast<std::size_t>(n));
        for (auto& c : cols)
            for (int k = 0; k < rows; ++k) c.push_back(e(rng));
        try {
            return Grading::from_columns(cols);
        } catch (const Error&) {
        }
    }
}

Degree brute_degree(const Grading& g, const Monomial& u) {
    Degree d = g.zero();
    for (int i = 0; i < g.n(); ++i)
        for (int k = 0; k < u[static_cast<std::size_t>(i)]; ++k) d = g.add(d, g.column(i));
    return d;
}

}  // namespace

TEST_CASE("degree of a monomial") {
    Grading g = Grading::from_columns({{1, 0}, {1, 1}, {0, 1}});
    CHECK(g.degree_of({1, 1, 1}) == Degree{{2, 2}, {}});
    CHECK(g.degree_of({0, 0, 0}) == g.zero());
    CHECK(Grading::from_columns({{1}, {-1}}).degree_of({3, 5}) == d1(-2));
    CHECK(z2_grading().degree_of({1, 0}) == Degree{{}, {1}});
    CHECK(z2_grading().degree_of({2, 1}) == Degree{{}, {1}});
}

TEST_CASE("positivity") {
    CHECK(is_positive(Grading::standard(2)));
    CHECK_FALSE(is_positive(Grading::from_columns({{1}, {-1}})));
    CHECK_FALSE(is_positive(z2_grading()));
    auto g = Grading::from_columns({{1, 0}, {1, 1}, {0, 1}});
    REQUIRE(g.is_positive());
    for (int i = 0; i < 3; ++i) CHECK(g.weight_of_var(i) >= 1);
}

TEST_CASE("fibers of the standard grading") {
    Grading g = Grading::standard(3);
    auto f2 = fiber(g, d1(2));
    CHECK(f2.monomials.size() == 6);
    CHECK(f2.exhaustive == Exhaustiveness::Certified);
    CHECK(fiber(g, d1(3)).monomials.size() == 10);
    auto f0 = fiber(g, d1(0));
    REQUIRE(f0.monomials.size() == 1);
    CHECK(f0.monomials[0] == Monomial{0, 0, 0});
    CHECK(std::is_sorted(f2.monomials.rbegin(), f2.monomials.rend()));
}

TEST_CASE("semigroup membership") {
    CHECK(semigroup_contains(Grading::standard(2), d1(5)));
    CHECK_FALSE(semigroup_contains(Grading::standard(2), d1(-1)));
    Grading e = Grading::from_columns({{1, 0}, {1, 0}, {0, 1}, {2, 1}});
    CHECK(semigroup_contains(e, Degree{{0, 2}, {}}));
    CHECK_FALSE(semigroup_contains(e, Degree{{-1, 2}, {}}));
    CHECK(semigroup_contains(Grading::from_columns({{1}, {-1}}), d1(-7)));
    CHECK(semigroup_contains(z2_grading(), Degree{{}, {0}}));
}

TEST_CASE("degree-zero generators") {
    CHECK(degree_zero_generators(Grading::standard(3)).empty());
    auto a = degree_zero_generators(Grading::from_columns({{1}, {-1}}));
    CHECK(a == std::vector<Monomial>{{1, 1}});
    auto b = degree_zero_generators(z2_grading());
    std::sort(b.begin(), b.end());
    CHECK(b == std::vector<Monomial>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("property: deg is a semigroup homomorphism") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> e(0, 5);
    for (int trial = 0; trial < 100; ++trial) {
        Grading g = random_grading(rng, 2, 4, -3, 3);
        Monomial u(4), v(4), w(4);
        for (int i = 0; i < 4; ++i) {
            u[static_cast<std::size_t>(i)] = e(rng);
            v[static_cast<std::size_t>(i)] = e(rng);
            w[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i)] + v[static_cast<std::size_t>(i)];
        }
        CHECK(g.degree_of(w) == g.add(g.degree_of(u), g.degree_of(v)));
        CHECK(g.degree_of(u) == brute_degree(g, u));
    }
}

TEST_CASE("property: fiber(0) = {0} exactly for positive gradings") {
    std::mt19937_64 rng(22);
    int positive = 0, other = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Grading g = random_grading(rng, 2, 4, -2, 2);
        bool zero_col = false;
        for (const auto& c : g.columns()) zero_col |= c.free == std::vector<long long>{0, 0};
        auto z = degree_zero_generators(g);
        if (g.is_positive()) {
            ++positive;
            auto f = fiber(g, g.zero());
            CHECK(f.exhaustive == Exhaustiveness::Certified);
            CHECK(f.monomials == std::vector<Monomial>{Monomial(4, 0)});
            CHECK(z.empty());
            CHECK_FALSE(zero_col);
        } else {
            ++other;
            // some nonconstant monomial has degree zero
            REQUIRE_FALSE(z.empty());
            auto f = fiber(g, g.zero(), FiberBox::uniform(4, 1 + *std::max_element(z[0].begin(), z[0].end())));
            CHECK(f.monomials.size() > 1);
        }
    }
    CHECK(positive > 0);
    CHECK(other > 0);
}

TEST_CASE("property: degree-zero generators have degree zero and form an antichain") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        Grading g = random_grading(rng, 1 + static_cast<int>(rng() % 2), 3, -2, 2);
        auto z = degree_zero_generators(g);
        for (const auto& u : z) CHECK(g.degree_of(u) == g.zero());
        for (std::size_t i = 0; i < z.size(); ++i)
            for (std::size_t j = 0; j < z.size(); ++j) {
                if (i == j) continue;
                bool div = true;
                for (std::size_t k = 0; k < z[i].size(); ++k) div = div && z[i][k] <= z[j][k];
                CHECK_FALSE(div);
            }
    }
}

TEST_CASE("property: positive fibers are exhaustive and match brute force") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 40; ++trial) {
        Grading g = random_grading(rng, 2, 3, 0, 2);
        if (!g.is_positive()) continue;
        for (long long a = 0; a <= 4; ++a)
            for (long long b = 0; b <= 4; ++b) {
                Degree d{{a, b}, {}};
                auto f = fiber(g, d);
                CHECK(f.exhaustive == Exhaustiveness::Certified);
                std::size_t brute = 0;
                for (int x = 0; x <= 8; ++x)
                    for (int y = 0; y <= 8; ++y)
                        for (int z = 0; z <= 8; ++z) brute += g.degree_of({x, y, z}) == d;
                CHECK(f.monomials.size() == brute);
                CHECK(count_on_positive(g, {0, 1, 2}, d) == brute);
            }
    }
}

TEST_CASE("box truncation of infinite fibers is flagged") {
    Grading g = Grading::from_columns({{1}, {-1}});
    auto f = fiber(g, d1(1), FiberBox::uniform(2, 3));
    CHECK(f.exhaustive == Exhaustiveness::Truncated);
    CHECK(f.monomials == std::vector<Monomial>{{3, 2}, {2, 1}, {1, 0}});
}

TEST_CASE("mismatched degrees are rejected") {
    CHECK_THROWS(Grading(2, 1, {}, {Degree{{1}, {}}}));
}
