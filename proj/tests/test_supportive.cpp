#include <random>

#include "doctest.h"
#include "mhilb/grothendieck.hpp"
#include "mhilb/supportive.hpp"
#include "mhilb/toric.hpp"

using namespace mhilb;

namespace {

Degree d1(long long a) { return Degree{{a}, {}}; }

bool subset(const std::vector<Degree>& a, const std::vector<Degree>& b) {
    for (const auto& x : a)
        if (std::find(b.begin(), b.end(), x) == b.end()) return false;
    return true;
}

const Grading& mixed() {
    static const Grading g = Grading::from_columns({{1}, {1}, {-1}});
    return g;
}

}  // namespace

TEST_CASE("D = {0,1,2} is very supportive for (1,1,-1), h = 2") {
    SupportOptions o;
    o.mode = SyzygyMode::Exact;
    auto r = check_conditions(mixed(), HilbertSpec::constant_on_semigroup(2), {d1(0), d1(1), d1(2)}, o);
    CHECK(r.g == Verdict::Pass);
    CHECK(r.h == Verdict::Pass);
    CHECK(r.h_prime == Verdict::Pass);
    CHECK(r.s == Verdict::Pass);
    CHECK(r.ideals.size() == 8);
}

TEST_CASE("sufficient syzygy mode passing implies exact mode passing") {
    auto h = HilbertSpec::constant_on_semigroup(2);
    for (const auto& D : std::vector<std::vector<Degree>>{{d1(0), d1(1), d1(2)}, {d1(0), d1(1)}, {d1(1), d1(2)},
                                                          {d1(0), d1(1), d1(2), d1(3)}}) {
        SupportOptions s, e;
        s.mode = SyzygyMode::Sufficient;
        e.mode = SyzygyMode::Exact;
        auto rs = check_conditions(mixed(), h, D, s);
        auto re = check_conditions(mixed(), h, D, e);
        if (rs.s == Verdict::Pass) CHECK(re.s == Verdict::Pass);
    }
}

TEST_CASE("two points: D = {d0} is supportive and {d0, d0+1} very supportive") {
    Grading g = Grading::standard(3);
    HilbertSpec h = hilbert_function_from_polynomial({UPoly::constant(2), 3});
    auto r = check_conditions(g, h, {d1(2)});
    CHECK(r.g == Verdict::Pass);
    CHECK(r.h_prime == Verdict::Pass);
    auto v = check_conditions(g, h, {d1(2), d1(3)});
    CHECK(v.very_supportive());
    CHECK(v.ideals.size() == 9);
}

TEST_CASE("empty D fails (g) for a nontrivial h") {
    auto r = check_conditions(mixed(), HilbertSpec::constant_on_semigroup(2), {});
    CHECK(r.g == Verdict::Fail);
    CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("computed sets pass their own conditions") {
    struct Case {
        Grading g;
        HilbertSpec h;
    };
    std::vector<Case> cases = {
        {mixed(), HilbertSpec::constant_on_semigroup(2)},
        {Grading::standard(3), hilbert_function_from_polynomial({UPoly::constant(2), 3})},
        {Grading::standard(2), HilbertSpec::polynomial_tail(UPoly::constant(1), 0, 2)},
        {Grading::from_columns({{1}, {2}}), HilbertSpec::constant_on_semigroup(1)},
    };
    for (const auto& c : cases) {
        auto s = compute_supportive(c.g, c.h);
        auto rs = check_conditions(c.g, c.h, s.D);
        CHECK(rs.g == Verdict::Pass);
        CHECK(rs.h_prime == Verdict::Pass);
        auto v = compute_very_supportive(c.g, c.h);
        auto rv = check_conditions(c.g, c.h, v.D);
        CHECK(rv.very_supportive());
        CHECK(subset(s.D, v.D));
    }
}

TEST_CASE("computed very supportive set for (1,1,-1) lies in {0,1,2}") {
    auto v = compute_very_supportive(mixed(), HilbertSpec::constant_on_semigroup(2));
    CHECK(v.very_supportive());
    CHECK(subset(v.D, {d1(0), d1(1), d1(2)}));
}

TEST_CASE("seeding with Graver degrees keeps them") {
    Grading g = Grading::from_columns({{1}, {2}});
    auto gd = graver_degrees(g);
    std::vector<Degree> seed(gd.begin(), gd.end());
    auto s = compute_supportive(g, HilbertSpec::constant_on_semigroup(1), seed);
    CHECK(subset(seed, s.D));
    CHECK(s.supportive());
}

TEST_CASE("no admissible ideals: vacuous certificate") {
    Grading g = Grading::standard(1);
    std::map<Degree, long long> t = {{d1(0), 2}};
    auto h = HilbertSpec::zero_outside(t);
    // the zero ideal exceeds h in degree 1, which forces x; <x> then lies below h
    auto s = compute_supportive(g, h);
    CHECK(s.D == std::vector<Degree>{d1(1)});
    CHECK(s.ideals == std::vector<MonomialIdeal>{MonomialIdeal(1, {{1}})});
    CHECK(s.supportive());
    auto v = compute_very_supportive(g, h);
    CHECK(v.D == std::vector<Degree>{d1(0), d1(1)});
    CHECK(v.ideals.empty());
    CHECK(v.supportive());
    CHECK(enumerate_admissible(g, h).empty());
}

TEST_CASE("property: enlarging D keeps (g)") {
    auto h = HilbertSpec::constant_on_semigroup(2);
    std::vector<Degree> D = {d1(0), d1(1), d1(2)};
    REQUIRE(check_conditions(mixed(), h, D).g == Verdict::Pass);
    for (const auto& extra : {d1(-1), d1(3), d1(-2)}) {
        auto bigger = D;
        bigger.push_back(extra);
        CHECK(check_conditions(mixed(), h, bigger).g == Verdict::Pass);
    }
}
