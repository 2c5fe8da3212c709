#include <random>

#include "corpus/oracles.hpp"
#include "doctest.h"
#include "mhilb/linalg.hpp"

using namespace mhilb;

namespace {

IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix M(r, std::vector<Int>(c));
    for (auto& row : M)
        for (auto& x : row) x = d(rng);
    return M;
}

IntMatrix mul(const IntMatrix& A, const IntMatrix& B, std::size_t inner, std::size_t cols) {
    IntMatrix C(A.size(), std::vector<Int>(cols, Int(0)));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < cols; ++j) C[i][j] += A[i][k] * B[k][j];
    return C;
}

oracle::RMat to_rat(const IntMatrix& M) {
    oracle::RMat R;
    for (const auto& row : M) {
        std::vector<Rat> r;
        for (const auto& x : row) r.push_back(Rat(x));
        R.push_back(r);
    }
    return R;
}

}  // namespace

TEST_CASE("smith normal form: U A V is diagonal with a divisibility chain") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
        IntMatrix A = random_int_matrix(rng, r, c, -4, 4);
        SmithForm S = smith_normal_form(A, c);
        IntMatrix D = mul(mul(S.U, A, r, c), S.V, c, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                Int want = (i == j && i < S.diagonal.size()) ? S.diagonal[i] : Int(0);
                CHECK(D[i][j] == want);
            }
        for (std::size_t i = 0; i < S.diagonal.size(); ++i) {
            CHECK(S.diagonal[i] > 0);
            if (i + 1 < S.diagonal.size()) CHECK(S.diagonal[i + 1] % S.diagonal[i] == 0);
        }
        CHECK(abs(bareiss_determinant(S.U)) == 1);
        CHECK(abs(bareiss_determinant(S.V)) == 1);
        CHECK(S.diagonal.size() == oracle::rank(to_rat(A)));
    }
}

TEST_CASE("smith normal form of a known matrix") {
    IntMatrix A = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    auto S = smith_normal_form(A, 3);
    REQUIRE(S.diagonal.size() == 3);
    CHECK(S.diagonal[0] == 2);
    CHECK(S.diagonal[1] == 6);
    CHECK(S.diagonal[2] == 12);
}

TEST_CASE("left kernel annihilates and has the complementary rank") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 3;
        IntMatrix A = random_int_matrix(rng, r, c, -3, 3);
        IntMatrix K = left_kernel(A, c);
        for (const auto& y : K) {
            IntMatrix Y{y};
            IntMatrix P = mul(Y, A, r, c);
            for (const auto& x : P[0]) CHECK(x == 0);
        }
        CHECK(K.size() == r - oracle::rank(to_rat(A)));
        if (!K.empty()) CHECK(oracle::rank(to_rat(K)) == K.size());
    }
}

TEST_CASE("hermite basis spans a lattice of the same rank") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        IntMatrix A = random_int_matrix(rng, 4, 3, -3, 3);
        IntMatrix H = hermite_basis(A, 3);
        CHECK(H.size() == oracle::rank(to_rat(A)));
        // each original row is an integer combination: adding it does not change the lattice
        for (const auto& row : A) {
            IntMatrix more = H;
            more.push_back(row);
            CHECK(hermite_basis(more, 3) == H);
        }
    }
}

TEST_CASE("determinants and ranks agree with plain elimination") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + rng() % 5;
        IntMatrix A = random_int_matrix(rng, n, n, -5, 5);
        CHECK(Rat(bareiss_determinant(A)) == oracle::det(to_rat(A)));
        CHECK(determinant(to_rat(A)) == oracle::det(to_rat(A)));
        IntMatrix B = random_int_matrix(rng, n, n + 1, -1, 1);
        CHECK(rank(to_rat(B)) == oracle::rank(to_rat(B)));
    }
    CHECK(bareiss_determinant({{1}}) == 1);
    CHECK(bareiss_determinant({{1, 0}, {0, 1}}) == 1);
}

TEST_CASE("nullspace vectors solve the system") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t m = 1 + rng() % 4, c = 1 + rng() % 5;
        auto M = to_rat(random_int_matrix(rng, m, c, -2, 2));
        auto N = nullspace(M, c);
        CHECK(N.size() == c - oracle::rank(M));
        for (const auto& x : N)
            for (const auto& row : M) {
                Rat s = 0;
                for (std::size_t j = 0; j < c; ++j) s += row[j] * x[j];
                CHECK(s == 0);
            }
    }
}

TEST_CASE("feasibility of nonnegative systems") {
    RatMatrix A = {{Rat(1), Rat(1)}};
    auto x = lp_feasible(A, {Rat(3)}, 2);
    REQUIRE(x);
    CHECK((*x)[0] + (*x)[1] == 3);
    CHECK((*x)[0] >= 0);
    CHECK((*x)[1] >= 0);
    CHECK_FALSE(lp_feasible(A, {Rat(-1)}, 2));
    RatMatrix B = {{Rat(1), Rat(-1)}};
    CHECK(lp_feasible(B, {Rat(-2)}, 2));
}

TEST_CASE("positive functionals") {
    auto l = positive_functional({{1, 0}, {1, 1}, {0, 1}}, 2);
    REQUIRE(l);
    CHECK((*l)[0] >= 1);
    CHECK((*l)[1] >= 1);
    CHECK_FALSE(positive_functional({{1}, {-1}}, 1));
    CHECK(positive_functional({}, 3));
}
