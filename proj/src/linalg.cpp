#include "mhilb/linalg.hpp"

#include <algorithm>
#include <utility>

#include "mhilb/error.hpp"

namespace mhilb {

namespace {

IntMatrix identity(std::size_t n) {
    IntMatrix I(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

void row_axpy(IntMatrix& M, std::size_t dst, std::size_t src, const Int& q) {
    // row dst -= q * row src
    for (std::size_t j = 0; j < M[dst].size(); ++j) M[dst][j] -= q * M[src][j];
}

void col_axpy(IntMatrix& M, std::size_t dst, std::size_t src, const Int& q) {
    for (auto& row : M) row[dst] -= q * row[src];
}

void swap_cols(IntMatrix& M, std::size_t a, std::size_t b) {
    for (auto& row : M) std::swap(row[a], row[b]);
}

Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& Ain, std::size_t cols) {
    const std::size_t m = Ain.size();
    const std::size_t n = cols;
    IntMatrix A = Ain;
    for (auto& r : A)
        if (r.size() != n) fail(ErrorCode::DimensionMismatch, "smith_normal_form: ragged matrix");
    IntMatrix U = identity(m);
    IntMatrix V = identity(n);
    std::size_t t = 0;
    while (t < m && t < n) {
        // pick the smallest nonzero entry of the trailing block
        bool found = false;
        std::size_t pi = 0, pj = 0;
        Int best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (A[i][j] != 0 && (!found || abs(A[i][j]) < best)) {
                    found = true;
                    best = abs(A[i][j]);
                    pi = i;
                    pj = j;
                }
        if (!found) break;
        std::swap(A[t], A[pi]);
        std::swap(U[t], U[pi]);
        swap_cols(A, t, pj);
        swap_cols(V, t, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (A[i][t] == 0) continue;
                Int q = fdiv(A[i][t], A[t][t]);
                row_axpy(A, i, t, q);
                row_axpy(U, i, t, q);
                if (A[i][t] != 0) {
                    std::swap(A[t], A[i]);
                    std::swap(U[t], U[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (A[t][j] == 0) continue;
                Int q = fdiv(A[t][j], A[t][t]);
                col_axpy(A, j, t, q);
                col_axpy(V, j, t, q);
                if (A[t][j] != 0) {
                    swap_cols(A, t, j);
                    swap_cols(V, t, j);
                    clean = false;
                }
            }
            if (clean) {
                // divisibility condition on the trailing block
                for (std::size_t i = t + 1; i < m && clean; ++i)
                    for (std::size_t j = t + 1; j < n; ++j) {
                        Int r;
                        mpz_mod(r.get_mpz_t(), A[i][j].get_mpz_t(), A[t][t].get_mpz_t());
                        if (r != 0) {
                            for (std::size_t k = 0; k < n; ++k) A[t][k] += A[i][k];
                            for (std::size_t k = 0; k < m; ++k) U[t][k] += U[i][k];
                            clean = false;
                            break;
                        }
                    }
            }
        }
        if (A[t][t] < 0) {
            for (auto& x : A[t]) x = -x;
            for (auto& x : U[t]) x = -x;
        }
        ++t;
    }
    SmithForm S;
    for (std::size_t i = 0; i < t; ++i) S.diagonal.push_back(A[i][i]);
    S.U = std::move(U);
    S.V = std::move(V);
    return S;
}

IntMatrix left_kernel(const IntMatrix& A, std::size_t cols) {
    SmithForm S = smith_normal_form(A, cols);
    IntMatrix K;
    for (std::size_t i = S.diagonal.size(); i < A.size(); ++i) K.push_back(S.U[i]);
    return K;
}

IntMatrix hermite_basis(IntMatrix rows, std::size_t cols) {
    IntMatrix out;
    std::size_t r0 = 0;
    for (std::size_t c = 0; c < cols && r0 < rows.size(); ++c) {
        // gcd-reduce column c among rows r0..
        while (true) {
            std::size_t piv = rows.size();
            for (std::size_t i = r0; i < rows.size(); ++i)
                if (rows[i][c] != 0 && (piv == rows.size() || abs(rows[i][c]) < abs(rows[piv][c])))
                    piv = i;
            if (piv == rows.size()) break;
            std::swap(rows[r0], rows[piv]);
            bool done = true;
            for (std::size_t i = r0 + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Int q = fdiv(rows[i][c], rows[r0][c]);
                for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r0][j];
                if (rows[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (r0 < rows.size() && rows[r0][c] != 0) {
            if (rows[r0][c] < 0)
                for (auto& x : rows[r0]) x = -x;
            for (std::size_t i = 0; i < r0; ++i) {
                Int q = fdiv(rows[i][c], rows[r0][c]);
                for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r0][j];
            }
            ++r0;
        }
    }
    for (std::size_t i = 0; i < r0; ++i) out.push_back(rows[i]);
    return out;
}

Int bareiss_determinant(IntMatrix M) {
    const std::size_t n = M.size();
    if (n == 0) return 1;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && M[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(M[k], M[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int v = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                M[i][j] = v;
            }
        prev = M[k][k];
    }
    return sign * M[n - 1][n - 1];
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& M, std::size_t cols) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < M.size(); ++c) {
        std::size_t s = r;
        while (s < M.size() && M[s][c] == 0) ++s;
        if (s == M.size()) continue;
        std::swap(M[r], M[s]);
        Rat inv = 1 / M[r][c];
        for (std::size_t j = c; j < cols; ++j) M[r][j] *= inv;
        for (std::size_t i = 0; i < M.size(); ++i) {
            if (i == r || M[i][c] == 0) continue;
            Rat f = M[i][c];
            for (std::size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

}  // namespace

std::size_t rank(RatMatrix M) {
    if (M.empty()) return 0;
    return rref(M, M[0].size()).size();
}

RatMatrix nullspace(RatMatrix M, std::size_t cols) {
    auto piv = rref(M, cols);
    std::vector<bool> is_piv(cols, false);
    for (auto c : piv) is_piv[c] = true;
    RatMatrix basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rat> v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -M[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

Rat determinant(RatMatrix M) {
    const std::size_t n = M.size();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t s = c;
        while (s < n && M[s][c] == 0) ++s;
        if (s == n) return 0;
        if (s != c) {
            std::swap(M[s], M[c]);
            det = -det;
        }
        det *= M[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (M[i][c] == 0) continue;
            Rat f = M[i][c] / M[c][c];
            for (std::size_t j = c; j < n; ++j) M[i][j] -= f * M[c][j];
        }
    }
    return det;
}

std::optional<std::vector<Rat>> lp_feasible(const RatMatrix& A, const std::vector<Rat>& b,
                                            std::size_t cols) {
    const std::size_t m = A.size();
    if (b.size() != m) fail(ErrorCode::DimensionMismatch, "lp_feasible: rhs size");
    if (m == 0) return std::vector<Rat>(cols, 0);
    // tableau: m rows, columns = cols originals + m artificials + rhs
    const std::size_t W = cols + m + 1;
    RatMatrix T(m, std::vector<Rat>(W, 0));
    for (std::size_t i = 0; i < m; ++i) {
        bool neg = b[i] < 0;
        for (std::size_t j = 0; j < cols; ++j) T[i][j] = neg ? -A[i][j] : A[i][j];
        T[i][cols + i] = 1;
        T[i][W - 1] = neg ? -b[i] : b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = cols + i;
    // objective: minimise sum of artificials; reduced costs c_j = -sum_i T[i][j] for non-artificial
    std::vector<Rat> cost(W, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < W; ++j)
            if (j < cols || j == W - 1) cost[j] -= T[i][j];
    while (true) {
        std::size_t enter = W;
        for (std::size_t j = 0; j + 1 < W; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == W) break;
        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            Rat ratio = T[i][W - 1] / T[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) fail(ErrorCode::Internal, "lp_feasible: phase one unbounded");
        Rat inv = 1 / T[leave][enter];
        for (auto& x : T[leave]) x *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            Rat f = T[i][enter];
            for (std::size_t j = 0; j < W; ++j) T[i][j] -= f * T[leave][j];
        }
        if (cost[enter] != 0) {
            Rat f = cost[enter];
            for (std::size_t j = 0; j < W; ++j) cost[j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }
    if (cost[W - 1] != 0) return std::nullopt;  // -(optimal value) != 0
    std::vector<Rat> x(cols, 0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < cols) x[basis[i]] = T[i][W - 1];
    return x;
}

std::optional<std::vector<Rat>> positive_functional(const std::vector<std::vector<long long>>& vs,
                                                    std::size_t d) {
    if (vs.empty()) return std::vector<Rat>(d, 0);
    const std::size_t m = vs.size();
    const std::size_t cols = 2 * d + m;
    RatMatrix A(m, std::vector<Rat>(cols, 0));
    std::vector<Rat> b(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            A[i][k] = Rat(static_cast<long>(vs[i][k]));
            A[i][d + k] = -Rat(static_cast<long>(vs[i][k]));
        }
        A[i][2 * d + i] = -1;
    }
    auto x = lp_feasible(A, b, cols);
    if (!x) return std::nullopt;
    std::vector<Rat> lam(d);
    for (std::size_t k = 0; k < d; ++k) lam[k] = (*x)[k] - (*x)[d + k];
    return lam;
}

}  // namespace mhilb
