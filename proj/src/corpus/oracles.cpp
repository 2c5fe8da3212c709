#include "corpus/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace mhilb::oracle {

namespace {

bool conformal_below(const IVec& u, const IVec& v) {
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        if ((u[i] > 0) != (v[i] > 0) || v[i] == 0 || std::llabs(u[i]) > std::llabs(v[i])) return false;
    }
    return true;
}

bool divides(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool in_ideal(const std::vector<std::vector<int>>& gens, const std::vector<int>& m) {
    for (const auto& g : gens)
        if (divides(g, m)) return true;
    return false;
}

}  // namespace

std::set<IVec> brute_force_graver(const std::vector<IVec>& cols, int max_l1) {
    const std::size_t n = cols.size();
    const std::size_t d = n ? cols[0].size() : 0;
    std::vector<IVec> kernel;
    IVec u(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int budget) {
        if (i == n) {
            bool nonzero = false;
            for (auto x : u) nonzero |= x != 0;
            if (!nonzero) return;
            for (std::size_t k = 0; k < d; ++k) {
                long long s = 0;
                for (std::size_t j = 0; j < n; ++j) s += cols[j][k] * u[j];
                if (s != 0) return;
            }
            kernel.push_back(u);
            return;
        }
        for (int x = -budget; x <= budget; ++x) {
            u[i] = x;
            rec(i + 1, budget - std::abs(x));
        }
        u[i] = 0;
    };
    rec(0, max_l1);
    std::set<IVec> out;
    for (const auto& v : kernel) {
        bool minimal = true;
        for (const auto& w : kernel)
            if (w != v && conformal_below(w, v)) {
                minimal = false;
                break;
            }
        if (!minimal) continue;
        IVec r = v;
        auto first = std::find_if(r.begin(), r.end(), [](long long x) { return x != 0; });
        if (*first < 0)
            for (auto& x : r) x = -x;
        out.insert(r);
    }
    return out;
}

std::size_t rank(RMat M) {
    std::size_t r = 0;
    const std::size_t cols = M.empty() ? 0 : M[0].size();
    for (std::size_t c = 0; c < cols && r < M.size(); ++c) {
        std::size_t p = r;
        while (p < M.size() && M[p][c] == 0) ++p;
        if (p == M.size()) continue;
        std::swap(M[p], M[r]);
        for (std::size_t i = r + 1; i < M.size(); ++i) {
            if (M[i][c] == 0) continue;
            Rat f = M[i][c] / M[r][c];
            for (std::size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
        }
        ++r;
    }
    return r;
}

Rat det(RMat M) {
    const std::size_t n = M.size();
    Rat d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && M[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(M[p], M[c]);
            d = -d;
        }
        d *= M[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (M[i][c] == 0) continue;
            Rat f = M[i][c] / M[c][c];
            for (std::size_t j = c; j < n; ++j) M[i][j] -= f * M[c][j];
        }
    }
    return d;
}

int monomial_regularity(int n, const std::vector<std::vector<int>>& gens) {
    std::vector<int> top(static_cast<std::size_t>(n), 0);
    for (const auto& g : gens)
        for (int i = 0; i < n; ++i) top[static_cast<std::size_t>(i)] = std::max(top[static_cast<std::size_t>(i)], g[static_cast<std::size_t>(i)]);
    int reg = -1000000;
    std::vector<int> b(static_cast<std::size_t>(n), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i < n) {
            for (int e = 0; e <= top[static_cast<std::size_t>(i)]; ++e) {
                b[static_cast<std::size_t>(i)] = e;
                rec(i + 1);
            }
            return;
        }
        // faces of K^b: squarefree F within supp(b) with x^(b-F) in I
        std::vector<unsigned> faces;
        for (unsigned F = 0; F < (1u << n); ++F) {
            std::vector<int> m = b;
            bool ok = true;
            for (int k = 0; k < n; ++k)
                if (F >> k & 1u) {
                    if (m[static_cast<std::size_t>(k)] == 0) ok = false;
                    else --m[static_cast<std::size_t>(k)];
                }
            if (ok && in_ideal(gens, m)) faces.push_back(F);
        }
        if (faces.empty()) return;
        int bdeg = 0;
        for (int x : b) bdeg += x;
        auto dim_of = [](unsigned F) { return __builtin_popcount(F) - 1; };
        auto boundary_rank = [&](int j) {  // rank of C_j -> C_{j-1}
            std::vector<unsigned> rows_f, cols_f;
            for (unsigned F : faces) {
                if (dim_of(F) == j) cols_f.push_back(F);
                if (dim_of(F) == j - 1) rows_f.push_back(F);
            }
            if (rows_f.empty() || cols_f.empty()) return std::size_t{0};
            RMat M(rows_f.size(), std::vector<Rat>(cols_f.size(), Rat(0)));
            for (std::size_t c = 0; c < cols_f.size(); ++c) {
                int sign = 1;
                for (int k = 0; k < n; ++k) {
                    if (!(cols_f[c] >> k & 1u)) continue;
                    unsigned G = cols_f[c] & ~(1u << k);
                    auto it = std::find(rows_f.begin(), rows_f.end(), G);
                    if (it != rows_f.end()) M[static_cast<std::size_t>(it - rows_f.begin())][c] = sign;
                    sign = -sign;
                }
            }
            return rank(M);
        };
        for (int j = -1; j < n; ++j) {
            std::size_t cj = 0;
            for (unsigned F : faces) cj += dim_of(F) == j;
            long long h = static_cast<long long>(cj) - static_cast<long long>(boundary_rank(j)) -
                          static_cast<long long>(boundary_rank(j + 1));
            if (h > 0) {
                int i = j + 1;  // beta_{i,b}(I) = dim H~_{i-1}
                reg = std::max(reg, bdeg - i);
            }
        }
    };
    rec(0);
    return reg;
}

std::vector<std::vector<int>> monomials_of_degree(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> m(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
            m[static_cast<std::size_t>(i)] = left;
            out.push_back(m);
            return;
        }
        for (int e = left; e >= 0; --e) {
            m[static_cast<std::size_t>(i)] = e;
            rec(i + 1, left - e);
        }
    };
    if (n > 0) rec(0, d);
    return out;
}

std::vector<std::vector<int>> saturated_lex_ideal(const UPoly& g, int n, int D) {
    auto mons = monomials_of_degree(n, D);  // already lex descending
    long long keep = static_cast<long long>(mons.size()) - g.eval_int(D).get_si();
    std::vector<std::vector<int>> gens;
    for (long long i = 0; i < keep; ++i) {
        auto m = mons[static_cast<std::size_t>(i)];
        m[static_cast<std::size_t>(n - 1)] = 0;
        gens.push_back(m);
    }
    std::vector<std::vector<int>> minimal;
    for (const auto& a : gens) {
        bool redundant = false;
        for (const auto& b : gens)
            if (b != a && divides(b, a)) redundant = true;
        if (!redundant && std::find(minimal.begin(), minimal.end(), a) == minimal.end()) minimal.push_back(a);
    }
    return minimal;
}

std::vector<std::vector<int>> brute_force_fiber(const std::vector<IVec>& cols, const IVec& a) {
    const std::size_t n = cols.size();
    std::vector<int> bound(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        long long b = -1;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (cols[i][k] > 0) {
                long long q = a[k] < 0 ? -1 : a[k] / cols[i][k];
                b = b < 0 ? q : std::min(b, q);
            }
        bound[i] = static_cast<int>(std::max<long long>(b, -1));
    }
    std::vector<std::vector<int>> out;
    std::vector<int> u(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            for (std::size_t k = 0; k < a.size(); ++k) {
                long long s = 0;
                for (std::size_t j = 0; j < n; ++j) s += cols[j][k] * u[j];
                if (s != a[k]) return;
            }
            out.push_back(u);
            return;
        }
        for (int e = 0; e <= bound[i]; ++e) {
            u[i] = e;
            rec(i + 1);
        }
        u[i] = 0;
    };
    rec(0);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<std::vector<int>> brute_force_standard(const std::vector<IVec>& cols, const IVec& a,
                                                   const std::vector<std::vector<int>>& gens) {
    std::vector<std::vector<int>> out;
    for (const auto& m : brute_force_fiber(cols, a))
        if (!in_ideal(gens, m)) out.push_back(m);
    return out;
}

Rat eval_monomial(const std::vector<int>& m, const std::vector<Rat>& p) {
    Rat r = 1;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (int k = 0; k < m[i]; ++k) r *= p[i];
    return r;
}

Rat two_point_bracket(const std::vector<int>& m1, const std::vector<int>& m2, const std::vector<Rat>& p1,
                      const std::vector<Rat>& p2) {
    return eval_monomial(m1, p1) * eval_monomial(m2, p2) - eval_monomial(m1, p2) * eval_monomial(m2, p1);
}

RMat two_point_kernel(const std::vector<std::vector<int>>& X, const std::vector<Rat>& p1,
                      const std::vector<Rat>& p2) {
    // reduce the 2 x r evaluation matrix to echelon form and read off a kernel basis
    const std::size_t r = X.size();
    RMat E(2, std::vector<Rat>(r));
    for (std::size_t j = 0; j < r; ++j) {
        E[0][j] = eval_monomial(X[j], p1);
        E[1][j] = eval_monomial(X[j], p2);
    }
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < r && row < 2; ++c) {
        std::size_t p = row;
        while (p < 2 && E[p][c] == 0) ++p;
        if (p == 2) continue;
        std::swap(E[p], E[row]);
        Rat inv = 1 / E[row][c];
        for (auto& x : E[row]) x *= inv;
        for (std::size_t i = 0; i < 2; ++i)
            if (i != row && E[i][c] != 0) {
                Rat f = E[i][c];
                for (std::size_t j = 0; j < r; ++j) E[i][j] -= f * E[row][j];
            }
        pivots.push_back(c);
        ++row;
    }
    RMat K;
    for (std::size_t c = 0; c < r; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
        std::vector<Rat> v(r, Rat(0));
        v[c] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -E[i][c];
        K.push_back(v);
    }
    return K;
}

}  // namespace mhilb::oracle
