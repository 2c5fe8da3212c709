#include "mhilb/toric.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "mhilb/error.hpp"
#include "mhilb/linalg.hpp"

namespace mhilb {

std::vector<LatticeVector> kernel_lattice(const ColumnSpace& S) {
    const std::size_t n = S.columns.size();
    const std::size_t w = S.width();
    IntMatrix M;
    for (const auto& c : S.columns) {
        std::vector<Int> row;
        for (auto x : c) row.emplace_back(static_cast<long>(x));
        M.push_back(row);
    }
    for (std::size_t j = 0; j < S.moduli.size(); ++j) {
        std::vector<Int> row(w, 0);
        row[static_cast<std::size_t>(S.free_rank) + j] = static_cast<long>(S.moduli[j]);
        M.push_back(row);
    }
    IntMatrix K;
    if (w == 0) {
        for (std::size_t i = 0; i < M.size(); ++i) {
            std::vector<Int> e(M.size(), 0);
            e[i] = 1;
            K.push_back(e);
        }
    } else {
        K = left_kernel(M, w);
    }
    IntMatrix proj;
    for (const auto& k : K) proj.emplace_back(k.begin(), k.begin() + static_cast<long>(n));
    auto H = hermite_basis(proj, n);
    std::vector<LatticeVector> out;
    for (const auto& row : H) {
        LatticeVector v;
        for (const auto& x : row) {
            if (!x.fits_slong_p()) fail(ErrorCode::CapExceeded, "kernel lattice entries overflow");
            v.push_back(x.get_si());
        }
        out.push_back(v);
    }
    return out;
}

std::vector<LatticeVector> kernel_lattice(const Grading& g) { return kernel_lattice(g.space()); }

bool conformal_leq(const LatticeVector& u, const LatticeVector& v) {
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        if ((u[i] > 0) != (v[i] > 0) || v[i] == 0) return false;
        if (std::llabs(u[i]) > std::llabs(v[i])) return false;
    }
    return true;
}

namespace {

bool is_zero_vec(const LatticeVector& v) {
    return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

long long norm1(const LatticeVector& v) {
    long long s = 0;
    for (auto x : v) s += std::llabs(x);
    return s;
}

LatticeVector canonical_sign(LatticeVector v) {
    for (auto x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

}  // namespace

std::vector<LatticeVector> graver_basis(const std::vector<LatticeVector>& basis, int n,
                                        const GraverOptions& opts) {
    std::vector<LatticeVector> G;
    std::set<LatticeVector> inG;
    auto add = [&](const LatticeVector& v) {
        if (inG.insert(v).second) G.push_back(v);
    };
    for (const auto& b : basis) {
        if (static_cast<int>(b.size()) != n) fail(ErrorCode::DimensionMismatch, "graver: basis vector length");
        if (is_zero_vec(b)) continue;
        LatticeVector m = b;
        for (auto& x : m) x = -x;
        add(b);
        add(m);
    }
    auto normal_form = [&](LatticeVector s) {
        bool changed = true;
        while (changed && !is_zero_vec(s)) {
            changed = false;
            for (const auto& g : G) {
                if (conformal_leq(g, s)) {
                    for (std::size_t i = 0; i < s.size(); ++i) s[i] -= g[i];
                    changed = true;
                    break;
                }
            }
        }
        return s;
    };
    std::deque<LatticeVector> C;
    auto sum = [](const LatticeVector& a, const LatticeVector& b) {
        LatticeVector s(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
        return s;
    };
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) C.push_back(sum(G[i], G[j]));
    while (!C.empty()) {
        LatticeVector s = C.front();
        C.pop_front();
        LatticeVector f = normal_form(s);
        if (is_zero_vec(f) || inG.count(f)) continue;
        if (norm1(f) > opts.max_norm) fail(ErrorCode::CapExceeded, "graver: element norm exceeds cap");
        for (const auto& g : G) C.push_back(sum(f, g));
        add(f);
        if (G.size() > opts.max_elements) fail(ErrorCode::CapExceeded, "graver: element count exceeds cap");
    }
    std::set<LatticeVector> out;
    for (const auto& g : G) {
        bool minimal = true;
        for (const auto& h : G) {
            if (h == g) continue;
            if (conformal_leq(h, g)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.insert(canonical_sign(g));
    }
    return {out.begin(), out.end()};
}

std::set<Degree> graver_degrees(const Grading& g, const GraverOptions& opts) {
    std::set<Degree> out;
    for (const auto& u : graver_basis(kernel_lattice(g), g.n(), opts)) {
        Monomial plus(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) plus[i] = static_cast<int>(std::max(0LL, u[i]));
        out.insert(g.degree_of(plus));
    }
    return out;
}

bool is_prime_degree(const Grading& g, const Degree& a) {
    if (!semigroup_contains(g, a)) return false;
    for (int i = 0; i < g.n(); ++i) {
        std::vector<int> rest;
        for (int j = 0; j < g.n(); ++j)
            if (j != i) rest.push_back(j);
        if (!semigroup_contains_on(g, rest, a)) return false;
    }
    return true;
}

namespace {

struct DDRay {
    std::vector<Rat> z;
    std::vector<bool> tight;  // indexed by constraint
};

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<Rat> primitive_scale(std::vector<Rat> v) {
    Int den = 1;
    for (const auto& x : v) {
        Int l;
        mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        den = l;
    }
    std::vector<Int> nums;
    for (auto& x : v) {
        x *= den;
        nums.push_back(x.get_num());
    }
    Int g = gcd_of(nums);
    if (g != 0)
        for (auto& x : v) x /= g;
    return v;
}

// Extreme rays of the pointed cone {z : A z >= 0} where A has full column rank.
std::vector<std::vector<Rat>> double_description(const RatMatrix& A, std::size_t k) {
    const std::size_t m = A.size();
    // pick k independent rows
    std::vector<std::size_t> chosen;
    RatMatrix acc;
    for (std::size_t i = 0; i < m && chosen.size() < k; ++i) {
        acc.push_back(A[i]);
        if (rank(acc) == acc.size()) chosen.push_back(i);
        else acc.pop_back();
    }
    if (chosen.size() != k) fail(ErrorCode::Internal, "double description: cone is not pointed");
    // rays of the simplicial cone are columns of the inverse of A_chosen
    RatMatrix B(k, std::vector<Rat>(2 * k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) B[i][j] = A[chosen[i]][j];
        B[i][k + i] = 1;
    }
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t s = c;
        while (B[s][c] == 0) ++s;
        std::swap(B[s], B[c]);
        Rat inv = 1 / B[c][c];
        for (auto& x : B[c]) x *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == c || B[i][c] == 0) continue;
            Rat f = B[i][c];
            for (std::size_t j = 0; j < 2 * k; ++j) B[i][j] -= f * B[c][j];
        }
    }
    std::vector<bool> processed(m, false);
    for (auto i : chosen) processed[i] = true;
    std::vector<DDRay> rays;
    for (std::size_t j = 0; j < k; ++j) {
        DDRay r;
        r.z.resize(k);
        for (std::size_t i = 0; i < k; ++i) r.z[i] = B[i][k + j];
        r.tight.assign(m, false);
        for (std::size_t i = 0; i < m; ++i)
            if (processed[i] && dot(A[i], r.z) == 0) r.tight[i] = true;
        rays.push_back(std::move(r));
    }
    for (std::size_t row = 0; row < m; ++row) {
        if (processed[row]) continue;
        std::vector<std::size_t> pos, neg, zer;
        std::vector<Rat> val(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(A[row], rays[i].z);
            if (val[i] > 0) pos.push_back(i);
            else if (val[i] < 0) neg.push_back(i);
            else zer.push_back(i);
        }
        std::vector<DDRay> next;
        for (auto i : pos) next.push_back(rays[i]);
        for (auto i : zer) next.push_back(rays[i]);
        for (auto p : pos)
            for (auto q : neg) {
                // combinatorial adjacency
                std::vector<bool> common(m, false);
                for (std::size_t c = 0; c < m; ++c) common[c] = rays[p].tight[c] && rays[q].tight[c];
                bool adjacent = true;
                for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
                    if (o == p || o == q) continue;
                    bool contains = true;
                    for (std::size_t c = 0; c < m; ++c)
                        if (common[c] && !rays[o].tight[c]) {
                            contains = false;
                            break;
                        }
                    if (contains) adjacent = false;
                }
                if (!adjacent) continue;
                DDRay r;
                r.z.resize(k);
                for (std::size_t i = 0; i < k; ++i) r.z[i] = val[p] * rays[q].z[i] - val[q] * rays[p].z[i];
                r.z = primitive_scale(r.z);
                r.tight = common;
                next.push_back(std::move(r));
            }
        processed[row] = true;
        for (auto& r : next) r.tight[row] = (dot(A[row], r.z) == 0);
        rays = std::move(next);
    }
    std::vector<std::vector<Rat>> out;
    for (auto& r : rays) out.push_back(r.z);
    return out;
}

}  // namespace

Polyhedron fiber_polyhedron(const Grading& g, const Degree& a0) {
    Degree a = g.normalize(a0);
    const std::size_t n = static_cast<std::size_t>(g.n());
    const std::size_t d = static_cast<std::size_t>(g.free_rank());
    // cone {(u, t) >= 0 : Phi u - t a = 0}
    RatMatrix E(d, std::vector<Rat>(n + 1, 0));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t i = 0; i < n; ++i) E[r][i] = Rat(static_cast<long>(g.column(static_cast<int>(i)).free[r]));
        E[r][n] = -Rat(static_cast<long>(a.free[r]));
    }
    RatMatrix K = nullspace(E, n + 1);  // rows are basis vectors
    Polyhedron P;
    const std::size_t k = K.size();
    if (k == 0) return P;
    RatMatrix A(n + 1, std::vector<Rat>(k, 0));
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j < k; ++j) A[i][j] = K[j][i];
    for (const auto& z : double_description(A, k)) {
        std::vector<Rat> y(n + 1, 0);
        for (std::size_t i = 0; i <= n; ++i) y[i] = dot(A[i], z);
        if (y[n] > 0) {
            std::vector<Rat> v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = y[i] / y[n];
            P.vertices.push_back(v);
        } else {
            y.pop_back();
            P.rays.push_back(primitive_scale(y));
        }
    }
    std::sort(P.vertices.begin(), P.vertices.end());
    std::sort(P.rays.begin(), P.rays.end());
    if (P.vertices.empty()) P.rays.clear();
    return P;
}

IntegralityReport integral_degree_report(const Grading& g, const Degree& a0) {
    Degree a = g.normalize(a0);
    IntegralityReport rep;
    Polyhedron P = fiber_polyhedron(g, a);
    if (P.vertices.empty()) {
        rep.empty = true;
        return rep;
    }
    rep.integral = true;
    for (const auto& v : P.vertices) {
        bool integer = std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.get_den() == 1; });
        bool right_degree = false;
        if (integer) {
            Monomial u;
            for (const auto& x : v) u.push_back(static_cast<int>(x.get_num().get_si()));
            right_degree = (g.degree_of(u) == a);
        }
        if (!integer || !right_degree) {
            rep.integral = false;
            rep.offending_vertices.push_back(v);
        }
    }
    // Every rational recession ray has an integer multiple of degree zero (torsion is finite),
    // so the recession cones of the two polyhedra agree once the vertices are lattice points of degree a.
    return rep;
}

bool is_integral_degree(const Grading& g, const Degree& a) { return integral_degree_report(g, a).integral; }

std::set<Int> maximal_minor_values(const std::vector<LatticeVector>& basis, int n) {
    std::set<Int> vals;
    const std::size_t r = basis.size();
    if (r == 0) return vals;
    std::vector<int> cols(r);
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int start) {
        if (k == r) {
            IntMatrix M(r, std::vector<Int>(r));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) M[i][j] = static_cast<long>(basis[i][static_cast<std::size_t>(cols[j])]);
            Int det = bareiss_determinant(M);
            if (det != 0) vals.insert(abs(det));
            return;
        }
        for (int c = start; c < n; ++c) {
            cols[k] = c;
            rec(k + 1, c + 1);
        }
    };
    rec(0, 0);
    return vals;
}

bool is_unimodular(const Grading& g) {
    return maximal_minor_values(kernel_lattice(g), g.n()).size() <= 1;
}

bool SupernormalReport::supernormal_on_sample() const {
    return std::none_of(entries.begin(), entries.end(), [](const SupernormalEntry& e) { return e.violates(); });
}

SupernormalReport supernormal_on(const Grading& g, const std::vector<Degree>& degrees) {
    SupernormalReport rep;
    for (const auto& a : degrees) {
        SupernormalEntry e;
        e.degree = g.normalize(a);
        e.prime = is_prime_degree(g, e.degree);
        e.integral = is_integral_degree(g, e.degree);
        rep.entries.push_back(e);
    }
    return rep;
}

}  // namespace mhilb
