#include "mhilb/monomial.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

#include "mhilb/error.hpp"
#include "mhilb/linalg.hpp"

namespace mhilb {

bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
    return c;
}

Monomial mul(const Monomial& a, const Monomial& b) {
    Monomial c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
    Monomial c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        c[i] = b[i] - a[i];
        if (c[i] < 0) fail(ErrorCode::Internal, "monomial quotient: not divisible");
    }
    return c;
}

int total_degree(const Monomial& a) {
    int s = 0;
    for (int x : a) s += x;
    return s;
}

std::string monomial_str(const Monomial& a) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << "x" << i;
        if (a[i] > 1) os << "^" << a[i];
    }
    if (first) os << "1";
    return os.str();
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (j != i && divides(gens[j], gens[i])) redundant = true;
        if (!redundant) out.push_back(gens[i]);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> gens) : n_(n) {
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != n) fail(ErrorCode::DimensionMismatch, "ideal generator length != n");
        for (int e : g)
            if (e < 0) fail(ErrorCode::InvalidInput, "negative exponent in ideal generator");
    }
    gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(int n) { return MonomialIdeal(n, {Monomial(static_cast<std::size_t>(n), 0)}); }

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && std::all_of(gens_[0].begin(), gens_[0].end(), [](int e) { return e == 0; });
}

bool MonomialIdeal::contains(const Monomial& u) const {
    for (const auto& g : gens_)
        if (divides(g, u)) return true;
    return false;
}

namespace {

// Standard monomials of <gens> restricted to the active variables, shifted by v; variables in
// extra are free in every produced cone.
void decompose(std::vector<Monomial> gens, std::vector<int> active, Monomial v, std::vector<int> extra,
               std::vector<StanleyCone>& out) {
    for (const auto& g : gens) {
        bool unit = true;
        for (int j : active)
            if (g[static_cast<std::size_t>(j)] > 0) {
                unit = false;
                break;
            }
        if (unit) return;
    }
    if (gens.empty()) {
        std::vector<int> F = active;
        F.insert(F.end(), extra.begin(), extra.end());
        std::sort(F.begin(), F.end());
        out.push_back(StanleyCone{std::move(v), std::move(F)});
        return;
    }
    int pivot = -1, emax = 0;
    for (int j : active) {
        int m = 0;
        for (const auto& g : gens) m = std::max(m, g[static_cast<std::size_t>(j)]);
        if (m > emax) {
            emax = m;
            pivot = j;
        }
    }
    std::vector<int> rest;
    for (int j : active)
        if (j != pivot) rest.push_back(j);
    const auto pj = static_cast<std::size_t>(pivot);
    for (int k = 0; k <= emax; ++k) {
        std::vector<Monomial> gk;
        for (const auto& g : gens)
            if (g[pj] <= k) {
                Monomial h = g;
                h[pj] = 0;
                gk.push_back(h);
            }
        Monomial vk = v;
        vk[pj] += k;
        if (k < emax) {
            decompose(minimalize(gk), rest, vk, extra, out);
        } else {
            std::vector<int> ex = extra;
            ex.push_back(pivot);
            decompose(minimalize(gk), rest, vk, ex, out);
        }
    }
}

}  // namespace

std::vector<StanleyCone> stanley_decomposition(const MonomialIdeal& I) {
    std::vector<StanleyCone> out;
    std::vector<int> active(static_cast<std::size_t>(I.n()));
    for (int i = 0; i < I.n(); ++i) active[static_cast<std::size_t>(i)] = i;
    decompose(I.generators(), active, Monomial(static_cast<std::size_t>(I.n()), 0), {}, out);
    return out;
}

std::string HilbertValue::str() const { return infinite ? std::string("INFINITE") : std::to_string(count); }

HilbertCounter::HilbertCounter(const MonomialIdeal& I, const Grading& g) : g_(&g) {
    if (I.n() != g.n()) fail(ErrorCode::DimensionMismatch, "ideal and grading have different n");
    cones_ = stanley_decomposition(I);
    for (const auto& c : cones_) {
        cone_degrees_.push_back(g.degree_of(c.v));
        semigroups_.push_back(c.free_vars.empty() ? nullptr : std::make_shared<SubsetSemigroup>(g.space(), c.free_vars));
    }
}

bool HilbertCounter::finite() const {
    return std::all_of(cones_.begin(), cones_.end(), [](const StanleyCone& c) { return c.free_vars.empty(); });
}

HilbertValue HilbertCounter::value(const Degree& a0) const {
    const Grading& g = *g_;
    Degree a = g.normalize(a0);
    HilbertValue hv;
    for (std::size_t i = 0; i < cones_.size(); ++i) {
        Degree c = g.sub(a, cone_degrees_[i]);
        const auto& F = cones_[i].free_vars;
        if (F.empty()) {
            if (c == g.zero()) ++hv.count;
            continue;
        }
        const SubsetSemigroup& sg = *semigroups_[i];
        if (sg.positive()) {
            hv.count += sg.count(c.flat());
        } else if (sg.contains(c.flat())) {
            hv.infinite = true;
            hv.count = 0;
            return hv;
        }
    }
    return hv;
}

HilbertValue hilbert_value(const MonomialIdeal& I, const Grading& g, const Degree& a) {
    return HilbertCounter(I, g).value(a);
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& I, const Grading& g, const Degree& a0) {
    Degree a = g.normalize(a0);
    std::vector<Monomial> out;
    for (const auto& cone : stanley_decomposition(I)) {
        Degree c = g.sub(a, g.degree_of(cone.v));
        if (cone.free_vars.empty()) {
            if (c == g.zero()) out.push_back(cone.v);
            continue;
        }
        SubsetSemigroup sg(g.space(), cone.free_vars);
        if (!sg.positive()) {
            if (sg.contains(c.flat()))
                fail(ErrorCode::InfiniteSet, "infinitely many standard monomials in degree " + a.str());
            continue;
        }
        for (const auto& w : sg.list(c.flat())) out.push_back(mul(cone.v, w));
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::set<Degree> pairwise_lcm_degrees(const MonomialIdeal& I, const Grading& g) {
    std::set<Degree> out;
    const auto& G = I.generators();
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) out.insert(g.degree_of(lcm(G[i], G[j])));
    return out;
}

long long first_betti_at(const MonomialIdeal& I, const Monomial& b) {
    const auto& G = I.generators();
    // Taylor complex strand: basis = subsets with lcm exactly b, sizes 1, 2, 3.
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (divides(G[i], b)) idx.push_back(i);
    auto lcm_of = [&](std::initializer_list<std::size_t> s) {
        Monomial m(b.size(), 0);
        for (auto i : s) m = lcm(m, G[i]);
        return m;
    };
    std::vector<std::size_t> C0;
    std::vector<std::array<std::size_t, 2>> C1;
    std::vector<std::array<std::size_t, 3>> C2;
    for (std::size_t a = 0; a < idx.size(); ++a) {
        if (G[idx[a]] == b) C0.push_back(idx[a]);
        for (std::size_t c = a + 1; c < idx.size(); ++c) {
            if (lcm_of({idx[a], idx[c]}) == b) C1.push_back({idx[a], idx[c]});
            for (std::size_t e = c + 1; e < idx.size(); ++e)
                if (lcm_of({idx[a], idx[c], idx[e]}) == b) C2.push_back({idx[a], idx[c], idx[e]});
        }
    }
    if (C1.empty()) return 0;
    // d1 : C1 -> C0, e_{ij} -> e_j - e_i
    RatMatrix d1(C0.size(), std::vector<Rat>(C1.size(), 0));
    for (std::size_t c = 0; c < C1.size(); ++c)
        for (std::size_t r = 0; r < C0.size(); ++r) {
            if (C0[r] == C1[c][1]) d1[r][c] += 1;
            if (C0[r] == C1[c][0]) d1[r][c] -= 1;
        }
    // d2 : C2 -> C1, e_{ijk} -> e_{jk} - e_{ik} + e_{ij}
    RatMatrix d2(C1.size(), std::vector<Rat>(C2.size(), 0));
    for (std::size_t c = 0; c < C2.size(); ++c) {
        const auto& t = C2[c];
        std::array<std::pair<std::array<std::size_t, 2>, int>, 3> faces = {
            std::pair<std::array<std::size_t, 2>, int>{{t[1], t[2]}, 1},
            std::pair<std::array<std::size_t, 2>, int>{{t[0], t[2]}, -1},
            std::pair<std::array<std::size_t, 2>, int>{{t[0], t[1]}, 1}};
        for (const auto& [f, s] : faces)
            for (std::size_t r = 0; r < C1.size(); ++r)
                if (C1[r] == f) d2[r][c] += s;
    }
    long long r1 = C0.empty() ? 0 : static_cast<long long>(rank(d1));
    long long r2 = C2.empty() ? 0 : static_cast<long long>(rank(d2));
    return static_cast<long long>(C1.size()) - r1 - r2;
}

std::set<Monomial> minimal_syzygy_multidegrees(const MonomialIdeal& I) {
    std::set<Monomial> cands, out;
    const auto& G = I.generators();
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) cands.insert(lcm(G[i], G[j]));
    for (const auto& b : cands)
        if (first_betti_at(I, b) > 0) out.insert(b);
    return out;
}

std::set<Degree> minimal_syzygy_degrees(const MonomialIdeal& I, const Grading& g) {
    std::set<Degree> out;
    for (const auto& b : minimal_syzygy_multidegrees(I)) out.insert(g.degree_of(b));
    return out;
}

}  // namespace mhilb
