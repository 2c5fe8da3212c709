#include "mhilb/tangent.hpp"

#include <map>

#include "mhilb/error.hpp"
#include "mhilb/linalg.hpp"

namespace mhilb {

TangentReport tangent_space(const MonomialIdeal& I, const Grading& g) {
    if (I.n() != g.n()) fail(ErrorCode::DimensionMismatch, "tangent: ideal and grading have different variable counts");
    TangentReport rep;
    if (I.is_zero() || I.is_unit()) return rep;
    const auto& gens = I.generators();
    HilbertCounter hc(I, g);
    // phi(g_i) = sum_s c_{i,s} s over standard monomials s of degree deg g_i
    std::vector<std::vector<Monomial>> basis;
    std::vector<std::size_t> offset;
    for (const auto& gen : gens) {
        Degree a = g.degree_of(gen);
        if (hc.value(a).infinite)
            fail(ErrorCode::InfiniteSet, "tangent: infinitely many standard monomials in degree " + a.str());
        offset.push_back(rep.unknowns);
        basis.push_back(standard_monomials(I, g, a));
        rep.unknowns += basis.back().size();
    }
    RatMatrix rows;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            Monomial L = lcm(gens[i], gens[j]);
            if (hc.value(g.degree_of(L)).infinite)
                fail(ErrorCode::InfiniteSet, "tangent: infinitely many standard monomials in degree " +
                                                 g.degree_of(L).str());
            // (L/g_i) phi(g_i) - (L/g_j) phi(g_j) = 0 in S/I, one row per standard monomial that appears
            std::map<Monomial, std::vector<Rat>> eq;
            auto push = [&](std::size_t k, int sign) {
                Monomial f = quotient(L, gens[k]);
                for (std::size_t s = 0; s < basis[k].size(); ++s) {
                    Monomial m = mul(f, basis[k][s]);
                    if (I.contains(m)) continue;
                    auto& row = eq[m];
                    if (row.empty()) row.assign(rep.unknowns, Rat(0));
                    row[offset[k] + s] += sign;
                }
            };
            push(i, 1);
            push(j, -1);
            for (auto& [m, row] : eq) rows.push_back(std::move(row));
        }
    rep.constraints = rows.size();
    rep.rank = rows.empty() ? 0 : rank(rows);
    rep.dimension = rep.unknowns - rep.rank;
    return rep;
}

std::size_t tangent_dimension(const MonomialIdeal& I, const Grading& g) { return tangent_space(I, g).dimension; }

}  // namespace mhilb
