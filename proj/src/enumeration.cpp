#include "mhilb/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "mhilb/combinatorics.hpp"
#include "mhilb/error.hpp"

namespace mhilb {

namespace {

std::vector<Degree> normalized_unique(const Grading& g, const std::vector<Degree>& D) {
    std::set<Degree> s;
    for (const auto& a : D) s.insert(g.normalize(a));
    return {s.begin(), s.end()};
}

}  // namespace

std::vector<Degree> processing_order(const Grading& g, std::vector<Degree> D) {
    D = normalized_unique(g, D);
    if (g.is_positive()) {
        std::stable_sort(D.begin(), D.end(), [&](const Degree& a, const Degree& b) {
            return g.weight(a) < g.weight(b);
        });
    }
    return D;
}

std::vector<std::vector<Monomial>> standard_set_candidates(const Grading& g, const Degree& a, long long h,
                                                           const std::vector<Monomial>& zero_gens,
                                                           std::size_t max_nodes) {
    if (h == 0) return {{}};
    auto minimal = fiber_generators(g, a);
    std::set<std::vector<Monomial>> level = {{}};
    std::size_t nodes = 0;
    for (long long size = 0; size < h; ++size) {
        std::set<std::vector<Monomial>> next;
        for (const auto& S : level) {
            std::set<Monomial> cands(minimal.begin(), minimal.end());
            for (const auto& s : S)
                for (const auto& z : zero_gens) cands.insert(mul(s, z));
            for (const auto& u : cands) {
                if (std::binary_search(S.begin(), S.end(), u)) continue;
                bool closed = true;
                for (const auto& z : zero_gens)
                    if (divides(z, u) && !std::binary_search(S.begin(), S.end(), quotient(u, z))) {
                        closed = false;
                        break;
                    }
                if (!closed) continue;
                std::vector<Monomial> T = S;
                T.insert(std::upper_bound(T.begin(), T.end(), u), u);
                next.insert(std::move(T));
                if (++nodes > max_nodes) fail(ErrorCode::SearchCap, "standard set enumeration exceeded node cap");
            }
        }
        level = std::move(next);
        if (level.empty()) break;
    }
    std::vector<std::vector<Monomial>> out;
    for (auto S : level) {
        std::sort(S.begin(), S.end(), std::greater<>());
        out.push_back(std::move(S));
    }
    return out;
}

EnumerationResult enumerate_on(const Grading& g, const HilbertSpec& h, const std::vector<Degree>& D0,
                               const EnumerationOptions& opts) {
    h.validate(g);
    auto order = processing_order(g, D0);
    std::vector<long long> target;
    for (const auto& a : order) target.push_back(h.value(g, a));
    const int n = g.n();
    std::set<MonomialIdeal> found;
    EnumerationResult res;
    auto tick = [&] {
        if (++res.nodes > opts.max_nodes) fail(ErrorCode::SearchCap, "enumeration exceeded node cap");
    };
    auto record = [&](const std::vector<Monomial>& gens) {
        found.insert(MonomialIdeal(n, gens));
        if (found.size() > opts.max_results) fail(ErrorCode::SearchCap, "enumeration exceeded result cap");
    };

    if (g.is_positive()) {
        std::vector<std::vector<Monomial>> fibers;
        for (const auto& a : order) fibers.push_back(fiber(g, a).monomials);
        std::vector<Monomial> J;
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
            tick();
            if (k == order.size()) {
                record(J);
                return;
            }
            std::vector<Monomial> freem;
            for (const auto& m : fibers[k]) {
                bool in = false;
                for (const auto& gen : J)
                    if (divides(gen, m)) {
                        in = true;
                        break;
                    }
                if (!in) freem.push_back(m);
            }
            long long need = static_cast<long long>(freem.size()) - target[k];
            if (need < 0) return;
            for_each_combination(static_cast<int>(freem.size()), static_cast<int>(need), [&](const std::vector<int>& c) {
                for (int i : c) J.push_back(freem[static_cast<std::size_t>(i)]);
                rec(k + 1);
                J.resize(J.size() - c.size());
                return true;
            });
        };
        rec(0);
    } else {
        auto zero_gens = degree_zero_generators(g);
        // For each degree, the possible generator sets: minimal monomials outside a standard set.
        std::vector<std::vector<std::vector<Monomial>>> options;
        for (std::size_t k = 0; k < order.size(); ++k) {
            const auto& a = order[k];
            auto minimal = fiber_generators(g, a);
            std::vector<std::vector<Monomial>> opt;
            for (const auto& S : standard_set_candidates(g, a, target[k], zero_gens, opts.max_nodes)) {
                std::set<Monomial> Sset(S.begin(), S.end());
                std::vector<Monomial> cands;
                for (const auto& m : minimal)
                    if (!Sset.count(m)) cands.push_back(m);
                for (const auto& s : S)
                    for (const auto& z : zero_gens) {
                        Monomial u = mul(s, z);
                        if (!Sset.count(u)) cands.push_back(u);
                    }
                opt.push_back(minimalize(cands));
            }
            options.push_back(std::move(opt));
        }
        std::vector<Monomial> J;
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
            tick();
            if (k > 0) {
                HilbertCounter hc(MonomialIdeal(n, J), g);
                for (std::size_t i = 0; i < k; ++i) {
                    auto v = hc.value(order[i]);
                    if (v.infinite || static_cast<long long>(v.count) != target[i]) return;
                }
            }
            if (k == order.size()) {
                record(J);
                return;
            }
            for (const auto& gens : options[k]) {
                J.insert(J.end(), gens.begin(), gens.end());
                rec(k + 1);
                J.resize(J.size() - gens.size());
            }
        };
        rec(0);
    }
    res.ideals.assign(found.begin(), found.end());
    return res;
}

}  // namespace mhilb
