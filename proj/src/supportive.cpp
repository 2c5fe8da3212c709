#include "mhilb/supportive.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "mhilb/error.hpp"

namespace mhilb {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

std::vector<Degree> degree_frontier(const Grading& g, int cap) {
    std::vector<Degree> out;
    if (cap <= 0) return out;
    std::set<Degree> seen = {g.zero()};
    if (g.is_positive()) {
        using Item = std::pair<long long, Degree>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        pq.push({0, g.zero()});
        while (!pq.empty() && static_cast<int>(out.size()) < cap) {
            auto [w, a] = pq.top();
            pq.pop();
            out.push_back(a);
            for (const auto& c : g.columns()) {
                Degree b = g.add(a, c);
                if (seen.insert(b).second) pq.push({g.weight(b), b});
            }
        }
        return out;
    }
    std::set<Degree> level = {g.zero()};
    out.push_back(g.zero());
    for (int k = 0; k < 8 * cap + 8 && static_cast<int>(out.size()) < cap; ++k) {
        std::set<Degree> next;
        for (const auto& a : level)
            for (const auto& c : g.columns()) next.insert(g.add(a, c));
        for (const auto& b : next) {
            if (static_cast<int>(out.size()) >= cap) break;
            if (seen.insert(b).second) out.push_back(b);
        }
        if (next == level) break;
        level = std::move(next);
    }
    return out;
}

namespace {

void classify(const HilbertValue& v, long long expected, const Degree& a, Comparison& cmp) {
    if (v.infinite || static_cast<long long>(v.count) > expected) cmp.exceeds.push_back(a);
    else if (static_cast<long long>(v.count) < expected) cmp.below.push_back(a);
}

std::vector<Degree> sorted_for(const Grading& g, std::set<Degree> s) {
    std::vector<Degree> v(s.begin(), s.end());
    if (g.is_positive())
        std::stable_sort(v.begin(), v.end(), [&](const Degree& a, const Degree& b) { return g.weight(a) < g.weight(b); });
    return v;
}

}  // namespace

Comparison compare_hilbert(const MonomialIdeal& I, const Grading& g, const HilbertSpec& h, int frontier_cap) {
    HilbertCounter hc(I, g);
    Comparison cmp;
    switch (h.tail) {
        case TailKind::ZeroOutside: {
            if (hc.finite()) {
                std::map<Degree, long long> hist;
                for (const auto& c : hc.cones()) hist[g.degree_of(c.v)] += 1;
                std::set<Degree> degs;
                for (const auto& [a, v] : hist) degs.insert(a);
                for (const auto& [a, v] : h.table) degs.insert(a);
                for (const auto& a : sorted_for(g, degs)) {
                    HilbertValue v;
                    v.count = static_cast<unsigned long long>(hist.count(a) ? hist[a] : 0);
                    classify(v, h.value(g, a), a, cmp);
                }
                return cmp;
            }
            for (const auto& c : hc.cones()) {
                if (c.free_vars.empty()) continue;
                Degree dv = g.degree_of(c.v);
                if (!g.positive_on(c.free_vars)) {
                    cmp.exceeds.push_back(dv);
                    return cmp;
                }
                Monomial u = c.v;
                int j = c.free_vars.front();
                for (std::size_t k = 1; k <= h.table.size() + 2; ++k) {
                    u[static_cast<std::size_t>(j)] += 1;
                    Degree a = g.degree_of(u);
                    if (h.value(g, a) == 0) {
                        cmp.exceeds.push_back(a);
                        return cmp;
                    }
                }
            }
            fail(ErrorCode::Internal, "compare_hilbert: infinite standard set without witness");
        }
        case TailKind::Polynomial: {
            long long T = std::max<long long>(h.threshold, 0);
            for (const auto& c : hc.cones()) T = std::max<long long>(T, total_degree(c.v));
            for (const auto& [a, v] : h.table) T = std::max(T, a.free[0]);
            T += g.n() + std::max(h.poly.degree(), 0) + 2;
            for (long long d = 0; d <= T; ++d) {
                Degree a{{d}, {}};
                classify(hc.value(a), h.value(g, a), a, cmp);
            }
            return cmp;
        }
        case TailKind::Constant: {
            cmp.exact = false;
            std::vector<Degree> order = degree_frontier(g, frontier_cap);
            std::set<Degree> seen(order.begin(), order.end());
            std::set<Degree> extra;
            for (const auto& [a, v] : h.table) extra.insert(a);
            for (const auto& gen : I.generators()) extra.insert(g.degree_of(gen));
            for (const auto& a : pairwise_lcm_degrees(I, g)) extra.insert(a);
            for (const auto& c : hc.cones()) extra.insert(g.degree_of(c.v));
            for (const auto& a : sorted_for(g, extra))
                if (seen.insert(a).second) order.push_back(a);
            for (const auto& a : order) classify(hc.value(a), h.value(g, a), a, cmp);
            return cmp;
        }
    }
    return cmp;
}

namespace {

bool in_set(const std::vector<Degree>& D, const Degree& a) { return std::find(D.begin(), D.end(), a) != D.end(); }

std::vector<Degree> canonical(const Grading& g, const std::vector<Degree>& D) {
    std::set<Degree> s;
    for (const auto& a : D) s.insert(g.normalize(a));
    return {s.begin(), s.end()};
}

bool is_cap_error(const Error& e) { return exit_status_for(e.code()) == 3; }

}  // namespace

SupportReport check_conditions(const Grading& g, const HilbertSpec& h, const std::vector<Degree>& D0,
                               const SupportOptions& opts) {
    SupportReport rep;
    rep.D = canonical(g, D0);
    rep.s_mode = opts.mode;
    rep.ideals = enumerate_on(g, h, rep.D, opts.enumeration).ideals;
    bool exact = true;
    bool exceeds = false, differs = false;
    for (const auto& I : rep.ideals) {
        Comparison cmp = compare_hilbert(I, g, h, opts.frontier_cap);
        exact = exact && cmp.exact;
        if (!cmp.exceeds.empty()) {
            exceeds = true;
            rep.witnesses.push_back({"h'", I, cmp.exceeds.front(), "Hilbert function exceeds h"});
        }
        if (!cmp.equal()) {
            differs = true;
            const Degree& a = cmp.exceeds.empty() ? cmp.below.front() : cmp.exceeds.front();
            rep.witnesses.push_back({"h", I, a, "Hilbert function differs from h"});
        }
    }
    rep.verification = exact ? "exact" : "frontier(" + std::to_string(opts.frontier_cap) + ")";
    rep.h_prime = exceeds ? Verdict::Fail : Verdict::Pass;
    rep.h = differs ? Verdict::Fail : Verdict::Pass;

    std::optional<std::vector<MonomialIdeal>> admissible;
    auto get_admissible = [&]() -> const std::vector<MonomialIdeal>* {
        if (admissible) return &*admissible;
        if (!opts.resolve_with_admissible) return nullptr;
        SupportOptions inner = opts;
        inner.resolve_with_admissible = false;
        try {
            admissible = enumerate_admissible(g, h, inner);
        } catch (const Error& e) {
            if (!is_cap_error(e)) throw;
            return nullptr;
        }
        return &*admissible;
    };

    if (rep.h_prime == Verdict::Pass) {
        rep.g = Verdict::Pass;  // every admissible ideal is generated by its parts in degrees D
    } else if (const auto* C = get_admissible()) {
        rep.g = Verdict::Pass;
        for (const auto& I : *C)
            for (const auto& gen : I.generators()) {
                Degree a = g.degree_of(gen);
                if (!in_set(rep.D, a)) {
                    rep.g = Verdict::Fail;
                    rep.witnesses.push_back({"g", I, a, "generator degree outside D"});
                    break;
                }
            }
    }

    const std::vector<MonomialIdeal>* Cs = nullptr;
    if (rep.h == Verdict::Pass) Cs = &rep.ideals;
    else Cs = get_admissible();
    if (Cs) {
        rep.s = Verdict::Pass;
        for (const auto& I : *Cs) {
            std::set<Degree> need = opts.mode == SyzygyMode::Exact ? minimal_syzygy_degrees(I, g)
                                                                   : pairwise_lcm_degrees(I, g);
            for (const auto& a : need)
                if (!in_set(rep.D, a)) {
                    rep.s = opts.mode == SyzygyMode::Exact ? Verdict::Fail : Verdict::Unknown;
                    rep.witnesses.push_back({"s", I, a,
                                             opts.mode == SyzygyMode::Exact ? "minimal syzygy degree outside D"
                                                                            : "lcm degree outside D"});
                    break;
                }
        }
    }
    return rep;
}

namespace {

SupportReport iterate(const Grading& g, const HilbertSpec& h, const std::vector<Degree>& seed,
                      const SupportOptions& opts, bool very) {
    std::vector<Degree> D = canonical(g, seed);
    int iter = 0;
    while (true) {
        bool grew = false;
        while (true) {
            if (iter >= opts.iteration_cap)
                fail(ErrorCode::IterationCap, "supportive set search exceeded " + std::to_string(opts.iteration_cap) +
                                                  " iterations");
            ++iter;
            auto CD = enumerate_on(g, h, D, opts.enumeration).ideals;
            std::set<Degree> add;
            for (const auto& I : CD) {
                Comparison cmp = compare_hilbert(I, g, h, opts.frontier_cap);
                if (!cmp.exceeds.empty()) add.insert(cmp.exceeds.front());
                else if (very && !cmp.below.empty()) add.insert(cmp.below.front());
            }
            std::size_t before = D.size();
            for (const auto& a : add)
                if (!in_set(D, a)) D.push_back(a);
            D = canonical(g, D);
            if (D.size() == before) {
                if (!add.empty()) fail(ErrorCode::Internal, "witness degree already in D");
                break;
            }
        }
        if (!very) break;
        auto CD = enumerate_on(g, h, D, opts.enumeration).ideals;
        std::size_t before = D.size();
        for (const auto& I : CD) {
            std::set<Degree> need = opts.mode == SyzygyMode::Exact ? minimal_syzygy_degrees(I, g)
                                                                   : pairwise_lcm_degrees(I, g);
            for (const auto& a : need)
                if (!in_set(D, a)) D.push_back(a);
        }
        D = canonical(g, D);
        grew = D.size() != before;
        if (!grew) break;
    }
    SupportOptions final_opts = opts;
    final_opts.resolve_with_admissible = false;
    SupportReport rep = check_conditions(g, h, D, final_opts);
    rep.iterations = iter;
    return rep;
}

}  // namespace

SupportReport compute_supportive(const Grading& g, const HilbertSpec& h, const std::vector<Degree>& seed,
                                 const SupportOptions& opts) {
    return iterate(g, h, seed, opts, false);
}

SupportReport compute_very_supportive(const Grading& g, const HilbertSpec& h, const std::vector<Degree>& seed,
                                      const SupportOptions& opts) {
    return iterate(g, h, seed, opts, true);
}

std::vector<MonomialIdeal> enumerate_admissible(const Grading& g, const HilbertSpec& h, const SupportOptions& opts) {
    return compute_very_supportive(g, h, {}, opts).ideals;
}

std::vector<MonomialIdeal> enumerate_admissible(const Grading& g, const HilbertSpec& h) {
    return enumerate_admissible(g, h, SupportOptions{});
}

}  // namespace mhilb
