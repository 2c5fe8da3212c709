#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mhilb/enumeration.hpp"

namespace mhilb {

enum class Verdict { Pass, Fail, Unknown };
const char* verdict_name(Verdict v);

// EXACT uses minimal first syzygy degrees; SUFFICIENT uses all pairwise lcm degrees.
enum class SyzygyMode { Exact, Sufficient };

struct SupportOptions {
    int frontier_cap = 64;
    int iteration_cap = 32;
    SyzygyMode mode = SyzygyMode::Exact;
    EnumerationOptions enumeration;
    // Resolve (g) and (s) against the full admissible set when the cheaper checks do not decide them.
    bool resolve_with_admissible = true;
};

// Result of comparing h_I with h.
struct Comparison {
    bool exact = true;                 // false when only a finite frontier of degrees was inspected
    std::vector<Degree> exceeds;       // h_I(a) > h(a), in frontier order
    std::vector<Degree> below;         // h_I(a) < h(a), in frontier order
    bool equal() const { return exceeds.empty() && below.empty(); }
};

// The first `cap` degrees of monomials, by weight (positive) or by word length otherwise.
std::vector<Degree> degree_frontier(const Grading& g, int cap);

Comparison compare_hilbert(const MonomialIdeal& I, const Grading& g, const HilbertSpec& h, int frontier_cap);

struct Witness {
    std::string condition;  // "h'", "h", "g", "s"
    MonomialIdeal ideal;
    Degree degree;
    std::string detail;
};

struct SupportReport {
    std::vector<Degree> D;
    Verdict g = Verdict::Unknown;
    Verdict h = Verdict::Unknown;
    Verdict h_prime = Verdict::Unknown;
    Verdict s = Verdict::Unknown;
    SyzygyMode s_mode = SyzygyMode::Exact;
    std::string verification;  // "exact" or "frontier(<cap>)"
    std::vector<MonomialIdeal> ideals;  // C_D
    std::vector<Witness> witnesses;
    int iterations = 0;

    bool supportive() const { return g == Verdict::Pass && h_prime == Verdict::Pass; }
    bool very_supportive() const { return supportive() && h == Verdict::Pass && s == Verdict::Pass; }
};

SupportReport check_conditions(const Grading& g, const HilbertSpec& h, const std::vector<Degree>& D,
                               const SupportOptions& opts = {});

SupportReport compute_supportive(const Grading& g, const HilbertSpec& h, const std::vector<Degree>& seed = {},
                                 const SupportOptions& opts = {});

SupportReport compute_very_supportive(const Grading& g, const HilbertSpec& h, const std::vector<Degree>& seed = {},
                                      const SupportOptions& opts = {});

}  // namespace mhilb
