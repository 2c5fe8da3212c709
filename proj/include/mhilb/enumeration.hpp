#pragma once

#include <cstddef>
#include <vector>

#include "mhilb/grading.hpp"
#include "mhilb/hilbert_spec.hpp"
#include "mhilb/monomial.hpp"

namespace mhilb {

struct EnumerationOptions {
    std::size_t max_nodes = 2000000;
    std::size_t max_results = 200000;
};

struct EnumerationResult {
    std::vector<MonomialIdeal> ideals;  // canonical order
    std::size_t nodes = 0;
};

// Degrees of D in processing order: increasing weight for positive gradings, otherwise sorted.
std::vector<Degree> processing_order(const Grading& g, std::vector<Degree> D);

// Finite sets of h standard monomials of degree a closed under division by degree-zero monomials.
std::vector<std::vector<Monomial>> standard_set_candidates(const Grading& g, const Degree& a, long long h,
                                                           const std::vector<Monomial>& zero_gens,
                                                           std::size_t max_nodes);

// Monomial ideals generated in degrees D whose Hilbert function agrees with h on D.
EnumerationResult enumerate_on(const Grading& g, const HilbertSpec& h, const std::vector<Degree>& D,
                               const EnumerationOptions& opts = {});

struct SupportOptions;
// All monomial ideals with Hilbert function h (computed through a very supportive set).
std::vector<MonomialIdeal> enumerate_admissible(const Grading& g, const HilbertSpec& h,
                                                const SupportOptions& opts);
std::vector<MonomialIdeal> enumerate_admissible(const Grading& g, const HilbertSpec& h);

}  // namespace mhilb
