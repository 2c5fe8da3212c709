#pragma once

#include <cstddef>

#include "mhilb/monomial.hpp"

namespace mhilb {

struct TangentReport {
    std::size_t dimension = 0;
    std::size_t unknowns = 0;     // sum over minimal generators g of h_I(deg g)
    std::size_t constraints = 0;  // rows from generator pairs
    std::size_t rank = 0;
};

// dim_k of degree-zero homomorphisms I -> S/I at a monomial ideal.
TangentReport tangent_space(const MonomialIdeal& I, const Grading& g);
std::size_t tangent_dimension(const MonomialIdeal& I, const Grading& g);

}  // namespace mhilb
