#pragma once

#include <vector>

#include "mhilb/equations.hpp"
#include "mhilb/hilbert_spec.hpp"

namespace mhilb {

// Hilbert polynomial g(d) of a subscheme of P^{n-1}.
struct HilbertPolynomial {
    UPoly g;
    int n = 0;
};

// g(d) = sum_{i=1..s} C(d + b_i - i + 1, b_i) with b_1 >= ... >= b_s >= 0.
struct MacaulayRepresentation {
    std::vector<long> b;
    UPoly evaluate() const;
};

MacaulayRepresentation macaulay_representation(const UPoly& g, std::size_t max_terms = 1000000);
long gotzmann_number(const HilbertPolynomial& g, std::size_t max_terms = 1000000);

// h(d) = C(n+d-1, d) below the Gotzmann number and g(d) from there on; tabulated on 0..d0+1.
HilbertSpec hilbert_function_from_polynomial(const HilbertPolynomial& g);

enum class GrothendieckFlavor { GotzmannPair, IarrobinoKleiman, Bayer };
const char* flavor_name(GrothendieckFlavor f);

// Omega-hat in Stiefel coordinates: n stacked shifted copies of the (r-h) x r matrix Omega.
struct StiefelOmegaHat {
    VarTable vars;
    SymMatrix matrix{0, 0};
    std::vector<Monomial> X, Xnext;
};
StiefelOmegaHat stiefel_omega_hat(int n, int d0, long long h);

// Fitting minors of size r' - h' + 1 of Omega-hat.
EquationSet iarrobino_kleiman_equations(int n, int d0, long long h, long long h_next,
                                        const EquationOptions& opts = {});

EquationSet grothendieck_equations(const HilbertPolynomial& g, GrothendieckFlavor flavor,
                                   const EquationOptions& opts = {});

}  // namespace mhilb
