#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mhilb/hilbert_spec.hpp"
#include "mhilb/monomial.hpp"
#include "mhilb/symbolic.hpp"

namespace mhilb {

struct EquationMeta {
    std::string emitter;
    std::size_t raw_count = 0;                        // before removing zeros and duplicates
    std::map<std::size_t, std::size_t> raw_by_terms;  // raw equations by number of terms
    std::map<std::string, std::string> info;
    std::vector<std::string> warnings;
};

struct EquationSet {
    VarTable vars;
    std::vector<SparsePoly> equations;
    EquationMeta meta;

    // Normalise, drop zeros (and duplicates when dedup is set), sort, and renumber variables canonically.
    void canonicalize(bool dedup = true);
};

struct EquationOptions {
    std::size_t max_equations = 5000000;
    std::size_t max_minors = 300000;
};

// Incidence relations x^u L_a in L_b for a < b in D, in quotient Pluecker coordinates.
EquationSet quadratic_equations(const Grading& g, const HilbertSpec& h, const std::vector<Degree>& D,
                                const EquationOptions& opts = {});

// Rows of Gamma: coefficient vectors of x^u g_B in degree e, with g_B = sum_j (-1)^j [B - b_j] b_j.
struct GammaMatrix {
    VarTable vars;
    SymMatrix matrix{0, 0};
    std::vector<Monomial> columns;  // fiber(e)
};
GammaMatrix gamma_matrix(const Grading& g, const HilbertSpec& h, const std::vector<Degree>& D, const Degree& e);

// Minors of Gamma of size |fiber(e)| - h(e) + 1.
EquationSet determinantal_equations(const Grading& g, const HilbertSpec& h, const std::vector<Degree>& D,
                                    const Degree& e, const EquationOptions& opts = {});

// Stiefel description in the standard grading: Omega has (r-h) rows, Omega-hat stacks n shifted copies.
struct BayerLayout {
    int n = 0;
    int d0 = 0;
    long long h = 0, h_next = 0;
    std::vector<Monomial> X;       // degree d0 monomials (columns of Omega)
    std::vector<Monomial> Xnext;   // degree d0+1 monomials (columns of Omega-hat)
    std::vector<std::pair<int, Monomial>> reduced;  // kept columns (variable, monomial) of Omega (x) S_1
    BlockStructure blocks;         // columns: Omega-hat first, then reduced
};
BayerLayout bayer_layout(int n, int d0, long long h, long long h_next);

// Sign relating Stiefel minors to brackets: [T] = stiefel_sign(T) * det Omega_{X - T}.
int stiefel_sign(const std::vector<int>& positions_of_T, std::size_t h);

// Maximal minor of (Omega-hat | reduced) on the given columns (Omega-hat columns first), in brackets.
SparsePoly bayer_minor(const BayerLayout& L, VarTable& vars, const std::vector<int>& cols);

EquationSet bayer_equations(int n, int d0, long long h, long long h_next, const EquationOptions& opts = {});

EquationSet toric_binomials(const Grading& g, const std::vector<Degree>& D, const EquationOptions& opts = {});

// Affine chart: coordinates gamma^x_b with S_a / I_a free on B_a for every a in D.
using StandardChoice = std::map<Degree, std::vector<Monomial>>;
EquationSet chart_equations(const Grading& g, const HilbertSpec& h, const std::vector<Degree>& D,
                            const StandardChoice& B, const EquationOptions& opts = {});
StandardChoice standard_choice_of(const MonomialIdeal& I, const Grading& g, const std::vector<Degree>& D);

// Bracket point of a monomial ideal: [Std_a(I)] = 1, every other bracket 0; all other variables 0.
Rat evaluate_at_monomial_point(const SparsePoly& p, const VarTable& vars, const MonomialIdeal& I, const Grading& g);

}  // namespace mhilb
