#include "mhilb/grothendieck.hpp"

#include <map>

#include "mhilb/combinatorics.hpp"
#include "mhilb/error.hpp"

namespace mhilb {

UPoly MacaulayRepresentation::evaluate() const {
    UPoly s;
    for (std::size_t i = 0; i < b.size(); ++i)
        s = s + UPoly::binomial_shift(b[i] - static_cast<long>(i + 1) + 1, b[i]);
    return s;
}

MacaulayRepresentation macaulay_representation(const UPoly& g, std::size_t max_terms) {
    MacaulayRepresentation rep;
    UPoly rest = g;
    long prev = rest.degree();
    while (!rest.is_zero()) {
        long b = rest.degree();
        if (rest.leading() < 0 || b > prev)
            fail(ErrorCode::NoRepresentation, "polynomial " + g.str() + " has no Macaulay representation");
        // leading coefficient of C(d + b - i + 1, b) is 1/b!, so it must be a positive integer multiple of that
        Int f = 1;
        for (long k = 2; k <= b; ++k) f *= k;
        Rat scaled = rest.leading() * f;
        if (scaled.get_den() != 1)
            fail(ErrorCode::NoRepresentation, "polynomial " + g.str() + " is not integer valued");
        const long i = static_cast<long>(rep.b.size()) + 1;
        rest = rest - UPoly::binomial_shift(b - i + 1, b);
        rep.b.push_back(b);
        prev = b;
        if (rep.b.size() > max_terms) fail(ErrorCode::CapExceeded, "Macaulay representation exceeds the term cap");
    }
    return rep;
}

long gotzmann_number(const HilbertPolynomial& g, std::size_t max_terms) {
    if (g.n < 1) fail(ErrorCode::InvalidInput, "gotzmann: n must be positive");
    if (g.g.degree() > g.n - 2 && !g.g.is_zero())
        fail(ErrorCode::NoRepresentation, "Hilbert polynomial degree exceeds the dimension of P^{n-1}");
    return static_cast<long>(macaulay_representation(g.g, max_terms).b.size());
}

HilbertSpec hilbert_function_from_polynomial(const HilbertPolynomial& g) {
    long d0 = gotzmann_number(g);
    std::map<Degree, long long> table;
    for (long d = 0; d <= d0 + 1; ++d) {
        Int v = d < d0 ? binomial(g.n + d - 1, d) : g.g.eval_int(d);
        if (!v.fits_slong_p()) fail(ErrorCode::CapExceeded, "Hilbert function value too large");
        table[Degree{{d}, {}}] = v.get_si();
    }
    return HilbertSpec::polynomial_tail(g.g, d0, g.n, table);
}

const char* flavor_name(GrothendieckFlavor f) {
    switch (f) {
        case GrothendieckFlavor::GotzmannPair: return "gotzmann-pair";
        case GrothendieckFlavor::IarrobinoKleiman: return "iarrobino-kleiman";
        case GrothendieckFlavor::Bayer: return "bayer";
    }
    return "?";
}

StiefelOmegaHat stiefel_omega_hat(int n, int d0, long long h) {
    Grading g = Grading::standard(n);
    StiefelOmegaHat W;
    W.X = fiber(g, Degree{{d0}, {}}).monomials;
    W.Xnext = fiber(g, Degree{{d0 + 1}, {}}).monomials;
    const long long r = static_cast<long long>(W.X.size());
    if (h < 0 || h > r) fail(ErrorCode::InvalidInput, "omega-hat: h out of range");
    const std::size_t rows = static_cast<std::size_t>(r - h);
    W.matrix = SymMatrix(static_cast<std::size_t>(n) * rows, W.Xnext.size());
    for (int i = 0; i < n; ++i)
        for (std::size_t c = 0; c < W.Xnext.size(); ++c) {
            Monomial m = W.Xnext[c];
            if (m[static_cast<std::size_t>(i)] == 0) continue;
            --m[static_cast<std::size_t>(i)];
            for (std::size_t k = 0; k < rows; ++k)
                W.matrix.at(static_cast<std::size_t>(i) * rows + k, c) =
                    SparsePoly::variable(W.vars.intern(stiefel_var(static_cast<int>(k), m)));
        }
    return W;
}

EquationSet iarrobino_kleiman_equations(int n, int d0, long long h, long long h_next, const EquationOptions& opts) {
    StiefelOmegaHat W = stiefel_omega_hat(n, d0, h);
    EquationSet es;
    es.meta.emitter = "iarrobino-kleiman";
    es.vars = W.vars;
    const long long rows = static_cast<long long>(W.matrix.rows());
    const long long cols = static_cast<long long>(W.matrix.cols());
    const long long k = cols - h_next + 1;
    es.meta.info["rows"] = std::to_string(rows);
    es.meta.info["cols"] = std::to_string(cols);
    es.meta.info["minor_size"] = std::to_string(k);
    if (k <= 0 || k > rows || k > cols) {
        es.meta.warnings.push_back("MINOR_SIZE_EXCEEDS_MATRIX");
        return es;
    }
    Int count = binomial(rows, k) * binomial(cols, k);
    if (count > Int(static_cast<unsigned long>(opts.max_minors)))
        fail(ErrorCode::CapExceeded, "iarrobino-kleiman: " + count.get_str() + " minors exceed the cap");
    if (rows > 64 || cols > 64) fail(ErrorCode::CapExceeded, "iarrobino-kleiman: matrix exceeds 64 rows or columns");
    MinorCache mc(W.matrix);
    for_each_combination(static_cast<int>(rows), static_cast<int>(k), [&](const std::vector<int>& R) {
        std::uint64_t rm = 0;
        for (int i : R) rm |= std::uint64_t{1} << i;
        for_each_combination(static_cast<int>(cols), static_cast<int>(k), [&](const std::vector<int>& C) {
            SparsePoly m = mc.minor(rm, std::vector<std::size_t>(C.begin(), C.end()));
            ++es.meta.raw_count;
            ++es.meta.raw_by_terms[m.num_terms()];
            if (!m.is_zero()) es.equations.push_back(std::move(m));
            return true;
        });
        return true;
    });
    es.canonicalize();
    return es;
}

EquationSet grothendieck_equations(const HilbertPolynomial& g, GrothendieckFlavor flavor, const EquationOptions& opts) {
    long d0 = gotzmann_number(g);
    HilbertSpec h = hilbert_function_from_polynomial(g);
    Grading gr = Grading::standard(g.n);
    Degree a{{d0}, {}}, b{{d0 + 1}, {}};
    EquationSet es;
    switch (flavor) {
        case GrothendieckFlavor::GotzmannPair:
            es = quadratic_equations(gr, h, {a, b}, opts);
            break;
        case GrothendieckFlavor::IarrobinoKleiman:
            es = iarrobino_kleiman_equations(g.n, static_cast<int>(d0), h.value(gr, a), h.value(gr, b), opts);
            break;
        case GrothendieckFlavor::Bayer:
            es = bayer_equations(g.n, static_cast<int>(d0), h.value(gr, a), h.value(gr, b), opts);
            break;
    }
    es.meta.info["gotzmann_number"] = std::to_string(d0);
    es.meta.info["flavor"] = flavor_name(flavor);
    return es;
}

}  // namespace mhilb
