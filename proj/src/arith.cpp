#include "mhilb/arith.hpp"
#include "mhilb/error.hpp"

namespace mhilb {

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rat binomial_rat(const Rat& x, long k) {
    if (k < 0) return 0;
    Rat r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (x - i);
        r /= (i + 1);
    }
    return r;
}

Int gcd_of(const std::vector<Int>& xs) {
    Int g = 0;
    for (const auto& x : xs) {
        Int t;
        mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        g = t;
    }
    return g;
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long mod_pos(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidInput: return "INVALID_INPUT";
        case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
        case ErrorCode::ShapeMismatch: return "SHAPE_MISMATCH";
        case ErrorCode::NoRepresentation: return "NO_REPRESENTATION";
        case ErrorCode::UnmappableMinor: return "UNMAPPABLE_MINOR";
        case ErrorCode::UnboundedFiber: return "UNBOUNDED_FIBER";
        case ErrorCode::InfiniteSet: return "INFINITE_SET";
        case ErrorCode::IterationCap: return "ITERATION_CAP";
        case ErrorCode::SearchCap: return "SEARCH_CAP";
        case ErrorCode::CapExceeded: return "CAP_EXCEEDED";
        case ErrorCode::Internal: return "INTERNAL";
    }
    return "INTERNAL";
}

int exit_status_for(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidInput:
        case ErrorCode::DimensionMismatch:
        case ErrorCode::ShapeMismatch:
        case ErrorCode::NoRepresentation:
        case ErrorCode::UnmappableMinor:
            return 2;
        case ErrorCode::UnboundedFiber:
        case ErrorCode::InfiniteSet:
        case ErrorCode::IterationCap:
        case ErrorCode::SearchCap:
        case ErrorCode::CapExceeded:
            return 3;
        case ErrorCode::Internal:
            return 4;
    }
    return 4;
}

}  // namespace mhilb
