#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace mhilb {

using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& x) { return x.get_str(); }

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Int binomial(long n, long k);

// C(x, k) for a rational x, as a polynomial value: x(x-1)...(x-k+1)/k!.
Rat binomial_rat(const Rat& x, long k);

Int gcd_of(const std::vector<Int>& xs);

long long floor_div(long long a, long long b);
long long mod_pos(long long a, long long m);

}  // namespace mhilb
