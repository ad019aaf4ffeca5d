#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace zonal {

// All coefficient arithmetic in this library is exact. Rational values are
// kept in canonical reduced form (gcd(|num|, den) = 1, den > 0), which is
// what mpq_class maintains across arithmetic.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "p/q" or "-p/q" with arbitrary-precision integers.
Rational rational_from_string(std::string_view text);

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

Integer factorial(long n);
Integer binomial(long n, long k);

// Rising factorial (a)_k = a (a+1) ... (a+k-1); k >= 0.
Rational pochhammer(const Rational& a, long k);

// 1/m! extended by 1/m! = 0 for negative m, the usual convention for
// hypergeometric term manipulation.
Rational inv_factorial_ext(long m);

}  // namespace zonal
