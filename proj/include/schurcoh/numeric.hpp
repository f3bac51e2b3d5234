#pragma once

#include <gmpxx.h>

#include <string>

namespace schurcoh {

using BigInt = mpz_class;
using Rational = mpq_class;

// n/d in lowest terms. mpq_class(n, d) does not reduce, and comparisons of
// unreduced values are wrong.
inline Rational frac(long n, long d)
{
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const Rational& v)
{
    Rational c = v;
    c.canonicalize();
    return c.get_str();
}

// Both numerator and denominator perfect squares, value nonnegative.
inline bool is_rational_square(const Rational& v)
{
    Rational c = v;
    c.canonicalize();
    if (sgn(c) < 0)
        return false;
    return mpz_perfect_square_p(c.get_num_mpz_t()) != 0 &&
           mpz_perfect_square_p(c.get_den_mpz_t()) != 0;
}

} // namespace schurcoh
