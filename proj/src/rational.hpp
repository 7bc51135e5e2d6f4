#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace mouldcalc {

// Exact arithmetic over Q. GMP keeps rationals canonical: coprime
// numerator/denominator, denominator > 0.
using Integer = mpz_class;
using Rational = mpq_class;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rational &q) { return sgn(q) == 0; }
inline bool is_one(const Rational &q) { return q == 1; }

inline Rational rat(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "a" or "a/b" with optional sign, arbitrary precision.
Rational rational_from_string(const std::string &s);

std::string to_string(const Rational &q);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

} // namespace mouldcalc
