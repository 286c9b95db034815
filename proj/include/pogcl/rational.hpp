#ifndef POGCL_RATIONAL_HPP
#define POGCL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace pogcl {

/// Exact rational number in lowest terms (GMP canonical form).
using Rational = mpq_class;
/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Canonical text form: "p" for integers, "p/q" otherwise. Parsed back by from_string.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p" or "p/q" (optional sign on p). Throws std::invalid_argument.
Rational rational_from_string(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Floor and ceiling of a rational as a machine integer.
long floor_to_long(const Rational& q);
long ceil_to_long(const Rational& q);

}  // namespace pogcl

#endif
