#ifndef ORTHOQ_RATIONAL_HPP
#define ORTHOQ_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace orthoq {

/// Exact rational scalar used throughout the library.
using Rational = mpq_class;

/// Parses "num/den" or a plain integer, optionally signed.  Throws ParseError
/// on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form; integers are printed without a denominator.
std::string to_string(const Rational& value);

/// Integer power; negative exponents invert.  pow(0, negative) throws DomainError.
Rational pow(const Rational& base, long exponent);

/// num/den in lowest terms; den must be nonzero.
inline Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace orthoq

#endif  // ORTHOQ_RATIONAL_HPP
