// Exact rationals, backed by GMP's mpq_class (always canonical: lowest
// terms, positive denominator).

#ifndef LORDER_RATIONAL_HPP
#define LORDER_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lorder {

using Rational = mpq_class;
using Integer = mpz_class;

/// Builds num/den in lowest terms; den must be nonzero.
Rational make_rational(long num, long den = 1);

Integer floor_of(const Rational& x);
/// x - floor(x), in [0, 1).
Rational fractional_part(const Rational& x);
bool is_integer(const Rational& x);

/// "num/den", "0" for zero, plain integers without "/1".
std::string format_rational(const Rational& x);
/// Inverse of format_rational; also accepts non-canonical input such as
/// "4/6" or "-0". Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace lorder

#endif  // LORDER_RATIONAL_HPP
