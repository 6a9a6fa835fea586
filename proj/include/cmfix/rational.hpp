#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cmfix {

// Arbitrary precision scalars. mpq_class keeps values canonical (lowest
// terms, positive denominator) as long as every construction path goes
// through parse_rational() or integer arithmetic.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on anything else,
/// including a zero denominator, whitespace or decimal points.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& value);

/// Comma separated list of rationals, e.g. "-1/2,3,0".
std::vector<Rational> parse_rational_list(std::string_view text);

std::vector<std::int64_t> parse_int_list(std::string_view text);

inline Rational make_rational(std::int64_t p, std::int64_t q = 1)
{
    Rational r{Integer{static_cast<long>(p)}, Integer{static_cast<long>(q)}};
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

} // namespace cmfix
