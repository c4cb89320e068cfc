#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hermitia {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "-p" or "p/q" (canonicalized). Throws ParseError on failure.
Rational parse_rational(std::string_view text);

/// Parses a decimal literal such as "2.41421356" or "-1e-3" exactly.
Rational parse_decimal(std::string_view text);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace hermitia
