#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace symsing {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& q);

// Parses "p" or "p/q" with optional sign. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace symsing
