#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace gyro {

using Rational = mpq_class;

/// Parses "3", "-1/2", "0.25" or "1.5e-3" into an exact rational.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q == 1) form.
std::string to_string(const Rational& q);

/// Exact square root when q is the square of a rational, nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace gyro
