#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hexatlas {

/// Exact arithmetic for the piecewise-linear layer. Rational(p, q) may hold
/// p/q unreduced; every entry point of the library reduces its inputs.
using Rational = mpq_class;

/// Accepts "p", "p/q", "-p/q" and finite decimals such as "0.25" or "1e-3";
/// the result is always exact.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" for integers.
std::string format_rational(const Rational& q);

/// Exact binary value of a finite double.
Rational rational_from_double(double x);

}  // namespace hexatlas
