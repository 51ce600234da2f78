#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace cycontext {

/// Exact rational number. All probabilities and LP coefficients in this
/// library are of this type; no floating point is used anywhere in a
/// computation path. Values are kept in canonical form (reduced fraction,
/// positive denominator) by the backend.
using Rational = boost::multiprecision::mpq_rational;

/// Parse "a/b", an integer, or a finite decimal ("0.125") into an exact
/// rational. Throws std::invalid_argument on malformed input or zero
/// denominator.
Rational parse_rational(const std::string& text);

/// Render as "a/b" with canonical sign, always including the denominator
/// ("0/1", "-1/16"). This is the wire format used by the CLI.
std::string format_rational(const Rational& value);

}  // namespace cycontext
