#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polyperm {

using Rational = mpq_class;

/// Parses `p/q` or an integer; the result is canonicalized. Throws ParseError.
Rational parse_rational(std::string_view text);

/// `p/q` in lowest terms, or a bare integer when q = 1.
std::string to_string(const Rational &value);

} // namespace polyperm
