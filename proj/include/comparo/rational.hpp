#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace comparo {

using Rational = mpq_class;

/// Parses "num/den" or an integer. Throws ModelError on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form (always with a slash, lowest terms).
std::string format_rational(const Rational& q);

/// Bits needed for numerator plus denominator.
std::size_t bit_size(const Rational& q);

}  // namespace comparo
