#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bolalg {

/// Exact rational scalar. Always canonical: lowest terms, positive denominator.
using Scalar = mpq_class;

/// Parses `[sign] digits [/ digits]`, e.g. `-3/2` or `7`. Throws ParseError.
Scalar parse_rational(std::string_view text);

/// Non-throwing variant; returns false when `text` is not a rational literal.
bool try_parse_rational(std::string_view text, Scalar& out);

std::string to_string(const Scalar& q);

}  // namespace bolalg
