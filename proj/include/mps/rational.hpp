#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mps {

// Exact arbitrary-precision rational. GMP keeps values canonical (lowest
// terms, positive denominator) through arithmetic; parse_rat canonicalizes
// on input. No floating point is used anywhere in the library.
using Rat = mpq_class;

Rat rat(long num, long den = 1);

// Accepts "p" or "p/q" with an optional leading minus sign. The input need
// not be in lowest terms; the result always is. Throws ParseError.
Rat parse_rat(std::string_view text);

// Lowest terms; integral values print without a denominator ("0", "1", "-2").
std::string format_rat(const Rat& value);

// Floor/ceiling as integers (values in this library stay well within long).
long rat_floor(const Rat& value);
long rat_ceil(const Rat& value);

bool is_integral(const Rat& value);

}  // namespace mps
