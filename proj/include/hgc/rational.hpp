#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hgc {

/// Exact rational number. Everything in this library that carries measure,
/// thresholds or bounds is a Rat; there is no floating point anywhere on the
/// algorithmic path (capacity_T is the single documented exception).
using Rat = mpq_class;

/// Build num/den in canonical form (gmpxx does not canonicalize this ctor).
Rat make_rat(long num, long den);

/// Parse "a/b" or "a" (optional leading '-'). Throws on malformed input or
/// zero denominator. Result is canonicalized, so "3/6" parses to 1/2.
Rat parse_rat(const std::string& text);

/// Canonical "a/b" (or "a" when the denominator is 1); GMP's get_str form.
std::string rat_str(const Rat& value);

/// value^exponent, exact.
Rat rat_pow(const Rat& value, unsigned exponent);

/// 2^exponent as an exact rational; exponent may be negative.
Rat rat_pow2(long exponent);

/// Smallest integer >= count * factor, as a size. Requires factor >= 0.
std::uint64_t ceil_mul(std::uint64_t count, const Rat& factor);

/// Conversion for reporting only: round-to-nearest double.
double rat_to_double(const Rat& value);

}  // namespace hgc
