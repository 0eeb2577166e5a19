#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace padival {

/// Arbitrary-precision integer used for all domain quantities. Operations
/// that require non-negative input validate at their API boundary.
using Natural = mpz_class;

/// base^exp.
Natural pow_natural(const Natural& base, unsigned long exp);

/// Parses a non-negative decimal string (digits only: no sign, no spaces,
/// no radix prefixes). Throws std::invalid_argument on anything else.
Natural parse_natural(const std::string& text);

/// Narrows to uint64, throwing std::invalid_argument when out of range.
std::uint64_t to_uint64(const Natural& n);

}  // namespace padival
