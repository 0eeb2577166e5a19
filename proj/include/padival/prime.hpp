#pragma once

#include "padival/natural.hpp"

namespace padival {

/// Deterministic primality check. Trial division by a small-prime table,
/// then Miller-Rabin with a base set that is exact for all 64-bit
/// candidates; larger candidates fall back to trial division.
bool is_prime(const Natural& n);

/// A validated prime modulus. Construction rejects 0, 1 and composites,
/// so every consumer can assume primality without re-checking.
class Prime {
 public:
  explicit Prime(Natural value);
  explicit Prime(unsigned long value) : Prime(Natural(value)) {}

  const Natural& value() const { return value_; }
  bool is_two() const { return value_ == 2; }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  Natural value_;
};

}  // namespace padival
