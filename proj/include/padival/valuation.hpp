#pragma once

#include "padival/natural.hpp"

#include <iosfwd>
#include <string>
#include <utility>

namespace padival {

/// Result of v_p: a (possibly negative) integer, or the conventional
/// v_p(0) = infinity. Finite values are arbitrary-precision because the
/// factorial valuations grow like n/(p-1) and the library accepts n of
/// any size.
class Valuation {
 public:
  static Valuation finite(mpz_class value) {
    return Valuation(std::move(value), false);
  }
  static Valuation infinite() { return Valuation(0, true); }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  /// The finite value; throws std::logic_error on the infinite valuation.
  const mpz_class& value() const;

  /// Decimal digits, or "infinite".
  std::string str() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  Valuation(mpz_class value, bool infinite)
      : value_(std::move(value)), infinite_(infinite) {}

  mpz_class value_;
  bool infinite_;
};

bool operator==(const Valuation& v, long x);
std::ostream& operator<<(std::ostream& os, const Valuation& v);

/// A rational numerator/denominator pair. Not required to be in lowest
/// terms; valuation is reduction-invariant. denominator != 0 is enforced.
struct Ratio {
  Natural numerator;
  Natural denominator;

  Ratio(Natural num, Natural den);
};

}  // namespace padival
