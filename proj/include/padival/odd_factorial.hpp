#pragma once

#include "padival/digits.hpp"
#include "padival/valuation.hpp"

#include <vector>

namespace padival {

/// An odd natural number, the argument convention for m!! = 1*3*5*...*m.
/// Index form: the n-th odd factorial is (2n-1)!!, n >= 1.
class OddNatural {
 public:
  explicit OddNatural(Natural value);  // rejects 0 and even values

  /// 2n - 1 for n >= 1.
  static OddNatural from_index(const Natural& n);

  const Natural& value() const { return value_; }

  /// The n with value() == 2n - 1.
  Natural index() const { return (value_ + 1) / 2; }

 private:
  Natural value_;
};

/// Greatest odd integer <= numerator/denominator; -1 when the quotient
/// lies in [0, 1). denominator >= 1.
mpz_class floor_odd(const Natural& numerator, const Natural& denominator);

/// floor(log_p m) for m >= 1, by repeated multiplication and comparison.
unsigned long floor_log(const Natural& m, const Prime& p);

/// v_p((2n-1)!!) = sum over k >= 1 of ceil(floor((2n-1)/p^k) / 2).
/// Odd p only; n >= 1.
Valuation val_oddfact_direct(const Natural& n, const Prime& p);

/// The per-k summands of the direct formula, in iteration order.
std::vector<Natural> val_oddfact_direct_terms(const Natural& n,
                                              const Prime& p);

/// v_p((2n-1)!!) = (n + s_p(n) - s_p(2n)) / (p-1). Odd p; n >= 1.
Valuation val_oddfact_alt(const Natural& n, const Prime& p);

/// v_p((2n-1)!!) = (n + s_p(n-1) - s_p(2n-1)) / (p-1). Odd p; n >= 1.
Valuation val_oddfact_alt2(const Natural& n, const Prime& p);

/// v_p((p*m)!!) = (m+1)/2 + v_p(m!!). Odd p; m odd.
Valuation val_oddfact_shifted(const OddNatural& m, const Prime& p);

/// v_p(p^k!!) = (k + (p^k - 1)/(p-1)) / 2. Odd p; k >= 1. The halving is
/// asserted exact (the numerator is provably even for odd p).
Valuation val_oddfact_prime_power(unsigned long k, const Prime& p);

/// 2 v_p(m!!) = floor(log_p m) + sum over j in [1, floor(log_p m)] of
/// floor_odd(m, p^j). Odd p; m odd. The summation bound keeps every
/// floor_odd term in the quotient-at-least-one regime.
Valuation val_oddfact_log_form(const OddNatural& m, const Prime& p);

/// Total dispatcher: v_2 of any odd factorial is 0; odd primes route to
/// the digit-sum formula.
Valuation val_oddfact_any(const Natural& n, const Prime& p);

}  // namespace padival
