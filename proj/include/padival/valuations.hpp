#pragma once

#include "padival/digits.hpp"
#include "padival/valuation.hpp"

#include <utility>

namespace padival {

/// v_p(n): exponent of the highest power of p dividing n; infinite at 0.
Valuation val(const Natural& n, const Prime& p);

/// v_p(a/b) = v_p(a) - v_p(b); infinite when the numerator is 0. May be
/// negative.
Valuation val_ratio(const Ratio& r, const Prime& p);

/// Legendre sum: v_p(n!) = sum over k >= 1 of floor(n / p^k). The loop
/// runs on integer divisions only and stops once the quotient is zero.
Valuation val_factorial_direct(const Natural& n, const Prime& p);

/// Digit-sum form: v_p(n!) = (n - s_p(n)) / (p - 1). Costs one base-p
/// expansion of n; the division is asserted exact.
Valuation val_factorial_alt(const Natural& n, const Prime& p);

/// v_p(p^k!) = (p^k - 1) / (p - 1).
Valuation val_factorial_prime_power(unsigned long k, const Prime& p);

/// v_p((p^k * n)!) = n * (p^k - 1)/(p - 1) + v_p(n!).
Valuation val_factorial_scaled(const Natural& n, unsigned long k,
                               const Prime& p);

/// v_p(n!) from the digits of n: sum over i >= 1 of digits[i] * v_p(p^i!),
/// where v_p(p^i!) = (p^i - 1)/(p - 1). The i = 0 digit contributes
/// nothing and is not read.
Valuation val_factorial_from_digits(const BaseExpansion& e);

/// Splits n >= 1 as n = (p-1) * v_p(n!) + s_p(n); returns the two addends
/// ((p-1) * v_p(n!), s_p(n)).
std::pair<Natural, Natural> split(const Natural& n, const Prime& p);

}  // namespace padival
