#pragma once

#include "padival/prime.hpp"

#include <vector>

namespace padival {

/// Base-p digit vector, least-significant digit first, so digits()[i] is
/// the coefficient of p^i. Canonical form: no leading zeros, except the
/// single digit [0] representing zero.
class BaseExpansion {
 public:
  /// Validates every digit is in [0, base) and the form is canonical.
  BaseExpansion(Prime base, std::vector<Natural> digits);

  const Prime& base() const { return base_; }
  const std::vector<Natural>& digits() const { return digits_; }

  /// Sum of digits()[i] * base^i; the inverse of expand().
  Natural value() const;

 private:
  Prime base_;
  std::vector<Natural> digits_;
};

/// Canonical base-p expansion of n >= 0; expand(0, p) is the single
/// digit [0].
BaseExpansion expand(const Natural& n, const Prime& p);

/// p-adic weight s_p(n): sum of the digits of n in base p.
Natural weight(const Natural& n, const Prime& p);

}  // namespace padival
