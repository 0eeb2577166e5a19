#include "padival/digits.hpp"

#include "padival/errors.hpp"

#include <utility>

namespace padival {

BaseExpansion::BaseExpansion(Prime base, std::vector<Natural> digits)
    : base_(std::move(base)), digits_(std::move(digits)) {
  detail::require_arg(!digits_.empty(),
                      "a base expansion needs at least one digit");
  for (const Natural& d : digits_) {
    detail::require_arg(d >= 0 && d < base_.value(),
                        "digit " + d.get_str() + " out of range for base " +
                            base_.value().get_str());
  }
  detail::require_arg(digits_.size() == 1 || digits_.back() != 0,
                      "non-canonical expansion: leading zero digit");
}

Natural BaseExpansion::value() const {
  Natural acc = 0;
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
    acc = acc * base_.value() + *it;
  }
  return acc;
}

BaseExpansion expand(const Natural& n, const Prime& p) {
  detail::require_arg(n >= 0, "expand: n must be non-negative");
  std::vector<Natural> digits;
  if (n == 0) {
    digits.emplace_back(0);
    return BaseExpansion(p, std::move(digits));
  }
  Natural q = n;
  if (p.value().fits_ulong_p()) {
    const unsigned long pu = p.value().get_ui();
    while (q > 0) {
      digits.emplace_back(mpz_tdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), pu));
    }
  } else {
    Natural r;
    while (q > 0) {
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(),
                  p.value().get_mpz_t());
      digits.push_back(r);
    }
  }
  return BaseExpansion(p, std::move(digits));
}

Natural weight(const Natural& n, const Prime& p) {
  detail::require_arg(n >= 0, "weight: n must be non-negative");
  Natural sum = 0;
  Natural q = n;
  if (p.value().fits_ulong_p()) {
    const unsigned long pu = p.value().get_ui();
    while (q > 0) {
      sum += mpz_tdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), pu);
    }
  } else {
    Natural r;
    while (q > 0) {
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(),
                  p.value().get_mpz_t());
      sum += r;
    }
  }
  return sum;
}

}  // namespace padival
