#include "padival/valuations.hpp"

#include "padival/errors.hpp"

namespace padival {

Valuation val(const Natural& n, const Prime& p) {
  detail::require_arg(n >= 0, "val: n must be non-negative");
  if (n == 0) return Valuation::infinite();
  Natural reduced;
  const auto e = mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(),
                            p.value().get_mpz_t());
  return Valuation::finite(static_cast<unsigned long>(e));
}

Valuation val_ratio(const Ratio& r, const Prime& p) {
  if (r.numerator == 0) return Valuation::infinite();
  return Valuation::finite(val(r.numerator, p).value() -
                           val(r.denominator, p).value());
}

Valuation val_factorial_direct(const Natural& n, const Prime& p) {
  detail::require_arg(n >= 0, "val_factorial_direct: n must be non-negative");
  // Iterated division: after k rounds q = floor(n / p^k), which is the
  // k-th Legendre term. Terminates exactly when p^k exceeds n.
  Natural sum = 0;
  Natural q = n;
  if (p.value().fits_ulong_p()) {
    const unsigned long pu = p.value().get_ui();
    while (q > 0) {
      mpz_tdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), pu);
      sum += q;
    }
  } else {
    while (q > 0) {
      mpz_tdiv_q(q.get_mpz_t(), q.get_mpz_t(), p.value().get_mpz_t());
      sum += q;
    }
  }
  return Valuation::finite(sum);
}

Valuation val_factorial_alt(const Natural& n, const Prime& p) {
  detail::require_arg(n >= 0, "val_factorial_alt: n must be non-negative");
  const Natural s = weight(n, p);
  return Valuation::finite(
      detail::exact_div(n - s, p.value() - 1, "val_factorial_alt"));
}

Valuation val_factorial_prime_power(unsigned long k, const Prime& p) {
  const Natural pk = pow_natural(p.value(), k);
  return Valuation::finite(
      detail::exact_div(pk - 1, p.value() - 1, "val_factorial_prime_power"));
}

Valuation val_factorial_scaled(const Natural& n, unsigned long k,
                               const Prime& p) {
  detail::require_arg(n >= 0, "val_factorial_scaled: n must be non-negative");
  const Natural pk = pow_natural(p.value(), k);
  const Natural repunit =
      detail::exact_div(pk - 1, p.value() - 1, "val_factorial_scaled");
  return Valuation::finite(n * repunit + val_factorial_direct(n, p).value());
}

Valuation val_factorial_from_digits(const BaseExpansion& e) {
  const Natural& p = e.base().value();
  // v_p(p^i!) = (p^i - 1)/(p - 1) is the base-p repunit with i ones;
  // build it incrementally instead of dividing.
  Natural sum = 0;
  Natural repunit = 0;
  const auto& digits = e.digits();
  for (std::size_t i = 1; i < digits.size(); ++i) {
    repunit = repunit * p + 1;
    sum += digits[i] * repunit;
  }
  return Valuation::finite(sum);
}

std::pair<Natural, Natural> split(const Natural& n, const Prime& p) {
  detail::require_arg(n >= 1, "split: n must be at least 1");
  const Natural s = weight(n, p);
  const Natural v = detail::exact_div(n - s, p.value() - 1, "split");
  Natural valuation_part = (p.value() - 1) * v;
  detail::require_consistent(valuation_part + s == n,
                             "split: parts do not sum to n");
  return {std::move(valuation_part), s};
}

}  // namespace padival
