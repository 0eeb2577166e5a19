#include "padival/odd_factorial.hpp"

#include "padival/errors.hpp"

#include <utility>

namespace padival {
namespace {

void require_odd_prime(const Prime& p, const char* who) {
  detail::require_arg(!p.is_two(),
                      std::string(who) + " requires an odd prime (v_2 of an "
                                         "odd factorial is always 0)");
}

void require_index(const Natural& n, const char* who) {
  detail::require_arg(n >= 1, std::string(who) + ": n must be at least 1");
}

}  // namespace

OddNatural::OddNatural(Natural value) : value_(std::move(value)) {
  detail::require_arg(value_ >= 1 && mpz_odd_p(value_.get_mpz_t()),
                      "expected an odd natural number, got " +
                          value_.get_str());
}

OddNatural OddNatural::from_index(const Natural& n) {
  detail::require_arg(n >= 1, "odd factorial index must be at least 1");
  return OddNatural(2 * n - 1);
}

mpz_class floor_odd(const Natural& numerator, const Natural& denominator) {
  detail::require_arg(numerator >= 0, "floor_odd: numerator must be >= 0");
  detail::require_arg(denominator >= 1, "floor_odd: denominator must be >= 1");
  mpz_class q = numerator / denominator;
  if (mpz_odd_p(q.get_mpz_t())) return q;
  return q == 0 ? mpz_class(-1) : mpz_class(q - 1);
}

unsigned long floor_log(const Natural& m, const Prime& p) {
  detail::require_arg(m >= 1, "floor_log: m must be at least 1");
  unsigned long e = 0;
  Natural power = 1;
  while (power * p.value() <= m) {
    power *= p.value();
    ++e;
  }
  return e;
}

std::vector<Natural> val_oddfact_direct_terms(const Natural& n,
                                              const Prime& p) {
  require_index(n, "val_oddfact_direct");
  require_odd_prime(p, "val_oddfact_direct");
  std::vector<Natural> terms;
  Natural q = 2 * n - 1;
  for (;;) {
    q /= p.value();  // q = floor((2n-1) / p^k) after k rounds
    if (q == 0) break;
    terms.emplace_back((q + 1) / 2);  // ceil(q / 2)
  }
  return terms;
}

Valuation val_oddfact_direct(const Natural& n, const Prime& p) {
  Natural sum = 0;
  for (const Natural& t : val_oddfact_direct_terms(n, p)) sum += t;
  return Valuation::finite(sum);
}

Valuation val_oddfact_alt(const Natural& n, const Prime& p) {
  require_index(n, "val_oddfact_alt");
  require_odd_prime(p, "val_oddfact_alt");
  const mpz_class num = n + weight(n, p) - weight(2 * n, p);
  return Valuation::finite(
      detail::exact_div(num, p.value() - 1, "val_oddfact_alt"));
}

Valuation val_oddfact_alt2(const Natural& n, const Prime& p) {
  require_index(n, "val_oddfact_alt2");
  require_odd_prime(p, "val_oddfact_alt2");
  const mpz_class num = n + weight(n - 1, p) - weight(2 * n - 1, p);
  return Valuation::finite(
      detail::exact_div(num, p.value() - 1, "val_oddfact_alt2"));
}

Valuation val_oddfact_shifted(const OddNatural& m, const Prime& p) {
  require_odd_prime(p, "val_oddfact_shifted");
  const Natural idx = m.index();
  const mpz_class result = idx + val_oddfact_alt(idx, p).value();
  // p*m is odd, so (p*m)!! is the odd factorial at index (p*m + 1)/2.
  const Natural shifted_idx = (p.value() * m.value() + 1) / 2;
  detail::require_consistent(
      result == val_oddfact_direct(shifted_idx, p).value(),
      "val_oddfact_shifted: shift identity disagrees with the direct sum");
  return Valuation::finite(result);
}

Valuation val_oddfact_prime_power(unsigned long k, const Prime& p) {
  detail::require_arg(k >= 1, "val_oddfact_prime_power: k must be at least 1");
  require_odd_prime(p, "val_oddfact_prime_power");
  const Natural pk = pow_natural(p.value(), k);
  const Natural repunit =
      detail::exact_div(pk - 1, p.value() - 1, "val_oddfact_prime_power");
  return Valuation::finite(
      detail::exact_div(Natural(k) + repunit, 2,
                        "val_oddfact_prime_power: odd doubled valuation"));
}

Valuation val_oddfact_log_form(const OddNatural& m, const Prime& p) {
  require_odd_prime(p, "val_oddfact_log_form");
  const unsigned long bound = floor_log(m.value(), p);
  // Every term has quotient >= 1 because j stays within floor(log_p m).
  mpz_class doubled = bound;
  Natural power = 1;
  for (unsigned long j = 1; j <= bound; ++j) {
    power *= p.value();
    doubled += floor_odd(m.value(), power);
  }
  return Valuation::finite(
      detail::exact_div(doubled, 2, "val_oddfact_log_form: odd doubled sum"));
}

Valuation val_oddfact_any(const Natural& n, const Prime& p) {
  require_index(n, "val_oddfact_any");
  if (p.is_two()) return Valuation::finite(0);
  return val_oddfact_alt(n, p);
}

}  // namespace padival
