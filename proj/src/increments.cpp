#include "padival/increments.hpp"

#include "padival/errors.hpp"
#include "padival/valuations.hpp"

namespace padival {

mpz_class delta_weight(const Natural& n, const Prime& p) {
  detail::require_arg(n >= 0, "delta_weight: n must be non-negative");
  const mpz_class definitional = weight(n + 1, p) - weight(n, p);
  const mpz_class closed = 1 - (p.value() - 1) * val(n + 1, p).value();
  detail::require_consistent(
      definitional == closed,
      "delta_weight: weight difference disagrees with 1 - (p-1)v_p(n+1)");
  return definitional;
}

mpz_class delta_val_factorial(const Natural& n, const Prime& p) {
  detail::require_arg(n >= 1, "delta_val_factorial: n must be at least 1");
  const mpz_class definitional = val_factorial_direct(n + 1, p).value() -
                                 val_factorial_direct(n, p).value();
  const mpz_class via_weight = detail::exact_div(
      1 - delta_weight(n, p), p.value() - 1, "delta_val_factorial");
  detail::require_consistent(
      definitional == via_weight,
      "delta_val_factorial: Legendre difference disagrees with "
      "(1 - delta s_p(n))/(p-1)");
  return definitional;
}

Valuation val_via_delta(const Natural& n, const Prime& p) {
  detail::require_arg(n >= 1, "val_via_delta: n must be at least 1");
  const mpz_class delta_s = weight(n, p) - weight(n - 1, p);
  const mpz_class v =
      detail::exact_div(1 - delta_s, p.value() - 1, "val_via_delta");
  detail::require_consistent(
      v == val(n, p).value(),
      "val_via_delta: weight route disagrees with trial division");
  return Valuation::finite(v);
}

mpz_class delta_val(const Natural& n, const Prime& p) {
  detail::require_arg(n >= 1, "delta_val: n must be at least 1");
  const mpz_class definitional =
      val(n + 1, p).value() - val(n, p).value();
  const mpz_class delta_s_prev = weight(n, p) - weight(n - 1, p);
  const mpz_class delta_s = weight(n + 1, p) - weight(n, p);
  const mpz_class via_weight = detail::exact_div(
      delta_s_prev - delta_s, p.value() - 1, "delta_val");
  detail::require_consistent(
      definitional == via_weight,
      "delta_val: valuation difference disagrees with the digit route");
  return definitional;
}

mpz_class delta_weight_scaled(const Natural& k, const Natural& n,
                              const Prime& p) {
  detail::require_arg(k >= 1, "delta_weight_scaled: k must be at least 1");
  detail::require_arg(n >= 1, "delta_weight_scaled: n must be at least 1");
  detail::require_arg(!mpz_divisible_p(k.get_mpz_t(), p.value().get_mpz_t()),
                      "delta_weight_scaled: p = " + p.value().get_str() +
                          " must not divide k = " + k.get_str());
  const Natural kn = k * n;
  const mpz_class scaled = weight(kn, p) - weight(kn - 1, p);
  const mpz_class base = weight(n, p) - weight(n - 1, p);
  const mpz_class closed = 1 - (p.value() - 1) * val(n, p).value();
  detail::require_consistent(
      scaled == base && base == closed,
      "delta_weight_scaled: the three routes disagree");
  return scaled;
}

mpz_class group_delta_weight(const Natural& n, std::uint64_t k,
                             const Prime& p) {
  detail::require_arg(n >= 0, "group_delta_weight: n must be non-negative");
  detail::require_arg(k >= 1, "group_delta_weight: k must be at least 1");
  const mpz_class direct = weight(n + Natural(k), p) - weight(n, p);
  mpz_class telescoped = 0;
  for (std::uint64_t j = 0; j < k; ++j) {
    telescoped += delta_weight(n + Natural(j), p);
  }
  mpz_class val_sum = 0;
  for (std::uint64_t j = 1; j <= k; ++j) {
    val_sum += val(n + Natural(j), p).value();
  }
  const mpz_class via_vals = Natural(k) - (p.value() - 1) * val_sum;
  detail::require_consistent(
      direct == telescoped && direct == via_vals,
      "group_delta_weight: the three routes disagree");
  return direct;
}

IncrementReport increment_report(const Natural& n, const Prime& p) {
  detail::require_arg(n >= 1, "increment_report: n must be at least 1");
  IncrementReport report{n, p.value(), delta_weight(n, p),
                         delta_val_factorial(n, p), delta_val(n, p)};
  detail::require_consistent(
      report.delta_weight + (p.value() - 1) * val(n + 1, p).value() == 1,
      "increment_report: delta s_p(n) + (p-1)v_p(n+1) != 1");
  return report;
}

}  // namespace padival
