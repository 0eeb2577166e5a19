#include "padival/special.hpp"

#include "padival/errors.hpp"

namespace padival {
namespace {

const Prime& two() {
  static const Prime p(2ul);
  return p;
}

}  // namespace

Valuation val_mbc(const Natural& n, const Prime& p) {
  detail::require_arg(n >= 0, "val_mbc: n must be non-negative");
  const mpz_class num = 2 * weight(n, p) - weight(2 * n, p);
  return Valuation::finite(detail::exact_div(num, p.value() - 1, "val_mbc"));
}

Valuation val_catalan(const Natural& n, const Prime& p) {
  detail::require_arg(n >= 0, "val_catalan: n must be non-negative");
  const mpz_class num =
      weight(n, p) + weight(n + 1, p) - weight(2 * n, p) - 1;
  return Valuation::finite(
      detail::exact_div(num, p.value() - 1, "val_catalan"));
}

bool catalan_is_odd(const Natural& n) {
  detail::require_arg(n >= 0, "catalan_is_odd: n must be non-negative");
  return weight(n + 1, two()) == 1;
}

MbcVal2Extremes mbc_val2_extremes(unsigned long k) {
  detail::require_arg(k >= 1, "mbc_val2_extremes: k must be at least 1");
  MbcVal2Extremes out{pow_natural(2, k), Valuation::finite(1),
                      pow_natural(2, k) - 1,
                      Valuation::finite(static_cast<unsigned long>(k))};
  detail::require_consistent(
      val_mbc(out.min_index, two()) == out.min_value,
      "mbc_val2_extremes: claimed minimum disagrees with val_mbc");
  detail::require_consistent(
      val_mbc(out.max_index, two()) == out.max_value,
      "mbc_val2_extremes: claimed maximum disagrees with val_mbc");
  return out;
}

}  // namespace padival
