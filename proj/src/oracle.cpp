#include "padival/oracle.hpp"

#include "padival/errors.hpp"

namespace padival::oracle {
namespace {

// Local trial-division count; the formula modules are never called from
// this file.
Natural division_count(Natural value, const Natural& p) {
  Natural count = 0;
  Natural q, r;
  for (;;) {
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), value.get_mpz_t(),
                p.get_mpz_t());
    if (r != 0) break;
    value = q;
    ++count;
  }
  return count;
}

void require_cap(std::uint64_t n, std::uint64_t cap, const char* kind) {
  detail::require_arg(n <= cap, std::string("oracle: index ") +
                                    std::to_string(n) + " exceeds the " +
                                    kind + " cap " + std::to_string(cap));
}

Natural factorial(std::uint64_t n) {
  Natural acc = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    mpz_mul_ui(acc.get_mpz_t(), acc.get_mpz_t(), i);
  }
  return acc;
}

Natural odd_factorial(std::uint64_t n) {
  Natural acc = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    mpz_mul_ui(acc.get_mpz_t(), acc.get_mpz_t(), 2 * i - 1);
  }
  return acc;
}

}  // namespace

Valuation oracle_val(const Natural& n, const Prime& p) {
  detail::require_arg(n >= 1, "oracle_val: n must be at least 1");
  return Valuation::finite(division_count(n, p.value()));
}

Valuation oracle_factorial_val(std::uint64_t n, const Prime& p,
                               const Caps& caps) {
  require_cap(n, caps.factorial, "factorial");
  Natural total = 0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    total += division_count(Natural(i), p.value());
  }
  return Valuation::finite(total);
}

Valuation oracle_oddfact_val(std::uint64_t n, const Prime& p,
                             const Caps& caps) {
  detail::require_arg(n >= 1, "oracle_oddfact_val: n must be at least 1");
  require_cap(n, caps.odd_factorial, "odd factorial");
  Natural total = 0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    total += division_count(Natural(2 * i - 1), p.value());
  }
  return Valuation::finite(total);
}

OracleProduct oracle_product(ProductKind kind, std::uint64_t n,
                             const Caps& caps) {
  switch (kind) {
    case ProductKind::factorial:
      require_cap(n, caps.factorial, "factorial");
      return {kind, Natural(n), factorial(n)};
    case ProductKind::odd_factorial:
      require_cap(n, caps.odd_factorial, "odd factorial");
      return {kind, Natural(n), odd_factorial(n)};
    case ProductKind::mbc: {
      require_cap(n, caps.mbc, "mbc");
      const Natural numerator = factorial(2 * n);
      const Natural square = factorial(n) * factorial(n);
      return {kind, Natural(n),
              detail::exact_div(numerator, square,
                                "oracle: (2n)! not divisible by (n!)^2")};
    }
    case ProductKind::catalan: {
      require_cap(n, caps.catalan, "catalan");
      const Natural numerator = factorial(2 * n);
      const Natural square = factorial(n) * factorial(n);
      const Natural mbc = detail::exact_div(
          numerator, square, "oracle: (2n)! not divisible by (n!)^2");
      return {kind, Natural(n),
              detail::exact_div(mbc, Natural(n) + 1,
                                "oracle: MBC not divisible by n+1")};
    }
  }
  throw std::invalid_argument("oracle: unknown product kind");
}

Valuation oracle_special(ProductKind kind, std::uint64_t n, const Prime& p,
                         const Caps& caps) {
  return Valuation::finite(
      division_count(oracle_product(kind, n, caps).value, p.value()));
}

}  // namespace padival::oracle
