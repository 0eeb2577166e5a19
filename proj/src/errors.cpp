#include "padival/errors.hpp"

namespace padival::detail {

mpz_class exact_div(const mpz_class& num, const mpz_class& den,
                    const std::string& context) {
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) {
    throw inconsistency_error(context + ": " + den.get_str() +
                              " does not divide " + num.get_str());
  }
  return q;
}

void require_consistent(bool ok, const std::string& context) {
  if (!ok) throw inconsistency_error(context);
}

void require_arg(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace padival::detail
