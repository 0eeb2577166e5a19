#include "padival/valuation.hpp"

#include "padival/errors.hpp"

#include <ostream>
#include <stdexcept>

namespace padival {

const mpz_class& Valuation::value() const {
  if (infinite_) {
    throw std::logic_error("the infinite valuation has no finite value");
  }
  return value_;
}

std::string Valuation::str() const {
  return infinite_ ? "infinite" : value_.get_str();
}

bool operator==(const Valuation& v, long x) {
  return v.is_finite() && v.value() == x;
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) {
  return os << v.str();
}

Ratio::Ratio(Natural num, Natural den)
    : numerator(std::move(num)), denominator(std::move(den)) {
  detail::require_arg(numerator >= 0, "ratio numerator must be non-negative");
  detail::require_arg(denominator > 0, "ratio denominator must be positive");
}

}  // namespace padival
