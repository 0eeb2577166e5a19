#include "padival/natural.hpp"

#include <cctype>
#include <stdexcept>

namespace padival {

Natural pow_natural(const Natural& base, unsigned long exp) {
  Natural out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Natural parse_natural(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("expected a decimal number, got an empty string");
  }
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("expected a non-negative decimal number, got '" +
                                  text + "'");
    }
  }
  return Natural(text, 10);
}

std::uint64_t to_uint64(const Natural& n) {
  if (n < 0 || !n.fits_ulong_p()) {
    throw std::invalid_argument("value does not fit in 64 bits: " + n.get_str());
  }
  return static_cast<std::uint64_t>(n.get_ui());
}

}  // namespace padival
