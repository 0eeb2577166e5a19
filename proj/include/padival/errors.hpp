#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace padival {

/// Raised when an exact-division or cross-route postcondition fails.
/// These assertions guard proved identities, so a throw means a
/// transcription bug inside this library, never bad user input.
class inconsistency_error : public std::logic_error {
 public:
  explicit inconsistency_error(const std::string& message)
      : std::logic_error(message) {}
};

namespace detail {

/// num / den for den > 0; throws inconsistency_error unless the division
/// is exact.
mpz_class exact_div(const mpz_class& num, const mpz_class& den,
                    const std::string& context);

/// Throws inconsistency_error carrying `context` when `ok` is false.
void require_consistent(bool ok, const std::string& context);

/// Throws std::invalid_argument carrying `message` when `ok` is false.
void require_arg(bool ok, const std::string& message);

}  // namespace detail
}  // namespace padival
