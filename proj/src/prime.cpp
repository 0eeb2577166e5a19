#include "padival/prime.hpp"

#include "padival/errors.hpp"

#include <cstdint>

namespace padival {
namespace {

constexpr unsigned long kSmallPrimes[] = {
    2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t acc = 1;
  while (e) {
    if (e & 1) acc = mulmod(acc, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return acc;
}

// Deterministic for every odd n < 2^64 with this base set.
bool miller_rabin_u64(std::uint64_t n) {
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull,
                          9780504ull, 1795265022ull}) {
    a %= n;
    if (a == 0) continue;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

bool is_prime(const Natural& n) {
  if (n < 2) return false;
  for (unsigned long p : kSmallPrimes) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n.fits_ulong_p()) {
    return miller_rabin_u64(static_cast<std::uint64_t>(n.get_ui()));
  }
  // Beyond 64 bits: plain trial division. Correct, and adequate for the
  // desk-scale moduli this library targets.
  Natural d = 101;
  while (d * d <= n) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
    d += 2;
  }
  return true;
}

Prime::Prime(Natural value) : value_(std::move(value)) {
  detail::require_arg(is_prime(value_),
                      "p must be prime, got " + value_.get_str());
}

}  // namespace padival
