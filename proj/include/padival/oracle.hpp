#pragma once

#include "padival/natural.hpp"
#include "padival/prime.hpp"
#include "padival/valuation.hpp"

#include <cstdint>

// Brute-force ground truth: exact products and trial division, nothing
// else. This namespace deliberately shares no code with the formula
// modules; its independence is what makes it an oracle.
namespace padival::oracle {

/// Desk-scale index bounds for the materialized products.
struct Caps {
  std::uint64_t factorial = 5000;
  std::uint64_t odd_factorial = 5000;
  std::uint64_t mbc = 500;
  std::uint64_t catalan = 500;
};

enum class ProductKind { factorial, odd_factorial, mbc, catalan };

/// An exactly materialized product (no modular reduction, no floats).
struct OracleProduct {
  ProductKind kind;
  Natural index;
  Natural value;
};

/// Trial-division valuation of n >= 1.
Valuation oracle_val(const Natural& n, const Prime& p);

/// v_p(n!) as sum_{i=1..n} oracle_val(i, p); n! is never materialized.
Valuation oracle_factorial_val(std::uint64_t n, const Prime& p,
                               const Caps& caps = {});

/// v_p((2n-1)!!) as sum_{i=1..n} oracle_val(2i-1, p). n >= 1.
Valuation oracle_oddfact_val(std::uint64_t n, const Prime& p,
                             const Caps& caps = {});

/// The exact integer for the given kind and index. MBC is built as
/// (2n)! / (n!)^2 and Catalan as MBC / (n+1); both divisions are asserted
/// exact.
OracleProduct oracle_product(ProductKind kind, std::uint64_t n,
                             const Caps& caps = {});

/// Valuation of the materialized product by trial division.
Valuation oracle_special(ProductKind kind, std::uint64_t n, const Prime& p,
                         const Caps& caps = {});

}  // namespace padival::oracle
