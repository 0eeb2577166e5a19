#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "padival/oracle.hpp"

#include <stdexcept>

using namespace padival;
using namespace padival::oracle;

TEST_CASE("oracle_val counts exact divisions") {
  const Prime p3(3ul), p5(5ul), p2(2ul);
  CHECK(oracle_val(36, p3) == 2);
  CHECK(oracle_val(1000, p5) == 3);
  CHECK(oracle_val(1, p3) == 0);
  CHECK(oracle_val(Natural(1) << 20, p2) == 20);
  CHECK_THROWS_AS(oracle_val(0, p3), std::invalid_argument);
}

TEST_CASE("oracle_factorial_val sums valuations without materializing") {
  const Prime p5(5ul), p2(2ul), p7(7ul);
  CHECK(oracle_factorial_val(1003, p5) == 249);
  CHECK(oracle_factorial_val(0, p7) == 0);
  CHECK(oracle_factorial_val(10, p2) == 8);  // 10! = 3628800 = 2^8 * 14175
}

TEST_CASE("oracle_oddfact_val sums valuations of odd numbers") {
  const Prime p3(3ul);
  CHECK(oracle_oddfact_val(15, p3) == 8);  // v_3(29!!)
  CHECK(oracle_oddfact_val(1, p3) == 0);
  CHECK(oracle_oddfact_val(5, p3) == 3);  // 9!! = 945 = 3^3 * 35
  CHECK_THROWS_AS(oracle_oddfact_val(0, p3), std::invalid_argument);
}

TEST_CASE("oracle products are exact") {
  CHECK(oracle_product(ProductKind::factorial, 5).value == 120);
  CHECK(oracle_product(ProductKind::factorial, 0).value == 1);
  CHECK(oracle_product(ProductKind::odd_factorial, 5).value == 945);
  CHECK(oracle_product(ProductKind::odd_factorial, 0).value == 1);
  CHECK(oracle_product(ProductKind::mbc, 5).value == 252);
  CHECK(oracle_product(ProductKind::mbc, 0).value == 1);
  CHECK(oracle_product(ProductKind::catalan, 5).value == 42);
  CHECK(oracle_product(ProductKind::catalan, 0).value == 1);
}

TEST_CASE("oracle_special trial-divides the materialized product") {
  const Prime p2(2ul), p7(7ul);
  CHECK(oracle_special(ProductKind::catalan, 4, p2) == 1);  // Cat(4) = 14
  CHECK(oracle_special(ProductKind::mbc, 0, p7) == 0);
  CHECK(oracle_special(ProductKind::mbc, 5, p2) == 2);  // C(10,5) = 252
}

TEST_CASE("factorial sum route equals materialize-and-divide route") {
  for (unsigned long pv : {2ul, 3ul, 5ul}) {
    const Prime p(pv);
    for (std::uint64_t n = 0; n <= 200; ++n) {
      CHECK(oracle_factorial_val(n, p) ==
            oracle_special(ProductKind::factorial, n, p));
    }
  }
}

TEST_CASE("MBC = (n+1) * Catalan exactly") {
  for (std::uint64_t n = 0; n <= 200; ++n) {
    const auto mbc = oracle_product(ProductKind::mbc, n);
    const auto cat = oracle_product(ProductKind::catalan, n);
    CHECK(mbc.value == (Natural(n) + 1) * cat.value);
  }
}

TEST_CASE("caps are configurable, not hard constants") {
  const Prime p2(2ul);
  CHECK_THROWS_AS(oracle_factorial_val(5001, p2), std::invalid_argument);
  CHECK_THROWS_AS(oracle_product(ProductKind::mbc, 501),
                  std::invalid_argument);
  Caps wide;
  wide.factorial = 6000;
  CHECK(oracle_factorial_val(5001, p2, wide).is_finite());
  Caps narrow;
  narrow.catalan = 3;
  CHECK_THROWS_AS(oracle_product(ProductKind::catalan, 4, narrow),
                  std::invalid_argument);
}
