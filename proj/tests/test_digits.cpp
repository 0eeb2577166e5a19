#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "padival/digits.hpp"

#include <random>
#include <stdexcept>
#include <vector>

using namespace padival;

namespace {

// Independent digit-sum: repeated divide-and-remainder accumulation,
// written against raw mpz only.
Natural weight_by_division(Natural n, const Natural& p) {
  Natural sum = 0;
  while (n > 0) {
    sum += n % p;
    n /= p;
  }
  return sum;
}

const std::vector<unsigned long> kPrimes = {2, 3, 5, 7, 11, 13};

}  // namespace

TEST_CASE("expand produces the documented digit vectors") {
  const std::vector<Natural> d1003{3, 0, 0, 3, 1};  // 13003 base 5
  CHECK(expand(1003, Prime(5ul)).digits() == d1003);

  const std::vector<Natural> d0{0};
  CHECK(expand(0, Prime(7ul)).digits() == d0);

  const std::vector<Natural> d30{0, 1, 0, 1};  // 1010 base 3
  CHECK(expand(30, Prime(3ul)).digits() == d30);
}

TEST_CASE("weight matches the paper's digit sums") {
  CHECK(weight(1003, Prime(5ul)) == 7);
  CHECK(weight(0, Prime(5ul)) == 0);
  CHECK(weight(0, Prime(2ul)) == 0);
  for (unsigned long pv : kPrimes) {
    const Prime p(pv);
    for (unsigned long k = 0; k <= 8; ++k) {
      CHECK(weight(pow_natural(p.value(), k), p) == 1);  // s_p(p^k) = 1
    }
  }
}

TEST_CASE("round-trip: expand then reconstruct recovers n") {
  for (unsigned long pv : kPrimes) {
    const Prime p(pv);
    for (unsigned long n = 0; n <= 100000; ++n) {
      const BaseExpansion e = expand(n, p);
      REQUIRE(e.value() == n);
    }
  }
}

TEST_CASE("weight is positive on positives and identity below p") {
  for (unsigned long pv : kPrimes) {
    const Prime p(pv);
    for (unsigned long n = 1; n <= 2000; ++n) {
      CHECK(weight(n, p) >= 1);
    }
    for (unsigned long n = 0; n < pv; ++n) {
      CHECK(weight(n, p) == n);
    }
  }
}

TEST_CASE("weight is invariant under multiplication by p^k") {
  for (unsigned long pv : kPrimes) {
    const Prime p(pv);
    for (unsigned long n = 0; n <= 10000; n += 7) {
      const Natural w = weight(n, p);
      for (unsigned long k = 0; k <= 8; ++k) {
        CHECK(weight(Natural(n) * pow_natural(p.value(), k), p) == w);
      }
    }
  }
}

TEST_CASE("weight splits over shifted sums: s(n*p^k + d) = s(n) + s(d)") {
  std::mt19937_64 rng(20240517);
  for (unsigned long pv : kPrimes) {
    const Prime p(pv);
    std::uniform_int_distribution<unsigned long> n_dist(0, 1000);
    std::uniform_int_distribution<unsigned long> k_dist(1, 5);
    for (int trial = 0; trial < 500; ++trial) {
      const Natural n(n_dist(rng));
      const unsigned long k = k_dist(rng);
      const Natural pk = pow_natural(p.value(), k);
      const Natural delta(
          std::uniform_int_distribution<unsigned long>(0, to_uint64(pk) - 1)(
              rng));
      CHECK(weight(n * pk + delta, p) == weight(n, p) + weight(delta, p));
    }
  }
}

TEST_CASE("weight agrees with divide-and-remainder accumulation") {
  std::mt19937_64 rng(97);
  std::uniform_int_distribution<unsigned long> dist(0, 1u << 30);
  for (unsigned long pv : kPrimes) {
    const Prime p(pv);
    for (int trial = 0; trial < 2000; ++trial) {
      const Natural n(dist(rng));
      CHECK(weight(n, p) == weight_by_division(n, p.value()));
    }
  }
}

TEST_CASE("BaseExpansion rejects non-canonical digit vectors") {
  const Prime p5(5ul);
  CHECK_THROWS_AS(BaseExpansion(p5, {}), std::invalid_argument);
  CHECK_THROWS_AS(BaseExpansion(p5, {Natural(5)}), std::invalid_argument);
  CHECK_THROWS_AS(BaseExpansion(p5, {Natural(1), Natural(0)}),
                  std::invalid_argument);
  CHECK_NOTHROW(BaseExpansion(p5, {Natural(0)}));
  CHECK_NOTHROW(BaseExpansion(p5, {Natural(0), Natural(4)}));
}

TEST_CASE("expand rejects negative input") {
  CHECK_THROWS_AS(expand(Natural(-1), Prime(3ul)), std::invalid_argument);
  CHECK_THROWS_AS(weight(Natural(-7), Prime(3ul)), std::invalid_argument);
}

TEST_CASE("Prime validates at the type boundary") {
  CHECK_NOTHROW(Prime(2ul));
  CHECK_NOTHROW(Prime(13ul));
  CHECK_NOTHROW(Prime(65537ul));
  CHECK_NOTHROW(Prime(Natural("2305843009213693951")));  // 2^61 - 1
  CHECK_THROWS_AS(Prime(0ul), std::invalid_argument);
  CHECK_THROWS_AS(Prime(1ul), std::invalid_argument);
  CHECK_THROWS_AS(Prime(4ul), std::invalid_argument);
  CHECK_THROWS_AS(Prime(561ul), std::invalid_argument);  // Carmichael
  CHECK_THROWS_AS(Prime(Natural("18446744073709551617")),  // 2^64 + 1
                  std::invalid_argument);
}

TEST_CASE("is_prime spot checks") {
  CHECK(is_prime(Natural("18446744073709551557")));  // largest 64-bit prime
  CHECK_FALSE(is_prime(Natural("18446744073709551615")));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  int count = 0;
  for (int n = 2; n < 100; ++n) {
    if (is_prime(n)) ++count;
  }
  CHECK(count == 25);
}
