#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "qharness/qcalc.hpp"

using qh::pow_int;
using qh::q_binomial;
using qh::q_factorial;
using qh::q_int;
using qh::Rational;
using qh::rational;

namespace {

// Independent oracle: Gaussian binomial as the product
// prod_{i=1}^{k} (1 - q^{n-i+1}) / (1 - q^i). Valid away from roots of unity.
Rational q_binomial_product(long n, long k, const Rational& q) {
  if (k < 0 || k > n) return Rational(0);
  Rational acc(1);
  for (long i = 1; i <= k; ++i) {
    acc *= (Rational(1) - pow_int(q, n - i + 1)) / (Rational(1) - pow_int(q, i));
  }
  return acc;
}

std::uint64_t mix(std::uint64_t& s) {
  s += 0x9E3779B97f4A7C15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rational random_q(std::uint64_t& s) {
  const long den = 2 + static_cast<long>(mix(s) % 19);
  long num = 0;
  while (num == 0) num = static_cast<long>(mix(s) % (2 * den - 1)) - (den - 1);
  return rational(num, den);
}

}  // namespace

TEST_CASE("q_int basic values") {
  CHECK(q_int(0, rational(3, 7)) == 0);
  CHECK(q_int(5, Rational(1)) == 5);
  CHECK(q_int(3, rational(1, 2)) == rational(7, 4));
  CHECK(q_int<double>(3, 0.5) == doctest::Approx(1.75));
}

TEST_CASE("q_int alternates at q = -1") {
  for (long n = 0; n <= 20; ++n) {
    CHECK(q_int(n, Rational(-1)) == (n % 2 == 0 ? 0 : 1));
  }
}

TEST_CASE("q_factorial basic values") {
  CHECK(q_factorial(0, rational(2, 3)) == 1);
  CHECK(q_factorial(3, Rational(1)) == 6);
  const Rational q = rational(5, 9);
  CHECK(q_factorial(2, q) == Rational(1) + q);
}

TEST_CASE("q-subtraction identity, exact") {
  std::uint64_t s = 42;
  for (int rep = 0; rep < 50; ++rep) {
    const Rational q = random_q(s);
    for (long m = 0; m <= 12; ++m) {
      for (long l = 0; l <= m; ++l) {
        CHECK(q_int(m, q) - q_int(l, q) == pow_int(q, l) * q_int(m - l, q));
      }
    }
  }
}

TEST_CASE("q_binomial values and conventions") {
  const Rational q = rational(3, 5);
  CHECK(q_binomial(7, 0, q) == 1);
  CHECK(q_binomial(7, 7, q) == 1);
  CHECK(q_binomial(7, -1, q) == 0);
  CHECK(q_binomial(7, 8, q) == 0);
  CHECK(q_binomial(4, 2, Rational(1)) == 6);
  // [4 2]_q = 1 + q + 2q^2 + q^3 + q^4
  const Rational expected =
      Rational(1) + q + 2 * pow_int(q, 2) + pow_int(q, 3) + pow_int(q, 4);
  CHECK(q_binomial(4, 2, q) == expected);
}

TEST_CASE("q_binomial agrees with factorial ratio and product formula") {
  std::uint64_t s = 7;
  for (int rep = 0; rep < 20; ++rep) {
    const Rational q = random_q(s);
    for (long n = 0; n <= 9; ++n) {
      for (long k = 0; k <= n; ++k) {
        const Rational via_fact =
            q_factorial(n, q) / (q_factorial(n - k, q) * q_factorial(k, q));
        CHECK(q_binomial(n, k, q) == via_fact);
        CHECK(q_binomial(n, k, q) == q_binomial_product(n, k, q));
      }
    }
  }
}

TEST_CASE("q-Pascal recursion, exact") {
  std::uint64_t s = 99;
  for (int rep = 0; rep < 10; ++rep) {
    const Rational q = random_q(s);
    for (long n = 1; n <= 10; ++n) {
      for (long k = 0; k <= n; ++k) {
        CHECK(q_binomial(n, k, q) ==
              q_binomial(n - 1, k - 1, q) + pow_int(q, k) * q_binomial(n - 1, k, q));
      }
    }
  }
}

TEST_CASE("pow_int conventions") {
  CHECK(pow_int(Rational(0), 0) == 1);
  CHECK(pow_int(0.0, 0) == 1.0);
  CHECK(pow_int(rational(2, 3), -2) == rational(9, 4));
  CHECK_THROWS(pow_int(Rational(0), -1));
}
