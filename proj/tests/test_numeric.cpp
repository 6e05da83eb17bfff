#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fpzeta/numeric.hpp"

using namespace fpzeta;

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(31));
  CHECK(is_prime(2147483647));  // 2^31 - 1
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("field construction rejects bad moduli") {
  CHECK_THROWS_AS(Fp(4), std::invalid_argument);
  CHECK_THROWS_AS(Fp(1), std::invalid_argument);
  CHECK_THROWS_AS(Fp(0), std::invalid_argument);
  CHECK_NOTHROW(Fp(2));
  CHECK_NOTHROW(Fp(2147483647));
}

TEST_CASE("reduce") {
  CHECK(reduce(-1, 5).value() == 4);
  CHECK(reduce(0, 7).value() == 0);
  CHECK(reduce(27, 5).value() == 2);
  CHECK(reduce(-13, 13).value() == 0);
}

TEST_CASE("inverse") {
  CHECK(reduce(3, 7).inverse().value() == 5);
  CHECK(reduce(1, 101).inverse().value() == 1);
  CHECK(reduce(4, 5).inverse().value() == 4);  // 4*4 = 16 = 1 mod 5
  CHECK_THROWS_AS(reduce(0, 7).inverse(), std::domain_error);
}

TEST_CASE("inverse involution and product, exhaustive small primes") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    Fp f(p);
    for (std::uint32_t x = 1; x < p; ++x) {
      FieldElem e(x, f);
      CHECK(e.inverse().inverse() == e);
      CHECK((e * e.inverse()).value() == 1);
    }
  }
}

TEST_CASE("reduce is a ring homomorphism on sampled pairs") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<std::int64_t> dist(-1000000, 1000000);
  for (std::uint32_t p : {2u, 7u, 31u, 104729u}) {
    Fp f(p);
    for (int trial = 0; trial < 200; ++trial) {
      std::int64_t a = dist(rng), b = dist(rng);
      CHECK(reduce(a + b, p) == reduce(a, p) + reduce(b, p));
      CHECK(reduce(a * b, p) == reduce(a, p) * reduce(b, p));
    }
  }
}

TEST_CASE("modulus mismatch is an error") {
  CHECK_THROWS_AS(reduce(1, 5) + reduce(1, 7), std::invalid_argument);
}

TEST_CASE("rational arithmetic stays reduced") {
  Rational r(6, 4);
  CHECK(boost::multiprecision::numerator(r) == 3);
  CHECK(boost::multiprecision::denominator(r) == 2);
  Rational s(-1, 3);
  CHECK(boost::multiprecision::denominator(s) == 3);  // denominator kept > 0
  CHECK(boost::multiprecision::numerator(s) == -1);
}
