#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fpzeta/closed_forms.hpp"
#include "fpzeta/enumerate.hpp"
#include "fpzeta/interpolate.hpp"

using namespace fpzeta;

namespace {

std::vector<std::uint32_t> primes_between(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = lo; v <= hi; ++v)
    if (is_prime(v)) out.push_back(v);
  return out;
}

}  // namespace

TEST_CASE("lagrange reproduces its nodes") {
  std::vector<std::pair<BigInt, BigInt>> pts{{2, 5}, {3, 10}, {5, 26}};
  auto poly = lagrange(pts);  // x^2 + 1
  REQUIRE(poly.size() == 3);
  CHECK(poly[0] == 1);
  CHECK(poly[1] == 0);
  CHECK(poly[2] == 1);
  for (const auto& [x, y] : pts) CHECK(eval_poly(poly, x) == Rational(y));
}

TEST_CASE("synthetic polynomial data is recovered exactly up to degree 6") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-9, 9);
  auto primes = primes_between(2, 60);
  for (int deg = 0; deg <= 6; ++deg) {
    std::vector<Rational> truth;
    for (int k = 0; k <= deg; ++k) truth.push_back(coeff(rng));
    if (truth.back() == 0) truth.back() = 1;
    std::vector<std::pair<std::uint32_t, BigInt>> samples;
    for (std::uint32_t p : primes) {
      Rational v = eval_poly(truth, p);
      samples.emplace_back(p, boost::multiprecision::numerator(v));
    }
    auto fit = fit_coefficient(samples, 6);
    REQUIRE(fit.classes.size() == 1);
    CHECK(fit.classes[0].polynomial);
    CHECK(fit.classes[0].poly == truth);
  }
}

TEST_CASE("constant samples give a degree-0 polynomial") {
  std::vector<std::pair<std::uint32_t, BigInt>> samples;
  for (std::uint32_t p : primes_between(2, 30)) samples.emplace_back(p, 7);
  auto fit = fit_coefficient(samples, 3);
  CHECK(fit.classes[0].polynomial);
  REQUIRE(fit.classes[0].poly.size() == 1);
  CHECK(fit.classes[0].poly[0] == 7);
}

TEST_CASE("heisenberg t-coefficient fits 1 + p") {
  std::vector<std::pair<std::uint32_t, BigInt>> samples;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    auto z = count_zeta(catalog("heisenberg"), p, Flavor::Ideal);
    samples.emplace_back(p, z.at(1));
  }
  auto fit = fit_coefficient(samples, 2);
  REQUIRE(fit.classes[0].polynomial);
  CHECK(fit.classes[0].poly == std::vector<Rational>{1, 1});
}

TEST_CASE("insufficient samples is an explicit error") {
  std::vector<std::pair<std::uint32_t, BigInt>> samples{{2, 1}, {3, 1}};
  CHECK_THROWS_AS(fit_coefficient(samples, 3), std::invalid_argument);
  CHECK_THROWS_AS(fit_coefficient({{2, 1}, {2, 1}, {3, 1}, {5, 1}, {7, 1}}, 2),
                  std::invalid_argument);  // duplicate prime
}

TEST_CASE("L_E t^5 coefficient defeats any degree-6 polynomial") {
  auto primes = primes_between(5, 97);
  REQUIRE(primes.size() >= 15);
  std::vector<std::pair<std::uint32_t, BigInt>> samples;
  for (std::uint32_t p : primes) {
    // the theorem's coefficient: binom(6,5)_p + p^2 |E(F_p)|
    BigInt v = gaussian_binomial(6, 5, p) +
               BigInt(p) * p * elliptic_point_count(p);
    samples.emplace_back(p, v);
  }
  auto fit = fit_coefficient(samples, 6);
  CHECK_FALSE(fit.classes[0].polynomial);
  CHECK_FALSE(fit.classes[0].failing_primes.empty());
}

TEST_CASE("L_np8 t^3 coefficient is non-polynomial per residue class mod 3") {
  auto primes = primes_between(5, 97);
  std::vector<std::pair<std::uint32_t, BigInt>> samples;
  for (std::uint32_t p : primes) {
    BigInt v = gaussian_binomial(5, 3, p) +
               BigInt(p) * p * p * cubic_root_count(p);
    samples.emplace_back(p, v);
  }
  auto fit = fit_coefficient(samples, 4, 3u);
  REQUIRE(fit.classes.size() == 2);  // classes 1 and 2 mod 3
  bool class1_poly = true, class2_poly = true;
  for (const auto& cls : fit.classes) {
    if (cls.residue == 1) class1_poly = cls.polynomial;
    if (cls.residue == 2) class2_poly = cls.polynomial;
  }
  // p = 1 mod 3 splits on the a^2 + 27 b^2 condition: not a polynomial
  CHECK_FALSE(class1_poly);
  // p = 2 mod 3 always has exactly one cube root of 2: polynomial
  CHECK(class2_poly);
  CHECK_FALSE(fit.all_polynomial());
}

TEST_CASE("poly_to_text") {
  CHECK(poly_to_text({Rational(1), Rational(1)}) == "p + 1");
  CHECK(poly_to_text({Rational(0)}) == "0");
  CHECK(poly_to_text({Rational(3, 2), Rational(0), Rational(2)}) ==
        "2*p^2 + 3/2");
}
