#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fpzeta/closed_forms.hpp"
#include "fpzeta/enumerate.hpp"
#include "oracle_util.hpp"

using namespace fpzeta;

namespace {

std::vector<BigInt> coeffs(std::initializer_list<long long> values) {
  return std::vector<BigInt>(values.begin(), values.end());
}

}  // namespace

TEST_CASE("gaussian binomial") {
  CHECK(gaussian_binomial(5, 0, 7) == 1);
  CHECK(gaussian_binomial(2, 1, 3) == 4);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(3, 5, 2) == 0);
  SUBCASE("35 is the brute-force count of planes in F_2^4") {
    auto spans = oracle::all_subspaces(4, 2);
    CHECK(oracle::count_of_dim(spans, 2) == 35);
  }
  SUBCASE("symmetry binom(n,k) = binom(n,n-k)") {
    for (int n = 0; n <= 8; ++n)
      for (int k = 0; k <= n; ++k)
        for (std::uint32_t p : {2u, 3u, 5u})
          CHECK(gaussian_binomial(n, k, p) == gaussian_binomial(n, n - k, p));
  }
  SUBCASE("binom(10,5)_5 overflows 64 bits") {
    CHECK(gaussian_binomial(10, 5, 5) > BigInt("18446744073709551615"));
  }
}

TEST_CASE("abelian zeta") {
  CHECK(abelian_zeta(1, 7).coefficients == coeffs({1, 1}));
  CHECK(abelian_zeta(2, 2).coefficients == coeffs({1, 3, 1}));
  CHECK(abelian_zeta(3, 2).coefficients == coeffs({1, 7, 7, 1}));
  SUBCASE("coefficient sum counts all subspaces") {
    for (int n = 1; n <= 6; ++n) {
      for (std::uint32_t p : {2u, 3u, 5u}) {
        BigInt sum = 0;
        for (const auto& c : abelian_zeta(n, p).coefficients) sum += c;
        CHECK(sum == count_all_subspaces(n, p));
      }
    }
  }
}

TEST_CASE("elliptic point count") {
  CHECK(elliptic_point_count(3) == 4);
  CHECK(elliptic_point_count(5) == 8);
  CHECK(elliptic_point_count(2) == 3);
  SUBCASE("at least the point at infinity") {
    for (std::uint32_t p : {2u, 3u, 7u, 11u}) CHECK(elliptic_point_count(p) >= 1);
  }
  SUBCASE("Hasse bound |count - (p+1)| <= 2 sqrt(p) for p <= 100") {
    for (std::uint32_t p = 2; p <= 100; ++p) {
      if (!is_prime(p)) continue;
      double diff = std::abs(static_cast<double>(elliptic_point_count(p)) -
                             static_cast<double>(p + 1));
      CHECK(diff <= 2.0 * std::sqrt(static_cast<double>(p)) + 1e-9);
    }
  }
}

TEST_CASE("cubic root count") {
  CHECK(cubic_root_count(5) == 1);   // 3^3 = 27 = 2 mod 5
  CHECK(cubic_root_count(7) == 0);   // cubes mod 7 are {0,1,6}
  CHECK(cubic_root_count(31) == 3);  // 31 = 2^2 + 27
  CHECK(cubic_root_count(3) == 1);   // x^3 - 2 = (x+1)^3 mod 3
  SUBCASE("residue-class case table for p <= 200, p != 3") {
    for (std::uint32_t p = 2; p <= 200; ++p) {
      if (!is_prime(p) || p == 3) continue;
      int count = cubic_root_count(p);
      if (p % 3 == 2) {
        CHECK(count == 1);
      } else if (p % 3 == 1) {
        bool representable = false;
        for (std::uint32_t a = 0; a * a <= p; ++a)
          for (std::uint32_t b = 0; a * a + 27 * b * b <= p; ++b)
            if (a * a + 27 * b * b == p) representable = true;
        CHECK(count == (representable ? 3 : 0));
      }
    }
  }
}

TEST_CASE("closed form spot values") {
  CHECK(closed_form("Mc_ideal", {{"c", 4}}, 5).coefficients ==
        coeffs({1, 6, 1, 1, 1, 1}));
  CHECK(closed_form("sl2_sub", {}, 5).coefficients == coeffs({1, 6, 31, 1}));
  CHECK(closed_form("trn_ideal", {{"n", 2}}, 3).coefficients ==
        coeffs({1, 4, 2, 1}));
  CHECK(closed_form("Mc_sub", {{"c", 3}}, 2).coefficients ==
        coeffs({1, 3, 11, 15, 1}));
  CHECK(closed_form("heisenberg_ideal", {}, 3).coefficients ==
        coeffs({1, 4, 1, 1}));
  CHECK(closed_form("fc2_ideal", {{"c", 3}}, 2).coefficients ==
        coeffs({1, 3, 1, 1, 3, 1}));
  CHECK(closed_form("f2d_ideal", {{"d", 3}}, 2).coefficients ==
        coeffs({1, 7, 7, 15, 7, 7, 1}));
  CHECK(closed_form("graded_mc", {{"c", 4}}, 3).coefficients ==
        coeffs({1, 4, 1, 1, 1}));
  CHECK(closed_form("Hm_ideal", {{"m", 1}}, 3).coefficients ==
        coeffs({1, 4, 1, 1}));
}

TEST_CASE("domain guards") {
  CHECK_THROWS_AS(closed_form("Lnp8_ideal", {}, 2), DomainError);
  CHECK_NOTHROW(closed_form("Lnp8_ideal", {}, 3));
  CHECK_THROWS_AS(closed_form("vl_ideal", {{"a", 1}, {"b", 1}}, 3),
                  DomainError);
  CHECK_THROWS_AS(closed_form("sl2_sub", {}, 3), DomainError);
  CHECK_NOTHROW(closed_form("sl2_sub", {{"allow_small_p", 1}}, 3));
  CHECK_THROWS_AS(closed_form("nosuch", {}, 5), std::invalid_argument);
  CHECK_THROWS_AS(closed_form("Mc_ideal", {}, 5), std::invalid_argument);
  CHECK_THROWS_AS(closed_form("Mc_ideal", {{"c", 2}}, 4),
                  std::invalid_argument);  // 4 is not prime
}

TEST_CASE("closed forms match brute force on a small grid") {
  struct Row {
    const char* ring;
    std::map<std::string, long long> ring_params;
    Flavor flavor;
    const char* oracle;
    std::map<std::string, long long> oracle_params;
    std::vector<std::uint32_t> primes;
  };
  const std::vector<Row> rows = {
      {"heisenberg", {}, Flavor::Subalgebra, "heisenberg_sub", {}, {2, 3, 5}},
      {"M", {{"c", 3}}, Flavor::Subalgebra, "Mc_sub", {{"c", 3}}, {2, 3}},
      {"M", {{"c", 4}}, Flavor::Subalgebra, "Mc_sub", {{"c", 4}}, {2, 3}},
      {"M", {{"c", 5}}, Flavor::Ideal, "Mc_ideal", {{"c", 5}}, {2, 3}},
      {"g53", {}, Flavor::Ideal, "g53_ideal", {}, {2, 3, 5}},
      {"g64", {}, Flavor::Ideal, "g64_ideal", {}, {2, 3, 5}},
      {"H", {{"m", 2}}, Flavor::Ideal, "Hm_ideal", {{"m", 2}}, {2, 3, 5}},
      {"tr", {{"n", 3}}, Flavor::Ideal, "trn_ideal", {{"n", 3}}, {2, 3}},
      {"sl2", {}, Flavor::Subalgebra, "sl2_sub", {}, {5, 7}},
      {"M", {{"c", 4}}, Flavor::GradedIdeal, "graded_mc", {{"c", 4}}, {2, 3}},
  };
  for (const auto& row : rows) {
    auto ring = catalog(row.ring, row.ring_params);
    for (std::uint32_t p : row.primes) {
      INFO(ring.name(), " ", flavor_name(row.flavor), " p=", p);
      auto got = count_zeta(ring, p, row.flavor, Method::Brute);
      auto expect = closed_form(row.oracle, row.oracle_params, p);
      CHECK(got.coefficients == expect.coefficients);
    }
  }
}

TEST_CASE("zeta text rendering") {
  ZetaPoly z;
  z.p = 3;
  z.flavor = Flavor::Ideal;
  z.coefficients = coeffs({1, 4, 1, 1});
  CHECK(to_text(z) == "1 + (4)t + (1)t^2 + (1)t^3");
  z.coefficients = coeffs({1, 0, 1});
  CHECK(to_text(z) == "1 + (1)t^2");
}
