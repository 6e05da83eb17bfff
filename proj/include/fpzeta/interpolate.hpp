#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpzeta/numeric.hpp"

namespace fpzeta {

// Outcome of fitting one coefficient sequence (p, value) against a degree
// bound, either globally or per residue class mod N. A "polynomial" verdict
// means the exact Lagrange fit through the first D+1 samples reproduces
// every remaining sample exactly; anything else is "non-polynomial up to
// degree D on the sampled primes".
struct ClassFit {
  unsigned residue = 0;  // class i mod N; 0 when no modulus is used
  bool polynomial = false;
  std::vector<Rational> poly;  // ascending degree, trimmed; empty if !polynomial
  std::vector<std::uint32_t> failing_primes;
  int sample_count = 0;
};

struct CoefficientFit {
  int degree_bound = 0;
  std::optional<unsigned> modulus;
  std::vector<ClassFit> classes;  // one entry when no modulus

  bool all_polynomial() const {
    for (const auto& c : classes)
      if (!c.polynomial) return false;
    return true;
  }
};

// Exact polynomial evaluation, ascending coefficients.
Rational eval_poly(const std::vector<Rational>& poly, const BigInt& x);

// Lagrange interpolation through (x_i, y_i); exact rationals throughout.
std::vector<Rational> lagrange(const std::vector<std::pair<BigInt, BigInt>>&
                                   points);

// Requires >= degree_bound + 2 samples (per residue class when modulus is
// given) with distinct primes; throws std::invalid_argument otherwise.
CoefficientFit fit_coefficient(
    const std::vector<std::pair<std::uint32_t, BigInt>>& samples,
    int degree_bound, std::optional<unsigned> modulus = std::nullopt);

// "3/2 p^2 + p + 1" style rendering for reports.
std::string poly_to_text(const std::vector<Rational>& poly);

}  // namespace fpzeta
