#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpzeta/numeric.hpp"

namespace fpzeta {

enum class Flavor { Subalgebra, Ideal, GradedIdeal };

const char* flavor_name(Flavor f);
Flavor flavor_from_name(const std::string& name);  // "sub"|"ideal"|"graded-ideal"

// The finite Dirichlet polynomial in t = p^{-s}: coefficients[k] counts the
// closed subspaces of codimension k, so coefficients[0] = coefficients[n] = 1
// after any complete count.
struct ZetaPoly {
  std::uint32_t p = 0;
  Flavor flavor = Flavor::Ideal;
  std::vector<BigInt> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }

  BigInt& at(int k) { return coefficients.at(static_cast<std::size_t>(k)); }
  const BigInt& at(int k) const {
    return coefficients.at(static_cast<std::size_t>(k));
  }

  bool operator==(const ZetaPoly& o) const {
    return p == o.p && flavor == o.flavor && coefficients == o.coefficients;
  }
};

inline bool same_coefficients(const ZetaPoly& a, const ZetaPoly& b) {
  return a.coefficients == b.coefficients;
}

// "1 + (4)t + (1)t^2 + (1)t^3"; zero terms are skipped.
std::string to_text(const ZetaPoly& z);

// binom(n,k)_p, the number of k-dimensional subspaces of F_p^n. Zero for
// k > n or k < 0.
BigInt gaussian_binomial(int n, int k, std::uint32_t p);

// zeta of the abelian algebra F_p^n: coefficient k is binom(n,k)_p. The
// subalgebra and ideal counts coincide.
ZetaPoly abelian_zeta(int n, std::uint32_t p);

}  // namespace fpzeta
