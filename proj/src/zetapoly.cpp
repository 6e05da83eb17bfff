#include "fpzeta/zetapoly.hpp"

#include <sstream>
#include <stdexcept>

namespace fpzeta {

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Subalgebra: return "sub";
    case Flavor::Ideal: return "ideal";
    case Flavor::GradedIdeal: return "graded-ideal";
  }
  return "?";
}

Flavor flavor_from_name(const std::string& name) {
  if (name == "sub") return Flavor::Subalgebra;
  if (name == "ideal") return Flavor::Ideal;
  if (name == "graded-ideal") return Flavor::GradedIdeal;
  throw std::invalid_argument("unknown flavor: " + name);
}

std::string to_text(const ZetaPoly& z) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < z.coefficients.size(); ++k) {
    const BigInt& c = z.coefficients[k];
    if (c == 0) continue;
    if (!first) out << " + ";
    if (k == 0) {
      out << c.str();
    } else {
      out << "(" << c.str() << ")t";
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

BigInt gaussian_binomial(int n, int k, std::uint32_t p) {
  if (k < 0 || k > n) return 0;
  const BigInt P = p;
  BigInt r = 1;
  // binom(n,i+1)_p = binom(n,i)_p * (p^{n-i}-1)/(p^{i+1}-1); each step divides
  // exactly.
  for (int i = 0; i < k; ++i) {
    r *= boost::multiprecision::pow(P, static_cast<unsigned>(n - i)) - 1;
    r /= boost::multiprecision::pow(P, static_cast<unsigned>(i + 1)) - 1;
  }
  return r;
}

ZetaPoly abelian_zeta(int n, std::uint32_t p) {
  if (n < 0) throw std::invalid_argument("abelian_zeta: negative dimension");
  ZetaPoly z;
  z.p = p;
  z.flavor = Flavor::Ideal;
  z.coefficients.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) z.at(k) = gaussian_binomial(n, k, p);
  return z;
}

}  // namespace fpzeta
