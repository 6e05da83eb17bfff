#include "fpzeta/interpolate.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fpzeta {

Rational eval_poly(const std::vector<Rational>& poly, const BigInt& x) {
  Rational acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Rational> lagrange(
    const std::vector<std::pair<BigInt, BigInt>>& points) {
  const std::size_t m = points.size();
  std::vector<Rational> acc(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      basis.push_back(0);
      for (std::size_t t = basis.size() - 1; t > 0; --t)
        basis[t] = basis[t - 1] - Rational(points[j].first) * basis[t];
      basis[0] = -Rational(points[j].first) * basis[0];
      denom *= Rational(points[i].first) - Rational(points[j].first);
    }
    Rational scale = Rational(points[i].second) / denom;
    for (std::size_t t = 0; t < basis.size(); ++t)
      acc[t] += scale * basis[t];
  }
  while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
  return acc;
}

CoefficientFit fit_coefficient(
    const std::vector<std::pair<std::uint32_t, BigInt>>& samples,
    int degree_bound, std::optional<unsigned> modulus) {
  if (degree_bound < 0)
    throw std::invalid_argument("fit_coefficient: negative degree bound");

  std::map<unsigned, std::vector<std::pair<std::uint32_t, BigInt>>> classes;
  if (modulus) {
    if (*modulus < 2)
      throw std::invalid_argument("fit_coefficient: modulus must be >= 2");
    for (const auto& s : samples) classes[s.first % *modulus].push_back(s);
  } else {
    classes[0] = samples;
  }

  CoefficientFit fit;
  fit.degree_bound = degree_bound;
  fit.modulus = modulus;

  const std::size_t need = static_cast<std::size_t>(degree_bound) + 2;
  for (auto& [residue, cls] : classes) {
    std::sort(cls.begin(), cls.end());
    for (std::size_t i = 1; i < cls.size(); ++i)
      if (cls[i].first == cls[i - 1].first)
        throw std::invalid_argument("fit_coefficient: duplicate prime " +
                                    std::to_string(cls[i].first));
    if (cls.size() < need)
      throw std::invalid_argument(
          "fit_coefficient: need at least " + std::to_string(need) +
          " samples" +
          (modulus ? " in class " + std::to_string(residue) + " mod " +
                         std::to_string(*modulus)
                   : std::string()) +
          ", got " + std::to_string(cls.size()));

    ClassFit cf;
    cf.residue = residue;
    cf.sample_count = static_cast<int>(cls.size());

    std::vector<std::pair<BigInt, BigInt>> nodes;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(degree_bound); ++i)
      nodes.emplace_back(BigInt(cls[i].first), cls[i].second);
    auto poly = lagrange(nodes);

    cf.polynomial = true;
    for (std::size_t i = static_cast<std::size_t>(degree_bound) + 1;
         i < cls.size(); ++i) {
      if (eval_poly(poly, BigInt(cls[i].first)) != Rational(cls[i].second)) {
        cf.polynomial = false;
        cf.failing_primes.push_back(cls[i].first);
      }
    }
    if (cf.polynomial) cf.poly = std::move(poly);
    fit.classes.push_back(std::move(cf));
  }
  return fit;
}

std::string poly_to_text(const std::vector<Rational>& poly) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = poly.size(); k-- > 0;) {
    if (poly[k] == 0 && !(poly.size() == 1 && k == 0)) continue;
    if (!first) out << " + ";
    first = false;
    bool unit = poly[k] == 1;
    if (k == 0 || !unit) out << poly[k].str();
    if (k >= 1) {
      if (!unit) out << "*";
      out << "p";
      if (k >= 2) out << "^" << k;
    }
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace fpzeta
