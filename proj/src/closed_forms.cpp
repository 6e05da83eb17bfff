#include "fpzeta/closed_forms.hpp"

#include "fpzeta/numeric.hpp"

namespace fpzeta {

std::int64_t elliptic_point_count(std::uint32_t p) {
  Fp f(p);
  std::int64_t count = 1;  // (0:1:0)
  for (std::uint64_t x = 0; x < p; ++x) {
    // y^2 = x^3 - x
    std::uint32_t rhs = f.sub(f.mul(f.mul(static_cast<std::uint32_t>(x),
                                          static_cast<std::uint32_t>(x)),
                                    static_cast<std::uint32_t>(x)),
                              static_cast<std::uint32_t>(x));
    for (std::uint64_t y = 0; y < p; ++y) {
      if (f.mul(static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(y)) ==
          rhs)
        ++count;
    }
  }
  return count;
}

int cubic_root_count(std::uint32_t p) {
  Fp f(p);
  std::uint32_t two = f.reduce(2);
  int count = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint32_t xx = static_cast<std::uint32_t>(x);
    if (f.mul(f.mul(xx, xx), xx) == two) ++count;
  }
  return count;
}

namespace {

BigInt ppow(std::uint32_t p, int e) {
  return boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e));
}

ZetaPoly make_poly(std::uint32_t p, Flavor flavor, int dim) {
  ZetaPoly z;
  z.p = p;
  z.flavor = flavor;
  z.coefficients.assign(static_cast<std::size_t>(dim) + 1, 0);
  return z;
}

void add_abelian(ZetaPoly& z, int n, std::uint32_t p) {
  for (int k = 0; k <= n; ++k) z.at(k) += gaussian_binomial(n, k, p);
}

long long param(const std::map<std::string, long long>& params,
                const std::string& key, const std::string& name) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("closed form '" + name +
                                "' needs parameter " + key);
  return it->second;
}

long long param_or(const std::map<std::string, long long>& params,
                   const std::string& key, long long fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

ZetaPoly heisenberg_ideal(std::uint32_t p) {
  auto z = make_poly(p, Flavor::Ideal, 3);
  z.at(0) = 1;
  z.at(1) = BigInt(1) + p;
  z.at(2) = 1;
  z.at(3) = 1;
  return z;
}

ZetaPoly heisenberg_sub(std::uint32_t p) {
  auto z = make_poly(p, Flavor::Subalgebra, 3);
  z.at(0) = 1;
  z.at(1) = BigInt(1) + p;
  z.at(2) = BigInt(1) + p + ppow(p, 2);
  z.at(3) = 1;
  return z;
}

// 1 + (1+p)t + sum_{k=2}^{c+1} t^k
ZetaPoly mc_ideal(long long c, std::uint32_t p) {
  if (c < 2) throw std::invalid_argument("Mc_ideal needs c >= 2");
  auto z = make_poly(p, Flavor::Ideal, static_cast<int>(c) + 1);
  z.at(0) = 1;
  z.at(1) = BigInt(1) + p;
  for (int k = 2; k <= c + 1; ++k) z.at(k) = 1;
  return z;
}

// the subalgebra recursion: zeta_{M_c} = zeta_{M_{c-1}}
//   + sum_a binom(c-1,a)_p p^{c-1-a} t^{a+2} + p^c t^c
ZetaPoly mc_sub(long long c, std::uint32_t p) {
  if (c < 2) throw std::invalid_argument("Mc_sub needs c >= 2");
  if (c == 2) {
    auto z = heisenberg_sub(p);
    return z;
  }
  ZetaPoly prev = mc_sub(c - 1, p);
  auto z = make_poly(p, Flavor::Subalgebra, static_cast<int>(c) + 1);
  for (int k = 0; k <= prev.degree(); ++k) z.at(k) = prev.at(k);
  for (int a = 0; a <= c - 1; ++a)
    z.at(a + 2) += gaussian_binomial(static_cast<int>(c) - 1, a, p) *
                   ppow(p, static_cast<int>(c) - 1 - a);
  z.at(static_cast<int>(c)) += ppow(p, static_cast<int>(c));
  return z;
}

ZetaPoly fc2_ideal(long long c, std::uint32_t p) {
  if (c == 2) return heisenberg_ideal(p);
  if (c == 3) {
    ZetaPoly prev = heisenberg_ideal(p);
    auto z = make_poly(p, Flavor::Ideal, 5);
    for (int k = 0; k <= 3; ++k) z.at(k) = prev.at(k);
    z.at(4) += BigInt(1) + p;
    z.at(5) += 1;
    return z;
  }
  if (c == 4) {
    ZetaPoly prev = fc2_ideal(3, p);
    auto z = make_poly(p, Flavor::Ideal, 8);
    for (int k = 0; k <= 5; ++k) z.at(k) = prev.at(k);
    z.at(5) += ppow(p, 1) + ppow(p, 2);
    z.at(6) += BigInt(1) + p + ppow(p, 2);
    z.at(7) += BigInt(1) + p + ppow(p, 2);
    z.at(8) += 1;
    return z;
  }
  throw std::invalid_argument("fc2_ideal supports c in {2,3,4}");
}

// zeta_{F^n} + t^{2n-1}
//   + sum_{i=1}^{n-2} binom(n-1,i)_p t^{2i+1}
//     sum_k binom(n-i-1,k)_p p^{ik} t^{n-i-1-k}
ZetaPoly grenham_ideal(long long n, std::uint32_t p) {
  if (n < 2) throw std::invalid_argument("grenham_ideal needs n >= 2");
  const int nn = static_cast<int>(n);
  const int dim = 2 * nn - 1;
  auto z = make_poly(p, Flavor::Ideal, dim);
  add_abelian(z, nn, p);
  z.at(dim) += 1;
  for (int i = 1; i <= nn - 2; ++i) {
    BigInt block = gaussian_binomial(nn - 1, i, p);
    const int rank = nn - (i + 1);
    for (int k = 0; k <= rank; ++k)
      z.at(2 * i + 1 + rank - k) +=
          block * gaussian_binomial(rank, k, p) * ppow(p, i * k);
  }
  return z;
}

// pi(i) = k for binom(k-1,2) < i <= binom(k,2)
int pi_staircase(int i) {
  int k = 1;
  while (k * (k - 1) / 2 < i) ++k;
  return k;
}

// zeta_{F^d} + t^{d+d'}
//   + sum_{i=1}^{d'-1} binom(d',i)_p t^{i+pi(i)}
//     sum_k binom(d-pi(i),k)_p p^{ik} t^{d-pi(i)-k},   d' = binom(d,2)
ZetaPoly f2d_ideal(long long d, std::uint32_t p) {
  if (d < 2) throw std::invalid_argument("f2d_ideal needs d >= 2");
  const int dd = static_cast<int>(d);
  const int d2 = dd * (dd - 1) / 2;
  const int dim = dd + d2;
  auto z = make_poly(p, Flavor::Ideal, dim);
  add_abelian(z, dd, p);
  z.at(dim) += 1;
  for (int i = 1; i <= d2 - 1; ++i) {
    BigInt block = gaussian_binomial(d2, i, p);
    const int rank = dd - pi_staircase(i);
    for (int k = 0; k <= rank; ++k)
      z.at(i + pi_staircase(i) + rank - k) +=
          block * gaussian_binomial(rank, k, p) * ppow(p, i * k);
  }
  return z;
}

// zeta_{F^6} + p^2|E|t^5 + |E|(p+p^2)t^6 + binom(3,1)_p t^7
//   + binom(3,2)_p t^8 + t^9
ZetaPoly le_ideal(std::uint32_t p) {
  auto z = make_poly(p, Flavor::Ideal, 9);
  add_abelian(z, 6, p);
  const BigInt e = elliptic_point_count(p);
  z.at(5) += ppow(p, 2) * e;
  z.at(6) += e * (ppow(p, 1) + ppow(p, 2));
  z.at(7) += gaussian_binomial(3, 1, p);
  z.at(8) += gaussian_binomial(3, 2, p);
  z.at(9) += 1;
  return z;
}

// zeta_{F^5} + p^3|N|t^3 + p^2 binom(3,1)_p |N| t^4
//   + p(1+2p+p^2(1+|N|))t^5 + (1+p+p^2(1+|N|))t^6 + binom(3,1)_p t^7 + t^8
ZetaPoly lnp8_ideal(std::uint32_t p) {
  if (p < 3) throw DomainError("Lnp8_ideal is stated for p >= 3");
  auto z = make_poly(p, Flavor::Ideal, 8);
  add_abelian(z, 5, p);
  const BigInt nroots = cubic_root_count(p);
  z.at(3) += ppow(p, 3) * nroots;
  z.at(4) += ppow(p, 2) * gaussian_binomial(3, 1, p) * nroots;
  z.at(5) += p * (BigInt(1) + 2 * BigInt(p) + ppow(p, 2) * (1 + nroots));
  z.at(6) += BigInt(1) + p + ppow(p, 2) * (1 + nroots);
  z.at(7) += gaussian_binomial(3, 1, p);
  z.at(8) += 1;
  return z;
}

ZetaPoly vl_ideal(long long a, long long b, std::uint32_t p) {
  if (p <= 3) throw DomainError("vl_ideal is stated for p > 3");
  (void)a;
  auto z = make_poly(p, Flavor::Ideal, 7);
  const BigInt q = p;
  z.at(0) = 1;
  z.at(1) = 1 + q + q * q;
  z.at(2) = 1 + q + q * q;
  z.at(3) = 1 + q + q * q + q * q * q;
  z.at(4) = 1 + q + q * q;
  z.at(5) = 1 + q + q * q;
  z.at(6) = b != 0 ? BigInt(1) : 1 + q;
  z.at(7) = 1;
  return z;
}

ZetaPoly sl2_sub(std::uint32_t p, bool allow_small_p) {
  if (p < 5 && !allow_small_p)
    throw DomainError(
        "sl2_sub is stated for p >= 5 (pass allow_small_p=1 to override)");
  auto z = make_poly(p, Flavor::Subalgebra, 3);
  z.at(0) = 1;
  z.at(1) = BigInt(1) + p;
  z.at(2) = BigInt(1) + p + ppow(p, 2);
  z.at(3) = 1;
  return z;
}

// zeta_{F^{2m}} + t^{2m+1}
ZetaPoly hm_ideal(long long m, std::uint32_t p) {
  if (m < 1) throw std::invalid_argument("Hm_ideal needs m >= 1");
  const int mm = static_cast<int>(m);
  auto z = make_poly(p, Flavor::Ideal, 2 * mm + 1);
  add_abelian(z, 2 * mm, p);
  z.at(2 * mm + 1) += 1;
  return z;
}

// zeta_{F^3} + p t^3 + t^4 + t^5
ZetaPoly g53_ideal(std::uint32_t p) {
  auto z = make_poly(p, Flavor::Ideal, 5);
  add_abelian(z, 3, p);
  z.at(3) += p;
  z.at(4) += 1;
  z.at(5) += 1;
  return z;
}

ZetaPoly g64_ideal(std::uint32_t p) {
  auto z = make_poly(p, Flavor::Ideal, 6);
  const BigInt q = p;
  z.at(0) = 1;
  z.at(1) = 1 + q + q * q + q * q * q;
  z.at(2) = 1 + q + 2 * q * q + q * q * q + q * q * q * q;
  z.at(3) = 1 + q + 2 * q * q + q * q * q;
  z.at(4) = 1 + q + q * q;
  z.at(5) = 1 + q;
  z.at(6) = 1;
  return z;
}

void add_scaled_abelian(ZetaPoly& z, int shift, int n, std::uint32_t p,
                        int copies = 1) {
  for (int k = 0; k <= n; ++k)
    z.at(shift + k) += copies * gaussian_binomial(n, k, p);
}

// tr_1 = zeta_F; tr_2 = zeta_{F^2} + t^2 zeta_F;
// tr_3 = zeta_{F^3} + 2t^2 zeta_{F^2} + t^4 zeta_F + t^5 zeta_F;
// tr_4 = zeta_{F^4} + 3t^2 zeta_{F^3} + 3t^4 zeta_{F^2} + t^6 zeta_F
//        + 2t^5 (zeta_{F^2} + t^2 zeta_F) + t^8 zeta_F + t^9 zeta_F
ZetaPoly trn_ideal(long long n, std::uint32_t p) {
  if (n < 1 || n > 4) throw std::invalid_argument("trn_ideal supports n <= 4");
  const int dim = static_cast<int>(n) * (static_cast<int>(n) + 1) / 2;
  auto z = make_poly(p, Flavor::Ideal, dim);
  switch (n) {
    case 1:
      add_scaled_abelian(z, 0, 1, p);
      break;
    case 2:
      add_scaled_abelian(z, 0, 2, p);
      add_scaled_abelian(z, 2, 1, p);
      break;
    case 3:
      add_scaled_abelian(z, 0, 3, p);
      add_scaled_abelian(z, 2, 2, p, 2);
      add_scaled_abelian(z, 4, 1, p);
      add_scaled_abelian(z, 5, 1, p);
      break;
    case 4:
      add_scaled_abelian(z, 0, 4, p);
      add_scaled_abelian(z, 2, 3, p, 3);
      add_scaled_abelian(z, 4, 2, p, 3);
      add_scaled_abelian(z, 6, 1, p);
      add_scaled_abelian(z, 5, 2, p, 2);  // 2t^5 zeta_{F^2}
      add_scaled_abelian(z, 7, 1, p, 2);  // 2t^5 * t^2 zeta_F
      add_scaled_abelian(z, 8, 1, p);
      add_scaled_abelian(z, 9, 1, p);
      break;
  }
  return z;
}

// Table rows m3_2, m4_3, m5_4_1, m6_5_1: zeta_{F^2} + t^3 + ... + t^{c+1}
ZetaPoly graded_mc(long long c, std::uint32_t p) {
  if (c < 2 || c > 5)
    throw std::invalid_argument("graded_mc supports c in {2,3,4,5}");
  auto z = make_poly(p, Flavor::GradedIdeal, static_cast<int>(c) + 1);
  z.at(0) = 1;
  z.at(1) = BigInt(1) + p;
  z.at(2) = 1;
  for (int k = 3; k <= c + 1; ++k) z.at(k) = 1;
  return z;
}

}  // namespace

ZetaPoly closed_form(const std::string& name,
                     const std::map<std::string, long long>& params,
                     std::uint32_t p) {
  Fp field(p);  // validates the prime
  if (name == "heisenberg_ideal") return heisenberg_ideal(p);
  if (name == "heisenberg_sub") return heisenberg_sub(p);
  if (name == "Mc_ideal") return mc_ideal(param(params, "c", name), p);
  if (name == "Mc_sub") return mc_sub(param(params, "c", name), p);
  if (name == "fil4_ideal") return mc_ideal(4, p);
  if (name == "fc2_ideal") return fc2_ideal(param(params, "c", name), p);
  if (name == "f2d_ideal") return f2d_ideal(param(params, "d", name), p);
  if (name == "grenham_ideal") return grenham_ideal(param(params, "n", name), p);
  if (name == "LE_ideal") return le_ideal(p);
  if (name == "Lnp8_ideal") return lnp8_ideal(p);
  if (name == "vl_ideal")
    return vl_ideal(param(params, "a", name), param(params, "b", name), p);
  if (name == "sl2_sub") return sl2_sub(p, param_or(params, "allow_small_p", 0) != 0);
  if (name == "Hm_ideal") return hm_ideal(param(params, "m", name), p);
  if (name == "g53_ideal") return g53_ideal(p);
  if (name == "g64_ideal") return g64_ideal(p);
  if (name == "trn_ideal") return trn_ideal(param(params, "n", name), p);
  if (name == "graded_mc") return graded_mc(param(params, "c", name), p);
  if (name == "abelian") {
    long long n = param(params, "n", name);
    return abelian_zeta(static_cast<int>(n), p);
  }
  throw std::invalid_argument("unknown closed form '" + name + "'");
}

std::vector<std::string> closed_form_names() {
  return {"heisenberg_ideal", "heisenberg_sub", "Mc_ideal", "Mc_sub",
          "fil4_ideal",       "fc2_ideal",      "f2d_ideal", "grenham_ideal",
          "LE_ideal",         "Lnp8_ideal",     "vl_ideal",  "sl2_sub",
          "Hm_ideal",         "g53_ideal",      "g64_ideal", "trn_ideal",
          "graded_mc",        "abelian"};
}

}  // namespace fpzeta
