#include "fpzeta/numeric.hpp"

namespace fpzeta {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

namespace modp {

std::uint32_t inverse(std::uint32_t x, std::uint32_t p) {
  if (x == 0) throw std::domain_error("inverse of 0 in F_p");
  // Extended Euclid on (x, p); uniform cost even for tiny p.
  std::int64_t r0 = x, r1 = p;
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  s0 %= static_cast<std::int64_t>(p);
  if (s0 < 0) s0 += p;
  return static_cast<std::uint32_t>(s0);
}

}  // namespace modp

Fp::Fp(std::uint32_t p) : p_(p) {
  if (p > (1u << 31)) throw std::invalid_argument("modulus above 2^31");
  if (!is_prime(p))
    throw std::invalid_argument(std::to_string(p) + " is not prime");
}

}  // namespace fpzeta
