#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fpzeta/errors.hpp"
#include "fpzeta/zetapoly.hpp"

namespace fpzeta {

// |E(F_p)| for the curve y^2 z = x^3 - x z^2, counted over P^2(F_p) by
// exhaustive scan. Always >= 1: (0:1:0) lies on the curve.
std::int64_t elliptic_point_count(std::uint32_t p);

// Number of roots of x^3 = 2 in F_p, exhaustive.
int cubic_root_count(std::uint32_t p);

// One evaluator per closed-form theorem, keyed by name:
//   heisenberg_ideal, heisenberg_sub, Mc_ideal(c), Mc_sub(c), fil4_ideal,
//   fc2_ideal(c in {2,3,4}), f2d_ideal(d), grenham_ideal(n), LE_ideal,
//   Lnp8_ideal (p >= 3), vl_ideal(a, b; p > 3), sl2_sub (p >= 5 unless
//   allow_small_p=1), Hm_ideal(m), g53_ideal, g64_ideal, trn_ideal(n <= 4),
//   graded_mc(c), abelian(n).
// Out-of-domain primes raise DomainError, never a silently wrong value.
ZetaPoly closed_form(const std::string& name,
                     const std::map<std::string, long long>& params,
                     std::uint32_t p);

std::vector<std::string> closed_form_names();

}  // namespace fpzeta
