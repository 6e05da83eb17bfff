#pragma once

#include <cstdint>
#include <vector>

#include "fpzeta/enumerate.hpp"
#include "fpzeta/liealg.hpp"
#include "fpzeta/zetapoly.hpp"

namespace fpzeta {

// Basis split for a class-2 ring: d1 coset representatives of L/L' followed
// by a reduced-echelon basis of L' = [L,L], all in original coordinates.
struct Class2Split {
  int d1 = 0;
  int d2 = 0;
  std::vector<std::vector<std::uint32_t>> complement;  // d1 vectors, length n
  std::vector<std::vector<std::uint32_t>> derived;     // d2 vectors, RREF
  std::vector<int> derived_pivots;                     // pivot columns of L'
};

// Throws DomainError unless the ring has nilpotency class exactly 2 at p.
Class2Split class2_split(const LieRing& ring, std::uint32_t p);

// X(Lambda_2) = { x mod L' : [x, e_j] in Lambda_2 for all j }, the kernel of
// a linear map into (L'/Lambda_2)^{d1}. index_exp + rank = d1.
struct XInfo {
  int index_exp = 0;  // |L/L' : X| = p^{index_exp}
  int rank = 0;       // dim X as a subspace of L/L'
};
XInfo compute_X(const LieRing& ring, std::uint32_t p, const Class2Split& split,
                const EchelonMatrix& lambda2);

// Ideal zeta polynomial via the Lambda_1/Lambda_2 decomposition: every
// Lambda_2 <= L' contributes sum_j binom(rk X, j)_p p^{i j} t^{i + d1 - j}
// with i = codim Lambda_2. The Lambda_2 = L' term reproduces the abelian
// zeta of F^{d1} and Lambda_2 = 0 supplies the t^dim term.
ZetaPoly class2_ideal_zeta(const LieRing& ring, std::uint32_t p,
                           std::uint64_t* lambda2_count = nullptr);

}  // namespace fpzeta
