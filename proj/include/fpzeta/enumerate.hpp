#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fpzeta/errors.hpp"
#include "fpzeta/liealg.hpp"
#include "fpzeta/zetapoly.hpp"

namespace fpzeta {

// Enumeration is exponential in the dimension; everything past this cap is
// rejected up front rather than left to run forever.
inline constexpr int kMaxEnumDim = 12;

// The diagonal type of a canonical generator matrix, encoded as the set of
// pivot columns. There are exactly 2^n of these in dimension n.
struct PivotPattern {
  int n = 0;
  std::uint32_t mask = 0;  // bit c-1 set <=> column c is a pivot

  bool is_pivot(int col) const { return (mask >> (col - 1)) & 1u; }
  int rank() const { return std::popcount(mask); }
  int codim() const { return n - rank(); }

  // free entries sit at (pivot row i, non-pivot column j > i)
  int free_count() const;

  // maximal alternating runs of non-pivots/pivots along the diagonal:
  // (a_1,b_1),...,(a_r,b_r) with a_1 and b_r possibly zero
  std::vector<std::pair<int, int>> runs() const;
};

// All 2^n patterns, mask ascending.
std::vector<PivotPattern> iterate_patterns(int n);

// The canonical generator matrix of one subspace: m_{ii} = 1 exactly on the
// pivot columns, m_{ij} free only for pivot row i and non-pivot column
// j > i, everything else zero.
class EchelonMatrix {
 public:
  EchelonMatrix(int n, std::uint32_t pivot_mask, std::uint32_t p);

  int dim() const { return n_; }
  std::uint32_t modulus() const { return p_; }
  std::uint32_t pivot_mask() const { return mask_; }
  int rank() const { return static_cast<int>(pivots_.size()); }
  int codim() const { return n_ - rank(); }
  bool is_pivot(int col) const { return (mask_ >> (col - 1)) & 1u; }
  const std::vector<int>& pivots() const { return pivots_; }

  // value at a free position; throws elsewhere
  void set(int i, int j, std::uint32_t value);
  // full-matrix entry semantics (non-pivot rows are zero)
  std::uint32_t at(int i, int j) const;
  // dense row of a pivot column
  std::span<const std::uint32_t> row(int pivot_col) const;

 private:
  friend EchelonMatrix matrix_from_rows(int, std::uint32_t, std::uint32_t,
                                        const std::uint32_t*);
  int n_;
  std::uint32_t mask_;
  std::uint32_t p_;
  std::vector<int> pivots_;
  std::vector<std::vector<std::uint32_t>> rows_;  // one per pivot, ascending
};

// v minus the pivot-column multiples of M's rows; zero on pivot columns, and
// zero everywhere exactly when v lies in the rowspan.
struct ReduceResult {
  std::vector<std::uint32_t> residue;
  bool member = false;
};
ReduceResult reduce_vector(std::span<const std::uint32_t> v,
                           const EchelonMatrix& M);

// Direct closure test from the definitions: subalgebra checks [m_i, m_j] for
// pivot pairs, ideal checks [m_i, e_j] for all j, graded-ideal additionally
// requires every pivot row to live inside one grading block.
bool is_closed(const EchelonMatrix& M, const BracketTable& table,
               Flavor flavor);

// Sum of binom(n,k)_p over k: the enumeration sanity oracle.
BigInt count_all_subspaces(int n, std::uint32_t p);

// Visits every subspace of F_p^n exactly once (canonical matrices, pattern
// mask ascending, free entries in odometer order). Unpruned.
void for_each_subspace(int n, std::uint32_t p,
                       const std::function<void(const EchelonMatrix&)>& visit);

enum class Method { Auto, Brute, Class2 };

const char* method_name(Method m);
Method method_from_name(const std::string& name);

struct EnumOptions {
  bool prune = true;
  std::uint64_t node_budget = 0;  // 0 = unlimited
  int threads = 0;                // 0 = ZETA_THREADS or hardware
};

struct EnumStats {
  std::uint64_t nodes = 0;  // row assignments tried (brute) or #Lambda_2 (class2)
  Method method = Method::Brute;
};

// Coefficient k = number of flavor-closed subspaces of codimension k.
// Method::Auto hands class-2 ideal counting to the class2 module; results
// from either path are identical. Throws BudgetExhausted rather than ever
// returning a partial count.
ZetaPoly count_zeta(const LieRing& ring, std::uint32_t p, Flavor flavor,
                    Method method = Method::Auto, const EnumOptions& opts = {},
                    EnumStats* stats = nullptr);

}  // namespace fpzeta
