#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fpzeta/numeric.hpp"

namespace fpzeta {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// coeff * e_basis, structure constants over the integers; reduced mod p only
// at use time so one ring object serves every prime in a scan.
struct BracketTerm {
  long long coeff;
  int basis;  // 1-based
  bool operator==(const BracketTerm&) const = default;
};

// A Lie ring given by integer structure constants on a basis e_1..e_n. Only
// brackets [e_i,e_j] with i<j are stored; antisymmetry is implicit.
// Immutable after construction, freely shared across threads.
class LieRing {
 public:
  LieRing(std::string name, int dim);

  const std::string& name() const { return name_; }
  int dim() const { return n_; }

  // i < j, both in [1, n]; throws on duplicates and range errors.
  void add_bracket(int i, int j, std::vector<BracketTerm> terms);

  // Stored terms for i < j; empty when the bracket is zero.
  const std::vector<BracketTerm>& bracket(int i, int j) const;
  bool has_bracket(int i, int j) const;

  // Layer dimensions d_1..d_r summing to n; layer i spans a consecutive
  // index range of the basis.
  void set_grading(std::vector<int> layers);
  const std::optional<std::vector<int>>& grading() const { return grading_; }
  // 1-based layer index of basis vector i (grading required).
  int layer_of(int i) const;

  void set_param(const std::string& key, long long value);
  const std::map<std::string, long long>& params() const { return params_; }

  // Ring-file format (see README): name/dim/grading/bracket lines, '#'
  // comments. Unstated brackets are zero; duplicate (i,j) lines are errors.
  static LieRing parse(std::string_view text,
                       const std::string& default_name = "unnamed");

 private:
  std::string name_;
  int n_;
  std::map<std::pair<int, int>, std::vector<BracketTerm>> brackets_;
  std::optional<std::vector<int>> grading_;
  std::map<std::string, long long> params_;
};

// Jacobi check over F_p for all basis triples; a failing triple is reported,
// not thrown.
struct ValidationReport {
  bool ok = true;
  int i = 0, j = 0, k = 0;  // first violating triple when !ok
  std::string message;
};
ValidationReport validate(const LieRing& ring, std::uint32_t p);

// C_j with row i = coordinates of [e_i, e_j] mod p (row j is zero).
struct AdjointMatrix {
  int j = 0;
  std::vector<std::vector<std::uint32_t>> rows;  // n x n
};
std::vector<AdjointMatrix> adjoint_matrices(const LieRing& ring,
                                            std::uint32_t p);

// Dimensions of the lower central series gamma_1 = L, gamma_{i+1} =
// [gamma_i, L] over F_p, ending with 0 when the ring is nilpotent; if the
// descent stabilises at a nonzero dimension the ring is not nilpotent.
struct LowerCentralSeries {
  std::vector<int> dims;
  bool nilpotent = false;
  int nclass = 0;  // meaningful only when nilpotent
};
LowerCentralSeries lower_central_series(const LieRing& ring, std::uint32_t p);

// Catalog of the rings with named presentations; see catalog_entries() for
// the parameter ranges. Gradings are attached where the lower-central layers
// genuinely grade the bracket.
LieRing catalog(const std::string& name,
                const std::map<std::string, long long>& params = {});

struct CatalogEntry {
  std::string name;
  std::string params;   // e.g. "c>=2"
  std::string dim;      // e.g. "c+1"
  bool graded = false;
  std::string summary;
};
const std::vector<CatalogEntry>& catalog_entries();

// Sparse bracket tables for one (ring, prime): [e_i, e_j] mod p for all
// ordered pairs, antisymmetry applied. Shared read-only by the enumerators.
class BracketTable {
 public:
  using Sparse = std::vector<std::pair<int, std::uint32_t>>;  // (col, value)

  BracketTable(const LieRing& ring, std::uint32_t p);

  int dim() const { return n_; }
  std::uint32_t modulus() const { return p_; }
  const LieRing& ring() const { return *ring_; }

  // 1-based i, j; any order.
  const Sparse& bracket(int i, int j) const {
    return table_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
  }

  // [v, e_j] for an arbitrary coordinate vector v, dense output.
  std::vector<std::uint32_t> apply(std::span<const std::uint32_t> v,
                                   int j) const;

 private:
  const LieRing* ring_;
  int n_;
  std::uint32_t p_;
  std::vector<Sparse> table_;
};

}  // namespace fpzeta
