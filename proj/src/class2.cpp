#include "fpzeta/class2.hpp"

#include <algorithm>

namespace fpzeta {

namespace {

// Reduced row echelon form in place; returns pivot columns (0-based).
std::vector<int> rref(std::vector<std::vector<std::uint32_t>>& rows,
                      std::uint32_t p) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const std::size_t m = rows.size(), n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t sel = r;
    while (sel < m && rows[sel][c] == 0) ++sel;
    if (sel == m) continue;
    std::swap(rows[r], rows[sel]);
    std::uint32_t inv = modp::inverse(rows[r][c], p);
    for (auto& x : rows[r]) x = modp::mul(x, inv, p);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      std::uint32_t f = rows[i][c];
      for (std::size_t t = 0; t < n; ++t)
        rows[i][t] = modp::sub(rows[i][t], modp::mul(f, rows[r][t], p), p);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  rows.resize(pivots.size());
  return pivots;
}

int rank_of(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
  return static_cast<int>(rref(rows, p).size());
}

// Coordinates of w (a vector in L') in the RREF basis of L': with a reduced
// echelon basis these are just the pivot-column entries.
std::vector<std::uint32_t> derived_coords(const Class2Split& split,
                                          std::span<const std::uint32_t> w) {
  std::vector<std::uint32_t> out(static_cast<std::size_t>(split.d2));
  for (int r = 0; r < split.d2; ++r)
    out[static_cast<std::size_t>(r)] = w[static_cast<std::size_t>(
        split.derived_pivots[static_cast<std::size_t>(r)])];
  return out;
}

// d1 x d1 table of [f_i, f_j] expressed in L' coordinates.
std::vector<std::vector<std::vector<std::uint32_t>>> complement_brackets(
    const LieRing& ring, std::uint32_t p, const Class2Split& split) {
  BracketTable table(ring, p);
  std::vector<std::vector<std::vector<std::uint32_t>>> out(
      static_cast<std::size_t>(split.d1));
  for (int i = 0; i < split.d1; ++i) {
    out[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(split.d1));
    for (int j = 0; j < split.d1; ++j) {
      const auto& fi = split.complement[static_cast<std::size_t>(i)];
      const auto& fj = split.complement[static_cast<std::size_t>(j)];
      std::vector<std::uint32_t> w(static_cast<std::size_t>(ring.dim()), 0);
      for (int c = 1; c <= ring.dim(); ++c) {
        std::uint32_t uc = fi[static_cast<std::size_t>(c - 1)];
        if (uc == 0) continue;
        for (int d = 1; d <= ring.dim(); ++d) {
          std::uint32_t wd = fj[static_cast<std::size_t>(d - 1)];
          if (wd == 0) continue;
          std::uint32_t scale = modp::mul(uc, wd, p);
          for (const auto& [col, val] : table.bracket(c, d)) {
            auto& slot = w[static_cast<std::size_t>(col - 1)];
            slot = modp::add(slot, modp::mul(scale, val, p), p);
          }
        }
      }
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          derived_coords(split, w);
    }
  }
  return out;
}

XInfo x_info_from_coords(
    const std::vector<std::vector<std::vector<std::uint32_t>>>& coords,
    const Class2Split& split, const EchelonMatrix& lambda2, std::uint32_t p) {
  // Constraint rows for x = sum lambda_i f_i: for every j and every residue
  // coordinate t of L'/Lambda_2, sum_i lambda_i residue_t([f_i, f_j]) = 0.
  std::vector<std::vector<std::uint32_t>> rows;
  for (int j = 0; j < split.d1; ++j) {
    std::vector<std::vector<std::uint32_t>> residues(
        static_cast<std::size_t>(split.d1));
    for (int i = 0; i < split.d1; ++i)
      residues[static_cast<std::size_t>(i)] =
          reduce_vector(coords[static_cast<std::size_t>(i)]
                              [static_cast<std::size_t>(j)],
                        lambda2)
              .residue;
    for (int t = 0; t < split.d2; ++t) {
      std::vector<std::uint32_t> row(static_cast<std::size_t>(split.d1));
      bool nonzero = false;
      for (int i = 0; i < split.d1; ++i) {
        row[static_cast<std::size_t>(i)] =
            residues[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
        nonzero |= row[static_cast<std::size_t>(i)] != 0;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  XInfo info;
  info.index_exp = rank_of(std::move(rows), p);
  info.rank = split.d1 - info.index_exp;
  return info;
}

}  // namespace

Class2Split class2_split(const LieRing& ring, std::uint32_t p) {
  auto lcs = lower_central_series(ring, p);
  if (!lcs.nilpotent || lcs.nclass != 2)
    throw DomainError("ring '" + ring.name() +
                      "' does not have nilpotency class 2 at p = " +
                      std::to_string(p));

  const int n = ring.dim();
  BracketTable table(ring, p);

  // L' = span of all [e_i, e_j]
  std::vector<std::vector<std::uint32_t>> derived;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const auto& terms = table.bracket(i, j);
      if (terms.empty()) continue;
      std::vector<std::uint32_t> v(static_cast<std::size_t>(n), 0);
      for (const auto& [col, val] : terms)
        v[static_cast<std::size_t>(col - 1)] = val;
      derived.push_back(std::move(v));
    }
  }
  auto pivots = rref(derived, p);

  Class2Split split;
  split.d2 = static_cast<int>(derived.size());
  split.d1 = n - split.d2;
  split.derived = std::move(derived);
  split.derived_pivots = pivots;

  // complement: unit vectors on the non-pivot columns of L'
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    std::vector<std::uint32_t> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(c)] = 1;
    split.complement.push_back(std::move(e));
  }
  return split;
}

XInfo compute_X(const LieRing& ring, std::uint32_t p, const Class2Split& split,
                const EchelonMatrix& lambda2) {
  if (lambda2.dim() != split.d2)
    throw std::invalid_argument("Lambda_2 must live in dimension d2");
  auto coords = complement_brackets(ring, p, split);
  return x_info_from_coords(coords, split, lambda2, p);
}

ZetaPoly class2_ideal_zeta(const LieRing& ring, std::uint32_t p,
                           std::uint64_t* lambda2_count) {
  Class2Split split = class2_split(ring, p);
  const int n = ring.dim();
  const BigInt P = p;
  auto coords = complement_brackets(ring, p, split);

  ZetaPoly z;
  z.p = p;
  z.flavor = Flavor::Ideal;
  z.coefficients.assign(static_cast<std::size_t>(n) + 1, 0);

  std::uint64_t visited = 0;
  for_each_subspace(split.d2, p, [&](const EchelonMatrix& lambda2) {
    ++visited;
    const int i = lambda2.codim();
    XInfo x = x_info_from_coords(coords, split, lambda2, p);
    for (int j = 0; j <= x.rank; ++j) {
      int k = i + split.d1 - j;
      z.coefficients[static_cast<std::size_t>(k)] +=
          gaussian_binomial(x.rank, j, p) *
          boost::multiprecision::pow(P, static_cast<unsigned>(i * j));
    }
  });
  if (lambda2_count) *lambda2_count = visited;
  return z;
}

}  // namespace fpzeta
