#include "fpzeta/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <optional>
#include <thread>

#include "fpzeta/class2.hpp"

namespace fpzeta {

int PivotPattern::free_count() const {
  int total = 0;
  for (int i = 1; i <= n; ++i) {
    if (!is_pivot(i)) continue;
    for (int j = i + 1; j <= n; ++j)
      if (!is_pivot(j)) ++total;
  }
  return total;
}

std::vector<std::pair<int, int>> PivotPattern::runs() const {
  std::vector<std::pair<int, int>> out;
  int col = 1;
  while (col <= n) {
    int a = 0, b = 0;
    while (col <= n && !is_pivot(col)) ++a, ++col;
    while (col <= n && is_pivot(col)) ++b, ++col;
    out.emplace_back(a, b);
  }
  if (out.empty()) out.emplace_back(0, 0);
  return out;
}

std::vector<PivotPattern> iterate_patterns(int n) {
  if (n < 1 || n > kMaxEnumDim)
    throw DomainError("pattern iteration supports 1 <= n <= " +
                      std::to_string(kMaxEnumDim));
  std::vector<PivotPattern> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    out.push_back(PivotPattern{n, mask});
  return out;
}

// ---------------------------------------------------------------------------

EchelonMatrix::EchelonMatrix(int n, std::uint32_t pivot_mask, std::uint32_t p)
    : n_(n), mask_(pivot_mask), p_(p) {
  if (n < 1 || n > kMaxEnumDim) throw DomainError("bad echelon dimension");
  for (int c = 1; c <= n; ++c) {
    if (!is_pivot(c)) continue;
    pivots_.push_back(c);
    std::vector<std::uint32_t> row(static_cast<std::size_t>(n), 0);
    row[static_cast<std::size_t>(c - 1)] = 1;
    rows_.push_back(std::move(row));
  }
}

void EchelonMatrix::set(int i, int j, std::uint32_t value) {
  if (!is_pivot(i) || is_pivot(j) || j <= i)
    throw std::invalid_argument("not a free entry position");
  if (value >= p_) throw std::invalid_argument("value out of range");
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), i);
  rows_[static_cast<std::size_t>(it - pivots_.begin())]
       [static_cast<std::size_t>(j - 1)] = value;
}

std::uint32_t EchelonMatrix::at(int i, int j) const {
  if (!is_pivot(i)) return 0;
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), i);
  return rows_[static_cast<std::size_t>(it - pivots_.begin())]
              [static_cast<std::size_t>(j - 1)];
}

std::span<const std::uint32_t> EchelonMatrix::row(int pivot_col) const {
  if (!is_pivot(pivot_col)) throw std::invalid_argument("not a pivot column");
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), pivot_col);
  return rows_[static_cast<std::size_t>(it - pivots_.begin())];
}

EchelonMatrix matrix_from_rows(int n, std::uint32_t mask, std::uint32_t p,
                               const std::uint32_t* rows) {
  EchelonMatrix m(n, mask, p);
  for (std::size_t r = 0; r < m.pivots_.size(); ++r)
    m.rows_[r].assign(rows + r * kMaxEnumDim, rows + r * kMaxEnumDim + n);
  return m;
}

ReduceResult reduce_vector(std::span<const std::uint32_t> v,
                           const EchelonMatrix& M) {
  const std::uint32_t p = M.modulus();
  ReduceResult out;
  out.residue.assign(v.begin(), v.end());
  for (int c : M.pivots()) {
    std::uint32_t coef = out.residue[static_cast<std::size_t>(c - 1)];
    if (coef == 0) continue;
    auto row = M.row(c);
    for (std::size_t t = 0; t < out.residue.size(); ++t)
      out.residue[t] = modp::sub(out.residue[t],
                                 modp::mul(coef, row[t], p), p);
  }
  out.member = std::all_of(out.residue.begin(), out.residue.end(),
                           [](std::uint32_t x) { return x == 0; });
  return out;
}

namespace {

// [u, w] for coordinate vectors u, w, dense output
std::vector<std::uint32_t> bracket_of_vectors(
    const BracketTable& table, std::span<const std::uint32_t> u,
    std::span<const std::uint32_t> w) {
  const int n = table.dim();
  const std::uint32_t p = table.modulus();
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n), 0);
  for (int c = 1; c <= n; ++c) {
    std::uint32_t uc = u[static_cast<std::size_t>(c - 1)];
    if (uc == 0) continue;
    for (int d = 1; d <= n; ++d) {
      std::uint32_t wd = w[static_cast<std::size_t>(d - 1)];
      if (wd == 0) continue;
      std::uint32_t scale = modp::mul(uc, wd, p);
      for (const auto& [col, val] : table.bracket(c, d)) {
        auto& slot = out[static_cast<std::size_t>(col - 1)];
        slot = modp::add(slot, modp::mul(scale, val, p), p);
      }
    }
  }
  return out;
}

bool row_is_homogeneous(const EchelonMatrix& M, const LieRing& ring, int pivot) {
  const int layer = ring.layer_of(pivot);
  auto row = M.row(pivot);
  for (int j = 1; j <= M.dim(); ++j) {
    if (row[static_cast<std::size_t>(j - 1)] != 0 &&
        ring.layer_of(j) != layer)
      return false;
  }
  return true;
}

}  // namespace

bool is_closed(const EchelonMatrix& M, const BracketTable& table,
               Flavor flavor) {
  if (flavor == Flavor::GradedIdeal && !table.ring().grading())
    throw DomainError("graded-ideal flavor needs a graded ring");
  const int n = M.dim();

  if (flavor == Flavor::Subalgebra) {
    const auto& piv = M.pivots();
    for (std::size_t a = 0; a < piv.size(); ++a) {
      for (std::size_t b = a + 1; b < piv.size(); ++b) {
        auto v = bracket_of_vectors(table, M.row(piv[a]), M.row(piv[b]));
        if (!reduce_vector(v, M).member) return false;
      }
    }
    return true;
  }

  if (flavor == Flavor::GradedIdeal) {
    for (int c : M.pivots())
      if (!row_is_homogeneous(M, table.ring(), c)) return false;
  }
  for (int c : M.pivots()) {
    for (int j = 1; j <= n; ++j) {
      auto v = table.apply(M.row(c), j);
      if (!reduce_vector(v, M).member) return false;
    }
  }
  return true;
}

BigInt count_all_subspaces(int n, std::uint32_t p) {
  if (n < 1 || n > kMaxEnumDim)
    throw DomainError("count_all_subspaces supports 1 <= n <= " +
                      std::to_string(kMaxEnumDim));
  BigInt total = 0;
  for (int k = 0; k <= n; ++k) total += gaussian_binomial(n, k, p);
  return total;
}

const char* method_name(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Brute: return "brute";
    case Method::Class2: return "class2";
  }
  return "?";
}

Method method_from_name(const std::string& name) {
  if (name == "auto") return Method::Auto;
  if (name == "brute") return Method::Brute;
  if (name == "class2") return Method::Class2;
  throw std::invalid_argument("unknown method: " + name);
}

// ---------------------------------------------------------------------------
// Backtracking search over one pattern.
//
// Rows are assigned in ascending pivot order, free entries within a row in
// odometer order. After every row assignment each required bracket is kept
// as a partial residue (reduced by the assigned rows); a residue whose first
// nonzero column is not an unassigned pivot can never be completed to a
// member of the rowspan, which kills the subtree. Surviving to the last row
// therefore means every bracket reduced to zero.
// ---------------------------------------------------------------------------

namespace {

using Row = std::array<std::uint32_t, kMaxEnumDim>;

struct Layout {
  int n = 0;
  std::uint32_t mask = 0;
  int codim = 0;
  std::vector<int> pivots;             // ascending, 1-based
  std::vector<std::vector<int>> frees; // per row; graded rings restrict these
};

Layout make_layout(int n, std::uint32_t mask, const LieRing& ring,
                   bool graded) {
  Layout L;
  L.n = n;
  L.mask = mask;
  PivotPattern pat{n, mask};
  L.codim = pat.codim();
  for (int c = 1; c <= n; ++c) {
    if (!pat.is_pivot(c)) continue;
    L.pivots.push_back(c);
    std::vector<int> cols;
    for (int j = c + 1; j <= n; ++j) {
      if (pat.is_pivot(j)) continue;
      if (graded && ring.layer_of(j) != ring.layer_of(c)) continue;
      cols.push_back(j);
    }
    L.frees.push_back(std::move(cols));
  }
  return L;
}

struct SharedState {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
  std::uint64_t budget = 0;  // 0 = unlimited
};

class PatternSearch {
 public:
  PatternSearch(const BracketTable& table, const Layout& layout,
                std::optional<Flavor> flavor, bool prune, SharedState& shared,
                const std::function<void(const EchelonMatrix&)>* visitor)
      : table_(table),
        L_(layout),
        flavor_(flavor),
        prune_(prune),
        shared_(shared),
        visitor_(visitor),
        n_(layout.n),
        p_(table.modulus()),
        rank_(static_cast<int>(layout.pivots.size())) {
    pending_.resize(static_cast<std::size_t>(rank_) + 1);
  }

  std::uint64_t count() const { return count_; }

  void run() {
    if (prune_ && flavor_ && !precheck()) {
      flush_nodes();
      return;
    }
    if (rank_ == 0) {
      bump_node();
      leaf();
    } else {
      for (int r = 0; r < rank_; ++r) {
        rows_[r].fill(0);
        rows_[r][static_cast<std::size_t>(L_.pivots[r] - 1)] = 1;
      }
      dfs(0);
    }
    flush_nodes();
  }

 private:
  // --- node accounting -----------------------------------------------------
  void bump_node() {
    if (++local_nodes_ >= 1024) flush_nodes();
  }
  void flush_nodes() {
    if (local_nodes_ == 0) return;
    std::uint64_t total =
        shared_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed) +
        local_nodes_;
    local_nodes_ = 0;
    if (shared_.budget != 0 && total > shared_.budget)
      shared_.aborted.store(true, std::memory_order_relaxed);
  }
  bool aborted() const {
    return shared_.aborted.load(std::memory_order_relaxed);
  }

  // --- residue handling ----------------------------------------------------
  // 0 = resolved to zero, 1 = keep pending, 2 = dead
  int rule(const Row& w, int r) const {
    for (int q = 1; q <= n_; ++q) {
      if (w[static_cast<std::size_t>(q - 1)] == 0) continue;
      if (((L_.mask >> (q - 1)) & 1u) && q > L_.pivots[r]) return 1;
      return 2;
    }
    return 0;
  }

  void subtract_row(Row& w, std::uint32_t coef, int r) const {
    const auto& row = rows_[r];
    for (int t = 0; t < n_; ++t)
      w[static_cast<std::size_t>(t)] =
          modp::sub(w[static_cast<std::size_t>(t)],
                    modp::mul(coef, row[static_cast<std::size_t>(t)], p_), p_);
  }

  int settle_fresh(Row& w, int r) const {
    for (int s = 0; s <= r; ++s) {
      std::uint32_t c = w[static_cast<std::size_t>(L_.pivots[s] - 1)];
      if (c != 0) subtract_row(w, c, s);
    }
    return rule(w, r);
  }

  // [row_r, e_j] into w
  void ideal_bracket(int r, int j, Row& w) const {
    w.fill(0);
    const auto& row = rows_[r];
    for (int c = 1; c <= n_; ++c) {
      std::uint32_t rc = row[static_cast<std::size_t>(c - 1)];
      if (rc == 0) continue;
      for (const auto& [col, val] : table_.bracket(c, j)) {
        auto& slot = w[static_cast<std::size_t>(col - 1)];
        slot = modp::add(slot, modp::mul(rc, val, p_), p_);
      }
    }
  }

  // [row_a, row_b] into w
  void pair_bracket(int a, int b, Row& w) const {
    w.fill(0);
    const auto& ra = rows_[a];
    const auto& rb = rows_[b];
    for (int c = 1; c <= n_; ++c) {
      std::uint32_t uc = ra[static_cast<std::size_t>(c - 1)];
      if (uc == 0) continue;
      for (int d = 1; d <= n_; ++d) {
        std::uint32_t wd = rb[static_cast<std::size_t>(d - 1)];
        if (wd == 0) continue;
        std::uint32_t scale = modp::mul(uc, wd, p_);
        for (const auto& [col, val] : table_.bracket(c, d)) {
          auto& slot = w[static_cast<std::size_t>(col - 1)];
          slot = modp::add(slot, modp::mul(scale, val, p_), p_);
        }
      }
    }
  }

  // --- pattern-level precheck ---------------------------------------------
  // Evaluates each required bracket on the pattern skeleton: a non-pivot
  // residue entry that is a nonzero constant with no possible free-entry
  // contribution kills the pattern. Conservative by construction.
  bool precheck() const {
    if (*flavor_ == Flavor::Subalgebra) {
      Row cvec;
      std::array<bool, kMaxEnumDim> dep{};
      for (int a = 0; a < rank_; ++a) {
        for (int b = a + 1; b < rank_; ++b) {
          cvec.fill(0);
          dep.fill(false);
          for (const auto& [col, val] : table_.bracket(L_.pivots[a],
                                                       L_.pivots[b]))
            cvec[static_cast<std::size_t>(col - 1)] = val;
          for (int c : L_.frees[static_cast<std::size_t>(a)])
            for (const auto& [col, val] : table_.bracket(c, L_.pivots[b]))
              dep[static_cast<std::size_t>(col - 1)] = true;
          for (int d : L_.frees[static_cast<std::size_t>(b)])
            for (const auto& [col, val] : table_.bracket(L_.pivots[a], d))
              dep[static_cast<std::size_t>(col - 1)] = true;
          for (int c : L_.frees[static_cast<std::size_t>(a)])
            for (int d : L_.frees[static_cast<std::size_t>(b)])
              for (const auto& [col, val] : table_.bracket(c, d))
                dep[static_cast<std::size_t>(col - 1)] = true;
          if (!skeleton_alive(cvec, dep)) return false;
        }
      }
      return true;
    }
    Row cvec;
    std::array<bool, kMaxEnumDim> dep{};
    for (int r = 0; r < rank_; ++r) {
      for (int j = 1; j <= n_; ++j) {
        cvec.fill(0);
        dep.fill(false);
        for (const auto& [col, val] : table_.bracket(L_.pivots[r], j))
          cvec[static_cast<std::size_t>(col - 1)] = val;
        for (int c : L_.frees[static_cast<std::size_t>(r)])
          for (const auto& [col, val] : table_.bracket(c, j))
            dep[static_cast<std::size_t>(col - 1)] = true;
        if (!skeleton_alive(cvec, dep)) return false;
      }
    }
    return true;
  }

  bool skeleton_alive(const Row& cvec, const std::array<bool, kMaxEnumDim>& dep)
      const {
    std::array<bool, kMaxEnumDim> contam{};
    int next_row = 0;
    for (int q = 1; q <= n_; ++q) {
      bool is_piv = (L_.mask >> (q - 1)) & 1u;
      bool maybe = cvec[static_cast<std::size_t>(q - 1)] != 0 ||
                   dep[static_cast<std::size_t>(q - 1)] ||
                   contam[static_cast<std::size_t>(q - 1)];
      if (is_piv) {
        if (maybe)
          for (int c : L_.frees[static_cast<std::size_t>(next_row)])
            contam[static_cast<std::size_t>(c - 1)] = true;
        ++next_row;
      } else if (cvec[static_cast<std::size_t>(q - 1)] != 0 &&
                 !dep[static_cast<std::size_t>(q - 1)] &&
                 !contam[static_cast<std::size_t>(q - 1)]) {
        return false;
      }
    }
    return true;
  }

  // --- search ----------------------------------------------------------

  void dfs(int r) {
    const auto& cols = L_.frees[static_cast<std::size_t>(r)];
    auto& row = rows_[r];
    for (int c : cols) row[static_cast<std::size_t>(c - 1)] = 0;

    while (true) {
      bump_node();
      if (aborted()) return;
      if (process(r)) {
        if (r + 1 == rank_) {
          leaf();
        } else {
          dfs(r + 1);
          if (aborted()) return;
        }
      }
      // odometer: rightmost free entry fastest
      int t = static_cast<int>(cols.size()) - 1;
      while (t >= 0) {
        auto& digit = row[static_cast<std::size_t>(cols[static_cast<
            std::size_t>(t)] - 1)];
        if (++digit == p_) {
          digit = 0;
          --t;
        } else {
          break;
        }
      }
      if (t < 0) return;
    }
  }

  // checks for the row-r assignment; false = prune subtree
  bool process(int r) {
    if (!prune_) return true;
    auto& out = pending_[static_cast<std::size_t>(r) + 1];
    out.clear();
    Row w;
    for (const Row& prev : pending_[static_cast<std::size_t>(r)]) {
      w = prev;
      std::uint32_t c = w[static_cast<std::size_t>(L_.pivots[r] - 1)];
      if (c != 0) subtract_row(w, c, r);
      int st = rule(w, r);
      if (st == 2) return false;
      if (st == 1) out.push_back(w);
    }
    if (flavor_ == Flavor::Subalgebra) {
      for (int a = 0; a < r; ++a) {
        pair_bracket(a, r, w);
        int st = settle_fresh(w, r);
        if (st == 2) return false;
        if (st == 1) out.push_back(w);
      }
    } else if (flavor_) {
      for (int j = 1; j <= n_; ++j) {
        ideal_bracket(r, j, w);
        int st = settle_fresh(w, r);
        if (st == 2) return false;
        if (st == 1) out.push_back(w);
      }
    }
    return true;
  }

  void leaf() {
    if (prune_ || !flavor_) {
      if (visitor_ && *visitor_) {
        auto m = matrix_from_rows(n_, L_.mask, p_, rows_[0].data());
        (*visitor_)(m);
      }
      ++count_;
      return;
    }
    auto m = matrix_from_rows(n_, L_.mask, p_, rows_[0].data());
    if (visitor_ && *visitor_) (*visitor_)(m);
    if (is_closed(m, table_, *flavor_)) ++count_;
  }

  const BracketTable& table_;
  const Layout& L_;
  std::optional<Flavor> flavor_;
  bool prune_;
  SharedState& shared_;
  const std::function<void(const EchelonMatrix&)>* visitor_;
  int n_;
  std::uint32_t p_;
  int rank_;
  std::array<Row, kMaxEnumDim> rows_{};
  std::vector<std::vector<Row>> pending_;
  std::uint64_t count_ = 0;
  std::uint64_t local_nodes_ = 0;
};

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ZETA_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

ZetaPoly brute_count(const LieRing& ring, std::uint32_t p, Flavor flavor,
                     const EnumOptions& opts, EnumStats* stats) {
  const int n = ring.dim();
  if (n > kMaxEnumDim)
    throw DomainError("enumeration supports dimension <= " +
                      std::to_string(kMaxEnumDim) + ", got " +
                      std::to_string(n));
  if (flavor == Flavor::GradedIdeal && !ring.grading())
    throw DomainError("graded-ideal flavor needs a graded ring");

  BracketTable table(ring, p);
  const bool graded = flavor == Flavor::GradedIdeal;
  const std::uint32_t npat = 1u << n;

  SharedState shared;
  shared.budget = opts.node_budget;

  int threads = std::min<int>(resolve_threads(opts.threads),
                              static_cast<int>(npat));
  std::atomic<std::uint32_t> next{0};
  std::vector<std::vector<BigInt>> tallies(
      static_cast<std::size_t>(threads),
      std::vector<BigInt>(static_cast<std::size_t>(n) + 1, 0));

  auto work = [&](int tid) {
    for (;;) {
      std::uint32_t mask = next.fetch_add(1, std::memory_order_relaxed);
      if (mask >= npat) return;
      if (shared.aborted.load(std::memory_order_relaxed)) return;
      Layout layout = make_layout(n, mask, ring, graded);
      PatternSearch search(table, layout, flavor, opts.prune, shared, nullptr);
      search.run();
      tallies[static_cast<std::size_t>(tid)]
             [static_cast<std::size_t>(layout.codim)] += search.count();
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  std::uint64_t nodes = shared.nodes.load();
  if (shared.aborted.load())
    throw BudgetExhausted(opts.node_budget, nodes);

  ZetaPoly z;
  z.p = p;
  z.flavor = flavor;
  z.coefficients.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& t : tallies)
    for (int k = 0; k <= n; ++k)
      z.coefficients[static_cast<std::size_t>(k)] +=
          t[static_cast<std::size_t>(k)];
  if (stats) {
    stats->nodes = nodes;
    stats->method = Method::Brute;
  }
  return z;
}

}  // namespace

void for_each_subspace(int n, std::uint32_t p,
                       const std::function<void(const EchelonMatrix&)>& visit) {
  if (n < 1 || n > kMaxEnumDim)
    throw DomainError("for_each_subspace supports 1 <= n <= " +
                      std::to_string(kMaxEnumDim));
  LieRing abelian("abelian", n);
  BracketTable table(abelian, p);
  SharedState shared;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Layout layout = make_layout(n, mask, abelian, false);
    PatternSearch search(table, layout, std::nullopt, false, shared, &visit);
    search.run();
  }
}

ZetaPoly count_zeta(const LieRing& ring, std::uint32_t p, Flavor flavor,
                    Method method, const EnumOptions& opts, EnumStats* stats) {
  Fp field(p);  // validates the prime
  if (method == Method::Class2 ||
      (method == Method::Auto && flavor == Flavor::Ideal)) {
    auto lcs = lower_central_series(ring, p);
    bool class2 = lcs.nilpotent && lcs.nclass == 2;
    if (method == Method::Class2) {
      if (flavor != Flavor::Ideal)
        throw DomainError("class2 method counts ideals only");
      if (!class2)
        throw DomainError("class2 method needs a ring of class exactly 2");
    }
    if (class2 && flavor == Flavor::Ideal) {
      std::uint64_t lambda2 = 0;
      ZetaPoly z = class2_ideal_zeta(ring, p, &lambda2);
      if (stats) {
        stats->nodes = lambda2;
        stats->method = Method::Class2;
      }
      return z;
    }
  }
  return brute_count(ring, p, flavor, opts, stats);
}

}  // namespace fpzeta
