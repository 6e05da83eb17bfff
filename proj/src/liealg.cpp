#include "fpzeta/liealg.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace fpzeta {

LieRing::LieRing(std::string name, int dim) : name_(std::move(name)), n_(dim) {
  if (dim < 1) throw std::invalid_argument("LieRing: dim >= 1 required");
}

void LieRing::add_bracket(int i, int j, std::vector<BracketTerm> terms) {
  if (i < 1 || j < 1 || i > n_ || j > n_)
    throw std::out_of_range("bracket index out of range");
  if (i >= j) throw std::invalid_argument("bracket requires i < j");
  for (const auto& t : terms) {
    if (t.basis < 1 || t.basis > n_)
      throw std::out_of_range("bracket target index out of range");
  }
  auto [it, inserted] = brackets_.emplace(std::make_pair(i, j), terms);
  (void)it;
  if (!inserted)
    throw std::invalid_argument("duplicate bracket (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
}

static const std::vector<BracketTerm> kEmptyBracket;

const std::vector<BracketTerm>& LieRing::bracket(int i, int j) const {
  auto it = brackets_.find({i, j});
  return it == brackets_.end() ? kEmptyBracket : it->second;
}

bool LieRing::has_bracket(int i, int j) const {
  return brackets_.count({i, j}) > 0;
}

void LieRing::set_grading(std::vector<int> layers) {
  int total = 0;
  for (int d : layers) {
    if (d <= 0) throw std::invalid_argument("grading layers must be positive");
    total += d;
  }
  if (total != n_)
    throw std::invalid_argument("grading layers must sum to the dimension");
  grading_ = std::move(layers);
}

int LieRing::layer_of(int i) const {
  if (!grading_) throw std::logic_error("ring has no grading");
  int acc = 0, layer = 0;
  for (int d : *grading_) {
    ++layer;
    acc += d;
    if (i <= acc) return layer;
  }
  throw std::out_of_range("layer_of: index out of range");
}

void LieRing::set_param(const std::string& key, long long value) {
  params_[key] = value;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

long long parse_int(const std::string& tok, int lineno) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(lineno, "expected integer, got '" + tok + "'");
  return value;
}

// "<c>*<k>" with integer c (possibly negative)
BracketTerm parse_term(const std::string& tok, int lineno) {
  auto star = tok.find('*');
  if (star == std::string::npos)
    throw ParseError(lineno, "expected <coeff>*<index>, got '" + tok + "'");
  long long c = parse_int(tok.substr(0, star), lineno);
  long long k = parse_int(tok.substr(star + 1), lineno);
  return BracketTerm{c, static_cast<int>(k)};
}

}  // namespace

LieRing LieRing::parse(std::string_view text, const std::string& default_name) {
  std::string name = default_name;
  std::optional<LieRing> ring;
  std::optional<std::vector<int>> grading;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0];

    if (head == "name") {
      if (tokens.size() != 2) throw ParseError(lineno, "usage: name <ident>");
      name = tokens[1];
      if (ring) throw ParseError(lineno, "name must precede dim");
    } else if (head == "dim") {
      if (ring) throw ParseError(lineno, "duplicate dim line");
      if (tokens.size() != 2) throw ParseError(lineno, "usage: dim <n>");
      long long n = parse_int(tokens[1], lineno);
      if (n < 1) throw ParseError(lineno, "dim >= 1 required");
      ring.emplace(name, static_cast<int>(n));
    } else if (head == "grading") {
      if (!ring) throw ParseError(lineno, "grading before dim");
      if (grading) throw ParseError(lineno, "duplicate grading line");
      std::vector<int> layers;
      for (std::size_t t = 1; t < tokens.size(); ++t)
        layers.push_back(static_cast<int>(parse_int(tokens[t], lineno)));
      if (layers.empty()) throw ParseError(lineno, "grading needs layers");
      try {
        ring->set_grading(layers);
      } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
      }
      grading = layers;
    } else if (head == "bracket") {
      if (!ring) throw ParseError(lineno, "bracket before dim");
      // bracket i j = c1*k1 [+ c2*k2 ...]
      if (tokens.size() < 5 || tokens[3] != "=")
        throw ParseError(lineno, "usage: bracket <i> <j> = <c>*<k> [+ ...]");
      int i = static_cast<int>(parse_int(tokens[1], lineno));
      int j = static_cast<int>(parse_int(tokens[2], lineno));
      std::vector<BracketTerm> terms;
      bool expect_term = true;
      for (std::size_t t = 4; t < tokens.size(); ++t) {
        if (expect_term) {
          terms.push_back(parse_term(tokens[t], lineno));
          expect_term = false;
        } else {
          if (tokens[t] != "+")
            throw ParseError(lineno, "expected '+', got '" + tokens[t] + "'");
          expect_term = true;
        }
      }
      if (expect_term) throw ParseError(lineno, "dangling '+'");
      try {
        ring->add_bracket(i, j, std::move(terms));
      } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
      }
    } else {
      throw ParseError(lineno, "unknown directive '" + head + "'");
    }
  }
  if (!ring) throw ParseError(lineno, "missing dim line");
  return *std::move(ring);
}

// ---------------------------------------------------------------------------

BracketTable::BracketTable(const LieRing& ring, std::uint32_t p)
    : ring_(&ring), n_(ring.dim()), p_(p) {
  Fp field(p);
  table_.resize(static_cast<std::size_t>(n_) * n_);
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      Sparse fw, bw;
      for (const auto& t : ring.bracket(i, j)) {
        std::uint32_t v = field.reduce(t.coeff);
        if (v == 0) continue;
        fw.emplace_back(t.basis, v);
        bw.emplace_back(t.basis, field.neg(v));
      }
      auto by_col = [](const auto& a, const auto& b) {
        return a.first < b.first;
      };
      std::sort(fw.begin(), fw.end(), by_col);
      std::sort(bw.begin(), bw.end(), by_col);
      table_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] = std::move(fw);
      table_[static_cast<std::size_t>(j - 1) * n_ + (i - 1)] = std::move(bw);
    }
  }
}

std::vector<std::uint32_t> BracketTable::apply(
    std::span<const std::uint32_t> v, int j) const {
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n_), 0);
  for (int i = 1; i <= n_; ++i) {
    std::uint32_t c = v[static_cast<std::size_t>(i - 1)];
    if (c == 0) continue;
    for (const auto& [col, val] : bracket(i, j)) {
      auto& slot = out[static_cast<std::size_t>(col - 1)];
      slot = modp::add(slot, modp::mul(c, val, p_), p_);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

ValidationReport validate(const LieRing& ring, std::uint32_t p) {
  const int n = ring.dim();
  BracketTable table(ring, p);
  std::vector<std::uint32_t> unit(static_cast<std::size_t>(n), 0);

  // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0 for i < j < k.
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        std::vector<std::uint32_t> acc(static_cast<std::size_t>(n), 0);
        auto add_term = [&](int a, int b, int c) {
          std::fill(unit.begin(), unit.end(), 0);
          for (const auto& [col, val] : table.bracket(a, b))
            unit[static_cast<std::size_t>(col - 1)] = val;
          auto w = table.apply(unit, c);
          for (int t = 0; t < n; ++t)
            acc[static_cast<std::size_t>(t)] = modp::add(
                acc[static_cast<std::size_t>(t)],
                w[static_cast<std::size_t>(t)], p);
        };
        add_term(i, j, k);
        add_term(j, k, i);
        add_term(k, i, j);
        for (int t = 0; t < n; ++t) {
          if (acc[static_cast<std::size_t>(t)] != 0) {
            ValidationReport r;
            r.ok = false;
            r.i = i;
            r.j = j;
            r.k = k;
            r.message = "Jacobi identity fails at triple (" +
                        std::to_string(i) + "," + std::to_string(j) + "," +
                        std::to_string(k) + ") mod " + std::to_string(p);
            return r;
          }
        }
      }
    }
  }
  return {};
}

std::vector<AdjointMatrix> adjoint_matrices(const LieRing& ring,
                                            std::uint32_t p) {
  const int n = ring.dim();
  BracketTable table(ring, p);
  std::vector<AdjointMatrix> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    AdjointMatrix m;
    m.j = j;
    m.rows.assign(static_cast<std::size_t>(n),
                  std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0));
    for (int i = 1; i <= n; ++i) {
      if (i == j) continue;
      for (const auto& [col, val] : table.bracket(i, j))
        m.rows[static_cast<std::size_t>(i - 1)]
              [static_cast<std::size_t>(col - 1)] = val;
    }
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

// Incremental row-echelon basis over F_p for span computations.
class SpanBasis {
 public:
  explicit SpanBasis(std::uint32_t p) : p_(p) {}

  // Reduce v against the basis; insert the remainder if nonzero. Returns
  // true when the dimension grew.
  bool add(std::vector<std::uint32_t> v) {
    reduce(v);
    int lead = leading(v);
    if (lead < 0) return false;
    std::uint32_t inv = modp::inverse(v[static_cast<std::size_t>(lead)], p_);
    for (auto& x : v) x = modp::mul(x, inv, p_);
    rows_.push_back(std::move(v));
    leads_.push_back(lead);
    return true;
  }

  bool contains(std::vector<std::uint32_t> v) const {
    reduce(v);
    return leading(v) < 0;
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }

 private:
  void reduce(std::vector<std::uint32_t>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::uint32_t c = v[static_cast<std::size_t>(leads_[r])];
      if (c == 0) continue;
      for (std::size_t t = 0; t < v.size(); ++t)
        v[t] = modp::sub(v[t], modp::mul(c, rows_[r][t], p_), p_);
    }
  }
  static int leading(const std::vector<std::uint32_t>& v) {
    for (std::size_t t = 0; t < v.size(); ++t)
      if (v[t] != 0) return static_cast<int>(t);
    return -1;
  }

  std::uint32_t p_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<int> leads_;
};

}  // namespace

LowerCentralSeries lower_central_series(const LieRing& ring, std::uint32_t p) {
  const int n = ring.dim();
  BracketTable table(ring, p);

  LowerCentralSeries out;
  out.dims.push_back(n);

  // gamma_1 = L, spanned by the unit vectors.
  std::vector<std::vector<std::uint32_t>> gamma;
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint32_t> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    gamma.push_back(std::move(e));
  }

  while (true) {
    SpanBasis next(p);
    for (const auto& v : gamma) {
      for (int j = 1; j <= n; ++j) next.add(table.apply(v, j));
    }
    int d = next.rank();
    int prev = out.dims.back();
    out.dims.push_back(d);
    if (d == 0) {
      // dims = [dim gamma_1, ..., dim gamma_c, 0]
      out.nilpotent = true;
      out.nclass = static_cast<int>(out.dims.size()) - 1;
      break;
    }
    if (d == prev) {
      // stable nonzero tail
      out.nilpotent = false;
      break;
    }
    gamma = next.rows();
  }
  return out;
}

}  // namespace fpzeta
