#include <functional>

#include "fpzeta/liealg.hpp"

namespace fpzeta {

namespace {

long long need_param(const std::map<std::string, long long>& params,
                     const std::string& key, const std::string& ring) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("catalog ring '" + ring +
                                "' needs parameter " + key);
  return it->second;
}

LieRing make_heisenberg() {
  LieRing r("heisenberg", 3);
  r.add_bracket(1, 2, {{1, 3}});
  r.set_grading({2, 1});
  return r;
}

// M_c = <x_0..x_c | [x_0,x_i] = x_{i+1}>, basis e_1 = x_0, e_{i+1} = x_i.
LieRing make_mc(long long c) {
  if (c < 2) throw std::invalid_argument("M_c needs c >= 2");
  LieRing r("M_" + std::to_string(c), static_cast<int>(c) + 1);
  for (int j = 2; j <= c; ++j) r.add_bracket(1, j, {{1, j + 1}});
  std::vector<int> layers{2};
  layers.insert(layers.end(), static_cast<std::size_t>(c - 1), 1);
  r.set_grading(layers);
  r.set_param("c", c);
  return r;
}

LieRing make_fil4() {
  LieRing r("fil4", 5);
  r.add_bracket(1, 2, {{1, 3}});
  r.add_bracket(1, 3, {{1, 4}});
  r.add_bracket(1, 4, {{1, 5}});
  r.add_bracket(2, 3, {{1, 5}});
  // [x2,x3] jumps two lower-central layers, so the LCS layers do not grade
  // this ring; no grading attached.
  return r;
}

// Free class-2 ring on d generators: y_{ij} = [x_i,x_j] for i < j, lex order.
LieRing make_f2d(long long d) {
  if (d < 2) throw std::invalid_argument("f_{2,d} needs d >= 2");
  const int dd = static_cast<int>(d);
  const int d2 = dd * (dd - 1) / 2;
  LieRing r("f_2_" + std::to_string(d), dd + d2);
  int next = dd + 1;
  for (int i = 1; i <= dd; ++i)
    for (int j = i + 1; j <= dd; ++j) r.add_bracket(i, j, {{1, next++}});
  r.set_grading({dd, d2});
  r.set_param("c", 2);
  r.set_param("d", d);
  return r;
}

// Hall bases for the free nilpotent rings the catalog supports, left-normed
// basic commutators in degree-then-lexicographic order.
LieRing make_f32() {
  // x1, x2, [x1,x2], [[x1,x2],x1], [[x1,x2],x2]
  LieRing r("f_3_2", 5);
  r.add_bracket(1, 2, {{1, 3}});
  r.add_bracket(1, 3, {{-1, 4}});  // [e3,e1] = e4
  r.add_bracket(2, 3, {{-1, 5}});  // [e3,e2] = e5
  r.set_grading({2, 1, 2});
  r.set_param("c", 3);
  r.set_param("d", 2);
  return r;
}

LieRing make_f42() {
  // append [[x1,x2],x1,x1], [[x1,x2],x1,x2], [[x1,x2],x2,x2];
  // [[x1,x2],x2,x1] = [[x1,x2],x1,x2] by Jacobi.
  LieRing r("f_4_2", 8);
  r.add_bracket(1, 2, {{1, 3}});
  r.add_bracket(1, 3, {{-1, 4}});
  r.add_bracket(2, 3, {{-1, 5}});
  r.add_bracket(1, 4, {{-1, 6}});  // [e4,e1] = e6
  r.add_bracket(2, 4, {{-1, 7}});  // [e4,e2] = e7
  r.add_bracket(1, 5, {{-1, 7}});  // [e5,e1] = e7
  r.add_bracket(2, 5, {{-1, 8}});  // [e5,e2] = e8
  r.set_grading({2, 1, 2, 3});
  r.set_param("c", 4);
  r.set_param("d", 2);
  return r;
}

LieRing make_f33() {
  // x1,x2,x3; [x1,x2],[x1,x3],[x2,x3]; weight 3 drops [[x2,x3],x1] via
  // [[x2,x3],x1] = [[x1,x3],x2] - [[x1,x2],x3].
  LieRing r("f_3_3", 14);
  r.add_bracket(1, 2, {{1, 4}});
  r.add_bracket(1, 3, {{1, 5}});
  r.add_bracket(2, 3, {{1, 6}});
  // e7..e9: [[x1,x2],x*], e10..e12: [[x1,x3],x*], e13..e14: [[x2,x3],x2/x3]
  r.add_bracket(1, 4, {{-1, 7}});
  r.add_bracket(2, 4, {{-1, 8}});
  r.add_bracket(3, 4, {{-1, 9}});
  r.add_bracket(1, 5, {{-1, 10}});
  r.add_bracket(2, 5, {{-1, 11}});
  r.add_bracket(3, 5, {{-1, 12}});
  r.add_bracket(1, 6, {{1, 9}, {-1, 11}});  // [e6,e1] = e11 - e9
  r.add_bracket(2, 6, {{-1, 13}});
  r.add_bracket(3, 6, {{-1, 14}});
  r.set_grading({3, 3, 8});
  r.set_param("c", 3);
  r.set_param("d", 3);
  return r;
}

LieRing make_f(long long c, long long d) {
  if (c == 2) return make_f2d(d);
  if (c == 3 && d == 2) return make_f32();
  if (c == 4 && d == 2) return make_f42();
  if (c == 3 && d == 3) return make_f33();
  throw std::invalid_argument(
      "f_{c,d} supports (2,d>=2), (3,2), (4,2), (3,3)");
}

// G_n = <w, x_1..x_{n-1}, y_1..y_{n-1} | [w,x_i] = y_i>, dim 2n-1.
LieRing make_grenham(long long n) {
  if (n < 2) throw std::invalid_argument("grenham needs n >= 2");
  const int nn = static_cast<int>(n);
  LieRing r("grenham_" + std::to_string(n), 2 * nn - 1);
  for (int i = 1; i <= nn - 1; ++i) r.add_bracket(1, 1 + i, {{1, nn + i}});
  r.set_grading({nn, nn - 1});
  r.set_param("n", n);
  return r;
}

LieRing make_le() {
  LieRing r("L_E", 9);
  r.add_bracket(1, 5, {{1, 7}});
  r.add_bracket(2, 4, {{1, 7}});
  r.add_bracket(3, 6, {{1, 7}});
  r.add_bracket(1, 6, {{1, 8}});
  r.add_bracket(3, 4, {{1, 8}});
  r.add_bracket(1, 4, {{1, 9}});
  r.add_bracket(2, 5, {{1, 9}});
  r.set_grading({6, 3});
  return r;
}

LieRing make_lnp8() {
  LieRing r("L_np8", 8);
  r.add_bracket(1, 4, {{1, 6}});
  r.add_bracket(2, 5, {{1, 6}});
  r.add_bracket(1, 5, {{1, 7}});
  r.add_bracket(3, 4, {{2, 7}});
  r.add_bracket(2, 4, {{1, 8}});
  r.add_bracket(3, 5, {{1, 8}});
  r.set_grading({5, 3});
  return r;
}

// L_(p,a,b): class-3 on x1,x2,x3 with class-2 quotient f_{2,3} and
// [[x1,x2],x1] = [[x1,x3],x3] = z, [[x2,x3],x2] = bz, [[x2,x3],x3] = az.
LieRing make_vl(long long a, long long b) {
  LieRing r("vl", 7);
  r.add_bracket(1, 2, {{1, 4}});
  r.add_bracket(1, 3, {{1, 5}});
  r.add_bracket(2, 3, {{1, 6}});
  r.add_bracket(1, 4, {{-1, 7}});       // [y1,x1] = z
  r.add_bracket(3, 5, {{-1, 7}});       // [y2,x3] = z
  if (b != 0) r.add_bracket(2, 6, {{-b, 7}});  // [y3,x2] = bz
  if (a != 0) r.add_bracket(3, 6, {{-a, 7}});  // [y3,x3] = az
  r.set_grading({3, 3, 1});
  r.set_param("a", a);
  r.set_param("b", b);
  return r;
}

LieRing make_sl2() {
  // basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f
  LieRing r("sl2", 3);
  r.add_bracket(1, 2, {{1, 3}});
  r.add_bracket(1, 3, {{-2, 1}});
  r.add_bracket(2, 3, {{2, 2}});
  return r;
}

// Central product of m Heisenbergs: [x_i, y_i] = w, basis x.., y.., w.
LieRing make_hm(long long m) {
  if (m < 1) throw std::invalid_argument("H_m needs m >= 1");
  const int mm = static_cast<int>(m);
  LieRing r("H_" + std::to_string(m), 2 * mm + 1);
  for (int i = 1; i <= mm; ++i) r.add_bracket(i, mm + i, {{1, 2 * mm + 1}});
  r.set_grading({2 * mm, 1});
  r.set_param("m", m);
  return r;
}

LieRing make_g53() {
  LieRing r("g53", 5);
  r.add_bracket(1, 2, {{1, 4}});
  r.add_bracket(1, 4, {{1, 5}});
  r.add_bracket(2, 3, {{1, 5}});
  // [x2,x3] lands two layers down; LCS layers do not grade this ring.
  return r;
}

LieRing make_g64() {
  LieRing r("g64", 6);
  r.add_bracket(1, 2, {{1, 5}});
  r.add_bracket(1, 3, {{1, 6}});
  r.add_bracket(2, 4, {{1, 6}});
  r.set_grading({4, 2});
  return r;
}

// Upper-triangular n x n matrices, basis E_ij (i <= j) ordered by diagonal
// first, then superdiagonals: (1,1)..(n,n), (1,2),(2,3),.., (1,3),.., (1,n).
LieRing make_trn(long long n) {
  if (n < 1 || n > 4) throw std::invalid_argument("tr_n supports 1 <= n <= 4");
  const int nn = static_cast<int>(n);
  std::vector<std::pair<int, int>> basis;
  for (int i = 1; i <= nn; ++i) basis.emplace_back(i, i);
  for (int off = 1; off < nn; ++off)
    for (int i = 1; i + off <= nn; ++i) basis.emplace_back(i, i + off);
  auto index_of = [&](int i, int j) {
    for (std::size_t t = 0; t < basis.size(); ++t)
      if (basis[t] == std::make_pair(i, j)) return static_cast<int>(t) + 1;
    return 0;
  };

  LieRing r("tr_" + std::to_string(n), nn * (nn + 1) / 2);
  for (std::size_t s = 0; s < basis.size(); ++s) {
    for (std::size_t t = s + 1; t < basis.size(); ++t) {
      auto [a, b] = basis[s];
      auto [c, d] = basis[t];
      // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
      std::vector<BracketTerm> terms;
      if (b == c) terms.push_back({1, index_of(a, d)});
      if (d == a) terms.push_back({-1, index_of(c, b)});
      if (!terms.empty())
        r.add_bracket(static_cast<int>(s) + 1, static_cast<int>(t) + 1,
                      std::move(terms));
    }
  }
  r.set_param("n", n);
  return r;
}

}  // namespace

LieRing catalog(const std::string& name,
                const std::map<std::string, long long>& params) {
  if (name == "heisenberg") return make_heisenberg();
  if (name == "M") return make_mc(need_param(params, "c", name));
  if (name == "fil4") return make_fil4();
  if (name == "f")
    return make_f(need_param(params, "c", name), need_param(params, "d", name));
  if (name == "grenham") return make_grenham(need_param(params, "n", name));
  if (name == "L_E") return make_le();
  if (name == "L_np8") return make_lnp8();
  if (name == "vl")
    return make_vl(need_param(params, "a", name), need_param(params, "b", name));
  if (name == "sl2") return make_sl2();
  if (name == "H") return make_hm(need_param(params, "m", name));
  if (name == "g53") return make_g53();
  if (name == "g64") return make_g64();
  if (name == "tr") return make_trn(need_param(params, "n", name));
  throw std::invalid_argument("unknown catalog ring '" + name + "'");
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"heisenberg", "", "3", true, "Heisenberg ring, [x1,x2]=x3"},
      {"M", "c>=2", "c+1", true, "maximal class-c ring, [x0,xi]=x{i+1}"},
      {"fil4", "", "5", false, "filiform class-4 ring"},
      {"f", "(c,d) in {(2,d>=2),(3,2),(4,2),(3,3)}", "varies", true,
       "free nilpotent ring of class c on d generators (Hall basis)"},
      {"grenham", "n>=2", "2n-1", true, "Grenham ring, [w,xi]=yi"},
      {"L_E", "", "9", true, "elliptic-curve ring (y^2 z = x^3 - x z^2)"},
      {"L_np8", "", "8", true, "non-PORC ring tied to x^3 = 2"},
      {"vl", "a,b integers", "7", true,
       "Vaughan-Lee class-3 family L_(p,a,b)"},
      {"sl2", "", "3", false, "sl_2, [h,e]=2e, [h,f]=-2f, [e,f]=h"},
      {"H", "m>=1", "2m+1", true, "central product of m Heisenberg rings"},
      {"g53", "", "5", false, "class-3 ring g_{5,3}"},
      {"g64", "", "6", true, "class-2 ring g_{6,4}"},
      {"tr", "1<=n<=4", "n(n+1)/2", false, "upper-triangular n x n matrices"},
  };
  return entries;
}

}  // namespace fpzeta
