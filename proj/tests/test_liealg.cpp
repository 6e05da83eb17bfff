#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fpzeta/liealg.hpp"

using namespace fpzeta;

TEST_CASE("parse heisenberg") {
  auto ring = LieRing::parse("dim 3\nbracket 1 2 = 1*3\n", "H");
  CHECK(ring.dim() == 3);
  REQUIRE(ring.bracket(1, 2).size() == 1);
  CHECK(ring.bracket(1, 2)[0] == BracketTerm{1, 3});
  CHECK(ring.bracket(1, 3).empty());
}

TEST_CASE("parse abelian and comments") {
  auto ring = LieRing::parse("# a plane\nname plane\ndim 2\n");
  CHECK(ring.dim() == 2);
  CHECK(ring.name() == "plane");
  for (int i = 1; i <= 2; ++i)
    for (int j = i + 1; j <= 2; ++j) CHECK(ring.bracket(i, j).empty());
}

TEST_CASE("parse multi-term and negative coefficients") {
  auto ring = LieRing::parse("dim 4\nbracket 1 2 = 2*3 + -1*4\n");
  REQUIRE(ring.bracket(1, 2).size() == 2);
  CHECK(ring.bracket(1, 2)[0] == BracketTerm{2, 3});
  CHECK(ring.bracket(1, 2)[1] == BracketTerm{-1, 4});
}

TEST_CASE("parse errors carry line numbers") {
  try {
    LieRing::parse("dim 3\nbracket 1 2 =\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(LieRing::parse("dim 3\nbracket 1 2 = 1*9\n"), ParseError);
  CHECK_THROWS_AS(LieRing::parse("dim 3\nbracket 2 1 = 1*3\n"), ParseError);
  CHECK_THROWS_AS(
      LieRing::parse("dim 3\nbracket 1 2 = 1*3\nbracket 1 2 = 1*3\n"),
      ParseError);
  CHECK_THROWS_AS(LieRing::parse("dim 0\n"), ParseError);
  CHECK_THROWS_AS(LieRing::parse("bracket 1 2 = 1*3\n"), ParseError);
  CHECK_THROWS_AS(LieRing::parse(""), ParseError);
  CHECK_THROWS_AS(LieRing::parse("dim 3\ngrading 1 1\n"), ParseError);
}

TEST_CASE("validate catalog rings") {
  CHECK(validate(catalog("heisenberg"), 5).ok);
  CHECK(validate(catalog("M", {{"c", 4}}), 3).ok);
  for (const auto& e : catalog_entries()) {
    std::map<std::string, long long> params;
    if (e.name == "M") params["c"] = 4;
    if (e.name == "f") params = {{"c", 3}, {"d", 3}};
    if (e.name == "grenham") params["n"] = 4;
    if (e.name == "H") params["m"] = 2;
    if (e.name == "tr") params["n"] = 3;
    if (e.name == "vl") params = {{"a", 1}, {"b", 1}};
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
      if (e.name == "vl" && p <= 3) continue;
      auto ring = catalog(e.name, params);
      INFO(ring.name(), " at p=", p);
      CHECK(validate(ring, p).ok);
    }
  }
}

TEST_CASE("validate flags a broken Jacobi identity") {
  // sl2-like data with one structure constant perturbed
  auto ring = LieRing::parse(
      "dim 3\nbracket 1 2 = 1*3\nbracket 1 3 = -2*1\nbracket 2 3 = 3*2\n");
  auto report = validate(ring, 5);
  CHECK_FALSE(report.ok);
  CHECK(report.i == 1);
  CHECK(report.j == 2);
  CHECK(report.k == 3);
}

TEST_CASE("adjoint matrices") {
  SUBCASE("heisenberg C_2") {
    auto ms = adjoint_matrices(catalog("heisenberg"), 5);
    REQUIRE(ms.size() == 3);
    const auto& c2 = ms[1];
    CHECK(c2.j == 2);
    CHECK(c2.rows[0] == std::vector<std::uint32_t>{0, 0, 1});
    CHECK(c2.rows[1] == std::vector<std::uint32_t>{0, 0, 0});
    CHECK(c2.rows[2] == std::vector<std::uint32_t>{0, 0, 0});
  }
  SUBCASE("abelian") {
    auto ms = adjoint_matrices(LieRing("a4", 4), 7);
    for (const auto& m : ms)
      for (const auto& row : m.rows)
        for (auto x : row) CHECK(x == 0);
  }
  SUBCASE("M_3 C_1 carries the antisymmetric signs") {
    auto ms = adjoint_matrices(catalog("M", {{"c", 3}}), 2);
    const auto& c1 = ms[0];
    // [e_2,e_1] = -e_3 = e_3 mod 2, [e_3,e_1] = -e_4 = e_4 mod 2
    CHECK(c1.rows[1] == std::vector<std::uint32_t>{0, 0, 1, 0});
    CHECK(c1.rows[2] == std::vector<std::uint32_t>{0, 0, 0, 1});
    CHECK(c1.rows[3] == std::vector<std::uint32_t>{0, 0, 0, 0});
  }
  SUBCASE("antisymmetry: row i of C_j = minus row j of C_i") {
    for (const char* name : {"heisenberg", "sl2", "g53"}) {
      auto ring = catalog(name);
      for (std::uint32_t p : {2u, 5u}) {
        auto ms = adjoint_matrices(ring, p);
        Fp f(p);
        for (int i = 1; i <= ring.dim(); ++i)
          for (int j = 1; j <= ring.dim(); ++j)
            for (int k = 1; k <= ring.dim(); ++k)
              CHECK(ms[j - 1].rows[i - 1][k - 1] ==
                    f.neg(ms[i - 1].rows[j - 1][k - 1]));
      }
    }
  }
}

TEST_CASE("lower central series") {
  SUBCASE("heisenberg") {
    auto lcs = lower_central_series(catalog("heisenberg"), 3);
    CHECK(lcs.nilpotent);
    CHECK(lcs.nclass == 2);
    CHECK(lcs.dims == std::vector<int>{3, 1, 0});
  }
  SUBCASE("abelian") {
    auto lcs = lower_central_series(LieRing("a5", 5), 7);
    CHECK(lcs.nilpotent);
    CHECK(lcs.nclass == 1);
    CHECK(lcs.dims == std::vector<int>{5, 0});
  }
  SUBCASE("tr_2 is not nilpotent") {
    auto lcs = lower_central_series(catalog("tr", {{"n", 2}}), 5);
    CHECK_FALSE(lcs.nilpotent);
  }
  SUBCASE("sl2 is not nilpotent for p >= 5") {
    CHECK_FALSE(lower_central_series(catalog("sl2"), 5).nilpotent);
  }
  SUBCASE("M_c has class c and dims c+1, c-1, ..., 1, 0") {
    for (long long c = 2; c <= 6; ++c) {
      auto lcs = lower_central_series(catalog("M", {{"c", c}}), 3);
      CHECK(lcs.nilpotent);
      CHECK(lcs.nclass == c);
      std::vector<int> expect{static_cast<int>(c) + 1};
      for (int d = static_cast<int>(c) - 1; d >= 0; --d) expect.push_back(d);
      CHECK(lcs.dims == expect);
    }
  }
}

TEST_CASE("catalog constructions") {
  SUBCASE("f_{3,2}") {
    auto ring = catalog("f", {{"c", 3}, {"d", 2}});
    CHECK(ring.dim() == 5);
    REQUIRE(ring.grading().has_value());
    CHECK(*ring.grading() == std::vector<int>{2, 1, 2});
  }
  SUBCASE("f_{4,2}") {
    auto ring = catalog("f", {{"c", 4}, {"d", 2}});
    CHECK(ring.dim() == 8);
    CHECK(*ring.grading() == std::vector<int>{2, 1, 2, 3});
  }
  SUBCASE("f_{3,3} has the Witt dimensions") {
    auto ring = catalog("f", {{"c", 3}, {"d", 3}});
    CHECK(ring.dim() == 14);
    CHECK(*ring.grading() == std::vector<int>{3, 3, 8});
    auto lcs = lower_central_series(ring, 5);
    CHECK(lcs.dims == std::vector<int>{14, 11, 8, 0});
  }
  SUBCASE("tr_1 is the line") {
    auto ring = catalog("tr", {{"n", 1}});
    CHECK(ring.dim() == 1);
  }
  SUBCASE("grenham dims") {
    CHECK(catalog("grenham", {{"n", 2}}).dim() == 3);
    CHECK(catalog("grenham", {{"n", 4}}).dim() == 7);
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(catalog("M", {{"c", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(catalog("tr", {{"n", 5}}), std::invalid_argument);
    CHECK_THROWS_AS(catalog("f", {{"c", 5}, {"d", 2}}), std::invalid_argument);
    CHECK_THROWS_AS(catalog("grenham", {{"n", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(catalog("nosuch"), std::invalid_argument);
    CHECK_THROWS_AS(catalog("tr"), std::invalid_argument);
  }
  SUBCASE("catalog bases refine the lower central series") {
    // gamma_i spans the last dims[i-1] basis vectors for nilpotent rings
    for (const auto& [name, params] :
         std::vector<std::pair<std::string, std::map<std::string, long long>>>{
             {"heisenberg", {}},
             {"M", {{"c", 5}}},
             {"fil4", {}},
             {"f", {{"c", 4}, {"d", 2}}},
             {"grenham", {{"n", 3}}},
             {"L_E", {}},
             {"L_np8", {}},
             {"vl", {{"a", 1}, {"b", 1}}},
             {"g53", {}},
             {"g64", {}},
             {"H", {{"m", 2}}}}) {
      auto ring = catalog(name, params);
      auto lcs = lower_central_series(ring, 5);
      REQUIRE(lcs.nilpotent);
      // derived subalgebra occupies the tail of the basis: check via the
      // adjoints that [e_i, e_j] is supported on the last dims[1] columns
      int head = ring.dim() - lcs.dims[1];
      for (int i = 1; i <= ring.dim(); ++i)
        for (int j = i + 1; j <= ring.dim(); ++j)
          for (const auto& t : ring.bracket(i, j)) {
            INFO(ring.name());
            CHECK(t.basis > head);
          }
    }
  }
}

TEST_CASE("grading consistency on graded catalog rings") {
  // bracket of layer i and layer j lands in layer i+j
  for (const auto& [name, params] :
       std::vector<std::pair<std::string, std::map<std::string, long long>>>{
           {"heisenberg", {}},
           {"M", {{"c", 5}}},
           {"f", {{"c", 2}, {"d", 4}}},
           {"f", {{"c", 3}, {"d", 2}}},
           {"f", {{"c", 4}, {"d", 2}}},
           {"f", {{"c", 3}, {"d", 3}}},
           {"grenham", {{"n", 4}}},
           {"L_E", {}},
           {"L_np8", {}},
           {"vl", {{"a", 1}, {"b", 0}}},
           {"H", {{"m", 2}}},
           {"g64", {}}}) {
    auto ring = catalog(name, params);
    REQUIRE(ring.grading().has_value());
    int layers = static_cast<int>(ring.grading()->size());
    for (int i = 1; i <= ring.dim(); ++i) {
      for (int j = i + 1; j <= ring.dim(); ++j) {
        int target = ring.layer_of(i) + ring.layer_of(j);
        for (const auto& t : ring.bracket(i, j)) {
          INFO(ring.name(), " [", i, ",", j, "]");
          REQUIRE(target <= layers);
          CHECK(ring.layer_of(t.basis) == target);
        }
      }
    }
  }
  // fil4 and g53 are deliberately ungraded: their LCS layers do not grade
  CHECK_FALSE(catalog("fil4").grading().has_value());
  CHECK_FALSE(catalog("g53").grading().has_value());
}
