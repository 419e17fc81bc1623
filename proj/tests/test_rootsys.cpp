#include <doctest.h>

#include <map>
#include <set>

#include "isosplit/error.hpp"
#include "isosplit/rootsys.hpp"

using namespace isosplit;
using namespace isosplit::rootsys;

namespace {

// Root count from reflection closure on integer coordinates in the simple
// root basis, driven only by the Cartan matrix.
std::size_t closure_count(const std::vector<std::vector<int>>& cartan) {
  const std::size_t n = cartan.size();
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    auto v = frontier.back();
    frontier.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      // <v, a_j^vee> = sum_i v_i cartan[i][j]
      int pairing = 0;
      for (std::size_t i = 0; i < n; ++i) pairing += v[i] * cartan[i][j];
      auto w = v;
      w[j] -= pairing;
      if (roots.insert(w).second) frontier.push_back(w);
    }
  }
  return roots.size();
}

}  // namespace

TEST_CASE("root counts match reflection closure of the Cartan matrix") {
  for (const char* name : {"A1", "A3", "B2", "B4", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2"}) {
    const auto rs = build_root_system(SimpleType::parse(name));
    CHECK_MESSAGE(rs.roots().size() == closure_count(rs.cartan()), name);
  }
}

TEST_CASE("root counts against rank times Coxeter number") {
  const std::map<std::string, std::size_t> expected{{"A4", 20}, {"B3", 18}, {"C4", 32}, {"D5", 40},
                                                   {"E6", 72}, {"E8", 240}, {"F4", 48}, {"G2", 12}};
  for (const auto& [name, count] : expected)
    CHECK_MESSAGE(build_root_system(SimpleType::parse(name)).roots().size() == count, name);
}

TEST_CASE("G2 has one short and one long simple root") {
  const auto rs = build_root_system(SimpleType::parse("G2"));
  CHECK(rs.inner(rs.simple_roots()[1], rs.simple_roots()[1]) == 3 * rs.inner(rs.simple_roots()[0], rs.simple_roots()[0]));
  CHECK(rs.cartan()[0][1] * rs.cartan()[1][0] == 3);
}

TEST_CASE("highest roots") {
  CHECK(highest_root(build_root_system(SimpleType::parse("G2"))).coefficients == std::vector<int>{3, 2});
  CHECK(highest_root(build_root_system(SimpleType::parse("E8"))).coefficients ==
        std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(highest_root(build_root_system(SimpleType::parse("F4"))).coefficients == std::vector<int>{2, 3, 4, 2});
  CHECK(highest_root(build_root_system(SimpleType::parse("A5"))).coefficients == std::vector<int>(5, 1));
}

TEST_CASE("Weyl group orders by BFS") {
  CHECK(weyl_order_bfs(build_root_system(SimpleType::parse("A2"))) == 6);
  CHECK(weyl_order_bfs(build_root_system(SimpleType::parse("B2"))) == 8);
  CHECK(weyl_order_bfs(build_root_system(SimpleType::parse("G2"))) == 12);
  CHECK(weyl_order_bfs(build_root_system(SimpleType::parse("D4"))) == 192);
  CHECK(weyl_order_bfs(build_root_system(SimpleType::parse("F4"))) == 1152);
}

TEST_CASE("Weyl group orders from Coxeter exponents") {
  CHECK(coxeter_exponents(build_root_system(SimpleType::parse("A3"))) == std::vector<int>{1, 2, 3});
  CHECK(coxeter_exponents(build_root_system(SimpleType::parse("E6"))) == std::vector<int>{1, 4, 5, 7, 8, 11});
  CHECK(weyl_order(build_root_system(SimpleType::parse("E6"))) == 51840);
  CHECK(weyl_order(build_root_system(SimpleType::parse("E7"))) == 2903040);
  CHECK(weyl_order(build_root_system(SimpleType::parse("E8"))) == BigInt("696729600"));
  CHECK(weyl_order(build_root_system(SimpleType::parse("B3"))) == 48);
}

TEST_CASE("Weyl orbits span for irreducible systems and not for A1 x A1") {
  const auto a2 = build_root_system(SimpleType::parse("A2"));
  CHECK(weyl_orbit_spans_in_simple_basis(a2, {Rational(1), Rational(0)}));
  const auto harness = reducible_harness_a1a1();
  CHECK_FALSE(weyl_orbit_spans_in_simple_basis(harness, {Rational(1), Rational(0)}));
  CHECK(weyl_orbit_spans_in_simple_basis(harness, {Rational(1), Rational(1)}));
  CHECK_THROWS_AS(weyl_orbit_spans_in_simple_basis(a2, {Rational(0), Rational(0)}), Error);
}

TEST_CASE("orbit grid values") {
  const auto values = orbit_grid_values();
  CHECK(values.size() == 13);
  CHECK(std::set<Rational>(values.begin(), values.end()).size() == 13);
}

TEST_CASE("type parsing and validation") {
  CHECK(SimpleType::parse("e8").name() == "E8");
  for (const char* bad : {"A0", "B1", "C2", "D3", "E5", "E9", "F3", "G3", "X2", "", "A"})
    CHECK_THROWS_AS(SimpleType::parse(bad), Error);
}

TEST_CASE("vectors outside the root span have no simple coefficients") {
  const auto a2 = build_root_system(SimpleType::parse("A2"));
  CHECK_FALSE(a2.simple_coefficients({Rational(1), Rational(1), Rational(1)}).has_value());
  const auto c = a2.simple_coefficients({Rational(1), Rational(0), Rational(-1)});
  REQUIRE(c.has_value());
  CHECK(*c == RVector{Rational(1), Rational(1)});
}
