#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "isosplit/dynkin.hpp"
#include "isosplit/error.hpp"

using namespace isosplit;
using namespace isosplit::dynkin;
using rootsys::SimpleType;

namespace {

DynkinDiagram diagram(const char* name) { return dynkin_diagram(rootsys::build_root_system(SimpleType::parse(name))); }
DynkinDiagram extended(const char* name) {
  return extended_diagram(rootsys::build_root_system(SimpleType::parse(name)));
}

std::set<std::string> labels(const std::vector<BdSCase>& cases) {
  std::set<std::string> out;
  for (const auto& c : cases) out.insert(c.label());
  return out;
}

const FibrationRecord& find_record(const std::vector<FibrationRecord>& all, const std::string& id) {
  auto it = std::find_if(all.begin(), all.end(), [&](const auto& r) { return r.record_id == id; });
  REQUIRE_MESSAGE(it != all.end(), id);
  return *it;
}

}  // namespace

TEST_CASE("diagram automorphism orders") {
  CHECK(diagram_automorphisms(diagram("A1")).order == 1);
  CHECK(diagram_automorphisms(diagram("A4")).order == 2);
  CHECK(diagram_automorphisms(diagram("D4")).order == 6);
  CHECK(diagram_automorphisms(diagram("D5")).order == 2);
  CHECK(diagram_automorphisms(diagram("E6")).order == 2);
  CHECK(diagram_automorphisms(diagram("E7")).order == 1);
  CHECK(diagram_automorphisms(diagram("G2")).order == 1);
  CHECK(diagram_automorphisms(diagram("B3")).order == 1);
  // Extended diagrams: dihedral for A_n, S4 for D4, S3 for E6.
  CHECK(diagram_automorphisms(extended("A3")).order == 8);
  CHECK(diagram_automorphisms(extended("A5")).order == 12);
  CHECK(diagram_automorphisms(extended("D4")).order == 24);
  CHECK(diagram_automorphisms(extended("E6")).order == 6);
  CHECK(diagram_automorphisms(extended("E8")).order == 1);
}

TEST_CASE("component recognition") {
  const auto d = extended("E8");
  auto keep = std::vector<int>(9);
  std::iota(keep.begin(), keep.end(), 0);
  keep.erase(keep.begin() + 4);  // a5 has coefficient 5
  const auto comps = classify_components(d.induced(keep));
  REQUIRE(comps.size() == 2);
  CHECK(join_names(comps) == "A4A4");

  const auto b3 = classify_components(diagram("B3"));
  REQUIRE(b3.size() == 1);
  CHECK(b3[0].name() == "B3");
}

TEST_CASE("Borel-de Siebenthal cases of the exceptional types") {
  // Coefficients 2, 3, 4, 6, 5, 4, 3, 2: the roots with coefficient 4 or 6
  // give no case.
  CHECK(labels(bds_enumerate(SimpleType::parse("E8"))) ==
        std::set<std::string>{"E8/A1E7", "E8/A2E6", "E8/A4A4", "E8/A8", "E8/D8"});
  const auto g2 = labels(bds_enumerate(SimpleType::parse("G2")));
  CHECK(g2 == std::set<std::string>{"G2/A1A1", "G2/A2"});
  const auto f4 = labels(bds_enumerate(SimpleType::parse("F4")));
  CHECK(f4 == std::set<std::string>{"F4/A1C3", "F4/A2A2", "F4/B4"});
}

TEST_CASE("deletion of a coefficient-one root adds a circle") {
  for (const auto& c : bds_enumerate(SimpleType::parse("E6")))
    if (c.n0 == 1) CHECK(c.has_circle_factor);
}

TEST_CASE("Euler characteristic is |W_G| / (|W_K1| |W_K2|)") {
  const auto all = catalog({});
  // SU(3)/S(U(1)U(2)) = CP^2, and G2/SO(4) with |W| = 12 / 4.
  CHECK(*find_record(all, "a2-a1t1--k1-a1").euler_characteristic == 3);
  CHECK(*find_record(all, "g2-a1a1--k1-a1.1").euler_characteristic == 3);
  for (const auto& r : all) {
    if (!r.equal_rank) {
      CHECK_FALSE(r.euler_characteristic.has_value());
      continue;
    }
    REQUIRE(r.euler_characteristic.has_value());
    CHECK(*r.euler_characteristic > 0);
  }
}

TEST_CASE("record ids are unique and swap partners pair up") {
  const auto all = catalog({});
  std::map<std::string, const FibrationRecord*> by_id;
  for (const auto& r : all) CHECK_MESSAGE(by_id.emplace(r.record_id, &r).second, r.record_id);
  for (const auto& r : all) {
    auto it = by_id.find(r.swap_partner);
    REQUIRE_MESSAGE(it != by_id.end(), r.record_id);
    CHECK(it->second->swap_partner == r.record_id);
    CHECK(it->second->case_id == r.case_id);
  }
}

TEST_CASE("odd Grassmannian records") {
  const auto r = odd_grassmannian_record(1, 1);
  CHECK(r.human_label == "A3/A1A1");
  CHECK(r.record_id == "a3-a1a1--k1-a1");
  CHECK_FALSE(r.equal_rank);
  CHECK(r.out_proxy_exception);
  const auto r2 = odd_grassmannian_record(2, 3);
  CHECK(r2.human_label == "D6/B2B3");
  CHECK(r2.swap_partner == "d6-b2b3--k1-b3");
  CHECK_THROWS_AS(odd_grassmannian_record(0, 2), Error);
}

TEST_CASE("filters") {
  CatalogFilter f;
  f.families = {rootsys::Family::A};
  f.rank = 0;
  CHECK(catalog(f).empty());

  CatalogFilter nk;
  nk.base_class = BaseClass::NearlyKaehler;
  nk.simple_k_only = true;
  CHECK(catalog(nk).empty());
  CHECK(labels(catalog_cases(nk)) == std::set<std::string>{"E8/A8", "G2/A2"});

  CatalogFilter g;
  g.types = {SimpleType::parse("G2")};
  const auto a = catalog(g), b = catalog(g);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].record_id == b[i].record_id);
}

TEST_CASE("slugs") {
  CHECK(slug("E8/A4A4") == "e8-a4a4");
  CHECK(slug("SO(6)/SO(3)") == "so6-so3");
}
