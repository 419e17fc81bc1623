#include <doctest.h>

#include <fstream>

#include "isosplit/catalog_json.hpp"
#include "isosplit/error.hpp"

using namespace isosplit;
using namespace isosplit::dynkin;

namespace {

nlohmann::json golden() {
  std::ifstream in(std::string(ISOSPLIT_TEST_DATA) + "/catalog_golden.json");
  REQUIRE(in);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("the catalog reproduces the golden lists") {
  const auto report = compare_golden(golden());
  CHECK(report.ok());
  for (const auto& s : report.sections) {
    CHECK_MESSAGE(s.missing.empty(), s.section);
    CHECK_MESSAGE(s.unexpected.empty(), s.section);
  }
}

TEST_CASE("a dropped golden entry shows up as a diff") {
  auto g = golden();
  auto& split = g["sections"]["nearly-kaehler"]["split"];
  const auto dropped = split[0];
  split.erase(0);
  const auto report = compare_golden(g);
  CHECK_FALSE(report.ok());
  bool seen = false;
  for (const auto& s : report.sections)
    if (s.section == "nearly-kaehler") {
      REQUIRE(s.unexpected.size() == 1);
      seen = s.unexpected[0].rfind(dropped[0].get<std::string>(), 0) == 0;
    }
  CHECK(seen);
}

TEST_CASE("malformed golden documents are rejected") {
  CHECK_THROWS_AS(compare_golden(nlohmann::json::object()), Error);
  auto g = golden();
  g["sections"]["symmetric"]["split"].push_back("not a triple");
  CHECK_THROWS_AS(compare_golden(g), Error);
}

TEST_CASE("record JSON has the documented key order") {
  const auto j = to_json(odd_grassmannian_record(1, 2));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"record_id", "case_id", "human_label", "source", "ambient", "psi0", "n0",
                                         "base_class", "quaternion_kaehler", "k1", "k2", "equal_rank",
                                         "euler_characteristic", "isometry_component_counts",
                                         "out_proxy_exception", "swap_partner", "odd_grassmannian"});
  CHECK(j["euler_characteristic"] == "zero");
  CHECK(j["psi0"].is_null());
}

TEST_CASE("CSV rows match the header") {
  CatalogFilter f;
  f.types = {rootsys::SimpleType::parse("F4")};
  for (const auto& r : catalog(f)) CHECK(csv_row(r).size() == csv_header().size());
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"x\"") == "\"say \"\"x\"\"\"");
}

TEST_CASE("golden keys sort the factor tokens") {
  CHECK(golden_key("E6/A1A5", {"A5", "A1"}, {}) == "E6/A1A5 | A1 A5 | ");
}
