#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "isosplit/cli.hpp"

using namespace isosplit;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "isosplit");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("catalog by family") {
  const auto r = run({"catalog", "--family", "E8"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  std::set<std::string> labels;
  for (const auto& rec : j["records"]) labels.insert(rec["human_label"].get<std::string>());
  for (const char* l : {"E8/A1E7", "E8/A2E6", "E8/A4A4"}) CHECK_MESSAGE(labels.count(l) == 1, l);
}

TEST_CASE("simple K cases are reported without splitting") {
  const auto r = run({"catalog", "--class", "nearly-kaehler", "--simple-k", "--format", "text"});
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "G2/A2"));
  CHECK(contains(r.out, "E8/A8"));
  CHECK(contains(r.out, "no splitting"));
}

TEST_CASE("empty selection succeeds") {
  const auto r = run({"catalog", "--family", "A", "--rank", "0"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["records"].empty());
}

TEST_CASE("invalid input") {
  CHECK(run({"catalog", "--family", "Q"}).code == cli::kExitUsage);
  CHECK(run({"catalog", "--rank-cap", "0"}).code == cli::kExitUsage);
  CHECK(run({"catalog", "--class", "kaehler"}).code == cli::kExitUsage);
  CHECK(run({"catalog", "--format", "xml"}).code == cli::kExitUsage);
  CHECK(run({"verify", "no-such-case"}).code == cli::kExitUsage);
}

TEST_CASE("CSV and text outputs") {
  const auto csv = run({"catalog", "--family", "G", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("record_id,case_id,", 0) == 0);
  CHECK(contains(csv.out, "g2-a1a1--k1-a1"));
  const auto text = run({"catalog", "--family", "G", "--format", "text"});
  CHECK(contains(text.out, "G2/A1A1"));
}

TEST_CASE("golden comparison") {
  const auto ok = run({"catalog", "--golden"});
  CHECK(ok.code == 0);

  auto golden = nlohmann::json::parse(std::ifstream(cli::default_golden_path()));
  golden["sections"]["hermitian"]["split"].push_back({"A9/A9T1", {"A9"}, {"T1"}});
  const auto path = std::filesystem::temp_directory_path() / "isosplit_corrupt_golden.json";
  std::ofstream(path) << golden.dump();
  const auto bad = run({"catalog", "--golden", "--golden-file", path.string(), "--format", "text"});
  CHECK(bad.code == cli::kExitCheckFailed);
  CHECK(contains(bad.out, "missing: A9/A9T1"));
  const auto self = run({"selfcheck", "--rank-cap", "2", "--golden-file", path.string()});
  CHECK(self.code == cli::kExitCheckFailed);
  std::filesystem::remove(path);
}

TEST_CASE("verify runs on the concrete models") {
  const auto su3 = run({"verify", "su3-hopf", "--seed", "42"});
  CHECK(su3.code == 0);
  const auto j = nlohmann::json::parse(su3.out);
  CHECK(j["seed"] == 42);
  CHECK(j["tolerances"]["constancy"] == 1e-4);
  CHECK(j["ok"] == true);

  const auto so6 = run({"verify", "so6-stiefel", "--seed", "42", "--format", "text"});
  CHECK(so6.code == 0);
  CHECK_FALSE(contains(so6.out, "FAIL"));
}

TEST_CASE("catalog-only cases have no concrete model") {
  const auto r = run({"verify", "e8-a4a4"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(contains(r.err, "no concrete model"));
}

TEST_CASE("output is reproducible") {
  const std::vector<std::string> args{"verify", "su3-hopf", "--samples", "30", "--seed", "7"};
  const auto a = run(args), b = run(args);
  CHECK(a.out == b.out);
  CHECK(run({"catalog", "--format", "csv"}).out == run({"catalog", "--format", "csv"}).out);
}

TEST_CASE("selfcheck subset") {
  const auto r = run({"selfcheck", "--rank-cap", "2", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "PASS"));
  CHECK_FALSE(contains(r.out, "FAIL"));
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "isosplit_out.json";
  const auto r = run({"catalog", "--family", "G", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(nlohmann::json::parse(std::ifstream(path))["records"].size() == 2);
  std::filesystem::remove(path);
}
