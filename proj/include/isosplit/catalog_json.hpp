#pragma once

// JSON/CSV projections of catalog data and the golden-list comparison.
//
// Record schema (keys in this order):
//   record_id, case_id, human_label, source ("borel-de-siebenthal" or
//   "odd-grassmannian"), ambient, psi0, n0, base_class, quaternion_kaehler,
//   k1, k2, equal_rank, euler_characteristic, isometry_component_counts,
//   out_proxy_exception, swap_partner, odd_grassmannian
// Components are {type, token, length, vertices}; the circle has type "T1".
// euler_characteristic is an integer, or the string "zero" off equal rank.
// psi0, n0, quaternion_kaehler and odd_grassmannian are null when absent.

#include <string>
#include <vector>

#include <json.hpp>

#include "isosplit/dynkin.hpp"

namespace isosplit::dynkin {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Component& c);
Json to_json(const FibrationRecord& r);
/// Case summary; `splits` is false for a simple K without circle factor.
Json to_json(const BdSCase& c);

std::vector<std::string> csv_header();
std::vector<std::string> csv_row(const FibrationRecord& r);
std::string csv_escape(const std::string& field);

/// "E8/A4A4 | A4 | A4": label, then the sorted K1 and K2 tokens.
std::string golden_key(const std::string& label, std::vector<std::string> k1, std::vector<std::string> k2);

struct GoldenSectionDiff {
  std::string section;
  std::size_t expected = 0;
  std::size_t produced = 0;
  std::vector<std::string> missing;     // in the golden list, not produced
  std::vector<std::string> unexpected;  // produced, not in the golden list
  bool ok() const { return missing.empty() && unexpected.empty(); }
};

struct GoldenReport {
  int rank_cap = 8;
  int odd_grassmannian_cap = 8;
  std::vector<GoldenSectionDiff> sections;
  bool ok() const;
};

/// Compares catalog output at the golden file's caps against its lists,
/// section by section, as multisets. Throws InvalidArgument on a malformed
/// golden document.
GoldenReport compare_golden(const nlohmann::json& golden);

Json to_json(const GoldenReport& report);

}  // namespace isosplit::dynkin
