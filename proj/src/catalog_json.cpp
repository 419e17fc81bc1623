#include "isosplit/catalog_json.hpp"

#include <algorithm>
#include <map>

#include "isosplit/error.hpp"

namespace isosplit::dynkin {

namespace {

Json components_json(const std::vector<Component>& comps) {
  Json out = Json::array();
  for (const auto& c : comps) out.push_back(to_json(c));
  return out;
}

std::vector<std::string> tokens(const std::vector<Component>& comps) {
  std::vector<std::string> out;
  for (const auto& c : comps) out.push_back(c.token());
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

const char* const kSections[] = {"hermitian", "symmetric", "nearly-kaehler", "5-symmetric", "odd-grassmannian"};

std::vector<std::string> multiset_minus(std::vector<std::string> a, const std::vector<std::string>& b) {
  std::map<std::string, int> count;
  for (const auto& x : b) ++count[x];
  std::vector<std::string> out;
  for (auto& x : a) {
    auto it = count.find(x);
    if (it != count.end() && it->second > 0)
      --it->second;
    else
      out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Json to_json(const Component& c) {
  Json j;
  j["type"] = c.name();
  j["token"] = c.token();
  j["length"] = to_string(c.length);
  j["vertices"] = c.vertices;
  return j;
}

Json to_json(const FibrationRecord& r) {
  Json j;
  j["record_id"] = r.record_id;
  j["case_id"] = r.case_id;
  j["human_label"] = r.human_label;
  j["source"] = r.bds_case ? "borel-de-siebenthal" : "odd-grassmannian";
  j["ambient"] = r.ambient.name();
  j["psi0"] = r.bds_case ? Json(r.bds_case->psi0_label) : Json(nullptr);
  j["n0"] = r.bds_case ? Json(r.bds_case->n0) : Json(nullptr);
  j["base_class"] = to_string(r.base_class());
  const auto qk = r.bds_case ? r.bds_case->quaternion_kaehler : std::nullopt;
  j["quaternion_kaehler"] = qk ? Json(*qk) : Json(nullptr);
  j["k1"] = components_json(r.k1_components);
  j["k2"] = components_json(r.k2_components);
  j["equal_rank"] = r.equal_rank;
  if (r.euler_characteristic)
    j["euler_characteristic"] = r.euler_characteristic->convert_to<std::uint64_t>();
  else
    j["euler_characteristic"] = "zero";
  j["isometry_component_counts"] = {r.isometry_component_counts.first, r.isometry_component_counts.second};
  j["out_proxy_exception"] = r.out_proxy_exception;
  j["swap_partner"] = r.swap_partner;
  if (r.odd_grassmannian)
    j["odd_grassmannian"] = {{"s", r.odd_grassmannian->first}, {"t", r.odd_grassmannian->second}};
  else
    j["odd_grassmannian"] = nullptr;
  return j;
}

Json to_json(const BdSCase& c) {
  Json j;
  j["case_id"] = c.case_id();
  j["human_label"] = c.label();
  j["ambient"] = c.ambient.name();
  j["psi0"] = c.psi0_label;
  j["n0"] = c.n0;
  j["base_class"] = to_string(c.base_class);
  j["quaternion_kaehler"] = c.quaternion_kaehler ? Json(*c.quaternion_kaehler) : Json(nullptr);
  j["k"] = components_json(c.k_components);
  j["has_circle_factor"] = c.has_circle_factor;
  j["splits"] = c.k_components.size() > 1;
  if (c.k_components.size() <= 1) j["note"] = "no splitting";
  j["euler_characteristic"] = c.euler_characteristic.convert_to<std::uint64_t>();
  j["out_proxy_exception"] = c.out_proxy_exception;
  return j;
}

std::vector<std::string> csv_header() {
  return {"record_id", "case_id", "human_label", "ambient", "psi0",     "n0", "base_class",
          "quaternion_kaehler", "k1", "k2", "equal_rank", "euler_characteristic", "out_k1", "out_k2",
          "out_proxy_exception", "swap_partner"};
}

std::vector<std::string> csv_row(const FibrationRecord& r) {
  const auto qk = r.bds_case ? r.bds_case->quaternion_kaehler : std::nullopt;
  return {r.record_id,
          r.case_id,
          r.human_label,
          r.ambient.name(),
          r.bds_case ? r.bds_case->psi0_label : "",
          r.bds_case ? std::to_string(r.bds_case->n0) : "",
          to_string(r.base_class()),
          qk ? (*qk ? "true" : "false") : "",
          join_tokens(r.k1_components),
          join_tokens(r.k2_components),
          r.equal_rank ? "true" : "false",
          r.euler_characteristic ? r.euler_characteristic->str() : "zero",
          std::to_string(r.isometry_component_counts.first),
          std::to_string(r.isometry_component_counts.second),
          r.out_proxy_exception ? "true" : "false",
          r.swap_partner};
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string golden_key(const std::string& label, std::vector<std::string> k1, std::vector<std::string> k2) {
  std::sort(k1.begin(), k1.end());
  std::sort(k2.begin(), k2.end());
  return label + " | " + join(k1, " ") + " | " + join(k2, " ");
}

bool GoldenReport::ok() const {
  return std::all_of(sections.begin(), sections.end(), [](const auto& s) { return s.ok(); });
}

GoldenReport compare_golden(const nlohmann::json& golden) {
  GoldenReport report;
  try {
    if (!golden.is_object() || !golden.contains("sections"))
      throw Error(ErrorKind::InvalidArgument, "golden document has no sections");
    report.rank_cap = golden.value("rank_cap", 8);
    report.odd_grassmannian_cap = golden.value("odd_grassmannian_cap", 8);

    CatalogFilter filter;
    filter.rank_cap = report.rank_cap;
    filter.odd_grassmannian_cap = report.odd_grassmannian_cap;
    std::map<std::string, std::vector<std::string>> produced_split, produced_unsplit;
    for (const auto& r : catalog(filter))
      produced_split[to_string(r.base_class())].push_back(
          golden_key(r.human_label, tokens(r.k1_components), tokens(r.k2_components)));
    for (const auto& c : catalog_cases(filter))
      if (c.k_components.size() == 1) produced_unsplit[to_string(c.base_class)].push_back(c.label());

    const auto& sections = golden.at("sections");
    for (const char* name : kSections) {
      if (!sections.contains(name)) throw Error(ErrorKind::InvalidArgument, std::string("golden section missing: ") + name);
      const auto& sec = sections.at(name);
      std::vector<std::string> expected;
      for (const auto& e : sec.at("split")) {
        if (!e.is_array() || e.size() != 3)
          throw Error(ErrorKind::InvalidArgument, std::string("malformed golden entry in ") + name + ": " + e.dump());
        expected.push_back(golden_key(e[0].get<std::string>(), e[1].get<std::vector<std::string>>(),
                                      e[2].get<std::vector<std::string>>()));
      }
      std::vector<std::string> actual = produced_split[name];
      if (sec.contains("unsplit")) {
        for (const auto& label : sec.at("unsplit")) expected.push_back(label.get<std::string>() + " | unsplit");
        for (const auto& label : produced_unsplit[name]) actual.push_back(label + " | unsplit");
      }
      GoldenSectionDiff diff;
      diff.section = name;
      diff.expected = expected.size();
      diff.produced = actual.size();
      diff.missing = multiset_minus(expected, actual);
      diff.unexpected = multiset_minus(actual, expected);
      report.sections.push_back(std::move(diff));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed golden document: ") + e.what());
  }
  return report;
}

Json to_json(const GoldenReport& report) {
  Json j;
  j["rank_cap"] = report.rank_cap;
  j["odd_grassmannian_cap"] = report.odd_grassmannian_cap;
  j["ok"] = report.ok();
  Json secs = Json::array();
  for (const auto& s : report.sections) {
    Json e;
    e["section"] = s.section;
    e["expected"] = s.expected;
    e["produced"] = s.produced;
    e["missing"] = s.missing;
    e["unexpected"] = s.unexpected;
    secs.push_back(std::move(e));
  }
  j["sections"] = std::move(secs);
  return j;
}

}  // namespace isosplit::dynkin
