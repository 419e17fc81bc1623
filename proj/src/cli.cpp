#include "isosplit/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "isosplit/catalog_json.hpp"
#include "isosplit/error.hpp"
#include "isosplit/verify.hpp"

#ifndef ISOSPLIT_GOLDEN_PATH
#define ISOSPLIT_GOLDEN_PATH "tests/golden/catalog_golden.json"
#endif

namespace isosplit::cli {

namespace {

using dynkin::Json;

struct Options {
  std::string format = "json";
  std::string out_path;

  std::vector<std::string> families;
  std::optional<int> rank;
  int rank_cap = 8;
  std::string base_class;
  std::optional<int> n0;
  bool simple_k = false;
  bool golden = false;
  std::string golden_file;

  std::string case_name;
  verify::Settings settings;
};

std::string number(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) line += (i ? "," : "") + dynkin::csv_escape(fields[i]);
  return line + "\n";
}

Json envelope(const std::string& command) {
  Json j;
  j["schema_version"] = dynkin::kSchemaVersion;
  j["command"] = command;
  return j;
}

dynkin::CatalogFilter make_filter(const Options& o) {
  dynkin::CatalogFilter f;
  if (o.rank_cap < 1) throw Error(ErrorKind::InvalidArgument, "--rank-cap must be at least 1");
  if (o.rank && *o.rank < 0) throw Error(ErrorKind::InvalidArgument, "--rank must be nonnegative");
  f.rank_cap = o.rank_cap;
  f.odd_grassmannian_cap = o.rank_cap;
  f.rank = o.rank;
  f.n0 = o.n0;
  f.simple_k_only = o.simple_k;
  for (const auto& name : o.families) {
    if (name.size() == 1) {
      const char ch = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
      if (ch < 'A' || ch > 'G') throw Error(ErrorKind::InvalidArgument, "unknown family: " + name);
      f.families.push_back(static_cast<rootsys::Family>(ch - 'A'));
    } else {
      f.types.push_back(rootsys::SimpleType::parse(name));
    }
  }
  if (!o.base_class.empty()) {
    f.base_class = dynkin::parse_base_class(o.base_class);
    if (!f.base_class) throw Error(ErrorKind::InvalidArgument, "unknown class: " + o.base_class);
  }
  return f;
}

Json filter_json(const Options& o) {
  Json j;
  j["family"] = o.families;
  j["rank"] = o.rank ? Json(*o.rank) : Json(nullptr);
  j["rank_cap"] = o.rank_cap;
  j["class"] = o.base_class.empty() ? Json(nullptr) : Json(o.base_class);
  j["n0"] = o.n0 ? Json(*o.n0) : Json(nullptr);
  j["simple_k"] = o.simple_k;
  return j;
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, "malformed JSON in " + path + ": " + e.what());
  }
}

void write_report_text(const verify::Report& r, std::ostream& os) {
  os << "== " << r.subject << "\n";
  for (const auto& c : r.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << " [measured " << number(c.measured) << ", bound "
       << number(c.bound) << "]";
    if (!c.detail.empty()) os << " " << c.detail;
    os << "\n";
  }
  for (const auto& a : r.artifacts)
    os << "  displacement: " << a["isometry"].get<std::string>() << ": " << a["verdict"].get<std::string>()
       << ", upper " << number(a["min_upper"].get<double>()) << ".." << number(a["max_upper"].get<double>())
       << ", lower max " << number(a["max_lower"].get<double>()) << "\n";
  os << (r.ok() ? "ok" : "FAILED: " + std::to_string(r.failed()) + " check(s)") << "\n";
}

void write_reports(const std::string& command, const Json& provenance, const std::vector<verify::Report>& reports,
                   const std::string& format, std::ostream& os) {
  if (format == "json") {
    Json j = envelope(command);
    for (auto it = provenance.begin(); it != provenance.end(); ++it) j[it.key()] = it.value();
    Json list = Json::array();
    bool ok = true;
    for (const auto& r : reports) {
      list.push_back(verify::to_json(r));
      ok = ok && r.ok();
    }
    j["ok"] = ok;
    j["reports"] = std::move(list);
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    os << csv_line({"subject", "check", "passed", "measured", "bound", "detail"});
    for (const auto& r : reports)
      for (const auto& c : r.checks)
        os << csv_line({r.subject, c.name, c.passed ? "true" : "false", number(c.measured), number(c.bound), c.detail});
  } else {
    os << "# schema_version " << dynkin::kSchemaVersion << "\n";
    for (auto it = provenance.begin(); it != provenance.end(); ++it) os << "# " << it.key() << " " << it.value().dump() << "\n";
    for (const auto& r : reports) write_report_text(r, os);
  }
}

bool all_ok(const std::vector<verify::Report>& reports) {
  for (const auto& r : reports)
    if (!r.ok()) return false;
  return true;
}

int cmd_catalog(const Options& o, std::ostream& os) {
  if (o.golden) {
    const auto golden = read_json(o.golden_file.empty() ? default_golden_path() : o.golden_file);
    std::vector<verify::Report> reports{verify::golden_check(golden)};
    write_reports("catalog --golden", Json::object(), reports, o.format, os);
    return all_ok(reports) ? kExitOk : kExitCheckFailed;
  }
  const auto filter = make_filter(o);
  if (o.simple_k) {
    const auto cases = dynkin::catalog_cases(filter);
    if (o.format == "json") {
      Json j = envelope("catalog");
      j["filter"] = filter_json(o);
      Json list = Json::array();
      for (const auto& c : cases) list.push_back(dynkin::to_json(c));
      j["cases"] = std::move(list);
      os << j.dump(2) << "\n";
    } else if (o.format == "csv") {
      os << csv_line({"case_id", "human_label", "ambient", "base_class", "k", "note"});
      for (const auto& c : cases)
        os << csv_line({c.case_id(), c.label(), c.ambient.name(), dynkin::to_string(c.base_class),
                        dynkin::join_tokens(c.k_components), "no splitting"});
    } else {
      os << "# schema_version " << dynkin::kSchemaVersion << "\n";
      for (const auto& c : cases)
        os << std::left << std::setw(12) << c.label() << " " << std::setw(16) << dynkin::to_string(c.base_class)
           << " no splitting\n";
    }
    return kExitOk;
  }
  const auto records = dynkin::catalog(filter);
  if (o.format == "json") {
    Json j = envelope("catalog");
    j["filter"] = filter_json(o);
    Json list = Json::array();
    for (const auto& r : records) list.push_back(dynkin::to_json(r));
    j["records"] = std::move(list);
    os << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    os << csv_line(dynkin::csv_header());
    for (const auto& r : records) os << csv_line(dynkin::csv_row(r));
  } else {
    os << "# schema_version " << dynkin::kSchemaVersion << "\n";
    for (const auto& r : records)
      os << std::left << std::setw(28) << r.record_id << " " << std::setw(20) << r.human_label << " "
         << std::setw(16) << dynkin::to_string(r.base_class()) << " K1=" << dynkin::join_tokens(r.k1_components)
         << " K2=" << dynkin::join_tokens(r.k2_components) << " chi="
         << (r.euler_characteristic ? r.euler_characteristic->str() : "zero") << "\n";
  }
  return kExitOk;
}

dynkin::FibrationRecord resolve_case(const std::string& name) {
  if (name == "su3-hopf") return liealg::su3_hopf_record();
  if (name == "so6-stiefel") return liealg::so6_stiefel_record();
  for (auto& r : dynkin::catalog({}))
    if (r.record_id == name || r.case_id == name) return r;
  throw Error(ErrorKind::InvalidArgument, "unknown case: " + name);
}

int cmd_verify(const Options& o, std::ostream& os) {
  const auto record = resolve_case(o.case_name);
  const auto model = liealg::build_model(record);
  verify::Settings s = o.settings;
  std::vector<verify::Report> reports{verify::verify_model(model, s)};
  Json prov = verify::to_json(s);
  prov["case"] = o.case_name;
  prov["record_id"] = record.record_id;
  write_reports("verify", prov, reports, o.format, os);
  return all_ok(reports) ? kExitOk : kExitCheckFailed;
}

int cmd_selfcheck(const Options& o, std::ostream& os) {
  if (o.rank_cap < 1) throw Error(ErrorKind::InvalidArgument, "--rank-cap must be at least 1");
  std::vector<verify::Report> reports{verify::selfcheck(o.rank_cap)};
  // The golden lists are stated at the full caps; a smaller cap skips them
  // unless a file is named explicitly.
  if (!o.golden_file.empty() || o.rank_cap >= 8)
    reports.push_back(verify::golden_check(read_json(o.golden_file.empty() ? default_golden_path() : o.golden_file)));
  Json prov;
  prov["rank_cap"] = o.rank_cap;
  write_reports("selfcheck", prov, reports, o.format, os);
  return all_ok(reports) ? kExitOk : kExitCheckFailed;
}

}  // namespace

std::string default_golden_path() { return ISOSPLIT_GOLDEN_PATH; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Isotropy-splitting fibrations: catalog and numerical checks", "isosplit"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "csv", "text"};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", o.out_path, "Write output to this file");
  };

  auto* catalog = app.add_subcommand("catalog", "List fibrations from the Borel-de Siebenthal procedure");
  catalog->add_option("--family", o.families, "Family letter (A..G) or type (E8); repeatable");
  catalog->add_option("--rank", o.rank, "Exact rank of G");
  catalog->add_option("--rank-cap", o.rank_cap, "Largest rank for the classical families and s+t");
  catalog->add_option("--class", o.base_class,
                      "hermitian, symmetric, nearly-kaehler, 5-symmetric or odd-grassmannian");
  catalog->add_option("--n0", o.n0, "Coefficient of the deleted root");
  catalog->add_flag("--simple-k", o.simple_k, "Only cases with simple K, which admit no splitting");
  catalog->add_flag("--golden", o.golden, "Compare against the golden lists");
  catalog->add_option("--golden-file", o.golden_file, "Golden list file");
  common(catalog);

  auto* verify_cmd = app.add_subcommand("verify", "Run the numerical checks on a concrete model");
  verify_cmd->add_option("case", o.case_name, "su3-hopf, so6-stiefel, or a record or case id")->required();
  auto& s = o.settings;
  verify_cmd->add_option("--seed", s.seed, "Seed for all sampling");
  verify_cmd->add_option("--samples", s.samples, "Points per displacement profile")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--restarts", s.restarts, "Starts per logarithm")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--tol-log-residual", s.displacement.log_residual);
  verify_cmd->add_option("--tol-constancy", s.displacement.constancy);
  verify_cmd->add_option("--tol-gap", s.displacement.gap);
  verify_cmd->add_option("--tol-zero", s.displacement.zero);
  verify_cmd->add_option("--tol-killing-constant", s.killing_constant);
  verify_cmd->add_option("--tol-killing-nonconstant", s.killing_nonconstant);
  verify_cmd->add_option("--tol-log-round-trip", s.log_round_trip);
  verify_cmd->add_option("--tol-geodesic-speed", s.geodesic_speed);
  verify_cmd->add_option("--tol-fiber", s.fiber_residual);
  verify_cmd->add_option("--tol-certificate", s.certificate);
  common(verify_cmd);

  auto* selfcheck = app.add_subcommand("selfcheck", "Root-system, diagram and model self-consistency");
  selfcheck->add_option("--rank-cap", o.rank_cap, "Largest rank checked");
  selfcheck->add_option("--golden-file", o.golden_file, "Golden list file");
  common(selfcheck);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (*catalog)
      code = cmd_catalog(o, buffer);
    else if (*verify_cmd)
      code = cmd_verify(o, buffer);
    else
      code = cmd_selfcheck(o, buffer);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (o.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << o.out_path << "\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  if (code != kExitOk) {
    // The diff or failing claims go to stderr as well, so they are visible
    // when the report is written to a file.
    if (!o.out_path.empty()) err << buffer.str();
    err << "check failures; see report\n";
  }
  return code;
}

}  // namespace isosplit::cli
