// Acceptance run: one PASS/FAIL line per criterion, with timings.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "isosplit/catalog_json.hpp"
#include "isosplit/cli.hpp"
#include "isosplit/error.hpp"
#include "isosplit/rootsys.hpp"
#include "isosplit/verify.hpp"

using namespace isosplit;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < limit_seconds;
  const bool pass = out.ok && in_time;
  failures += !pass;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", secs, limit_seconds);
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << timing << ")";
  if (!in_time) std::cout << " over the time limit;";
  if (!out.detail.empty()) std::cout << " " << out.detail;
  std::cout << std::endl;
}

Outcome from_report(const verify::Report& r) {
  std::string detail;
  for (const auto& c : r.checks)
    if (!c.passed) detail += "[" + r.subject + ": " + c.name + ", measured " + std::to_string(c.measured) + "] ";
  return {r.ok(), detail};
}

std::vector<homspace::GroupModel> models() {
  return {liealg::build_model(liealg::su3_hopf_record()), liealg::build_model(liealg::so6_stiefel_record())};
}

rootsys::RootSystem root_system(const char* name) { return rootsys::build_root_system(rootsys::SimpleType::parse(name)); }

const char* const kSmallTypes[] = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"};

}  // namespace

int main() {
  criterion(1, "catalog reproduces the golden lists", 10, [] {
    std::ifstream in(cli::default_golden_path());
    const auto report = dynkin::compare_golden(nlohmann::json::parse(in));
    std::size_t diffs = 0;
    for (const auto& s : report.sections) diffs += s.missing.size() + s.unexpected.size();
    return Outcome{report.ok(), std::to_string(diffs) + " differences"};
  });

  criterion(2, "Weyl orders by BFS equal the degree products", 60, [] {
    std::string detail;
    bool ok = true;
    for (const char* name : kSmallTypes) {
      const auto rs = root_system(name);
      if (rootsys::weyl_order_bfs(rs) != rootsys::weyl_order(rs)) {
        ok = false;
        detail += std::string(name) + " ";
      }
    }
    for (const char* name : {"E6", "E7", "E8"}) {
      const auto order = rootsys::weyl_order(root_system(name));
      detail += std::string(name) + " " + order.str() + " ";
    }
    return Outcome{ok, detail};
  });

  criterion(3, "Weyl orbits span on the grid; the reducible control does not", 600, [] {
    const auto grid = rootsys::orbit_grid_values();
    std::size_t tested = 0;
    for (const char* name : kSmallTypes) {
      const auto rs = root_system(name);
      const int n = rs.rank();
      std::vector<std::size_t> idx(n, 0);
      while (true) {
        rootsys::RVector v(n);
        bool zero = true;
        for (int i = 0; i < n; ++i) zero = zero && (v[i] = grid[idx[i]]) == 0;
        if (!zero) {
          ++tested;
          if (!rootsys::weyl_orbit_spans_in_simple_basis(rs, v))
            return Outcome{false, std::string("orbit fails to span in ") + name};
        }
        int i = 0;
        while (i < n && ++idx[i] == grid.size()) idx[i++] = 0;
        if (i == n) break;
      }
    }
    const auto harness = rootsys::reducible_harness_a1a1();
    const bool control = rootsys::weyl_orbit_spans_in_simple_basis(harness, {rootsys::Rational(1), rootsys::Rational(0)});
    return Outcome{!control, std::to_string(tested) + " grid vectors"};
  });

  std::vector<homspace::GroupModel> ms;
  criterion(4, "both models satisfy every model invariant", 10, [&] {
    ms = models();
    Outcome out{true, ""};
    for (const auto& m : ms) {
      verify::Report r;
      r.subject = m.label;
      verify::check_invariants(m, r);
      const auto o = from_report(r);
      out.ok = out.ok && o.ok;
      out.detail += o.detail;
    }
    return out;
  });
  if (ms.empty()) ms = models();

  const verify::Settings settings;
  criterion(5, "Killing fields from k2 have constant length, those from g do not", 60, [&] {
    Outcome out{true, ""};
    for (const auto& m : ms) {
      verify::Report r;
      r.subject = m.label;
      verify::check_killing_lengths(m, settings, r);
      const auto o = from_report(r);
      out.ok = out.ok && o.ok;
      out.detail += o.detail;
    }
    return out;
  });

  criterion(6, "constant displacement exactly on Z_G x r(K2) among the tested isometries", 900, [&] {
    Outcome out{true, ""};
    for (const auto& m : ms) {
      verify::Report r;
      r.subject = m.label;
      verify::check_displacement(m, settings, r);
      const auto o = from_report(r);
      out.ok = out.ok && o.ok;
      out.detail += o.detail;
      if (o.ok) out.detail += m.label + ": " + r.checks[0].detail + ", " + r.checks[1].detail + "; ";
    }
    return out;
  });

  criterion(7, "orientation-reversing maps of R^6 have an invariant 3-plane", 60, [&] {
    return from_report(verify::certificate_suite(1, 1, 100, settings.seed, 1e-9));
  });

  criterion(8, "equal-rank fibrations have positive integral Euler characteristic", 30, [] {
    std::size_t counted = 0;
    for (const auto& r : dynkin::catalog({})) {
      if (!r.equal_rank) continue;
      ++counted;
      if (!r.euler_characteristic || *r.euler_characteristic <= 0) return Outcome{false, r.record_id};
    }
    return Outcome{true, std::to_string(counted) + " equal-rank records"};
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
