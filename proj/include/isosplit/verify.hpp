#pragma once

// Check suites shared by the command line and the acceptance run.
//
// A suite is a list of named checks. Each check records a measured value and
// the bound it was held to, so reports can be compared byte for byte.

#include <cstdint>
#include <string>
#include <vector>

#include "isosplit/catalog_json.hpp"
#include "isosplit/homspace.hpp"

namespace isosplit::verify {

using Json = dynkin::Json;

struct Check {
  std::string name;    // the claim, in content terms
  bool passed = false;
  double measured = 0;
  double bound = 0;
  std::string detail;
};

struct Report {
  std::string subject;
  std::vector<Check> checks;
  std::vector<Json> artifacts;  // per-isometry reports and similar detail

  bool ok() const;
  int failed() const;
  void add(Check c) { checks.push_back(std::move(c)); }
};

struct Settings {
  std::uint64_t seed = 42;
  int samples = 200;
  int restarts = 4;
  homspace::DisplacementSettings displacement;  // samples/restarts/seed are overwritten
  double killing_constant = 1e-9;     // max relative spread for fields from k2
  double killing_nonconstant = 1e-3;  // min relative spread for fields from g
  int right_fields = 20;
  int left_fields = 50;
  int constant_isometries = 10;
  int nonconstant_isometries = 10;
  double log_scale = 0.3;             // |xi| for the log round trip
  double log_round_trip = 1e-6;
  double geodesic_speed = 1e-8;
  double fiber_residual = 1e-8;
  int fiber_restarts = 8;
  double certificate = 1e-9;
  int certificates = 100;
};

void check_invariants(const homspace::GroupModel& model, Report& rep);
/// Right fields from k2 have constant length; left fields from g do not.
void check_killing_lengths(const homspace::GroupModel& model, const Settings& s, Report& rep);
/// Geodesic speed, fiber geodesics and the logarithm round trip.
void check_geodesics(const homspace::GroupModel& model, const Settings& s, Report& rep);
/// Z_G x r(K2) against left translations by noncentral elements of K1 and K2.
void check_displacement(const homspace::GroupModel& model, const Settings& s, Report& rep);
/// Equal rank: random elements fix a fiber. Otherwise a rotation without
/// real eigenvectors fixes none.
void check_fixed_fibers(const homspace::GroupModel& model, const Settings& s, Report& rep);

/// Model invariants, Killing-length dichotomy, geodesic and log checks,
/// displacement dichotomy, fixed fibers and (for SO models) the plane
/// certificate.
Report verify_model(const homspace::GroupModel& model, const Settings& settings);

/// Root-system, diagram and model self-consistency for ambient ranks up to
/// `rank_cap`.
Report selfcheck(int rank_cap);

/// Golden-list comparison as a check list; the diff goes into `detail`.
Report golden_check(const nlohmann::json& golden);

/// Invariant (2s+1)-planes for `count` seeded elements of O(2s+2t+2) with
/// det -1, plus the diagonal example.
Report certificate_suite(int s, int t, int count, std::uint64_t seed, double tol);

Json to_json(const Check& c);
Json to_json(const Report& r);
Json to_json(const homspace::DisplacementReport& r);
Json to_json(const Settings& s);

/// Left and right relative spreads of Killing lengths; exposed for tests.
double relative_spread(const std::vector<double>& values);

}  // namespace isosplit::verify
