#include "isosplit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "isosplit/error.hpp"
#include "isosplit/rootsys.hpp"

namespace isosplit::verify {

namespace {

using homspace::CosetPoint;
using homspace::GroupModel;
using homspace::Isometry;
using homspace::KillingField;
using homspace::Sampler;
using liealg::Mat;
using Eigen::MatrixXd;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

Check at_most(std::string name, double measured, double bound, std::string detail = {}) {
  return {std::move(name), measured <= bound, measured, bound, std::move(detail)};
}

Check at_least(std::string name, double measured, double bound, std::string detail = {}) {
  return {std::move(name), measured >= bound, measured, bound, std::move(detail)};
}

Check holds(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, ok ? 1.0 : 0.0, 1.0, std::move(detail)};
}

double distance_to_center(const GroupModel& model, const Mat& k) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& z : model.center_elements) best = std::min(best, (k - z).norm());
  return best;
}

// Off-diagonal-block residual of x^{-1} y against the block structure of K.
double outside_k(const GroupModel& model, const Mat& c) {
  Mat off = c;
  for (const auto& b : model.blocks) off.block(b.begin, b.begin, b.size, b.size).setZero();
  return off.norm();
}

MatrixXd haar_orthogonal(int n, std::mt19937_64& engine) {
  std::normal_distribution<double> normal(0.0, 1.0);
  MatrixXd z = MatrixXd::NullaryExpr(n, n, [&] { return normal(engine); });
  Eigen::HouseholderQR<MatrixXd> qr(z);
  MatrixXd q = qr.householderQ();
  for (int j = 0; j < n; ++j)
    if (qr.matrixQR()(j, j) < 0) q.col(j) *= -1.0;
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

int permutations_preserving(const dynkin::DynkinDiagram& d) {
  const int n = d.size();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  int count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      ok = d.vertices()[i].squared_length == d.vertices()[p[i]].squared_length;
      for (int j = 0; j < n && ok; ++j) ok = d.bond(i, j) == d.bond(p[i], p[j]);
    }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

std::vector<rootsys::SimpleType> types_up_to(int cap) {
  using rootsys::Family;
  std::vector<rootsys::SimpleType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int r = 1; r <= cap; ++r)
      if (rootsys::SimpleType t{f, r}; t.valid()) out.push_back(t);
  return out;
}

}  // namespace

void check_invariants(const GroupModel& model, Report& rep) {
  const auto& v = liealg::validate(model);
  const auto& tol = model.tol;
  rep.add(at_most("the subalgebras g, k1, k2 are closed under the bracket", v.closure, tol.structural));
  rep.add(at_most("k1 and k2 are Killing-orthogonal", v.k1_k2_orthogonality, tol.structural));
  rep.add(at_most("[k1, m1] lies in m1", v.reductivity, tol.structural));
  rep.add(at_least("the negative Killing form is positive definite on m1", v.min_metric_eigenvalue, 0.0));
  rep.add(at_most("the Killing form is ad-invariant", v.ad_invariance, tol.ad_invariance));
  rep.add(at_most("the Killing form is a multiple of the trace form", v.trace_form_residual, tol.ad_invariance,
                  "constant " + fmt(v.trace_form_constant)));
  rep.add(at_most("G/K1 is naturally reductive with respect to g = k1 + m1", v.natural_reductivity, 1e-9));
  rep.add(holds("the centralizer of K1 in g is z(k1) + k2", v.centralizer_dim == v.expected_centralizer_dim &&
                                                                 v.centralizer_residual <= tol.structural,
                "dimension " + std::to_string(v.centralizer_dim) + ", expected " +
                    std::to_string(v.expected_centralizer_dim)));
  rep.add(holds("ad(k) has no nonzero fixed vector on m", v.invariant_vectors_on_m == 0,
                "fixed dimension " + std::to_string(v.invariant_vectors_on_m) + ", numeric rank " +
                    std::to_string(v.m_rank) + " of " + std::to_string(model.m.size())));
}

void check_killing_lengths(const GroupModel& model, const Settings& s, Report& rep) {
  Sampler points_rng(s.seed);
  std::vector<CosetPoint> points{{Mat::Identity(model.n, model.n)}};
  while (static_cast<int>(points.size()) < s.samples) points.push_back({points_rng.haar(model)});

  Sampler fields(s.seed + 1);
  double worst_right = 0;
  for (int j = 0; j < s.right_fields; ++j) {
    const KillingField f{KillingField::Side::Right, fields.algebra_element(model.k2)};
    std::vector<double> values;
    for (const auto& x : points) values.push_back(homspace::killing_length(model, f, x));
    worst_right = std::max(worst_right, relative_spread(values));
  }
  rep.add(at_most("Killing fields from the right action of k2 have constant length", worst_right,
                  s.killing_constant, std::to_string(s.right_fields) + " fields, largest relative spread"));

  double weakest_left = std::numeric_limits<double>::infinity();
  for (int j = 0; j < s.left_fields; ++j) {
    const KillingField f{KillingField::Side::Left, fields.algebra_element(model.g)};
    std::vector<double> values;
    for (const auto& x : points) values.push_back(homspace::killing_length(model, f, x));
    weakest_left = std::min(weakest_left, relative_spread(values));
  }
  rep.add(at_least("no sampled Killing field from g has constant length", weakest_left, s.killing_nonconstant,
                   std::to_string(s.left_fields) + " fields, smallest relative spread"));
}

void check_geodesics(const GroupModel& model, const Settings& s, Report& rep) {
  Sampler rng(s.seed + 2);
  double speed_error = 0, fiber_error = 0, round_trip = 0;
  for (int j = 0; j < 10; ++j) {
    const CosetPoint x{rng.haar(model)};
    Mat xi = model.m1_element(Eigen::VectorXd::NullaryExpr(static_cast<int>(model.m1.size()),
                                                           [&] { return rng.uniform(-1, 1); }));
    xi /= model.norm(xi);
    // Metric speed from a central difference of the curve, in the base frame.
    for (double t : {0.0, 0.7, 2.3}) {
      const double h = 1e-5;
      const Mat a = homspace::geodesic(model, x, xi, t - h).rep;
      const Mat b = homspace::geodesic(model, x, xi, t + h).rep;
      const Mat mid = homspace::geodesic(model, x, xi, t).rep;
      const Mat velocity = mid.adjoint() * (b - a) / (2 * h);
      speed_error = std::max(speed_error, std::abs(model.norm(model.m1_projection(velocity)) - 1.0));
    }
    // A direction from k2 keeps the curve inside the fiber xK.
    const Mat eta = rng.algebra_element(model.k2);
    for (double t : {0.5, 1.5, 4.0}) {
      const Mat c = x.rep.adjoint() * homspace::geodesic(model, x, eta, t).rep;
      fiber_error = std::max(fiber_error, outside_k(model, c));
    }
    const double len = s.log_scale;
    const CosetPoint y = homspace::geodesic(model, x, len * xi, 1.0);
    const auto log = homspace::riemannian_log(model, x, y, s.restarts, s.seed, s.displacement.log_residual);
    round_trip = std::max(round_trip, log.found ? std::abs(log.upper_bound - len) : std::numeric_limits<double>::infinity());
  }
  rep.add(at_most("geodesics through one-parameter subgroups have constant speed", speed_error, s.geodesic_speed));
  rep.add(at_most("geodesics tangent to the fiber stay in the fiber", fiber_error, model.tol.structural));
  rep.add(at_most("the logarithm recovers short geodesics", round_trip, s.log_round_trip,
                  "length " + fmt(s.log_scale)));
}

void check_displacement(const GroupModel& model, const Settings& s, Report& rep) {
  homspace::DisplacementSettings ds = s.displacement;
  ds.samples = s.samples;
  ds.restarts = s.restarts;
  ds.seed = s.seed;
  const Mat one = Mat::Identity(model.n, model.n);
  Sampler rng(s.seed + 3);

  std::vector<Isometry> constant;
  for (std::size_t j = 1; j < model.center_elements.size(); ++j)
    constant.push_back({model.center_elements[j], one, "central element " + std::to_string(j)});
  for (int j = 0; static_cast<int>(constant.size()) < s.constant_isometries; ++j) {
    const auto& z = model.center_elements[j % model.center_elements.size()];
    constant.push_back({z, rng.subgroup_element(model.k2),
                        "central element " + std::to_string(j % model.center_elements.size()) +
                            " with a right translation by K2"});
  }

  std::vector<Isometry> moving;
  for (int j = 0; static_cast<int>(moving.size()) < s.nonconstant_isometries; ++j) {
    const bool from_k1 = j % 2 == 0;
    const Mat k = rng.subgroup_element(from_k1 ? model.k1 : model.k2);
    if (distance_to_center(model, k) < 1e-3) continue;
    moving.push_back({k, one, from_k1 ? "left translation by K1" : "left translation by K2"});
  }

  int wrong_constant = 0, wrong_moving = 0, inconclusive = 0, inconsistent = 0;
  for (const auto& iso : constant) {
    const auto r = homspace::displacement_profile(model, iso, ds);
    wrong_constant += r.verdict != homspace::Verdict::Constant;
    inconclusive += r.verdict == homspace::Verdict::Inconclusive;
    inconsistent += !r.bounds_consistent;
    rep.artifacts.push_back(to_json(r));
  }
  for (const auto& iso : moving) {
    const auto r = homspace::displacement_profile(model, iso, ds);
    wrong_moving += r.verdict != homspace::Verdict::CertifiedNonconstant;
    inconclusive += r.verdict == homspace::Verdict::Inconclusive;
    inconsistent += !r.bounds_consistent;
    rep.artifacts.push_back(to_json(r));
  }
  rep.add(holds("elements of Z_G x r(K2) are isometries of constant displacement",
                wrong_constant == 0 && static_cast<int>(constant.size()) >= s.constant_isometries,
                std::to_string(constant.size() - wrong_constant) + " of " + std::to_string(constant.size()) +
                    " constant within tolerance"));
  rep.add(holds("left translations by noncentral elements of K1 and K2 have nonconstant displacement",
                wrong_moving == 0 && static_cast<int>(moving.size()) >= s.nonconstant_isometries,
                std::to_string(moving.size() - wrong_moving) + " of " + std::to_string(moving.size()) +
                    " certified nonconstant"));
  rep.add(at_most("no displacement verdict is inconclusive", inconclusive, 0));
  rep.add(at_most("distance lower bounds never exceed upper bounds", inconsistent, 0));
}

void check_fixed_fibers(const GroupModel& model, const Settings& s, Report& rep) {
  Sampler rng(s.seed + 4);
  if (model.equal_rank()) {
    int found = 0;
    for (int j = 0; j < 3; ++j) {
      const auto r = homspace::fixed_fiber(model, rng.haar(model), s.fiber_restarts, s.seed, s.fiber_residual);
      found += r.found;
    }
    rep.add(holds("every element of G leaves some fiber invariant", found == 3,
                  std::to_string(found) + " of 3 random elements"));
    return;
  }
  // Distinct rotation angles: no real eigenvector, so no invariant odd-dimensional plane.
  Mat g = Mat::Zero(model.n, model.n);
  for (int b = 0; 2 * b + 1 < model.n; ++b) {
    const double theta = 0.4 + 0.7 * b;
    g(2 * b, 2 * b) = g(2 * b + 1, 2 * b + 1) = std::cos(theta);
    g(2 * b + 1, 2 * b) = std::sin(theta);
    g(2 * b, 2 * b + 1) = -std::sin(theta);
  }
  const Mat q = rng.haar(model);
  g = q * g * q.adjoint();
  const auto r = homspace::fixed_fiber(model, g, s.fiber_restarts, s.seed, s.fiber_residual);
  rep.add(holds("a rotation without real eigenvectors leaves no fiber invariant", !r.found,
                "best residual " + fmt(r.residual)));
}

bool Report::ok() const { return failed() == 0; }

int Report::failed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

double relative_spread(const std::vector<double>& values) {
  if (values.empty()) return 0;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return *hi > 0 ? (*hi - *lo) / *hi : 0.0;
}

Report verify_model(const GroupModel& model, const Settings& settings) {
  Report rep;
  rep.subject = model.label;
  check_invariants(model, rep);
  check_killing_lengths(model, settings, rep);
  check_geodesics(model, settings, rep);
  check_displacement(model, settings, rep);
  check_fixed_fibers(model, settings, rep);
  if (model.kind == liealg::GroupKind::SO) {
    const int s = (model.blocks[0].size - 1) / 2, t = (model.blocks[1].size - 1) / 2;
    auto cert = certificate_suite(s, t, settings.certificates, settings.seed, settings.certificate);
    for (auto& c : cert.checks) rep.add(std::move(c));
  }
  return rep;
}

Report certificate_suite(int s, int t, int count, std::uint64_t seed, double tol) {
  Report rep;
  rep.subject = "O(" + std::to_string(2 * s + 2 * t + 2) + ") with determinant -1";
  const int n = 2 * s + 2 * t + 2, dim = 2 * s + 1;
  MatrixXd flip = MatrixXd::Identity(n, n);
  flip.bottomRightCorner(2 * t + 1, 2 * t + 1) *= -1.0;

  std::mt19937_64 engine(seed);
  double worst = 0;
  int wrong_dim = 0;
  for (int j = 0; j < count; ++j) {
    const MatrixXd a = flip * haar_orthogonal(n, engine);
    const auto cert = homspace::fixed_point_certificate(a, s, t);
    worst = std::max(worst, cert.residual);
    const double orth = (cert.basis.transpose() * cert.basis - MatrixXd::Identity(dim, dim)).norm();
    wrong_dim += cert.basis.cols() != dim || orth > tol;
  }
  rep.add(at_most("every element of O(2s+2t+2) with determinant -1 has an invariant (2s+1)-plane", worst, tol,
                  std::to_string(count) + " seeded elements, largest residual"));
  rep.add(at_most("the invariant planes have orthonormal bases of dimension 2s+1", wrong_dim, 0));

  const auto diag = homspace::fixed_point_certificate(flip, s, t);
  MatrixXd expected = MatrixXd::Zero(n, n);
  expected.topLeftCorner(dim, dim).setIdentity();
  const double err = (diag.basis * diag.basis.transpose() - expected).norm();
  rep.add(at_most("diag(I, -I) fixes exactly the span of the first 2s+1 coordinates", err, 0.0));

  bool rejected = false;
  try {
    homspace::fixed_point_certificate(MatrixXd::Identity(n, n), s, t);
  } catch (const Error&) {
    rejected = true;
  }
  rep.add(holds("determinant +1 is rejected", rejected));
  return rep;
}

Report selfcheck(int rank_cap) {
  Report rep;
  rep.subject = "selfcheck, rank cap " + std::to_string(rank_cap);

  std::string bfs_detail, degree_detail;
  bool bfs_ok = true, degree_ok = true;
  for (const auto& t : types_up_to(rank_cap)) {
    const auto rs = rootsys::build_root_system(t);
    try {
      const auto deg = rootsys::weyl_order(rs);
      if (t.rank <= 4) {
        const auto bfs = rootsys::weyl_order_bfs(rs);
        if (bfs != deg) {
          bfs_ok = false;
          bfs_detail += t.name() + ": BFS " + bfs.str() + " vs degrees " + deg.str() + "; ";
        }
      }
    } catch (const Error& e) {
      degree_ok = false;
      degree_detail += t.name() + ": " + e.what() + "; ";
    }
  }
  rep.add(holds("the Weyl group order is the product of the degrees", bfs_ok, bfs_detail));
  rep.add(holds("Coxeter-element exponents are integers", degree_ok, degree_detail));

  std::string orbit_detail;
  bool orbit_ok = true;
  const auto grid = rootsys::orbit_grid_values();
  for (const auto& t : types_up_to(std::min(rank_cap, 4))) {
    const auto rs = rootsys::build_root_system(t);
    std::vector<std::size_t> idx(t.rank, 0);
    while (true) {
      rootsys::RVector v(t.rank);
      bool zero = true;
      for (int i = 0; i < t.rank; ++i) zero = zero && (v[i] = grid[idx[i]]) == 0;
      if (!zero && !rootsys::weyl_orbit_spans_in_simple_basis(rs, v)) {
        orbit_ok = false;
        orbit_detail += t.name() + "; ";
        break;
      }
      int i = 0;
      while (i < t.rank && ++idx[i] == grid.size()) idx[i++] = 0;
      if (i == t.rank) break;
    }
  }
  rep.add(holds("every nonzero vector has a Weyl orbit spanning the root space", orbit_ok, orbit_detail));
  const auto harness = rootsys::reducible_harness_a1a1();
  rep.add(holds("a reducible root system has a nonspanning Weyl orbit",
                !rootsys::weyl_orbit_spans_in_simple_basis(harness, {rootsys::Rational(1), rootsys::Rational(0)})));

  std::string auto_detail;
  bool auto_ok = true;
  for (const auto& t : types_up_to(rank_cap)) {
    const auto rs = rootsys::build_root_system(t);
    std::vector<dynkin::DynkinDiagram> diagrams{dynkin::dynkin_diagram(rs)};
    // The extended A1 diagram has a double edge of infinite order.
    if (t.rank > 1) diagrams.push_back(dynkin::extended_diagram(rs));
    for (const auto& d : diagrams) {
      if (d.size() > 9) continue;
      const auto brute = permutations_preserving(d);
      const auto order = dynkin::diagram_automorphisms(d).order;
      if (static_cast<std::uint64_t>(brute) != order) {
        auto_ok = false;
        auto_detail += d.provenance() + ": " + std::to_string(order) + " vs " + std::to_string(brute) + "; ";
      }
    }
  }
  rep.add(holds("diagram automorphism groups agree with a brute-force count", auto_ok, auto_detail));

  dynkin::CatalogFilter filter;
  filter.rank_cap = rank_cap;
  filter.odd_grassmannian_cap = rank_cap;
  std::string chi_detail;
  int records = 0, bad = 0;
  for (const auto& r : dynkin::catalog(filter)) {
    ++records;
    if (r.equal_rank && (!r.euler_characteristic || *r.euler_characteristic <= 0)) {
      ++bad;
      chi_detail += r.record_id + "; ";
    }
  }
  rep.add(at_most("equal-rank fibrations have positive integral Euler characteristic", bad, 0,
                  std::to_string(records) + " records " + chi_detail));

  for (const auto& rec : {liealg::su3_hopf_record(), liealg::so6_stiefel_record()}) {
    const auto model = liealg::build_model(rec);
    std::string detail;
    for (const auto& f : model.validation.failures) detail += f + "; ";
    rep.add(holds("the " + model.label + " model satisfies its structural invariants", model.validation.ok(), detail));
  }
  return rep;
}

Report golden_check(const nlohmann::json& golden) {
  Report rep;
  rep.subject = "catalog against the golden lists";
  const auto g = dynkin::compare_golden(golden);
  for (const auto& sec : g.sections) {
    std::string detail;
    for (const auto& m : sec.missing) detail += "missing: " + m + "\n";
    for (const auto& u : sec.unexpected) detail += "unexpected: " + u + "\n";
    rep.add(holds("the " + sec.section + " list is reproduced", sec.ok(),
                  std::to_string(sec.produced) + " produced, " + std::to_string(sec.expected) + " expected" +
                      (detail.empty() ? "" : "\n" + detail)));
  }
  return rep;
}

Json to_json(const Check& c) {
  Json j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["measured"] = c.measured;
  j["bound"] = c.bound;
  j["detail"] = c.detail;
  return j;
}

Json to_json(const Report& r) {
  Json j;
  j["subject"] = r.subject;
  j["ok"] = r.ok();
  j["failed"] = r.failed();
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  if (!r.artifacts.empty()) j["displacement"] = r.artifacts;
  return j;
}

Json to_json(const homspace::DisplacementReport& r) {
  Json j;
  j["isometry"] = r.isometry.description;
  j["verdict"] = homspace::to_string(r.verdict);
  j["samples"] = r.samples.size();
  j["min_upper"] = r.min_upper;
  j["max_upper"] = r.max_upper;
  j["mean_upper"] = r.mean_upper;
  j["max_lower"] = r.max_lower;
  j["relative_spread"] = r.relative_spread;
  j["bounds_consistent"] = r.bounds_consistent;
  j["logs_found"] = std::count_if(r.samples.begin(), r.samples.end(), [](const auto& s) { return s.log_found; });
  return j;
}

Json to_json(const Settings& s) {
  Json j;
  j["seed"] = s.seed;
  j["samples"] = s.samples;
  j["restarts"] = s.restarts;
  j["tolerances"] = {{"log_residual", s.displacement.log_residual},
                     {"constancy", s.displacement.constancy},
                     {"gap", s.displacement.gap},
                     {"zero", s.displacement.zero},
                     {"killing_constant", s.killing_constant},
                     {"killing_nonconstant", s.killing_nonconstant},
                     {"log_round_trip", s.log_round_trip},
                     {"geodesic_speed", s.geodesic_speed},
                     {"fiber_residual", s.fiber_residual},
                     {"certificate", s.certificate}};
  return j;
}

}  // namespace isosplit::verify
