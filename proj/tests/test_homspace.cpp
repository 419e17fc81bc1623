#include <doctest.h>

#include <cmath>
#include <complex>

#include "isosplit/error.hpp"
#include "isosplit/homspace.hpp"

using namespace isosplit;
using namespace isosplit::homspace;
using Eigen::MatrixXd;

namespace {

const std::complex<double> I(0.0, 1.0);

const GroupModel& su3() {
  static const GroupModel m = liealg::build_model(liealg::su3_hopf_record());
  return m;
}

const GroupModel& so6() {
  static const GroupModel m = liealg::build_model(liealg::so6_stiefel_record());
  return m;
}

// Generator of the circle fiber of SU(3)/SU(2).
Mat circle() {
  Mat z = Mat::Zero(3, 3);
  z(0, 0) = 2.0 * I;
  z(1, 1) = -I;
  z(2, 2) = -I;
  return z;
}

DisplacementSettings quick() {
  DisplacementSettings s;
  s.samples = 40;
  return s;
}

}  // namespace

TEST_CASE("Haar samples lie in the group") {
  Sampler s(1);
  for (int j = 0; j < 5; ++j) {
    CHECK(su3().in_group(s.haar(su3()), 1e-12));
    CHECK(so6().in_group(s.haar(so6()), 1e-12));
  }
}

TEST_CASE("Killing lengths") {
  const CosetPoint o{Mat::Identity(3, 3)};
  CHECK(killing_length(su3(), {KillingField::Side::Left, su3().k1.basis()[0]}, o) < 1e-14);
  // |Z|^2 = 6 * |Z|_F^2 = 36 for the circle generator.
  Sampler s(3);
  for (int j = 0; j < 5; ++j)
    CHECK(killing_length(su3(), {KillingField::Side::Right, circle()}, {s.haar(su3())}) == doctest::Approx(6.0));
}

TEST_CASE("geodesics") {
  Sampler s(5);
  const CosetPoint x{s.haar(su3())};
  CHECK((geodesic(su3(), x, su3().m1[0], 0.0).rep - x.rep).norm() < 1e-15);
  CHECK_THROWS_AS(geodesic(su3(), x, su3().k1.basis()[0], 1.0), Error);
}

TEST_CASE("the circle fiber of SU(3)/SU(2) closes at t = pi") {
  // exp(pi Z) = diag(1, -1, -1), and diag(-1, -1) lies in SU(2).
  Sampler s(6);
  const CosetPoint x{s.haar(su3())};
  CHECK(chord(su3(), x, geodesic(su3(), x, circle(), M_PI)) < 1e-12);
  for (double t : {0.5, M_PI / 2, 2.5}) CHECK(chord(su3(), x, geodesic(su3(), x, circle(), t)) > 0.1);
  // The antipodal point on the fiber is at a positive certified distance.
  CHECK(distance_lower_bound(su3(), x, geodesic(su3(), x, circle(), M_PI / 2)) > 1.0);
}

TEST_CASE("shortest logarithms") {
  // The centre element w I of SU(3) has angles 2pi/3 that must be shifted to sum to 0.
  const Mat w = std::polar(1.0, 2 * M_PI / 3) * Mat::Identity(3, 3);
  const Mat l = shortest_log(su3(), w);
  CHECK((liealg::matrix_exp(l) - w).norm() < 1e-12);
  CHECK(std::abs(l.trace()) < 1e-12);
  CHECK((l + l.adjoint()).norm() < 1e-12);
  CHECK(l.squaredNorm() == doctest::Approx(24 * M_PI * M_PI / 9));

  // -I in SO(6): three rotations by pi.
  const Mat minus = -Mat::Identity(6, 6);
  const Mat lm = shortest_log(so6(), minus);
  CHECK((liealg::matrix_exp(lm) - minus).norm() < 1e-12);
  CHECK(lm.imag().norm() == 0.0);
  CHECK(lm.squaredNorm() == doctest::Approx(6 * M_PI * M_PI));
}

TEST_CASE("logarithm bounds") {
  Sampler s(8);
  const CosetPoint x{s.haar(so6())};
  const auto same = riemannian_log(so6(), x, x, 4, 1);
  CHECK(same.found);
  CHECK(same.upper_bound < 1e-12);

  const Mat xi = 0.2 * so6().m1[3] - 0.1 * so6().m1[7];
  const double len = so6().norm(xi);
  const auto back = riemannian_log(so6(), x, geodesic(so6(), x, xi, 1.0), 4, 1);
  CHECK(back.found);
  CHECK(back.upper_bound <= len * (1 + 1e-6));
  CHECK(back.upper_bound == doctest::Approx(len).epsilon(1e-6));

  // A short arc of the circle fiber: length 0.3 * |Z| = 1.8.
  const CosetPoint y{s.haar(su3())};
  const auto arc = riemannian_log(su3(), y, geodesic(su3(), y, circle(), 0.3), 4, 1);
  CHECK(arc.upper_bound == doctest::Approx(1.8).epsilon(1e-9));

  for (int j = 0; j < 10; ++j) {
    const CosetPoint a{s.haar(su3())}, b{s.haar(su3())};
    CHECK(distance_lower_bound(su3(), a, b) <= riemannian_log(su3(), a, b, 4, 2).upper_bound + 1e-9);
  }
}

TEST_CASE("more restarts never raise the bound") {
  Sampler s(9);
  const CosetPoint a{s.haar(so6())}, b{s.haar(so6())};
  double previous = INFINITY;
  for (int r : {1, 2, 4, 8}) {
    const double u = riemannian_log(so6(), a, b, r, 11).upper_bound;
    CHECK(u <= previous);
    previous = u;
  }
}

TEST_CASE("displacement of central elements and isotropy elements") {
  const Mat one3 = Mat::Identity(3, 3);
  const auto central = displacement_profile(su3(), {su3().center_elements[1], one3, "w"}, quick());
  CHECK(central.verdict == Verdict::Constant);
  CHECK(central.bounds_consistent);

  Sampler s(10);
  const auto moving = displacement_profile(su3(), {s.subgroup_element(su3().k1), one3, "k"}, quick());
  CHECK(moving.verdict == Verdict::CertifiedNonconstant);
  CHECK(moving.samples.front().upper < 1e-9);

  const Mat one6 = Mat::Identity(6, 6);
  const auto antipodal = displacement_profile(so6(), {-one6, s.subgroup_element(so6().k2), "-I k2"}, quick());
  CHECK(antipodal.verdict == Verdict::Constant);
  CHECK(antipodal.bounds_consistent);
}

TEST_CASE("fixed fibers") {
  Sampler s(12);
  const Mat k = s.subgroup_element(su3().k1);
  const auto base = fixed_fiber(su3(), k, 1, 1);
  CHECK(base.found);
  CHECK((base.witness.rep - Mat::Identity(3, 3)).norm() < 1e-12);
  CHECK(fixed_fiber(su3(), s.haar(su3()), 8, 1).found);
}

TEST_CASE("invariant planes of orientation-reversing orthogonal maps") {
  MatrixXd flip = MatrixXd::Identity(6, 6);
  flip.bottomRightCorner(3, 3) *= -1.0;
  const auto cert = fixed_point_certificate(flip, 1, 1);
  MatrixXd expected = MatrixXd::Zero(6, 6);
  expected.topLeftCorner(3, 3).setIdentity();
  CHECK((cert.basis * cert.basis.transpose() - expected).norm() == 0.0);
  CHECK_THROWS_AS(fixed_point_certificate(MatrixXd::Identity(6, 6), 1, 1), Error);
  CHECK_THROWS_AS(fixed_point_certificate(flip, 1, 2), Error);

  // Rotation blocks only, besides the forced +1 and -1.
  MatrixXd a = MatrixXd::Zero(6, 6);
  a(0, 0) = a(1, 1) = std::cos(0.3);
  a(1, 0) = std::sin(0.3);
  a(0, 1) = -std::sin(0.3);
  a(2, 2) = 1;
  a(3, 3) = -1;
  a(4, 4) = a(5, 5) = std::cos(1.1);
  a(5, 4) = std::sin(1.1);
  a(4, 5) = -std::sin(1.1);
  const auto r = fixed_point_certificate(a, 1, 1);
  CHECK(r.residual < 1e-12);
  CHECK(r.basis.cols() == 3);
}
