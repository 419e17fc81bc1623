#include <doctest.h>

#include <complex>

#include "isosplit/dynkin.hpp"
#include "isosplit/error.hpp"
#include "isosplit/liealg.hpp"

using namespace isosplit;
using namespace isosplit::liealg;

namespace {

const std::complex<double> I(0.0, 1.0);

Mat elementary(int n, int i, int j) {
  Mat e = Mat::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

Mat rotation(int n, int i, int j) { return elementary(n, i, j) - elementary(n, j, i); }

}  // namespace

TEST_CASE("Killing form of su(2) on the diagonal generator") {
  const auto a = su(2);
  Mat h = Mat::Zero(2, 2);
  h(0, 0) = I;
  h(1, 1) = -I;
  CHECK(killing_form(a, h, h) == doctest::Approx(-8.0));
}

TEST_CASE("the Killing form is a multiple of the trace form") {
  // kappa = 2n Re tr(XY) on su(n) and (n-2) tr(XY) on so(n).
  for (int n : {2, 3, 4}) {
    const auto a = su(n);
    const Mat x = a.basis()[0] + 0.5 * a.basis().back();
    const Mat y = a.basis()[1] - a.basis().back();
    CHECK(killing_form(a, x, y) == doctest::Approx(2.0 * n * (x * y).trace().real()));
  }
  for (int n : {3, 5, 6}) {
    const auto a = so(n);
    const Mat x = rotation(n, 0, 1) + rotation(n, 1, 2);
    const Mat y = rotation(n, 1, 2) - 2.0 * rotation(n, 0, 2);
    CHECK(killing_form(a, x, y) == doctest::Approx((n - 2.0) * (x * y).trace().real()));
  }
}

TEST_CASE("so(4) splits into orthogonal ideals") {
  const auto a = so(4);
  const Mat plus = rotation(4, 0, 1) + rotation(4, 2, 3);
  const Mat minus = rotation(4, 0, 1) - rotation(4, 2, 3);
  CHECK(std::abs(killing_form(a, plus, minus)) < 1e-12);
  CHECK(bracket(plus, minus).norm() < 1e-12);
}

TEST_CASE("dimensions and membership") {
  CHECK(su(3).dim() == 8);
  CHECK(so(6).dim() == 15);
  CHECK(su(3).contains(su(3).basis()[4], 1e-12));
  CHECK_FALSE(su(3).contains(Mat::Identity(3, 3), 1e-6));
  CHECK_THROWS_AS(killing_form(su(3), Mat::Identity(3, 3), su(3).basis()[0]), Error);
  CHECK_THROWS_AS(MatrixAlgebra("dependent", {rotation(3, 0, 1), 2.0 * rotation(3, 0, 1)}), Error);
}

TEST_CASE("matrix exponential and logarithm") {
  const auto a = su(3);
  const Mat x = 0.3 * a.basis()[0] - 0.2 * a.basis()[5] + 0.1 * a.basis()[7];
  const Mat g = matrix_exp(x);
  CHECK((g.adjoint() * g - Mat::Identity(3, 3)).norm() < 1e-13);
  CHECK((matrix_log(g) - x).norm() < 1e-12);
}

TEST_CASE("SU(3)/SU(2) model") {
  const auto m = build_model(su3_hopf_record());
  CHECK(m.g.dim() == 8);
  CHECK(m.k1.dim() == 3);
  CHECK(m.k2.dim() == 1);
  CHECK(m.m1.size() == 5);
  CHECK(m.m.size() == 4);
  CHECK(m.trace_constant == doctest::Approx(6.0));
  CHECK(m.equal_rank());
  CHECK(m.center_elements.size() == 3);
  CHECK(m.validation.ok());
  CHECK(natural_reductivity_check(m) < 1e-9);
  // The circle is generated by i diag(2, -1, -1).
  Mat z = Mat::Zero(3, 3);
  z(0, 0) = 2.0 * I;
  z(1, 1) = -I;
  z(2, 2) = -I;
  CHECK(m.k2.contains(z, 1e-12));
}

TEST_CASE("SO(6)/SO(3) model") {
  const auto m = build_model(so6_stiefel_record());
  CHECK(m.g.dim() == 15);
  CHECK(m.k1.dim() == 3);
  CHECK(m.k2.dim() == 3);
  CHECK(m.m1.size() == 12);
  CHECK(m.m.size() == 9);
  CHECK(m.trace_constant == doctest::Approx(4.0));
  CHECK_FALSE(m.equal_rank());
  CHECK(m.validation.ok());
  CHECK(m.validation.invariant_vectors_on_m == 0);
  CHECK(m.validation.m_rank == 9);
  // m1 is -kappa orthonormal.
  for (std::size_t i = 0; i < m.m1.size(); ++i)
    for (std::size_t j = 0; j < m.m1.size(); ++j)
      CHECK(m.metric(m.m1[i], m.m1[j]) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10));
}

TEST_CASE("catalog-only cases have no concrete model") {
  const auto all = dynkin::catalog({});
  bool checked = false;
  for (const auto& r : all)
    if (r.case_id == "e8-a4a4") {
      try {
        build_model(r);
        FAIL("expected an error");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoConcreteModel);
        checked = true;
      }
    }
  CHECK(checked);
}
