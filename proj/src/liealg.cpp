#include "isosplit/liealg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <unsupported/Eigen/MatrixFunctions>

#include "isosplit/error.hpp"

namespace isosplit::liealg {

namespace {

using Complex = std::complex<double>;
using Eigen::MatrixXd;

Mat unit(int n, int j, int k) {
  Mat e = Mat::Zero(n, n);
  e(j, k) = 1.0;
  return e;
}

// su(size) or so(size) on the diagonal block starting at `offset`.
std::vector<Mat> block_basis(GroupKind kind, int n, int offset, int size) {
  std::vector<Mat> out;
  const Complex i(0.0, 1.0);
  for (int j = 0; j < size; ++j) {
    for (int k = j + 1; k < size; ++k) {
      const int a = offset + j, b = offset + k;
      out.push_back(unit(n, a, b) - unit(n, b, a));
      if (kind == GroupKind::SU) out.push_back(i * (unit(n, a, b) + unit(n, b, a)));
    }
  }
  if (kind == GroupKind::SU)
    for (int j = 0; j + 1 < size; ++j)
      out.push_back(i * (unit(n, offset + j, offset + j) - unit(n, offset + j + 1, offset + j + 1)));
  return out;
}

int numeric_rank(const MatrixXd& a, double rel_tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<MatrixXd> svd(a);
  const auto& sv = svd.singularValues();
  const double cutoff = rel_tol * std::max(1.0, sv.size() ? sv(0) : 0.0);
  int r = 0;
  for (int k = 0; k < sv.size(); ++k)
    if (sv(k) > cutoff) ++r;
  return r;
}

// Null space of `a` (columns of the returned matrix), by SVD.
MatrixXd null_space(const MatrixXd& a, int cols, double rel_tol) {
  if (a.rows() == 0) return MatrixXd::Identity(cols, cols);
  Eigen::JacobiSVD<MatrixXd> svd(a, Eigen::ComputeFullV);
  const int r = numeric_rank(a, rel_tol);
  return svd.matrixV().rightCols(cols - r);
}

MatrixXd coordinate_matrix(const MatrixAlgebra& a, const std::vector<Mat>& elems) {
  MatrixXd out(a.dim(), static_cast<int>(elems.size()));
  for (std::size_t j = 0; j < elems.size(); ++j) out.col(static_cast<int>(j)) = a.coordinates(elems[j]);
  return out;
}

// Rows: coordinates of [b, w] for every b in `acting`, stacked; columns: w.
MatrixXd stacked_action(const MatrixAlgebra& g, const std::vector<Mat>& acting, const std::vector<Mat>& on) {
  MatrixXd out(g.dim() * static_cast<int>(acting.size()), static_cast<int>(on.size()));
  for (std::size_t a = 0; a < acting.size(); ++a)
    for (std::size_t w = 0; w < on.size(); ++w)
      out.block(static_cast<int>(a) * g.dim(), static_cast<int>(w), g.dim(), 1) =
          g.coordinates(bracket(acting[a], on[w]));
  return out;
}

std::string group_name(GroupKind kind, int n) { return std::string(kind == GroupKind::SU ? "SU(" : "SO(") + std::to_string(n) + ")"; }

dynkin::FibrationRecord find_record(const dynkin::CatalogFilter& filter, const std::string& id) {
  for (auto& r : dynkin::catalog(filter))
    if (r.record_id == id) return r;
  throw Error(ErrorKind::NotFound, "record " + id + " not in catalog");
}

}  // namespace

Eigen::VectorXd vectorize(const Mat& X) {
  const Eigen::Index n2 = X.size();
  Eigen::VectorXd v(2 * n2);
  v.head(n2) = X.real().reshaped();
  v.tail(n2) = X.imag().reshaped();
  return v;
}

Mat bracket(const Mat& X, const Mat& Y) { return X * Y - Y * X; }

MatrixAlgebra::MatrixAlgebra(std::string name, std::vector<Mat> basis) : name_(std::move(name)), basis_(std::move(basis)) {
  if (basis_.empty()) {
    n_ = 0;
    return;
  }
  n_ = static_cast<int>(basis_.front().rows());
  for (const auto& b : basis_)
    if (b.rows() != n_ || b.cols() != n_)
      throw Error(ErrorKind::InvalidArgument, name_ + ": basis matrices must be square of one size");
  vectorized_.resize(2 * n_ * n_, dim());
  for (int j = 0; j < dim(); ++j) vectorized_.col(j) = vectorize(basis_[j]);
  if (numeric_rank(vectorized_, 1e-10) != dim())
    throw Error(ErrorKind::InvalidArgument, name_ + ": basis is linearly dependent");
  const MatrixXd gram = vectorized_.transpose() * vectorized_;
  pinv_ = gram.ldlt().solve(vectorized_.transpose());
}

Vec MatrixAlgebra::coordinates(const Mat& X, double* residual) const {
  if (dim() == 0) {
    if (residual) *residual = X.norm();
    return Vec();
  }
  const Eigen::VectorXd v = vectorize(X);
  Vec c = pinv_ * v;
  if (residual) *residual = (vectorized_ * c - v).norm();
  return c;
}

Mat MatrixAlgebra::element(const Vec& coords) const {
  Mat out = Mat::Zero(n_, n_);
  for (int j = 0; j < dim(); ++j) out += coords(j) * basis_[j];
  return out;
}

bool MatrixAlgebra::contains(const Mat& X, double tol) const {
  double r = 0;
  coordinates(X, &r);
  return r <= tol;
}

double MatrixAlgebra::closure_residual() const {
  double worst = 0;
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j) {
      double r = 0;
      coordinates(bracket(basis_[i], basis_[j]), &r);
      worst = std::max(worst, r);
    }
  return worst;
}

MatrixAlgebra su(int n) { return MatrixAlgebra("su(" + std::to_string(n) + ")", block_basis(GroupKind::SU, n, 0, n)); }

MatrixAlgebra so(int n) { return MatrixAlgebra("so(" + std::to_string(n) + ")", block_basis(GroupKind::SO, n, 0, n)); }

Eigen::MatrixXd ad_matrix(const MatrixAlgebra& a, const Mat& X) {
  MatrixXd out(a.dim(), a.dim());
  for (int j = 0; j < a.dim(); ++j) out.col(j) = a.coordinates(bracket(X, a.basis()[j]));
  return out;
}

Eigen::MatrixXd killing_gram(const MatrixAlgebra& a) {
  std::vector<MatrixXd> ads;
  for (const auto& b : a.basis()) ads.push_back(ad_matrix(a, b));
  MatrixXd k(a.dim(), a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j) k(i, j) = k(j, i) = (ads[i] * ads[j]).trace();
  return k;
}

double killing_form(const MatrixAlgebra& a, const Mat& X, const Mat& Y, double tol) {
  double rx = 0, ry = 0;
  a.coordinates(X, &rx);
  a.coordinates(Y, &ry);
  if (rx > tol || ry > tol)
    throw Error(ErrorKind::InvalidArgument, "killing_form: argument is not in " + a.name());
  return (ad_matrix(a, X) * ad_matrix(a, Y)).trace();
}

Mat matrix_exp(const Mat& X) { return X.exp(); }

Mat matrix_log(const Mat& X) { return X.log(); }

bool GroupModel::equal_rank() const { return kind == GroupKind::SU; }

double GroupModel::metric(const Mat& X, const Mat& Y) const {
  return -trace_constant * (X.cwiseProduct(Y.transpose())).sum().real();
}

double GroupModel::norm(const Mat& X) const { return std::sqrt(std::max(0.0, metric(X, X))); }

Vec GroupModel::m1_coordinates(const Mat& X) const {
  Vec c(static_cast<int>(m1.size()));
  for (std::size_t j = 0; j < m1.size(); ++j) c(static_cast<int>(j)) = metric(m1[j], X);
  return c;
}

Mat GroupModel::m1_projection(const Mat& X) const { return m1_element(m1_coordinates(X)); }

Mat GroupModel::m1_element(const Vec& coords) const {
  Mat out = Mat::Zero(n, n);
  for (std::size_t j = 0; j < m1.size(); ++j) out += coords(static_cast<int>(j)) * m1[j];
  return out;
}

bool GroupModel::in_group(const Mat& x, double tol) const {
  if (x.rows() != n || x.cols() != n) return false;
  if ((x.adjoint() * x - Mat::Identity(n, n)).norm() > tol) return false;
  if (std::abs(x.determinant() - 1.0) > tol) return false;
  if (kind == GroupKind::SO && x.imag().norm() > tol) return false;
  return true;
}

std::vector<Mat> orthogonal_complement(const GroupModel& model, const std::vector<Mat>& sub) {
  const MatrixAlgebra& g = model.g;
  const MatrixXd s = coordinate_matrix(g, sub);
  const MatrixXd w = null_space(s.transpose() * model.killing, g.dim(), model.tol.rank);
  if (w.cols() == 0) return {};
  const MatrixXd gram = -(w.transpose() * model.killing * w);
  Eigen::SelfAdjointEigenSolver<MatrixXd> eig(gram);
  if (eig.eigenvalues().minCoeff() <= model.tol.structural)
    throw Error(ErrorKind::Consistency, "the negative Killing form is not definite on the requested complement");
  Eigen::LLT<MatrixXd> llt(gram);
  const MatrixXd ortho = llt.matrixU().solve<Eigen::OnTheRight>(w);  // w U^{-1}
  std::vector<Mat> out;
  for (int j = 0; j < ortho.cols(); ++j) out.push_back(g.element(ortho.col(j)));
  return out;
}

double natural_reductivity_check(const GroupModel& model) {
  double worst = 0;
  for (const auto& xi : model.m1) {
    std::vector<Mat> ad_xi;
    for (const auto& eta : model.m1) ad_xi.push_back(model.m1_projection(bracket(xi, eta)));
    for (std::size_t a = 0; a < model.m1.size(); ++a)
      for (std::size_t b = 0; b < model.m1.size(); ++b) {
        const double v = model.metric(ad_xi[a], model.m1[b]) + model.metric(model.m1[a], ad_xi[b]);
        worst = std::max(worst, std::abs(v));
      }
  }
  return worst;
}

ValidationReport validate(const GroupModel& model) {
  ValidationReport r;
  const auto& tol = model.tol;
  const MatrixAlgebra& g = model.g;
  const MatrixXd& kg = model.killing;

  r.closure = std::max({g.closure_residual(), model.k1.closure_residual(), model.k2.closure_residual()});
  if (r.closure > tol.structural) r.failures.push_back("the model algebras are not closed under the bracket");

  const MatrixXd c1 = coordinate_matrix(g, model.k1.basis());
  const MatrixXd c2 = coordinate_matrix(g, model.k2.basis());
  r.k1_k2_orthogonality = (c1.transpose() * kg * c2).cwiseAbs().maxCoeff();
  if (r.k1_k2_orthogonality > tol.structural) r.failures.push_back("k2 is not Killing-orthogonal to k1");

  const MatrixXd cm1 = coordinate_matrix(g, model.m1);
  for (const auto& a : model.k1.basis())
    for (int j = 0; j < cm1.cols(); ++j) {
      const Vec br = g.coordinates(bracket(a, model.m1[j]));
      r.reductivity = std::max(r.reductivity, (c1.transpose() * kg * br).cwiseAbs().maxCoeff());
    }
  if (r.reductivity > tol.structural) r.failures.push_back("[k1, m1] is not contained in m1");

  const MatrixXd metric_m1 = -(cm1.transpose() * kg * cm1);
  r.min_metric_eigenvalue = metric_m1.size() ? Eigen::SelfAdjointEigenSolver<MatrixXd>(metric_m1).eigenvalues().minCoeff() : 0;
  if (r.min_metric_eigenvalue <= 0) r.failures.push_back("the negative Killing form is not positive definite on m1");

  for (const auto& z : g.basis()) {
    const MatrixXd adz = ad_matrix(g, z);
    r.ad_invariance = std::max(r.ad_invariance, (adz.transpose() * kg + kg * adz).cwiseAbs().maxCoeff());
  }
  if (r.ad_invariance > tol.ad_invariance) r.failures.push_back("the Killing form is not ad-invariant");

  // Trace-form constant: kappa(b_i, b_j) = c Re tr(b_i b_j).
  const auto& gb = g.basis();
  MatrixXd tr(g.dim(), g.dim());
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) tr(i, j) = (gb[i] * gb[j]).trace().real();
  r.trace_form_constant = kg(0, 0) / tr(0, 0);
  r.trace_form_residual = (kg - r.trace_form_constant * tr).cwiseAbs().maxCoeff();
  if (r.trace_form_residual > tol.ad_invariance) r.failures.push_back("the Killing form is not a multiple of the trace form");

  r.natural_reductivity = natural_reductivity_check(model);
  if (r.natural_reductivity > tol.ad_invariance) r.failures.push_back("G/K1 is not naturally reductive for g = k1 + m1");

  // Centralizer of k1 in g against k2 + z(k1).
  const MatrixXd act_g = stacked_action(g, model.k1.basis(), g.basis());
  r.centralizer_dim = g.dim() - numeric_rank(act_g, tol.rank);
  const MatrixXd act_k1 = stacked_action(g, model.k1.basis(), model.k1.basis());
  const MatrixXd center_coords = null_space(act_k1, model.k1.dim(), tol.rank);
  r.expected_centralizer_dim = model.k2.dim() + static_cast<int>(center_coords.cols());
  std::vector<Mat> expected = model.k2.basis();
  for (int j = 0; j < center_coords.cols(); ++j) expected.push_back(model.k1.element(center_coords.col(j)));
  for (const auto& a : model.k1.basis())
    for (const auto& w : expected) r.centralizer_residual = std::max(r.centralizer_residual, bracket(a, w).norm());
  if (r.centralizer_dim != r.expected_centralizer_dim || r.centralizer_residual > tol.structural)
    r.failures.push_back("the centralizer of K1 is not Z_{K1} K2");

  // No nonzero invariant vector on m.
  std::vector<Mat> k = model.k1.basis();
  k.insert(k.end(), model.k2.basis().begin(), model.k2.basis().end());
  const MatrixXd act_m = stacked_action(g, k, model.m);
  r.m_rank = numeric_rank(act_m, tol.rank);
  r.invariant_vectors_on_m = static_cast<int>(model.m.size()) - r.m_rank;
  if (r.invariant_vectors_on_m != 0) r.failures.push_back("m carries a nonzero K-invariant vector");
  return r;
}

GroupModel build_model(const dynkin::FibrationRecord& rec, const Tolerances& tol) {
  if (rec.k1_components.empty() || rec.k2_components.empty())
    throw Error(ErrorKind::InvalidArgument, rec.human_label + ": both K1 and K2 must have positive dimension");

  GroupModel model;
  model.record_id = rec.record_id;
  model.tol = tol;
  const Complex i(0.0, 1.0);
  std::vector<Mat> k1, k2;
  std::string k1_name;

  if (rec.odd_grassmannian) {
    const auto [s, t] = *rec.odd_grassmannian;
    model.kind = GroupKind::SO;
    model.n = 2 * s + 2 * t + 2;
    k1 = block_basis(GroupKind::SO, model.n, 0, 2 * s + 1);
    k2 = block_basis(GroupKind::SO, model.n, 2 * s + 1, 2 * t + 1);
    model.blocks = {{0, 2 * s + 1, true}, {2 * s + 1, 2 * t + 1, false}};
    k1_name = group_name(GroupKind::SO, 2 * s + 1);
    model.g = MatrixAlgebra("so(" + std::to_string(model.n) + ")", block_basis(GroupKind::SO, model.n, 0, model.n));
    model.center_elements = {Mat::Identity(model.n, model.n), -Mat::Identity(model.n, model.n)};
  } else if (rec.bds_case && rec.ambient.family == rootsys::Family::A && rec.bds_case->n0 == 1) {
    model.kind = GroupKind::SU;
    const int n = model.n = rec.ambient.rank + 1;
    const int s = rec.bds_case->psi0 + 1, t = n - s;
    Mat circle = Mat::Zero(n, n);
    for (int j = 0; j < n; ++j) circle(j, j) = j < s ? Complex(0, t) : Complex(0, -s);
    bool upper_moves = false, lower_moves = false;
    std::vector<std::string> names;
    for (const auto* part : {&rec.k1_components, &rec.k2_components}) {
      auto& dest = part == &rec.k1_components ? k1 : k2;
      const bool is_k1 = part == &rec.k1_components;
      for (const auto& c : *part) {
        if (c.circle()) {
          dest.push_back(circle);
          if (is_k1) {
            upper_moves = lower_moves = true;
            names.push_back("U(1)");
          }
          continue;
        }
        const bool upper = std::find(c.vertices.begin(), c.vertices.end(), "a1") != c.vertices.end();
        const int offset = upper ? 0 : s, size = upper ? s : t;
        auto b = block_basis(GroupKind::SU, n, offset, size);
        dest.insert(dest.end(), b.begin(), b.end());
        if (is_k1) {
          (upper ? upper_moves : lower_moves) = true;
          names.push_back(group_name(GroupKind::SU, size));
        }
      }
    }
    k1_name = names.front();
    for (std::size_t j = 1; j < names.size(); ++j) k1_name += "x" + names[j];
    model.blocks = {{0, s, upper_moves}, {s, t, lower_moves}};
    model.g = su(n);
    for (int j = 0; j < n; ++j)
      model.center_elements.push_back(std::polar(1.0, 2.0 * M_PI * j / n) * Mat::Identity(n, n));
  } else {
    throw Error(ErrorKind::NoConcreteModel,
                "no concrete model for " + rec.human_label + " (" + rec.record_id + "): catalog-only case");
  }

  model.label = group_name(model.kind, model.n) + "/" + k1_name;
  model.k1 = MatrixAlgebra("k1", std::move(k1));
  model.k2 = MatrixAlgebra("k2", std::move(k2));
  model.killing = killing_gram(model.g);
  {
    const Mat& b0 = model.g.basis().front();
    model.trace_constant = model.killing(0, 0) / (b0 * b0).trace().real();
  }
  model.m1 = orthogonal_complement(model, model.k1.basis());
  std::vector<Mat> k = model.k1.basis();
  k.insert(k.end(), model.k2.basis().begin(), model.k2.basis().end());
  model.m = orthogonal_complement(model, k);
  model.validation = validate(model);
  return model;
}

dynkin::FibrationRecord su3_hopf_record() {
  dynkin::CatalogFilter f;
  f.types = {rootsys::SimpleType{rootsys::Family::A, 2}};
  f.odd_grassmannian_cap = 0;
  return find_record(f, "a2-a1t1--k1-a1");
}

dynkin::FibrationRecord so6_stiefel_record() { return dynkin::odd_grassmannian_record(1, 1); }

}  // namespace isosplit::liealg
