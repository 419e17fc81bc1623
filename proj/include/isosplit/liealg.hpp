#pragma once

// Concrete matrix models for the classical catalog cases.
//
// Every algebra is handled as a real Lie algebra of complex n x n matrices;
// coordinates are taken against the real vectorization (Re X, Im X). The
// Killing form is the trace of ad X o ad Y in the algebra's own basis.
//
// Supported records:
//   SU(n) / S(U(s)U(t)) splittings (the A-family hermitian cases), with the
//     circle generated by i diag(t I_s, -s I_t);
//   SO(2s+2t+2) / [SO(2s+1) x SO(2t+1)], K1 the upper block.

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "isosplit/dynkin.hpp"

namespace isosplit::liealg {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;

struct Tolerances {
  double structural = 1e-10;
  double ad_invariance = 1e-9;
  double exp_inverse = 1e-12;
  double membership = 1e-8;
  double rank = 1e-8;  // relative singular-value cutoff for numeric ranks
};

class MatrixAlgebra {
 public:
  MatrixAlgebra() = default;
  /// Throws InvalidArgument if the matrices are not square of one size or are
  /// linearly dependent over R.
  MatrixAlgebra(std::string name, std::vector<Mat> basis);

  const std::string& name() const { return name_; }
  int matrix_size() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Mat>& basis() const { return basis_; }

  /// Least-squares real coordinates; `residual` receives the Frobenius
  /// distance from X to the span.
  Vec coordinates(const Mat& X, double* residual = nullptr) const;
  Mat element(const Vec& coords) const;
  bool contains(const Mat& X, double tol) const;

  /// Largest residual of [b_i, b_j] against the span, over basis pairs.
  double closure_residual() const;

 private:
  std::string name_;
  int n_ = 0;
  std::vector<Mat> basis_;
  Eigen::MatrixXd vectorized_;  // 2 n^2 x dim
  Eigen::MatrixXd pinv_;        // dim x 2 n^2
};

Eigen::VectorXd vectorize(const Mat& X);
Mat bracket(const Mat& X, const Mat& Y);

MatrixAlgebra su(int n);
MatrixAlgebra so(int n);

/// ad(X) as a dim x dim real matrix in the algebra basis.
Eigen::MatrixXd ad_matrix(const MatrixAlgebra& a, const Mat& X);

/// Gram matrix kappa(b_i, b_j) by the ad-trace definition.
Eigen::MatrixXd killing_gram(const MatrixAlgebra& a);

/// kappa(X, Y) = tr(ad X ad Y). Throws InvalidArgument when X or Y is
/// farther than `tol` from the algebra.
double killing_form(const MatrixAlgebra& a, const Mat& X, const Mat& Y, double tol = 1e-8);

/// exp by scaling and squaring with a Pade approximant.
Mat matrix_exp(const Mat& X);
/// Principal logarithm (complex Schur based).
Mat matrix_log(const Mat& X);

enum class GroupKind { SU, SO };

/// A diagonal block of the matrix. `moves` is true when K1 acts on the block;
/// K1 then lies in the product of U(size) (SU models) or O(size) (SO models)
/// over the moving blocks, times the identity on the others.
struct Block {
  int begin = 0;
  int size = 0;
  bool moves = false;
};

struct ValidationReport {
  double closure = 0;             // max bracket residual over g, k1, k2
  double k1_k2_orthogonality = 0;  // max |kappa(k1, k2)|
  double reductivity = 0;          // max |kappa([k1, m1], k1)| normalized
  double min_metric_eigenvalue = 0;  // of -kappa on m1
  double ad_invariance = 0;
  double natural_reductivity = 0;
  int centralizer_dim = 0;          // fixed space of ad(k1) on g
  int expected_centralizer_dim = 0;  // dim k2 + dim z(k1)
  double centralizer_residual = 0;   // |ad(k1) w| over w in k2 + z(k1)
  int invariant_vectors_on_m = 0;    // fixed space of ad(k) on m
  int m_rank = 0;                    // numeric rank of the stacked ad(k)|m
  double trace_form_constant = 0;    // kappa(X, Y) = c Re tr(XY)
  double trace_form_residual = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

struct GroupModel {
  std::string record_id;
  std::string label;  // "SU(3)/SU(2)"
  GroupKind kind = GroupKind::SU;
  int n = 0;
  MatrixAlgebra g, k1, k2;
  std::vector<Mat> m1;  // -kappa orthonormal basis of k1-perp
  std::vector<Mat> m;   // -kappa orthonormal basis of (k1 + k2)-perp
  std::vector<Mat> center_elements;
  Eigen::MatrixXd killing;  // kappa Gram on g's basis
  double trace_constant = 0;  // kappa(X, Y) = trace_constant * Re tr(XY)
  std::vector<Block> blocks;
  Tolerances tol;
  ValidationReport validation;

  bool equal_rank() const;
  /// -kappa(X, Y) through the verified trace-form constant.
  double metric(const Mat& X, const Mat& Y) const;
  double norm(const Mat& X) const;
  /// Coordinates against the m1 basis (m1 is -kappa orthonormal).
  Vec m1_coordinates(const Mat& X) const;
  Mat m1_projection(const Mat& X) const;
  Mat m1_element(const Vec& coords) const;
  /// Whether `x` lies in G to the structural tolerance.
  bool in_group(const Mat& x, double tol) const;
};

/// Builds and validates the model. Throws NoConcreteModel for records outside
/// the supported families and InvalidArgument when K1 or K2 is empty.
GroupModel build_model(const dynkin::FibrationRecord& rec, const Tolerances& tol = {});

/// -kappa orthonormal basis of the kappa-orthogonal complement of `sub` in g.
/// Throws Consistency when -kappa is not definite on the complement.
std::vector<Mat> orthogonal_complement(const GroupModel& model, const std::vector<Mat>& sub);

double natural_reductivity_check(const GroupModel& model);

/// Runs every model invariant and fills in the report.
ValidationReport validate(const GroupModel& model);

/// The SU(3)/SU(2) circle-bundle record and the SO(6)/SO(3) record.
dynkin::FibrationRecord su3_hopf_record();
dynkin::FibrationRecord so6_stiefel_record();

}  // namespace isosplit::liealg
