#pragma once

// Geometry of M~ = G/K1 with the normal metric from -kappa.
//
// Points are cosets xK1 given by a representative x in G. Tangent vectors at
// xK1 are written in the base frame: xi in m1 stands for d/dt x exp(t xi)K1.
// An isometry (g, k2) acts by xK1 -> g x k2^{-1} K1.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "isosplit/liealg.hpp"

namespace isosplit::homspace {

using liealg::GroupModel;
using liealg::Mat;
using liealg::MatrixAlgebra;
using liealg::Vec;

struct CosetPoint {
  Mat rep;
};

struct Isometry {
  Mat left;   // in G
  Mat right;  // in K2
  std::string description;
};

CosetPoint apply(const Isometry& iso, const CosetPoint& x);

struct KillingField {
  enum class Side { Left, Right };
  Side side = Side::Left;
  Mat source;  // in g (left) or k2 (right)
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Haar-distributed element of G: QR of a Gaussian matrix with the phases
  /// of diag(R) removed, then moved into SU(n) or SO(n).
  Mat haar(const GroupModel& model);
  /// Element of the algebra with independent standard normal coordinates.
  Mat algebra_element(const MatrixAlgebra& a, double scale = 1.0);
  Mat subgroup_element(const MatrixAlgebra& a, double scale = 1.0);
  double uniform(double lo, double hi);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// |xi| at x for a left field (the m1 part of Ad(x^{-1}) xi); for a right
/// field the m1 part of the generator itself.
double killing_length(const GroupModel& model, const KillingField& f, const CosetPoint& x);

/// x exp(t xi). Throws InvalidArgument when xi is not in m1.
CosetPoint geodesic(const GroupModel& model, const CosetPoint& x, const Mat& xi, double t);

/// dexp_{-X}(Y) = sum_k (-ad X)^k Y / (k+1)!, so that
/// d/ds exp(X + sY) at s = 0 equals exp(X) dexp_{-X}(Y).
Mat dexp(const Mat& X, const Mat& Y);

/// Logarithm of g in g with the least norm (eigenvalue angles in [-pi, pi],
/// shifted for SU(n) so that the trace vanishes).
Mat shortest_log(const GroupModel& model, const Mat& g);

struct LogResult {
  bool found = false;
  Mat xi;                     // m1 part of the best logarithm, base frame at x
  double upper_bound = 0;     // its length, +inf when nothing converged
  double residual = 0;        // |exp(L) - x^{-1} y k| of the best start
  int converged_starts = 0;
};

/// The curve t -> x exp(tL), L = shortest_log(x^{-1} y k), joins xK1 to yK1
/// for every k in K1, so |L| bounds the distance from above. Minimizes |L|
/// over k by descent from `restarts` starts (k = 1, then seeded random k)
/// and keeps the best start whose residual is below `residual_tol`. At a
/// smooth minimum L lies in m1 and x exp(tL)K1 is a geodesic. The start
/// sequence depends only on `seed`, so more restarts never raise the bound.
LogResult riemannian_log(const GroupModel& model, const CosetPoint& x, const CosetPoint& y, int restarts,
                         std::uint64_t seed, double residual_tol = 1e-8);

/// min over h of |x h - y|_F where h ranges over the block group of the model
/// (U(p) or O(p) on blocks moved by K1, identity elsewhere), which contains K1.
double chord(const GroupModel& model, const CosetPoint& x, const CosetPoint& y);

/// sqrt(c) * chord(x, y), where the metric is c times the Frobenius form.
/// A lower bound for the distance in M~.
double distance_lower_bound(const GroupModel& model, const CosetPoint& x, const CosetPoint& y);

enum class Verdict { Constant, CertifiedNonconstant, Inconclusive };
const char* to_string(Verdict v) noexcept;

struct DisplacementSettings {
  int samples = 200;
  int restarts = 4;
  std::uint64_t seed = 42;
  double log_residual = 1e-8;
  double constancy = 1e-4;  // (max upper - min upper) / mean upper
  double gap = 1e-6;        // certified gap: some upper < another lower - gap
  double zero = 1e-9;       // displacement treated as zero
};

struct DisplacementSample {
  Mat point;
  double upper = 0;
  double lower = 0;
  bool log_found = false;
};

struct DisplacementReport {
  Isometry isometry;
  std::vector<DisplacementSample> samples;
  double min_upper = 0;
  double max_upper = 0;
  double mean_upper = 0;
  double max_lower = 0;
  double relative_spread = 0;
  bool bounds_consistent = true;  // lower <= upper at every point
  Verdict verdict = Verdict::Inconclusive;
};

/// The base point 1K1 is always the first sample; the rest are Haar points.
DisplacementReport displacement_profile(const GroupModel& model, const Isometry& iso,
                                        const DisplacementSettings& settings);

struct FixedFiberResult {
  bool found = false;
  CosetPoint witness;  // x with g x K = x K
  double residual = 0;  // best off-block residual over all starts
  int starts = 0;
};

/// Searches for xK in G/K (K = K1 K2) with g xK = xK by minimizing the
/// off-block part of x^{-1} g x over x, from the identity and then from
/// seeded Haar starts.
FixedFiberResult fixed_fiber(const GroupModel& model, const Mat& g, int restarts, std::uint64_t seed,
                             double tol = 1e-8);

struct PlaneCertificate {
  Eigen::MatrixXd basis;  // n x (2s+1), orthonormal columns
  double residual = 0;    // |(I - P P^T) A P|
  std::vector<std::string> blocks;  // kinds of the Schur blocks used, in order
};

/// Invariant (2s+1)-plane of A in O(2s+2t+2) with det A = -1, assembled from
/// the real Schur form: pairs of +1 eigenvalues first, then rotation blocks,
/// then pairs of -1 eigenvalues, plus one +1 line. Throws InvalidArgument
/// when det A = +1 or the size does not match.
PlaneCertificate fixed_point_certificate(const Eigen::MatrixXd& A, int s, int t);

}  // namespace isosplit::homspace
