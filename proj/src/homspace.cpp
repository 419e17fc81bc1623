#include "isosplit/homspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <unsupported/Eigen/NonLinearOptimization>

#include "isosplit/error.hpp"

namespace isosplit::homspace {

namespace {

using Complex = std::complex<double>;
using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Residual functor base for Eigen's Levenberg-Marquardt.
struct Functor {
  using Scalar = double;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
  using InputType = VectorXd;
  using ValueType = VectorXd;
  using JacobianType = MatrixXd;
};

Mat off_blocks(const GroupModel& model, const Mat& c) {
  Mat out = c;
  for (const auto& b : model.blocks) out.block(b.begin, b.begin, b.size, b.size).setZero();
  return out;
}

// Off-block part of x^{-1} g x with x = x0 exp(xi), xi in g.
struct FiberFunctor : Functor {
  const GroupModel& model;
  Mat g, x0;

  FiberFunctor(const GroupModel& m, Mat target, Mat start) : model(m), g(std::move(target)), x0(std::move(start)) {}
  int inputs() const { return model.g.dim(); }
  int values() const { return static_cast<int>(2 * g.size()); }

  Mat conj(const VectorXd& p, Mat* xi_out = nullptr) const {
    const Mat xi = model.g.element(p);
    if (xi_out) *xi_out = xi;
    const Mat x = x0 * liealg::matrix_exp(xi);
    return x.adjoint() * g * x;
  }
  int operator()(const VectorXd& p, VectorXd& f) const {
    f = liealg::vectorize(off_blocks(model, conj(p)));
    return 0;
  }
  int df(const VectorXd& p, MatrixXd& jac) const {
    Mat xi;
    const Mat c = conj(p, &xi);
    jac.resize(values(), inputs());
    for (int j = 0; j < inputs(); ++j) {
      const Mat w = dexp(xi, model.g.basis()[j]);
      jac.col(j) = liealg::vectorize(off_blocks(model, c * w - w * c));
    }
    return 0;
  }
};

template <class F>
void run_lm(F& functor, VectorXd& p, int max_evaluations) {
  Eigen::LevenbergMarquardt<F> lm(functor);
  lm.parameters.ftol = 1e-15;
  lm.parameters.xtol = 1e-15;
  lm.parameters.gtol = 0;
  lm.parameters.maxfev = max_evaluations;
  lm.minimize(p);
}

Mat inverse(const Mat& x) { return x.adjoint(); }

}  // namespace

CosetPoint apply(const Isometry& iso, const CosetPoint& x) { return {iso.left * x.rep * inverse(iso.right)}; }

Mat Sampler::haar(const GroupModel& model) {
  const int n = model.n;
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat z(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      z(i, j) = model.kind == liealg::GroupKind::SU ? Complex(normal(engine_), normal(engine_)) / std::sqrt(2.0)
                                                     : Complex(normal(engine_), 0.0);
  Eigen::HouseholderQR<Mat> qr(z);
  Mat q = qr.householderQ();
  const Mat rmat = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex d = rmat(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  const Complex det = q.determinant();
  if (model.kind == liealg::GroupKind::SU) {
    q *= std::polar(1.0, -std::arg(det) / n);
  } else if (det.real() < 0) {
    q.col(0) *= -1.0;
  }
  return q;
}

Mat Sampler::algebra_element(const MatrixAlgebra& a, double scale) {
  std::normal_distribution<double> normal(0.0, scale);
  Vec c(a.dim());
  for (int j = 0; j < a.dim(); ++j) c(j) = normal(engine_);
  return a.element(c);
}

Mat Sampler::subgroup_element(const MatrixAlgebra& a, double scale) {
  return liealg::matrix_exp(algebra_element(a, scale));
}

double Sampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

double killing_length(const GroupModel& model, const KillingField& f, const CosetPoint& x) {
  if (f.side == KillingField::Side::Right) return model.norm(model.m1_projection(f.source));
  return model.norm(model.m1_projection(inverse(x.rep) * f.source * x.rep));
}

CosetPoint geodesic(const GroupModel& model, const CosetPoint& x, const Mat& xi, double t) {
  double outside = 0;
  model.g.coordinates(xi, &outside);
  outside = std::max(outside, (xi - model.m1_projection(xi)).norm());
  if (outside > model.tol.membership) throw Error(ErrorKind::InvalidArgument, "geodesic: direction is not in m1");
  return {x.rep * liealg::matrix_exp(t * xi)};
}

Mat dexp(const Mat& X, const Mat& Y) {
  Mat sum = Y, term = Y;
  for (int k = 1; k < 400; ++k) {
    term = -(X * term - term * X) / static_cast<double>(k + 1);
    sum += term;
    if (term.norm() <= 1e-17 * (1.0 + sum.norm())) break;
  }
  return sum;
}

Mat shortest_log(const GroupModel& model, const Mat& g) {
  const int n = model.n;
  if (model.kind == liealg::GroupKind::SO) {
    Eigen::RealSchur<MatrixXd> schur(g.real());
    const MatrixXd& t = schur.matrixT();
    MatrixXd lambda = MatrixXd::Zero(n, n);
    int pending_minus = -1;
    for (int i = 0; i < n;) {
      if (i + 1 < n && t(i + 1, i) != 0.0) {
        const double phi = std::atan2(0.5 * (t(i + 1, i) - t(i, i + 1)), 0.5 * (t(i, i) + t(i + 1, i + 1)));
        lambda(i + 1, i) = phi;
        lambda(i, i + 1) = -phi;
        i += 2;
        continue;
      }
      if (t(i, i) < 0) {
        // -1 eigenvalues come in pairs in SO(n); each pair is a rotation by pi.
        if (pending_minus < 0) {
          pending_minus = i;
        } else {
          lambda(i, pending_minus) = M_PI;
          lambda(pending_minus, i) = -M_PI;
          pending_minus = -1;
        }
      }
      ++i;
    }
    const MatrixXd& u = schur.matrixU();
    return (u * lambda * u.transpose()).cast<Complex>();
  }
  Eigen::ComplexSchur<Mat> schur(g);
  std::vector<double> theta(n);
  double total = 0;
  for (int j = 0; j < n; ++j) total += theta[j] = std::arg(schur.matrixT()(j, j));
  // exp(i sum theta) = det g = 1, so the sum is 2 pi k; shift the k extreme
  // angles to land in su(n) with the least norm.
  long k = std::lround(total / (2 * M_PI));
  std::vector<int> order(n);
  for (int j = 0; j < n; ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return theta[a] > theta[b]; });
  for (int m = 0; m < k; ++m) theta[order[m]] -= 2 * M_PI;
  for (int m = 0; m < -k; ++m) theta[order[n - 1 - m]] += 2 * M_PI;
  Mat d = Mat::Zero(n, n);
  for (int j = 0; j < n; ++j) d(j, j) = Complex(0.0, theta[j]);
  const Mat& q = schur.matrixU();
  return q * d * q.adjoint();
}

LogResult riemannian_log(const GroupModel& model, const CosetPoint& x, const CosetPoint& y, int restarts,
                         std::uint64_t seed, double residual_tol) {
  LogResult best;
  best.upper_bound = kInf;
  best.residual = kInf;
  const Mat h = inverse(x.rep) * y.rep;
  Sampler sampler(seed);

  // Metric Gram of the k1 basis, for the k1 part of the gradient.
  const auto& kb = model.k1.basis();
  const int r = model.k1.dim();
  MatrixXd gram(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) gram(i, j) = model.metric(kb[i], kb[j]);
  const auto gram_ldlt = gram.ldlt();
  auto k1_part = [&](const Mat& l) {
    VectorXd rhs(r);
    for (int j = 0; j < r; ++j) rhs(j) = model.metric(kb[j], l);
    return model.k1.element(gram_ldlt.solve(rhs));
  };
  auto value = [&](const Mat& k, Mat& l) {
    l = shortest_log(model, h * k);
    return 0.5 * model.metric(l, l);
  };

  for (int start = 0; start < std::max(1, restarts); ++start) {
    Mat k = start == 0 ? Mat(Mat::Identity(model.n, model.n)) : sampler.subgroup_element(model.k1);
    Mat l;
    double f = value(k, l);
    // Steepest descent on k -> |log(h k)|^2 / 2 along right translations in
    // K1, with Armijo backtracking from the unit step.
    for (int iter = 0; iter < 500; ++iter) {
      const Mat p = k1_part(l);
      const double slope = model.metric(p, p);
      if (std::sqrt(slope) < 1e-12) break;
      double step = 1.0;
      bool moved = false;
      for (int back = 0; back < 40; ++back, step *= 0.5) {
        const Mat trial_k = k * liealg::matrix_exp(-step * p);
        Mat trial_l;
        const double trial_f = value(trial_k, trial_l);
        if (trial_f <= f - 1e-4 * step * slope) {
          moved = f - trial_f > 1e-16 * std::max(1.0, f);
          k = trial_k;
          l = trial_l;
          f = trial_f;
          break;
        }
      }
      if (!moved) break;
    }
    const double res = (liealg::matrix_exp(l) - h * k).norm();
    const double len = model.norm(l);
    if (res < residual_tol) {
      ++best.converged_starts;
      if (!best.found || len < best.upper_bound) {
        best.found = true;
        best.xi = model.m1_projection(l);
        best.upper_bound = len;
        best.residual = res;
      }
    } else if (!best.found && res < best.residual) {
      best.residual = res;
    }
  }
  return best;
}

double chord(const GroupModel& model, const CosetPoint& x, const CosetPoint& y) {
  // The optimal h is the polar factor of each moving diagonal block of
  // x^{-1} y and the identity on the others.
  const Mat m = inverse(x.rep) * y.rep;
  Mat h = Mat::Identity(model.n, model.n);
  for (const auto& b : model.blocks) {
    if (!b.moves) continue;
    const Mat block = m.block(b.begin, b.begin, b.size, b.size);
    if (model.kind == liealg::GroupKind::SU) {
      Eigen::JacobiSVD<Mat> svd(block, Eigen::ComputeFullU | Eigen::ComputeFullV);
      h.block(b.begin, b.begin, b.size, b.size) = svd.matrixU() * svd.matrixV().adjoint();
    } else {
      Eigen::JacobiSVD<MatrixXd> svd(block.real(), Eigen::ComputeFullU | Eigen::ComputeFullV);
      h.block(b.begin, b.begin, b.size, b.size) = (svd.matrixU() * svd.matrixV().transpose()).cast<Complex>();
    }
  }
  return (h - m).norm();
}

double distance_lower_bound(const GroupModel& model, const CosetPoint& x, const CosetPoint& y) {
  return std::sqrt(model.trace_constant) * chord(model, x, y);
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Constant: return "constant-within-tol";
    case Verdict::CertifiedNonconstant: return "certified-nonconstant";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

DisplacementReport displacement_profile(const GroupModel& model, const Isometry& iso,
                                        const DisplacementSettings& settings) {
  DisplacementReport rep;
  rep.isometry = iso;
  Sampler sampler(settings.seed);
  const std::uint64_t log_seed = settings.seed * 6364136223846793005ULL + 1442695040888963407ULL;

  bool all_found = true;
  double sum = 0;
  rep.min_upper = kInf;
  rep.max_upper = 0;
  for (int k = 0; k < settings.samples; ++k) {
    CosetPoint x{k == 0 ? Mat(Mat::Identity(model.n, model.n)) : sampler.haar(model)};
    const CosetPoint y = apply(iso, x);
    const LogResult log = riemannian_log(model, x, y, settings.restarts, log_seed, settings.log_residual);
    DisplacementSample s;
    s.point = x.rep;
    s.log_found = log.found;
    s.upper = log.upper_bound;
    s.lower = distance_lower_bound(model, x, y);
    if (s.lower > s.upper + 1e-9) rep.bounds_consistent = false;
    all_found = all_found && log.found;
    rep.min_upper = std::min(rep.min_upper, s.upper);
    rep.max_upper = std::max(rep.max_upper, s.upper);
    rep.max_lower = std::max(rep.max_lower, s.lower);
    if (log.found) sum += s.upper;
    rep.samples.push_back(std::move(s));
  }
  rep.mean_upper = settings.samples ? sum / settings.samples : 0;
  const double spread = rep.max_upper - rep.min_upper;
  rep.relative_spread = rep.mean_upper > settings.zero ? spread / rep.mean_upper : spread;

  if (rep.min_upper < rep.max_lower - settings.gap)
    rep.verdict = Verdict::CertifiedNonconstant;
  else if (all_found && (rep.max_upper <= settings.zero || rep.relative_spread < settings.constancy))
    rep.verdict = Verdict::Constant;
  else
    rep.verdict = Verdict::Inconclusive;
  return rep;
}

FixedFiberResult fixed_fiber(const GroupModel& model, const Mat& g, int restarts, std::uint64_t seed, double tol) {
  FixedFiberResult out;
  out.residual = kInf;
  Sampler sampler(seed);
  for (int start = 0; start < std::max(1, restarts); ++start) {
    ++out.starts;
    const Mat x0 = start == 0 ? Mat(Mat::Identity(model.n, model.n)) : sampler.haar(model);
    FiberFunctor functor(model, g, x0);
    VectorXd p = VectorXd::Zero(model.g.dim());
    run_lm(functor, p, 400);
    const Mat x = x0 * liealg::matrix_exp(model.g.element(p));
    const Mat c = inverse(x) * g * x;
    const double res = off_blocks(model, c).norm();
    bool in_k = true;
    if (model.kind == liealg::GroupKind::SO) {
      const auto& b = model.blocks.front();
      in_k = c.block(b.begin, b.begin, b.size, b.size).real().determinant() > 0;
    }
    if (in_k) out.residual = std::min(out.residual, res);
    if (in_k && res < tol) {
      out.found = true;
      out.witness = {x};
      out.residual = res;
      return out;
    }
  }
  return out;
}

PlaneCertificate fixed_point_certificate(const Eigen::MatrixXd& A, int s, int t) {
  const int n = 2 * s + 2 * t + 2;
  if (s < 0 || t < 0 || A.rows() != n || A.cols() != n)
    throw Error(ErrorKind::InvalidArgument, "fixed_point_certificate: matrix size must be 2s+2t+2");
  if ((A.transpose() * A - MatrixXd::Identity(n, n)).norm() > 1e-9)
    throw Error(ErrorKind::InvalidArgument, "fixed_point_certificate: matrix is not orthogonal");
  if (A.determinant() > 0)
    throw Error(ErrorKind::InvalidArgument, "fixed_point_certificate: det A = +1, the statement needs det A = -1");

  Eigen::RealSchur<MatrixXd> schur(A);
  const MatrixXd& T = schur.matrixT();
  const MatrixXd& U = schur.matrixU();

  std::vector<int> plus, minus;
  std::vector<std::pair<int, int>> rotations;
  for (int i = 0; i < n;) {
    if (i + 1 < n && T(i + 1, i) != 0.0) {
      rotations.emplace_back(i, i + 1);
      i += 2;
    } else {
      (T(i, i) > 0 ? plus : minus).push_back(i);
      ++i;
    }
  }
  if (plus.empty()) throw Error(ErrorKind::Consistency, "fixed_point_certificate: no +1 eigenvalue found");

  std::vector<std::pair<std::pair<int, int>, std::string>> pairs;
  // The last +1 is kept for the line.
  for (std::size_t k = 0; k + 2 <= plus.size() - 1; k += 2) pairs.push_back({{plus[k], plus[k + 1]}, "+1 pair"});
  for (const auto& r : rotations) pairs.push_back({r, "rotation"});
  for (std::size_t k = 0; k + 1 < minus.size(); k += 2) pairs.push_back({{minus[k], minus[k + 1]}, "-1 pair"});
  if (static_cast<int>(pairs.size()) < s)
    throw Error(ErrorKind::Consistency, "fixed_point_certificate: not enough two-dimensional blocks");

  PlaneCertificate cert;
  std::vector<int> cols;
  for (int k = 0; k < s; ++k) {
    cols.push_back(pairs[k].first.first);
    cols.push_back(pairs[k].first.second);
    cert.blocks.push_back(pairs[k].second);
  }
  cols.push_back(plus.back());
  cert.blocks.push_back("+1 line");

  cert.basis.resize(n, static_cast<int>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) cert.basis.col(static_cast<int>(k)) = U.col(cols[k]);
  const MatrixXd ap = A * cert.basis;
  cert.residual = (ap - cert.basis * (cert.basis.transpose() * ap)).norm();
  return cert;
}

}  // namespace isosplit::homspace
