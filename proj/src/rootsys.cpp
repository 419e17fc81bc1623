#include "isosplit/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <complex>
#include <deque>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include <Eigen/Dense>

#include "isosplit/error.hpp"

namespace isosplit {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Structural: return "structural";
    case ErrorKind::Consistency: return "consistency";
    case ErrorKind::NoConcreteModel: return "no-concrete-model";
    case ErrorKind::NotFound: return "not-found";
  }
  return "unknown";
}

}  // namespace isosplit

namespace isosplit::rootsys {

namespace {

Rational half(int numerator) { return Rational(numerator, 2); }

RVector unit(int dim, int i) {
  RVector v(dim, Rational(0));
  v[i] = 1;
  return v;
}

RVector sub(const RVector& x, const RVector& y) {
  RVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

RVector add(const RVector& x, const RVector& y) {
  RVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

bool is_zero(const RVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

std::vector<RVector> e8_simple_roots() {
  std::vector<RVector> s;
  RVector a1(8, half(-1));
  a1[0] = half(1);
  a1[7] = half(1);
  s.push_back(a1);
  s.push_back(add(unit(8, 0), unit(8, 1)));
  for (int k = 3; k <= 8; ++k) s.push_back(sub(unit(8, k - 2), unit(8, k - 3)));
  return s;
}

std::vector<RVector> simple_roots_for(const SimpleType& t) {
  const int n = t.rank;
  std::vector<RVector> s;
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) s.push_back(sub(unit(n + 1, i), unit(n + 1, i + 1)));
      break;
    case Family::B:
    case Family::C:
    case Family::D:
      for (int i = 0; i + 1 < n; ++i) s.push_back(sub(unit(n, i), unit(n, i + 1)));
      if (t.family == Family::B) {
        s.push_back(unit(n, n - 1));
      } else if (t.family == Family::C) {
        RVector last = unit(n, n - 1);
        last[n - 1] = 2;
        s.push_back(last);
      } else {
        s.push_back(add(unit(n, n - 2), unit(n, n - 1)));
      }
      break;
    case Family::E: {
      auto e8 = e8_simple_roots();
      s.assign(e8.begin(), e8.begin() + n);
      break;
    }
    case Family::F: {
      s.push_back(sub(unit(4, 1), unit(4, 2)));
      s.push_back(sub(unit(4, 2), unit(4, 3)));
      s.push_back(unit(4, 3));
      s.push_back(RVector{half(1), half(-1), half(-1), half(-1)});
      break;
    }
    case Family::G:
      s.push_back(RVector{1, -1, 0});
      s.push_back(RVector{-2, 1, 1});
      break;
  }
  return s;
}

// Gauss-Jordan inverse over the rationals. Throws Structural when singular.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::Structural, "simple roots are linearly dependent");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const Rational p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Consistency, "integer overflow in orbit arithmetic");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Consistency, "integer overflow in orbit arithmetic");
  return r;
}

// Incremental row-echelon basis over the integers; rows are kept primitive.
class IntegerSpan {
 public:
  explicit IntegerSpan(int dim) : dim_(dim) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  void insert(std::vector<std::int64_t> v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const int p = pivots_[k];
      if (v[p] == 0) continue;
      const std::int64_t a = rows_[k][p];
      const std::int64_t b = v[p];
      for (int j = 0; j < dim_; ++j) v[j] = checked_sub(checked_mul(a, v[j]), checked_mul(b, rows_[k][j]));
      normalize(v);
    }
    auto it = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
    if (it == v.end()) return;
    pivots_.push_back(static_cast<int>(it - v.begin()));
    rows_.push_back(std::move(v));
  }

 private:
  static void normalize(std::vector<std::int64_t>& v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
      for (auto& x : v) x /= g;
  }

  int dim_;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<int> pivots_;
};

}  // namespace

char family_letter(Family f) noexcept { return "ABCDEFG"[static_cast<int>(f)]; }

std::string SimpleType::name() const { return family_letter(family) + std::to_string(rank); }

bool SimpleType::valid() const noexcept {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

void validate(const SimpleType& t) {
  if (!t.valid())
    throw Error(ErrorKind::InvalidArgument, "no simple type " + t.name() + " (rank outside the family bounds)");
}

SimpleType SimpleType::parse(std::string_view text) {
  if (text.size() < 2) throw Error(ErrorKind::InvalidArgument, "malformed simple type '" + std::string(text) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (letter < 'A' || letter > 'G')
    throw Error(ErrorKind::InvalidArgument, "unknown family in '" + std::string(text) + "'");
  int rank = 0;
  auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), rank);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorKind::InvalidArgument, "malformed rank in '" + std::string(text) + "'");
  SimpleType t{static_cast<Family>(letter - 'A'), rank};
  validate(t);
  return t;
}

int Root::height() const { return std::accumulate(coefficients.begin(), coefficients.end(), 0); }

RootSystem::RootSystem(std::vector<SimpleType> factors, std::vector<RVector> simple_roots)
    : factors_(std::move(factors)), simple_(std::move(simple_roots)) {
  const std::size_t n = simple_.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "root system needs at least one simple root");

  std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = inner(simple_[i], simple_[j]);
  gram_inverse_ = invert(gram);

  cartan_.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational c = 2 * gram[i][j] / gram[j][j];
      if (boost::multiprecision::denominator(c) != 1)
        throw Error(ErrorKind::Structural, "non-integral Cartan entry");
      cartan_[i][j] = static_cast<int>(boost::multiprecision::numerator(c));
    }
  }

  // Closure of the simple roots under the simple reflections.
  std::set<RVector> seen(simple_.begin(), simple_.end());
  std::deque<RVector> queue(simple_.begin(), simple_.end());
  while (!queue.empty()) {
    RVector v = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : simple_) {
      RVector w = reflect(v, a);
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }

  for (const auto& v : seen) {
    auto c = simple_coefficients(v);
    Root r;
    r.coords = v;
    for (const auto& x : *c) {
      if (boost::multiprecision::denominator(x) != 1)
        throw Error(ErrorKind::Structural, "root with non-integral simple coefficients");
      r.coefficients.push_back(static_cast<int>(boost::multiprecision::numerator(x)));
    }
    roots_.push_back(std::move(r));
  }
  // Positive roots by increasing height, then negatives.
  std::stable_sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
    const int ha = a.height(), hb = b.height();
    if ((ha > 0) != (hb > 0)) return ha > 0;
    return ha > 0 ? ha < hb : ha > hb;
  });
}

std::vector<std::string> RootSystem::labels() const {
  std::vector<std::string> out;
  for (int i = 1; i <= rank(); ++i) out.push_back("a" + std::to_string(i));
  return out;
}

Rational RootSystem::inner(const RVector& x, const RVector& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

RVector RootSystem::reflect(const RVector& v, const RVector& root) const {
  const Rational f = 2 * inner(v, root) / inner(root, root);
  RVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] - f * root[i];
  return r;
}

std::optional<RVector> RootSystem::simple_coefficients(const RVector& v) const {
  if (v.size() != simple_.front().size())
    throw Error(ErrorKind::InvalidArgument, "vector has the wrong ambient dimension");
  const std::size_t n = simple_.size();
  std::vector<Rational> rhs(n);
  for (std::size_t j = 0; j < n; ++j) rhs[j] = inner(v, simple_[j]);
  RVector c(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i] += gram_inverse_[i][j] * rhs[j];
  RVector back(v.size(), Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < v.size(); ++k) back[k] += c[i] * simple_[i][k];
  if (back != v) return std::nullopt;
  return c;
}

std::optional<std::size_t> RootSystem::find_root(const RVector& v) const {
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i].coords == v) return i;
  return std::nullopt;
}

RootSystem build_root_system(const SimpleType& type) {
  validate(type);
  return RootSystem({type}, simple_roots_for(type));
}

RootSystem reducible_harness_a1a1() {
  return RootSystem({SimpleType{Family::A, 1}, SimpleType{Family::A, 1}},
                    {RVector{1, -1, 0, 0}, RVector{0, 0, 1, -1}});
}

HighestRoot highest_root(const RootSystem& rs) {
  if (!rs.irreducible()) throw Error(ErrorKind::InvalidArgument, "highest root needs an irreducible system");
  const Root* best = &rs.roots().front();
  for (const auto& r : rs.roots())
    if (r.height() > best->height()) best = &r;
  // Dominance: every root is below the candidate coefficientwise.
  for (const auto& r : rs.roots())
    for (std::size_t i = 0; i < r.coefficients.size(); ++i)
      if (r.coefficients[i] > best->coefficients[i])
        throw Error(ErrorKind::Structural, "no root dominates all others");
  for (const auto& a : rs.simple_roots())
    if (rs.find_root(add(best->coords, a)))
      throw Error(ErrorKind::Structural, "highest root plus a simple root is a root");
  return HighestRoot{best->coefficients, best->coords};
}

std::vector<int> coxeter_exponents(const RootSystem& rs, double tolerance) {
  if (!rs.irreducible()) throw Error(ErrorKind::InvalidArgument, "Coxeter exponents need an irreducible system");
  const int n = rs.rank();
  const auto& a = rs.cartan();
  // s_i in the simple-root basis: column j is e_j - A_{ji} e_i.
  Eigen::MatrixXd c = Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXd s = Eigen::MatrixXd::Identity(n, n);
    for (int j = 0; j < n; ++j) s(i, j) -= a[j][i];
    c = c * s;
  }
  const double h = static_cast<double>(rs.roots().size()) / n;
  Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
  std::vector<int> exps;
  for (int k = 0; k < n; ++k) {
    const std::complex<double> lambda = es.eigenvalues()(k);
    double arg = std::arg(lambda);
    if (arg <= 0) arg += 2 * std::numbers::pi;
    const double m = arg * h / (2 * std::numbers::pi);
    const double rounded = std::round(m);
    if (std::abs(m - rounded) > tolerance || std::abs(std::abs(lambda) - 1.0) > tolerance) {
      std::ostringstream os;
      os << "Coxeter eigenvalue does not give an integral exponent for " << rs.type().name()
         << " (m = " << m << ")";
      throw Error(ErrorKind::Consistency, os.str());
    }
    exps.push_back(static_cast<int>(rounded));
  }
  std::sort(exps.begin(), exps.end());
  return exps;
}

BigInt weyl_order(const RootSystem& rs, double tolerance) {
  BigInt order = 1;
  for (int m : coxeter_exponents(rs, tolerance)) order *= (m + 1);
  return order;
}

BigInt weyl_order_bfs(const RootSystem& rs, std::size_t max_elements) {
  const int n = rs.rank();
  const auto& a = rs.cartan();
  using Mat = std::vector<int>;  // row-major n x n
  std::vector<Mat> gens;
  for (int i = 0; i < n; ++i) {
    Mat s(n * n, 0);
    for (int j = 0; j < n; ++j) s[j * n + j] = 1;
    for (int j = 0; j < n; ++j) s[i * n + j] -= a[j][i];
    gens.push_back(std::move(s));
  }
  auto mul = [n](const Mat& x, const Mat& y) {
    Mat r(n * n, 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const int xik = x[i * n + k];
        if (xik == 0) continue;
        for (int j = 0; j < n; ++j) r[i * n + j] += xik * y[k * n + j];
      }
    return r;
  };
  Mat id(n * n, 0);
  for (int i = 0; i < n; ++i) id[i * n + i] = 1;
  std::set<Mat> seen{id};
  std::deque<Mat> queue{id};
  while (!queue.empty()) {
    Mat g = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      Mat h = mul(g, s);
      if (seen.insert(h).second) {
        if (seen.size() > max_elements)
          throw Error(ErrorKind::InvalidArgument, "Weyl group exceeds the BFS element budget");
        queue.push_back(std::move(h));
      }
    }
  }
  return BigInt(seen.size());
}

bool weyl_orbit_spans_in_simple_basis(const RootSystem& rs, const RVector& coefficients) {
  const int n = rs.rank();
  if (static_cast<int>(coefficients.size()) != n)
    throw Error(ErrorKind::InvalidArgument, "coefficient vector has the wrong length");
  if (is_zero(coefficients)) throw Error(ErrorKind::InvalidArgument, "Weyl orbit of the zero vector");

  // Clear denominators; the reflections act by integer matrices in this basis.
  BigInt lcm = 1;
  for (const auto& x : coefficients) {
    const BigInt d = boost::multiprecision::denominator(x);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<std::int64_t> start(n);
  for (int i = 0; i < n; ++i) {
    const BigInt v = boost::multiprecision::numerator(Rational(coefficients[i] * lcm));
    start[i] = static_cast<std::int64_t>(v);
  }

  const auto& a = rs.cartan();
  IntegerSpan span(n);
  std::set<std::vector<std::int64_t>> seen{start};
  std::deque<std::vector<std::int64_t>> queue{start};
  span.insert(start);
  while (!queue.empty() && span.rank() < n) {
    auto v = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      std::int64_t pairing = 0;
      for (int j = 0; j < n; ++j) pairing += checked_mul(v[j], a[j][i]);
      if (pairing == 0) continue;
      auto w = v;
      w[i] = checked_sub(w[i], pairing);
      if (seen.insert(w).second) {
        span.insert(w);
        queue.push_back(std::move(w));
      }
    }
  }
  return span.rank() == n;
}

bool weyl_orbit_spans(const RootSystem& rs, const RVector& v) {
  if (is_zero(v)) throw Error(ErrorKind::InvalidArgument, "Weyl orbit of the zero vector");
  auto c = rs.simple_coefficients(v);
  if (!c) throw Error(ErrorKind::InvalidArgument, "vector is outside the span of the simple roots");
  return weyl_orbit_spans_in_simple_basis(rs, *c);
}

std::vector<Rational> orbit_grid_values() {
  std::set<Rational> values;
  for (int q = 1; q <= 4; ++q)
    for (int p = -q; p <= q; ++p) values.insert(Rational(p, q));
  return {values.begin(), values.end()};
}

}  // namespace isosplit::rootsys
