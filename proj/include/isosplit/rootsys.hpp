#pragma once

// Exact root-system combinatorics for the simple types A..G.
//
// Coordinates are exact rationals in an orthonormal ambient space with the
// standard dot product. Simple-root conventions (Bourbaki numbering):
//
//   A_n  R^{n+1}: a_i = e_i - e_{i+1}                      (1 <= i <= n)
//   B_n  R^n:     a_i = e_i - e_{i+1} (i < n), a_n = e_n
//   C_n  R^n:     a_i = e_i - e_{i+1} (i < n), a_n = 2 e_n
//   D_n  R^n:     a_i = e_i - e_{i+1} (i < n), a_n = e_{n-1} + e_n
//   E_8  R^8:     a_1 = (e_1 + e_8 - e_2 - ... - e_7)/2, a_2 = e_1 + e_2,
//                 a_k = e_{k-1} - e_{k-2} (3 <= k <= 8)
//   E_7, E_6:     the first 7 (resp. 6) simple roots of E_8, same ambient R^8
//   F_4  R^4:     a_1 = e_2 - e_3, a_2 = e_3 - e_4, a_3 = e_4,
//                 a_4 = (e_1 - e_2 - e_3 - e_4)/2
//   G_2  R^3:     a_1 = e_1 - e_2 (short), a_2 = -2 e_1 + e_2 + e_3 (long)
//
// Vertex labels are "a1".."an" in that order.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace isosplit::rootsys {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using RVector = std::vector<Rational>;

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f) noexcept;

struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;
  bool valid() const noexcept;

  /// Parses "A3", "e8", "G2". Throws InvalidArgument on malformed input or
  /// when the rank is outside the family bounds.
  static SimpleType parse(std::string_view text);

  auto operator<=>(const SimpleType&) const = default;
};

/// Throws InvalidArgument unless `t` satisfies the family rank bounds
/// (A >= 1, B >= 2, C >= 3, D >= 4, E 6..8, F = 4, G = 2).
void validate(const SimpleType& t);

struct Root {
  RVector coords;
  std::vector<int> coefficients;  // in the simple-root basis
  int height() const;
};

class RootSystem {
 public:
  /// Builds the root system spanned by `simple_roots`; `factors` records the
  /// simple types (one entry for an irreducible system).
  RootSystem(std::vector<SimpleType> factors, std::vector<RVector> simple_roots);

  const std::vector<SimpleType>& factors() const { return factors_; }
  bool irreducible() const { return factors_.size() == 1; }
  /// Only meaningful for irreducible systems.
  const SimpleType& type() const { return factors_.front(); }

  int rank() const { return static_cast<int>(simple_.size()); }
  int ambient_dim() const { return static_cast<int>(simple_.front().size()); }

  const std::vector<RVector>& simple_roots() const { return simple_; }
  /// cartan()[i][j] = 2 (a_i, a_j) / (a_j, a_j)
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<Root>& roots() const { return roots_; }

  std::vector<std::string> labels() const;

  Rational inner(const RVector& x, const RVector& y) const;
  RVector reflect(const RVector& v, const RVector& root) const;

  /// Coefficients of `v` in the simple-root basis, or nullopt when `v` is not
  /// in the span of the simple roots.
  std::optional<RVector> simple_coefficients(const RVector& v) const;

  std::optional<std::size_t> find_root(const RVector& v) const;

 private:
  std::vector<SimpleType> factors_;
  std::vector<RVector> simple_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> roots_;
  std::vector<std::vector<Rational>> gram_inverse_;
};

RootSystem build_root_system(const SimpleType& type);

/// A1 x A1 in R^4 with simple roots e1 - e2 and e3 - e4. Used as the
/// reducible negative control for weyl_orbit_spans.
RootSystem reducible_harness_a1a1();

struct HighestRoot {
  std::vector<int> coefficients;
  RVector vector;
};

HighestRoot highest_root(const RootSystem& rs);

/// Exponents m_j from the eigenvalue arguments 2 pi m_j / h of a Coxeter
/// element. Throws Consistency when an argument does not round to an integer
/// within `tolerance`.
std::vector<int> coxeter_exponents(const RootSystem& rs, double tolerance = 1e-9);

/// |W| = prod (m_j + 1) over the Coxeter exponents. Irreducible systems only.
BigInt weyl_order(const RootSystem& rs, double tolerance = 1e-9);

/// |W| by breadth-first closure of the group generated by the simple
/// reflections. Throws InvalidArgument when the group exceeds `max_elements`.
BigInt weyl_order_bfs(const RootSystem& rs, std::size_t max_elements = 200000);

/// True iff the Weyl orbit of `v` (ambient coordinates) spans the real span of
/// the simple roots. Throws InvalidArgument for the zero vector or for `v`
/// outside that span.
bool weyl_orbit_spans(const RootSystem& rs, const RVector& v);

/// Same test with `v` given by its coefficients in the simple-root basis.
bool weyl_orbit_spans_in_simple_basis(const RootSystem& rs, const RVector& coefficients);

/// Values {0, +-1, +-1/2, +-1/3, +-2/3, +-1/4, +-3/4}: every rational in
/// [-1, 1] with denominator at most 4. The exhaustive orbit grid for rank n is
/// the set of nonzero vectors in the simple-root basis with entries from this
/// list (13^n - 1 vectors).
std::vector<Rational> orbit_grid_values();

}  // namespace isosplit::rootsys
