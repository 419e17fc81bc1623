#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isosplit/rootsys.hpp"

namespace isosplit::dynkin {

using rootsys::BigInt;
using rootsys::Family;
using rootsys::Rational;
using rootsys::RootSystem;
using rootsys::RVector;
using rootsys::SimpleType;

struct Vertex {
  std::string label;  // "a3" for a simple root, "-b" for the lowest root
  Rational squared_length;
  RVector root;
};

struct Edge {
  int i = 0;
  int j = 0;
  int multiplicity = 1;  // 1, 2 or 3
};

class DynkinDiagram {
 public:
  DynkinDiagram() = default;

  /// Vertices are the given roots; bonds are 4 (a, b)^2 / (|a|^2 |b|^2).
  /// `long_squared_length` is the squared length of a long root of the
  /// ambient system. Throws Structural on a bond that is not 0..3 or that
  /// disagrees with the length ratio.
  DynkinDiagram(std::string provenance, std::vector<Vertex> vertices, Rational long_squared_length);

  const std::string& provenance() const { return provenance_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Rational& long_squared_length() const { return long_sq_; }
  int size() const { return static_cast<int>(vertices_.size()); }

  int bond(int i, int j) const;
  std::vector<int> neighbors(int i) const;
  std::optional<int> find(const std::string& label) const;

  /// Subdiagram on the listed vertices (in the listed order).
  DynkinDiagram induced(const std::vector<int>& keep) const;
  /// Connected components as vertex index lists, each sorted ascending.
  std::vector<std::vector<int>> connected_components() const;

 private:
  std::string provenance_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> bond_;
  Rational long_sq_;
};

DynkinDiagram dynkin_diagram(const RootSystem& rs);
/// The diagram of rs with the lowest root -beta appended as the last vertex.
DynkinDiagram extended_diagram(const RootSystem& rs);

enum class LengthClass { Long, Short, Mixed, None };
const char* to_string(LengthClass c) noexcept;

/// One simple factor of a subalgebra, or the circle pseudo-factor (rank 1,
/// dimension 1, Weyl order 1) when `type` is empty.
struct Component {
  std::optional<SimpleType> type;
  std::vector<std::string> vertices;
  LengthClass length = LengthClass::None;

  bool circle() const { return !type.has_value(); }
  int rank() const { return type ? type->rank : 1; }
  std::string name() const;   // "A2", "T1"
  std::string token() const;  // name plus "(short)" for short-root factors
};

Component circle_component();

/// Canonical order: family, rank, long before short before mixed, then
/// vertex labels. The circle sorts last.
bool canonical_less(const Component& a, const Component& b);
std::string join_names(const std::vector<Component>& comps);
std::string join_tokens(const std::vector<Component>& comps);

/// Recognizes every connected component as a simple type. Throws Structural
/// when a component matches no simple type.
std::vector<Component> classify_components(const DynkinDiagram& d);

struct Automorphisms {
  std::uint64_t order = 1;
  std::vector<std::vector<int>> generators;  // vertex permutations, p[i] = image of i
};

/// All vertex permutations preserving squared lengths and bonds, found by
/// exhaustive backtracking search.
Automorphisms diagram_automorphisms(const DynkinDiagram& d);

/// Every automorphism (as a vertex permutation), identity included.
std::vector<std::vector<int>> all_diagram_automorphisms(const DynkinDiagram& d);

enum class BaseClass { Hermitian, Symmetric, NearlyKaehler, FiveSymmetric, OddGrassmannian };
const char* to_string(BaseClass c) noexcept;
std::optional<BaseClass> parse_base_class(const std::string& text);

struct BdSCase {
  SimpleType ambient;
  int psi0 = 0;  // index into the simple roots
  std::string psi0_label;
  int n0 = 1;
  DynkinDiagram k_diagram;
  std::vector<Component> k_components;  // canonical order, circle last
  bool has_circle_factor = false;
  BaseClass base_class = BaseClass::Hermitian;
  std::optional<bool> quaternion_kaehler;  // set for non-simple n0 = 2 cases
  bool out_proxy_exception = false;
  /// Ambient-diagram automorphisms fixing psi0.
  std::vector<std::vector<int>> ambient_symmetries;
  /// D_G for n0 = 1, the extended diagram otherwise.
  DynkinDiagram ambient_diagram;
  BigInt euler_characteristic = 1;

  std::string label() const;    // "E8/A4A4"
  std::string case_id() const;  // "e8-a4a4"
  bool k_simple() const { return k_components.size() == 1; }
};

/// One case per admissible psi0 (n0 = 1 or n0 prime), up to the diagram
/// symmetries that produce conjugate subgroups: Aut(D_G) for n0 = 1 and the
/// automorphisms of the extended diagram for n0 > 1.
std::vector<BdSCase> bds_enumerate(const SimpleType& type);

/// Same, without identifying symmetric choices of psi0.
std::vector<BdSCase> bds_enumerate_all(const SimpleType& type);

struct FibrationRecord {
  std::string record_id;
  std::string case_id;
  std::string human_label;
  std::optional<BdSCase> bds_case;
  std::optional<std::pair<int, int>> odd_grassmannian;  // (s, t)
  SimpleType ambient;
  std::vector<Component> k1_components;
  std::vector<Component> k2_components;
  bool equal_rank = true;
  std::optional<BigInt> euler_characteristic;  // empty means zero
  std::pair<std::uint64_t, std::uint64_t> isometry_component_counts{1, 1};
  std::string swap_partner;
  bool out_proxy_exception = false;

  BaseClass base_class() const;
};

/// All ordered bipartitions of the factors of K (circle included) into two
/// nonempty parts. Empty for a simple K without circle factor.
std::vector<FibrationRecord> splittings(const BdSCase& c);

/// |W_G| / prod |W| over the factors of K. Throws InvalidArgument for a
/// record that is not equal rank, Consistency if the quotient is not an
/// integer.
BigInt euler_characteristic(const FibrationRecord& rec);

/// Dimension of the compact simple group (rank + number of roots).
int dimension(const SimpleType& t);
int dimension(const Component& c);

/// SO(2s+2t+2) / [SO(2s+1) x SO(2t+1)] split as K1 = SO(2s+1), K2 = SO(2t+1).
FibrationRecord odd_grassmannian_record(int s, int t);

struct CatalogFilter {
  std::vector<Family> families;             // empty: every family
  std::vector<SimpleType> types;            // empty: every type
  std::optional<int> rank;                  // exact rank of G
  int rank_cap = 8;                         // rank of G for the classical families
  int odd_grassmannian_cap = 8;             // s + t
  std::optional<BaseClass> base_class;
  std::optional<int> n0;
  bool simple_k_only = false;
};

/// The admissible Borel-de Siebenthal cases under the filter.
std::vector<BdSCase> catalog_cases(const CatalogFilter& filter);

/// Records of all cases under the filter plus the injected odd-Grassmannian
/// family, in canonical order, with swap partners and Euler characteristics.
std::vector<FibrationRecord> catalog(const CatalogFilter& filter);

std::string slug(const std::string& label);

}  // namespace isosplit::dynkin
