#include "isosplit/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "isosplit/error.hpp"

namespace isosplit::dynkin {

namespace {

Rational max_squared_length(const RootSystem& rs) {
  Rational best = 0;
  for (const auto& a : rs.simple_roots()) best = std::max(best, rs.inner(a, a));
  return best;
}

Vertex make_vertex(const RootSystem& rs, std::string label, RVector root) {
  Rational sq = rs.inner(root, root);
  return Vertex{std::move(label), sq, std::move(root)};
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

LengthClass length_class(const DynkinDiagram& d, const std::vector<int>& comp) {
  bool any_long = false, any_short = false;
  for (int v : comp) {
    if (d.vertices()[v].squared_length == d.long_squared_length())
      any_long = true;
    else
      any_short = true;
  }
  if (any_long && any_short) return LengthClass::Mixed;
  return any_short ? LengthClass::Short : LengthClass::Long;
}

[[noreturn]] void unrecognized(const DynkinDiagram& d, const std::vector<int>& comp, const std::string& why) {
  std::string names;
  for (int v : comp) names += d.vertices()[v].label + " ";
  throw Error(ErrorKind::Structural, "component {" + names + "} of " + d.provenance() + " is not a simple type: " + why);
}

SimpleType recognize(const DynkinDiagram& d, const std::vector<int>& comp) {
  const int n = static_cast<int>(comp.size());
  if (n == 1) return {Family::A, 1};

  std::map<int, std::vector<int>> adj;
  int edges = 0, max_bond = 0, doubles = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const int m = d.bond(comp[a], comp[b]);
      if (m == 0) continue;
      adj[a].push_back(b);
      adj[b].push_back(a);
      ++edges;
      max_bond = std::max(max_bond, m);
      if (m == 2) ++doubles;
    }
  }
  if (edges != n - 1) unrecognized(d, comp, "contains a cycle");
  auto degree = [&](int a) { return static_cast<int>(adj[a].size()); };
  const auto& sq = [&](int a) -> const Rational& { return d.vertices()[comp[a]].squared_length; };

  // Walk a path from one endpoint; returns empty if some degree exceeds 2.
  auto path_order = [&]() {
    std::vector<int> order;
    int start = -1;
    for (int a = 0; a < n; ++a) {
      if (degree(a) > 2) return std::vector<int>{};
      if (degree(a) == 1 && start < 0) start = a;
    }
    int prev = -1, cur = start;
    while (cur >= 0) {
      order.push_back(cur);
      int next = -1;
      for (int b : adj[cur])
        if (b != prev) next = b;
      prev = cur;
      cur = next;
    }
    return order;
  };

  if (max_bond == 3) {
    if (n != 2) unrecognized(d, comp, "triple bond in a component of size > 2");
    return {Family::G, 2};
  }
  if (max_bond == 2) {
    if (doubles != 1) unrecognized(d, comp, "more than one double bond");
    auto order = path_order();
    if (order.empty()) unrecognized(d, comp, "branch point with a double bond");
    if (n == 2) return {Family::B, 2};
    int k = -1;
    for (int p = 0; p + 1 < n; ++p)
      if (d.bond(comp[order[p]], comp[order[p + 1]]) == 2) k = p;
    if (n == 4 && k == 1) {
      if (sq(order[0]) != sq(order[1]) || sq(order[2]) != sq(order[3]))
        unrecognized(d, comp, "F4 length pattern violated");
      return {Family::F, 4};
    }
    if (k == 0) std::reverse(order.begin(), order.end());
    else if (k != n - 2) unrecognized(d, comp, "double bond in the interior");
    const Rational& end = sq(order[n - 1]);
    for (int p = 0; p + 1 < n; ++p)
      if (sq(order[p]) != sq(order[0])) unrecognized(d, comp, "B/C length pattern violated");
    if (end < sq(order[0])) return {Family::B, n};
    return {Family::C, n};
  }

  for (int a = 1; a < n; ++a)
    if (sq(a) != sq(0)) unrecognized(d, comp, "simply laced component with two root lengths");
  if (!path_order().empty()) return {Family::A, n};

  int branch = -1;
  for (int a = 0; a < n; ++a) {
    if (degree(a) == 3) {
      if (branch >= 0) unrecognized(d, comp, "two branch points");
      branch = a;
    } else if (degree(a) > 3) {
      unrecognized(d, comp, "vertex of degree > 3");
    }
  }
  std::vector<int> arms;
  for (int b : adj[branch]) {
    int len = 1, prev = branch, cur = b;
    while (true) {
      int next = -1;
      for (int c : adj[cur])
        if (c != prev) next = c;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {Family::E, n};
  unrecognized(d, comp, "branch arms do not match D or E");
}

int length_rank(LengthClass c) {
  switch (c) {
    case LengthClass::Long: return 0;
    case LengthClass::Short: return 1;
    case LengthClass::Mixed: return 2;
    case LengthClass::None: return 3;
  }
  return 4;
}

std::vector<std::vector<int>> closure(const std::vector<std::vector<int>>& gens, std::size_t n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> seen{id};
  std::deque<std::vector<int>> queue{id};
  while (!queue.empty()) {
    auto p = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      std::vector<int> q(n);
      for (std::size_t i = 0; i < n; ++i) q[i] = g[p[i]];
      if (seen.insert(q).second) queue.push_back(std::move(q));
    }
  }
  return {seen.begin(), seen.end()};
}

std::string record_token(const std::vector<Component>& all, const Component& c, std::size_t index_in_all) {
  std::string base = c.name();
  std::transform(base.begin(), base.end(), base.begin(), [](unsigned char ch) { return std::tolower(ch); });
  int same = 0, position = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].name() != c.name()) continue;
    ++same;
    if (i <= index_in_all) ++position;
  }
  if (same > 1) base += "." + std::to_string(position);
  return base;
}

BigInt weyl_order_of(const SimpleType& t) { return rootsys::weyl_order(rootsys::build_root_system(t)); }

std::optional<bool> quaternion_kaehler(const SimpleType& g, int k, bool k_simple) {
  if (k_simple) return std::nullopt;
  const int n = g.rank;
  switch (g.family) {
    case Family::B: {
      if (n == 2) return true;  // Sp(2)/Sp(1)Sp(1)
      const int s = std::min(2 * k, 2 * n + 1 - 2 * k);
      return s == 3 || s == 4;
    }
    case Family::D: {
      const int s = std::min(2 * k, 2 * n - 2 * k);
      return s == 3 || s == 4;
    }
    case Family::C: return std::min(k, n - k) == 1;
    case Family::E:
    case Family::F:
    case Family::G: return true;
    case Family::A: return std::nullopt;
  }
  return std::nullopt;
}

// Listed cases where Out(G, K1) may differ from its diagram proxy:
// orthocomplementation of SU(2k), SO(2k), Sp(2k) over the half/half split,
// and E6/A2A2A2.
bool out_proxy_exception(const SimpleType& g, int k) {
  const int n = g.rank;
  switch (g.family) {
    case Family::A: return n + 1 == 2 * k;
    case Family::B: return n == 2 && k == 2;
    case Family::C:
    case Family::D: return n % 2 == 0 && k == n / 2;
    case Family::E: return n == 6 && k == 4;
    default: return false;
  }
}

std::uint64_t proxy_count(const BdSCase& c, const DynkinDiagram& ambient, const std::vector<Component>& part) {
  std::set<int> idx;
  for (const auto& comp : part)
    for (const auto& label : comp.vertices) idx.insert(*ambient.find(label));
  std::uint64_t count = 0;
  for (const auto& sigma : c.ambient_symmetries) {
    std::set<int> image;
    for (int i : idx) image.insert(sigma[i]);
    if (image == idx) ++count;
  }
  return count;
}

BdSCase make_case(const RootSystem& rs, const rootsys::HighestRoot& hr, const DynkinDiagram& ambient, int i) {
  BdSCase c;
  c.ambient = rs.type();
  c.psi0 = i;
  c.psi0_label = ambient.vertices()[i].label;
  c.n0 = hr.coefficients[i];
  std::vector<int> keep;
  for (int v = 0; v < ambient.size(); ++v)
    if (v != i) keep.push_back(v);
  c.k_diagram = ambient.induced(keep);
  c.k_components = classify_components(c.k_diagram);
  c.has_circle_factor = c.n0 == 1;
  if (c.has_circle_factor) c.k_components.push_back(circle_component());
  switch (c.n0) {
    case 1: c.base_class = BaseClass::Hermitian; break;
    case 2: c.base_class = BaseClass::Symmetric; break;
    case 3: c.base_class = BaseClass::NearlyKaehler; break;
    case 5: c.base_class = BaseClass::FiveSymmetric; break;
    default: throw Error(ErrorKind::Structural, "admissible coefficient outside {1,2,3,5}");
  }
  if (c.n0 == 2) c.quaternion_kaehler = quaternion_kaehler(c.ambient, i + 1, c.k_simple());
  c.out_proxy_exception = out_proxy_exception(c.ambient, i + 1);
  for (auto& sigma : all_diagram_automorphisms(ambient))
    if (sigma[i] == i) c.ambient_symmetries.push_back(std::move(sigma));
  c.ambient_diagram = ambient;
  BigInt wk = 1;
  for (const auto& comp : c.k_components)
    if (comp.type) wk *= weyl_order_of(*comp.type);
  const BigInt wg = rootsys::weyl_order(rs);
  if (wg % wk != 0) throw Error(ErrorKind::Consistency, "|W_K| does not divide |W_G| for " + c.label());
  c.euler_characteristic = wg / wk;
  return c;
}

std::vector<SimpleType> types_for(const CatalogFilter& f) {
  std::vector<SimpleType> all;
  for (int n = 1; n <= f.rank_cap; ++n) all.push_back({Family::A, n});
  for (int n = 2; n <= f.rank_cap; ++n) all.push_back({Family::B, n});
  for (int n = 3; n <= f.rank_cap; ++n) all.push_back({Family::C, n});
  for (int n = 4; n <= f.rank_cap; ++n) all.push_back({Family::D, n});
  for (int n = 6; n <= 8; ++n) all.push_back({Family::E, n});
  all.push_back({Family::F, 4});
  all.push_back({Family::G, 2});
  std::vector<SimpleType> out;
  for (const auto& t : all) {
    if (!f.families.empty() && std::find(f.families.begin(), f.families.end(), t.family) == f.families.end()) continue;
    if (!f.types.empty() && std::find(f.types.begin(), f.types.end(), t) == f.types.end()) continue;
    if (f.rank && t.rank != *f.rank) continue;
    out.push_back(t);
  }
  return out;
}

bool ambient_passes(const CatalogFilter& f, const SimpleType& t) {
  if (!f.families.empty() && std::find(f.families.begin(), f.families.end(), t.family) == f.families.end()) return false;
  if (!f.types.empty() && std::find(f.types.begin(), f.types.end(), t) == f.types.end()) return false;
  if (f.rank && t.rank != *f.rank) return false;
  return true;
}

}  // namespace

DynkinDiagram::DynkinDiagram(std::string provenance, std::vector<Vertex> vertices, Rational long_squared_length)
    : provenance_(std::move(provenance)), vertices_(std::move(vertices)), long_sq_(std::move(long_squared_length)) {
  const int n = size();
  bond_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& a = vertices_[i];
      const auto& b = vertices_[j];
      Rational ip = 0;
      for (std::size_t k = 0; k < a.root.size(); ++k) ip += a.root[k] * b.root[k];
      if (ip == 0) continue;
      const Rational m = 4 * ip * ip / (a.squared_length * b.squared_length);
      if (ip > 0 || boost::multiprecision::denominator(m) != 1 || m > 3)
        throw Error(ErrorKind::Structural, "vertices " + a.label + ", " + b.label + " do not form a simple bond");
      const int mult = static_cast<int>(boost::multiprecision::numerator(m));
      const Rational ratio = std::max(a.squared_length, b.squared_length) / std::min(a.squared_length, b.squared_length);
      if (ratio != mult)
        throw Error(ErrorKind::Structural, "bond " + a.label + "-" + b.label + " disagrees with the length ratio");
      bond_[i][j] = bond_[j][i] = mult;
      edges_.push_back({i, j, mult});
    }
  }
}

int DynkinDiagram::bond(int i, int j) const { return bond_[i][j]; }

std::vector<int> DynkinDiagram::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j)
    if (bond_[i][j] > 0) out.push_back(j);
  return out;
}

std::optional<int> DynkinDiagram::find(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (vertices_[i].label == label) return i;
  return std::nullopt;
}

DynkinDiagram DynkinDiagram::induced(const std::vector<int>& keep) const {
  std::vector<Vertex> vs;
  for (int i : keep) vs.push_back(vertices_.at(i));
  return DynkinDiagram(provenance_, std::move(vs), long_sq_);
}

std::vector<std::vector<int>> DynkinDiagram::connected_components() const {
  std::vector<int> comp_of(size(), -1);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < size(); ++s) {
    if (comp_of[s] >= 0) continue;
    std::vector<int> members;
    std::deque<int> queue{s};
    comp_of[s] = static_cast<int>(comps.size());
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      members.push_back(v);
      for (int w : neighbors(v)) {
        if (comp_of[w] >= 0) continue;
        comp_of[w] = comp_of[s];
        queue.push_back(w);
      }
    }
    std::sort(members.begin(), members.end());
    comps.push_back(std::move(members));
  }
  return comps;
}

DynkinDiagram dynkin_diagram(const RootSystem& rs) {
  std::vector<Vertex> vs;
  const auto labels = rs.labels();
  for (int i = 0; i < rs.rank(); ++i) vs.push_back(make_vertex(rs, labels[i], rs.simple_roots()[i]));
  return DynkinDiagram(rs.irreducible() ? rs.type().name() : "reducible", std::move(vs), max_squared_length(rs));
}

DynkinDiagram extended_diagram(const RootSystem& rs) {
  std::vector<Vertex> vs;
  const auto labels = rs.labels();
  for (int i = 0; i < rs.rank(); ++i) vs.push_back(make_vertex(rs, labels[i], rs.simple_roots()[i]));
  RVector lowest = rootsys::highest_root(rs).vector;
  for (auto& x : lowest) x = -x;
  vs.push_back(make_vertex(rs, "-b", lowest));
  return DynkinDiagram("extended " + rs.type().name(), std::move(vs), max_squared_length(rs));
}

const char* to_string(LengthClass c) noexcept {
  switch (c) {
    case LengthClass::Long: return "long";
    case LengthClass::Short: return "short";
    case LengthClass::Mixed: return "mixed";
    case LengthClass::None: return "none";
  }
  return "none";
}

std::string Component::name() const { return type ? type->name() : std::string("T1"); }

std::string Component::token() const { return length == LengthClass::Short ? name() + "(short)" : name(); }

Component circle_component() { return Component{std::nullopt, {}, LengthClass::None}; }

bool canonical_less(const Component& a, const Component& b) {
  if (a.circle() != b.circle()) return b.circle();
  if (a.circle()) return false;
  if (a.type->family != b.type->family) return a.type->family < b.type->family;
  if (a.type->rank != b.type->rank) return a.type->rank < b.type->rank;
  if (a.length != b.length) return length_rank(a.length) < length_rank(b.length);
  return a.vertices < b.vertices;
}

std::string join_names(const std::vector<Component>& comps) {
  std::string s;
  for (const auto& c : comps) s += c.name();
  return s;
}

std::string join_tokens(const std::vector<Component>& comps) {
  std::string s;
  for (const auto& c : comps) s += c.token();
  return s;
}

std::vector<Component> classify_components(const DynkinDiagram& d) {
  std::vector<Component> out;
  for (const auto& comp : d.connected_components()) {
    Component c;
    c.type = recognize(d, comp);
    for (int v : comp) c.vertices.push_back(d.vertices()[v].label);
    c.length = length_class(d, comp);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<std::vector<int>> all_diagram_automorphisms(const DynkinDiagram& d) {
  const int n = d.size();
  std::vector<std::vector<int>> found;
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  std::vector<int> degree(n);
  for (int i = 0; i < n; ++i) degree[i] = static_cast<int>(d.neighbors(i).size());

  std::function<void(int)> extend = [&](int i) {
    if (i == n) {
      found.push_back(image);
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c] || degree[c] != degree[i]) continue;
      if (d.vertices()[c].squared_length != d.vertices()[i].squared_length) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = d.bond(i, j) == d.bond(c, image[j]);
      if (!ok) continue;
      used[c] = true;
      image[i] = c;
      extend(i + 1);
      used[c] = false;
      image[i] = -1;
    }
  };
  extend(0);
  return found;
}

Automorphisms diagram_automorphisms(const DynkinDiagram& d) {
  auto all = all_diagram_automorphisms(d);
  Automorphisms out;
  out.order = all.size();
  std::set<std::vector<int>> generated;
  std::vector<int> id(d.size());
  std::iota(id.begin(), id.end(), 0);
  generated.insert(id);
  for (const auto& p : all) {
    if (generated.count(p)) continue;
    out.generators.push_back(p);
    auto group = closure(out.generators, d.size());
    generated = std::set<std::vector<int>>(group.begin(), group.end());
  }
  return out;
}

const char* to_string(BaseClass c) noexcept {
  switch (c) {
    case BaseClass::Hermitian: return "hermitian";
    case BaseClass::Symmetric: return "symmetric";
    case BaseClass::NearlyKaehler: return "nearly-kaehler";
    case BaseClass::FiveSymmetric: return "5-symmetric";
    case BaseClass::OddGrassmannian: return "odd-grassmannian";
  }
  return "unknown";
}

std::optional<BaseClass> parse_base_class(const std::string& text) {
  for (auto c : {BaseClass::Hermitian, BaseClass::Symmetric, BaseClass::NearlyKaehler, BaseClass::FiveSymmetric,
                 BaseClass::OddGrassmannian})
    if (text == to_string(c)) return c;
  if (text == "rank-deficient") return BaseClass::OddGrassmannian;
  return std::nullopt;
}

std::string BdSCase::label() const { return ambient.name() + "/" + join_names(k_components); }

std::string BdSCase::case_id() const { return slug(label()); }

std::vector<BdSCase> bds_enumerate_all(const SimpleType& type) {
  auto rs = rootsys::build_root_system(type);
  const auto hr = rootsys::highest_root(rs);
  const auto plain = dynkin_diagram(rs);
  std::optional<DynkinDiagram> extended;
  std::vector<BdSCase> out;
  for (int i = 0; i < rs.rank(); ++i) {
    const int n0 = hr.coefficients[i];
    if (n0 == 1) {
      out.push_back(make_case(rs, hr, plain, i));
    } else if (is_prime(n0)) {
      if (!extended) extended = extended_diagram(rs);
      out.push_back(make_case(rs, hr, *extended, i));
    }
  }
  return out;
}

std::vector<BdSCase> bds_enumerate(const SimpleType& type) {
  auto all = bds_enumerate_all(type);
  std::vector<BdSCase> out;
  for (auto& c : all) {
    // Keep psi0 only if it is the smallest index in its orbit under the full
    // ambient diagram symmetry group.
    bool representative = true;
    for (const auto& sigma : all_diagram_automorphisms(c.ambient_diagram))
      if (sigma[c.psi0] < c.psi0) representative = false;
    if (representative) out.push_back(std::move(c));
  }
  return out;
}

BaseClass FibrationRecord::base_class() const {
  return bds_case ? bds_case->base_class : BaseClass::OddGrassmannian;
}

int dimension(const SimpleType& t) {
  auto rs = rootsys::build_root_system(t);
  return t.rank + static_cast<int>(rs.roots().size());
}

int dimension(const Component& c) { return c.type ? dimension(*c.type) : 1; }

BigInt euler_characteristic(const FibrationRecord& rec) {
  if (!rec.equal_rank)
    throw Error(ErrorKind::InvalidArgument, "Euler characteristic of " + rec.human_label + " is zero (rank deficient)");
  BigInt wk = 1;
  for (const auto* part : {&rec.k1_components, &rec.k2_components})
    for (const auto& c : *part)
      if (c.type) wk *= weyl_order_of(*c.type);
  const BigInt wg = weyl_order_of(rec.ambient);
  if (wg % wk != 0)
    throw Error(ErrorKind::Consistency, "|W_K| does not divide |W_G| for " + rec.human_label);
  return wg / wk;
}

std::vector<FibrationRecord> splittings(const BdSCase& c) {
  const auto& comps = c.k_components;
  const std::size_t m = comps.size();
  std::vector<FibrationRecord> out;
  if (m < 2) return out;
  const auto& ambient = c.ambient_diagram;
  const std::string case_id = c.case_id();
  const unsigned full = (1u << m) - 1;

  auto id_for = [&](unsigned mask) {
    std::string id = case_id + "--k1";
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) id += "-" + record_token(comps, comps[i], i);
    return id;
  };

  for (unsigned mask = 1; mask < full; ++mask) {
    FibrationRecord r;
    r.case_id = case_id;
    r.human_label = c.label();
    r.bds_case = c;
    r.ambient = c.ambient;
    for (std::size_t i = 0; i < m; ++i) (mask & (1u << i) ? r.k1_components : r.k2_components).push_back(comps[i]);
    r.equal_rank = true;
    r.record_id = id_for(mask);
    r.swap_partner = id_for(full ^ mask);
    r.out_proxy_exception = c.out_proxy_exception;
    r.isometry_component_counts = {proxy_count(c, ambient, r.k1_components), proxy_count(c, ambient, r.k2_components)};
    r.euler_characteristic = c.euler_characteristic;
    out.push_back(std::move(r));
  }
  return out;
}

FibrationRecord odd_grassmannian_record(int s, int t) {
  if (s < 1 || t < 1) throw Error(ErrorKind::InvalidArgument, "odd Grassmannian family needs s, t >= 1");
  const int n = s + t + 1;
  FibrationRecord r;
  r.ambient = n == 3 ? SimpleType{Family::A, 3} : SimpleType{Family::D, n};
  auto block = [](int k) {
    Component c;
    c.type = k == 1 ? SimpleType{Family::A, 1} : SimpleType{Family::B, k};
    c.length = LengthClass::None;
    return c;
  };
  r.k1_components = {block(s)};
  r.k2_components = {block(t)};
  std::vector<Component> all{block(s), block(t)};
  std::sort(all.begin(), all.end(), canonical_less);
  r.human_label = r.ambient.name() + "/" + join_names(all);
  r.case_id = slug(r.human_label);
  auto lower = [](std::string x) {
    std::transform(x.begin(), x.end(), x.begin(), [](unsigned char ch) { return std::tolower(ch); });
    return x;
  };
  r.record_id = r.case_id + "--k1-" + lower(block(s).name());
  r.swap_partner = r.case_id + "--k1-" + lower(block(t).name());
  r.odd_grassmannian = std::make_pair(s, t);
  r.equal_rank = false;
  auto own_symmetries = [](const Component& c) {
    return diagram_automorphisms(dynkin_diagram(rootsys::build_root_system(*c.type))).order;
  };
  r.isometry_component_counts = {own_symmetries(r.k1_components[0]), own_symmetries(r.k2_components[0])};
  r.out_proxy_exception = s == t;
  return r;
}

std::vector<BdSCase> catalog_cases(const CatalogFilter& filter) {
  std::vector<BdSCase> out;
  if (filter.base_class == BaseClass::OddGrassmannian) return out;
  for (const auto& t : types_for(filter)) {
    for (auto& c : bds_enumerate(t)) {
      if (filter.base_class && c.base_class != *filter.base_class) continue;
      if (filter.n0 && c.n0 != *filter.n0) continue;
      if (filter.simple_k_only && !(c.k_simple() && !c.has_circle_factor)) continue;
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<FibrationRecord> catalog(const CatalogFilter& filter) {
  std::vector<FibrationRecord> out;
  if (filter.simple_k_only) return out;
  for (const auto& c : catalog_cases(filter))
    for (auto& r : splittings(c)) out.push_back(std::move(r));
  const bool odd_allowed = (!filter.base_class || *filter.base_class == BaseClass::OddGrassmannian) && !filter.n0;
  if (odd_allowed) {
    for (int sum = 2; sum <= filter.odd_grassmannian_cap; ++sum) {
      for (int s = 1; s < sum; ++s) {
        auto r = odd_grassmannian_record(s, sum - s);
        if (ambient_passes(filter, r.ambient)) out.push_back(std::move(r));
      }
    }
  }
  return out;
}

std::string slug(const std::string& label) {
  std::string out;
  for (unsigned char ch : label) {
    if (std::isalnum(ch))
      out.push_back(static_cast<char>(std::tolower(ch)));
    else if (ch == '/')
      out.push_back('-');
  }
  return out;
}

}  // namespace isosplit::dynkin
