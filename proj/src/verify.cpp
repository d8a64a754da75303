#include "coxinv/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "coxinv/cubes.hpp"
#include "coxinv/involutions.hpp"
#include "coxinv/modp.hpp"
#include "coxinv/quaternion.hpp"
#include "coxinv/root_system.hpp"

namespace coxinv {

namespace {

std::vector<std::string> names(std::initializer_list<std::pair<char, std::pair<int, int>>> ranges,
                               std::initializer_list<const char*> extra = {}) {
  std::vector<std::string> v;
  for (const auto& [f, r] : ranges)
    for (int n = r.first; n <= r.second; ++n) v.push_back(std::string(1, f) + std::to_string(n));
  for (const char* e : extra) v.emplace_back(e);
  return v;
}

std::vector<std::string> dihedral(std::initializer_list<int> ms) {
  std::vector<std::string> v;
  for (int m : ms) v.push_back("I2(" + std::to_string(m) + ")");
  return v;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

long long double_factorial(int n) {
  long long f = 1;
  for (int k = n; k > 1; k -= 2) f *= k;
  return f;
}

class Ctx {
public:
  explicit Ctx(const VerifyOptions& o) : opts(o) {}

  const VerifyOptions& opts;
  std::vector<std::string> failures;
  std::map<std::string, HPoly> hpolys;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }

  RootSystem build(const std::string& s) {
    RootSystem rs = RootSystem::build(CoxeterType::parse(s));
    if (opts.inject_fault != "root-table" || !rs.has_coordinates()) return rs;
    std::vector<VecQ> roots;
    for (int r = 0; r < rs.nroots(); ++r) roots.push_back(rs.root(r));
    roots[rs.npos() - 1] = roots[rs.npos() - 1] + roots[rs.simple(0)];
    try {
      return RootSystem::from_roots(roots);
    } catch (const std::exception& e) {
      throw std::runtime_error(s + ": root table rejected: " + e.what());
    }
  }

  const HPoly& hpoly(const std::string& s, std::string* method = nullptr) {
    auto it = hpolys.find(s);
    if (it == hpolys.end() || method) {
      auto e = enumerated_hpoly(CoxeterType::parse(s), opts.limit);
      if (method) *method = e.method;
      it = hpolys.insert_or_assign(s, std::move(e.hpoly)).first;
    }
    return it->second;
  }
};

std::string hstr(const HPoly& h) {
  std::string s;
  for (std::size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + std::to_string(h[i]);
  return s;
}

bool reciprocal(const HPoly& h) {
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] != h[h.size() - 1 - i]) return false;
  return true;
}

bool unimodal(const HPoly& h) {
  const std::size_t d = h.size() - 1;
  for (std::size_t n = 0; 2 * n < d; ++n)
    if (h[n] > h[n + 1]) return false;
  return true;
}

Elem maximal_involution(const RootSystem& rs) { return extremity(rs, maximal_cubes(rs).front()); }

// Orders and reflection counts.
std::string check_orders(Ctx& c) {
  const std::map<std::string, int> refl = {{"E6", 36}, {"E7", 63}, {"E8", 120}, {"H3", 15}, {"H4", 60}, {"F4", 24}};
  const std::map<std::string, long> order = {{"E6", 51840}, {"E7", 2903040}, {"E8", 696729600},
                                             {"H3", 120},   {"H4", 14400},   {"F4", 1152}};
  const auto types = concat(names({{'A', {1, 8}}, {'B', {2, 8}}, {'D', {4, 8}}}, {"E6", "E7", "E8", "F4", "G2", "H3", "H4"}),
                            dihedral({3, 4, 5, 6, 7, 8, 9, 10, 11, 12}));
  int enumerated = 0;
  for (const auto& s : types) {
    const auto t = CoxeterType::parse(s);
    const RootSystem rs = c.build(s);
    c.expect(rs.npos() == reflection_count(t), s + ": reflection count " + std::to_string(rs.npos()));
    if (refl.count(s)) c.expect(rs.npos() == refl.at(s), s + ": reflections differ from the table");
    if (order.count(s)) c.expect(group_order(t) == order.at(s), s + ": order formula differs from the table");
    c.expect(rs.length(longest_element(rs)) == rs.npos(), s + ": longest element");
    if (auto g = enumerate_group(rs, c.opts.limit)) {
      ++enumerated;
      c.expect(BigInt(static_cast<unsigned long>(g->size())) == group_order(t),
               s + ": enumerated order " + std::to_string(g->size()));
    }
  }
  return std::to_string(types.size()) + " types, " + std::to_string(enumerated) + " orders by enumeration";
}

const std::vector<std::string>& hpoly_base_list() {
  static const std::vector<std::string> v = concat(
      names({{'A', {1, 8}}, {'B', {2, 6}}, {'D', {3, 6}}}, {"F4", "G2", "H3", "H4", "E6"}),
      dihedral({3, 4, 5, 6, 7, 8, 9, 10, 11, 12}));
  return v;
}

// Formula against enumeration, products of two, and the printed lists.
std::string check_hpolys(Ctx& c) {
  const auto& base = hpoly_base_list();
  for (const auto& s : base) {
    const HPoly& h = c.hpoly(s);
    c.expect(h == h_polynomial_formula(CoxeterType::parse(s)), s + ": enumerated " + hstr(h));
  }
  int products = 0;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j) {
      const std::string s = base[i] + "x" + base[j];
      const auto t = CoxeterType::parse(s);
      if (group_order(t) > BigInt(static_cast<unsigned long>(c.opts.limit))) continue;
      ++products;
      const HPoly& h = c.hpoly(s);
      c.expect(h == h_polynomial_formula(t), s + ": enumerated " + hstr(h));
    }
  const std::map<std::string, HPoly> printed = {
      {"A3", {1, 1, 1}},
      {"B9", {1, 2, 3, 4, 5, 5, 4, 3, 2, 1}},
      {"B10", {1, 2, 3, 4, 5, 6, 5, 4, 3, 2, 1}},
      {"D4", {1, 1, 3, 1, 1}},
      {"D10", {1, 1, 2, 2, 3, 4, 3, 2, 2, 1, 1}},
      {"D11", {1, 1, 2, 2, 3, 3, 3, 2, 2, 1, 1}},
      {"E6", {1, 1, 1, 1, 1}},
      {"E7", {1, 1, 1, 2, 2, 1, 1, 1}},
      {"E8", {1, 1, 1, 1, 2, 1, 1, 1, 1}},
      {"F4", {1, 2, 2, 2, 1}},
      {"G2", {1, 2, 1}},
      {"H3", {1, 1, 1, 1}},
      {"H4", {1, 1, 1, 1, 1}},
  };
  for (const auto& [s, want] : printed) {
    std::string method;
    const HPoly& h = c.hpoly(s, &method);
    c.expect(h == want, s + ": enumerated " + hstr(h) + " by " + method);
    c.expect(h_polynomial_formula(CoxeterType::parse(s)) == want, s + ": formula differs from the printed list");
    if (s == "E7" || s == "E8") c.expect(method == "phi", s + ": computed by " + method + ", not by Phi orbits");
  }
  return std::to_string(base.size()) + " types, " + std::to_string(products) + " products, " +
         std::to_string(printed.size()) + " printed lists";
}

std::string check_reciprocity(Ctx& c) {
  if (c.hpolys.empty())
    for (const auto& s : hpoly_base_list()) c.hpoly(s);
  std::size_t n = 0;
  for (const auto& [s, h] : c.hpolys) {
    ++n;
    c.expect(reciprocal(h), s + ": not reciprocal " + hstr(h));
    c.expect(unimodal(h), s + ": not increasing up to the middle " + hstr(h));
  }
  for (const auto& s : names({{'A', {1, 30}}, {'B', {2, 30}}, {'D', {3, 30}}})) {
    ++n;
    const HPoly h = h_polynomial_formula(CoxeterType::parse(s));
    c.expect(reciprocal(h) && unimodal(h), s + ": formula " + hstr(h));
  }
  return std::to_string(n) + " polynomials";
}

std::string check_cubes(Ctx& c, bool with_e8) {
  std::map<std::string, std::size_t> want = {{"H3", 5}, {"H4", 75}, {"E7", 135}, {"B2", 2}, {"G2", 3}};
  if (with_e8) want["E8"] = 2025;
  for (int n : {4, 6, 8}) want["D" + std::to_string(n)] = static_cast<std::size_t>(double_factorial(n - 1));
  for (const auto& [s, w] : want) {
    const auto n = maximal_cubes(c.build(s)).size();
    c.expect(n == w, s + ": " + std::to_string(n) + " maximal cubes");
  }
  // Odd types: cubes with extremity -1, or with a maximal extremity when -1 is absent.
  std::vector<std::string> odd = concat(names({{'A', {1, 8}}, {'D', {4, 8}}}, {"E6", "E7", "H3", "H4"}),
                                        dihedral({3, 5, 7, 9, 11}));
  if (with_e8) odd.push_back("E8");
  for (const auto& s : odd) {
    const RootSystem rs = c.build(s);
    const Elem w0 = longest_element(rs);
    const bool central = rs.negated(w0).count() == rs.npos();
    const Elem u = central ? w0 : maximal_involution(rs);
    const auto n = cubes_with_extremity(rs, u).size();
    c.expect(n % 2 == 1, s + ": " + std::to_string(n) + " cubes with extremity " + (central ? "-1" : "u"));
  }
  return std::to_string(want.size()) + " maximal counts, " + std::to_string(odd.size()) + " odd types";
}

std::string check_phi(Ctx& c) {
  const std::map<std::string, std::size_t> want = {{"E7", 168}, {"E8", 1344}, {"H4", 12}, {"H3", 3}};
  for (const auto& [s, w] : want) {
    const auto n = phi_data(c.build(s)).phi.order();
    c.expect(n == w, s + ": |Phi| = " + std::to_string(n));
  }
  for (int n = 2; n <= 9; ++n) {
    const std::string s = "A" + std::to_string(n - 1);
    const auto k = phi_data(c.build(s)).phi.order();
    c.expect(static_cast<long long>(k) == factorial(n / 2), s + ": |Phi| = " + std::to_string(k));
  }
  {
    const PhiData d = phi_data(c.build("H4"));
    bool orders = true;
    for (const auto& p : d.phi.elements) orders = orders && perm_order(p) <= 3;
    c.expect(orders, "H4: Phi has elements of order > 3");
    c.expect(derived_subgroup_order(d.phi) == 4, "H4: derived subgroup of Phi is not of order 4");
  }
  {
    const RootSystem e7 = c.build("E7");
    const PhiData d = phi_data(e7);
    const LatticeQuotient q = lattice_quotient(e7, 2, Sublattice::pP);
    std::vector<int> pts;
    for (int r : d.cube) pts.push_back(q.encode(root_image(q, e7, r)));
    const auto lines = zero_sum_subsets(q, pts, 3);
    bool plane = lines.size() == 7;
    for (int a = 0; a < 7 && plane; ++a)
      for (int b = a + 1; b < 7; ++b) {
        int through = 0;
        for (auto l : lines) through += (l >> a & 1) && (l >> b & 1);
        plane = plane && through == 1;
      }
    c.expect(plane, "E7: cube base does not carry a Fano plane");
    c.expect(preserves_family(d.phi, lines), "E7: Phi does not preserve the Fano lines");
  }
  {
    const RootSystem e8 = c.build("E8");
    const PhiData d = phi_data(e8);
    const LatticeQuotient q = lattice_quotient(e8, 2, Sublattice::pR);
    const SteinerCheck st = steiner_check(q, e8, d.cube);
    c.expect(st.blocks.size() == 14 && st.unique_block, "E8: cube base is not a Steiner system S(3,4,8)");
    c.expect(preserves_family(d.phi, st.blocks), "E8: Phi does not preserve the Steiner blocks");
    const AffineCheck a = affine_check(d.phi, st.blocks);
    c.expect(a.preserves_blocks && a.transitive && a.point_stabilizer == 168 && a.translations == 8 &&
                 a.translations_closed,
             "E8: Phi is not the affine group of F2^3");
  }
  return "E7 168, E8 1344, H4 12, H3 3, A1..A8";
}

std::vector<Elem> sample_or_all(const RootSystem& rs, const ElementSet& g, std::size_t cap, std::size_t samples) {
  std::vector<Elem> v;
  if (g.size() <= cap) {
    for (std::size_t i = 0; i < g.size(); ++i) v.push_back(g.at(i));
    return v;
  }
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  for (std::size_t i = 0; i < samples; ++i) v.push_back(g.at(pick(rng)));
  (void)rs;
  return v;
}

std::string check_odd_conjugacy(Ctx& c) {
  const auto types = concat(names({{'A', {2, 6}}, {'D', {3, 6}}}, {"E6", "H3", "H4"}), dihedral({3, 5, 7, 9, 11}));
  std::size_t fused = 0;
  for (const auto& s : types) {
    const RootSystem rs = c.build(s);
    auto g = enumerate_group(rs, c.opts.limit);
    if (!g) {
      c.expect(false, s + ": not enumerable under the limit");
      continue;
    }
    const InvolutionCensus cen = census(rs, involutions_by_filter(rs, *g));
    const int top = cen.max_degree();
    int top_classes = 0;
    for (int k = 0; k < cen.num_classes; ++k) {
      if (cen.class_degree[k] == top) ++top_classes;
      c.expect(cubes_with_extremity_conjugate(rs, cen.elems[cen.class_rep[k]]),
               s + ": cubes with a common extremity in two orbits (class " + std::to_string(k) + ")");
    }
    c.expect(top_classes == 1, s + ": " + std::to_string(top_classes) + " classes of maximal involutions");
    const auto mc = maximal_cubes(rs).size();
    c.expect(mc % 2 == 1, s + ": " + std::to_string(mc) + " maximal cubes");
    const PhiData d = phi_data(rs);
    const auto f = fusion_check(rs, d.cube, d.phi, sample_or_all(rs, *g, 10000, 1500));
    fused += f.tested;
    c.expect(f.failures == 0, s + ": " + std::to_string(f.failures) + " fusion failures");
  }
  return std::to_string(types.size()) + " groups, " + std::to_string(fused) + " fusion tests";
}

std::string check_adjoints(Ctx& c) {
  const auto types = concat(names({{'A', {1, 6}}, {'B', {2, 6}}, {'D', {4, 6}}}, {"E6", "F4", "G2", "H3", "H4", "A2xB2"}),
                            dihedral({5, 6, 7, 8}));
  std::size_t tested = 0;
  for (const auto& s : types) {
    const RootSystem rs = c.build(s);
    auto g = enumerate_group(rs, c.opts.limit);
    if (!g) {
      c.expect(false, s + ": not enumerable under the limit");
      continue;
    }
    const int rgr = reduced_rank(rs.type());
    const bool bn = s[0] == 'B' && s.find('x') == std::string::npos;
    const int n = rs.rank();
    const auto invs = involutions_by_filter(rs, *g);
    int bad = 0, bad_bn = 0;
    for (const auto& u : invs) {
      const Elem v = adjoint(rs, u);
      const bool ok = rs.order(v) <= 2 && rs.compose(u, v) == rs.compose(v, u) &&
                      degree(rs, u) + degree(rs, v) == rgr && degree(rs, rs.compose(u, v)) == rgr;
      if (!ok) ++bad;
      if (bn) {
        const auto iu = bn_invariants(rs, u), iv = bn_invariants(rs, v);
        if (iv.a != n - iu.a - 2 * iu.b || iv.b != iu.b) ++bad_bn;
      }
    }
    tested += invs.size();
    c.expect(bad == 0, s + ": " + std::to_string(bad) + " involutions without an adjoint");
    c.expect(bad_bn == 0, s + ": " + std::to_string(bad_bn) + " adjoints off the (n-a-2b, b) formula");
    const HPoly h = census(rs, invs).hpoly();
    c.expect(reciprocal(h), s + ": |Inv_n| != |Inv_(d-n)|");
  }
  return std::to_string(types.size()) + " groups, " + std::to_string(tested) + " involutions";
}

std::string check_degrees(Ctx& c) {
  const auto types = concat(names({{'A', {1, 8}}, {'B', {2, 8}}, {'D', {4, 8}}}, {"E6", "E7", "E8", "F4", "G2", "H3", "H4"}),
                            dihedral({3, 4, 5, 6, 7, 8, 9, 10, 11, 12}));
  for (const auto& s : types) {
    const auto t = CoxeterType::parse(s);
    const auto d = characteristic_degrees(t.single());
    BigInt prod = 1;
    long long odd = 1;
    int refl = 0, even = 0;
    for (int x : d) {
      prod *= x;
      refl += x - 1;
      if (x % 2 == 0) ++even; else odd *= x;
    }
    c.expect(prod == group_order(t), s + ": product of degrees");
    c.expect(refl == reflection_count(t), s + ": sum of d - 1");
    c.expect(even == reduced_rank(t), s + ": even degrees vs rgr");
    const RootSystem rs = c.build(s);
    std::set<Elem> maximal;
    for (const auto& b : maximal_cubes(rs)) maximal.insert(extremity(rs, b));
    const auto m = static_cast<long long>(maximal.size());
    c.expect(m == odd, s + ": " + std::to_string(m) + " maximal involutions, odd product " + std::to_string(odd));
    c.expect(m % 2 == 1, s + ": even number of maximal involutions");
    if (s == "E6") c.expect(m == 45, "E6: maximal involutions " + std::to_string(m));
    if (s[0] == 'A') {
      const int n = t.rank() + 1, k = n / 2;
      const long long f = factorial(n) / (factorial(k) * (1ll << k) * factorial(n - 2 * k));
      c.expect(m == f, s + ": maximal involutions " + std::to_string(m) + ", expected " + std::to_string(f));
    }
  }
  return std::to_string(types.size()) + " types";
}

std::string check_centralizers(Ctx& c) {
  const auto types = concat(names({{'A', {2, 5}}, {'B', {2, 5}}, {'D', {4, 5}}}, {"E6", "F4", "G2", "H3", "H4"}),
                            dihedral({5, 8}));
  for (const auto& s : types) {
    const RootSystem rs = c.build(s);
    auto g = enumerate_group(rs, c.opts.limit);
    if (!g) {
      c.expect(false, s + ": not enumerable under the limit");
      continue;
    }
    std::set<int> seen;
    for (int r = 0; r < rs.npos(); ++r) {
      if (!seen.insert(rs.length_class(r)).second) continue;
      const CubeCentralizer cc = cube_centralizer(rs, *g, {r});
      c.expect(cc.decomposes && cc.centralizer == 2 * cc.fixator, s + ": reflection centralizer does not split");
    }
    const CubeCentralizer top = cube_centralizer(rs, *g, maximal_cubes(rs).front());
    c.expect(top.fixator == 1 && top.centralizer == top.cube, s + ": maximal cube is not its own centralizer");
  }
  const std::vector<std::tuple<std::string, std::string, std::size_t>> th = {
      {"A3", "B2", 8}, {"D5", "B4", 384}, {"E6", "F4", 1152}};
  for (const auto& [s, type, order] : th) {
    const RootSystem rs = c.build(s);
    const MaximalCentralizer m = centralizer_of_maximal(rs, maximal_involution(rs), c.opts.limit);
    c.expect(m.type == type && m.order == order, s + ": centralizer of a maximal involution is " + m.type + " of order " +
                                                      std::to_string(m.order));
  }
  {
    const RootSystem h4 = c.build("H4");
    auto g = enumerate_group(h4, c.opts.limit);
    const Elem u = extremity(h4, cubes_of_rank(h4, 2).front());
    const auto n = g ? centralizer_order(h4, *g, u) : 0;
    c.expect(n == 32, "H4: degree-2 centralizer has order " + std::to_string(n));
  }
  return std::to_string(types.size()) + " groups; A3, D5, E6 maximal centralizers; H4 degree 2";
}

std::string check_modp(Ctx& c) {
  const RootSystem e7 = c.build("E7");
  const LatticeQuotient q7 = lattice_quotient(e7, 2, Sublattice::pP);
  c.expect(q7.dim == 6, "E7: quotient of dimension " + std::to_string(q7.dim));
  const auto rm = reflection_map_check(q7, e7);
  c.expect(rm.distinct_images == 63 && rm.nonzero_vectors == 63 && !rm.zero_hit, "E7: reflections do not biject onto V6 - 0");
  c.expect(rm.pairs == 63 * 62 / 2 && rm.mismatches == 0,
           "E7: " + std::to_string(rm.mismatches) + " pairs where commuting and orthogonality differ");
  const auto iso = isotropic_subspaces(q7, 3);
  std::set<std::vector<int>> images;
  for (const auto& b : maximal_cubes(e7)) images.insert(base_image(q7, e7, b));
  c.expect(iso.size() == 135 && std::set<std::vector<int>>(iso.begin(), iso.end()) == images,
           "E7: maximal isotropic subspaces differ from the cube images");
  std::vector<long> prod;
  const bool line = e7_half_sum_in_weight_lattice(e7, {e7.simple(1), e7.simple(4), e7.simple(6)}, &prod);
  c.expect(line && prod == std::vector<long>{0, 2, 0, -2, 2, -2, 2}, "E7: (a2, a5, a7) is not a line");
  const bool tri = e7_half_sum_in_weight_lattice(e7, {e7.simple(0), e7.simple(1), e7.simple(4)}, &prod);
  c.expect(!tri, "E7: (a1, a2, a5) is not a triangle");

  const RootSystem e8 = c.build("E8");
  const LatticeQuotient q8 = lattice_quotient(e8, 2, Sublattice::pR);
  c.expect(q8.dim == 8, "E8: quotient of dimension " + std::to_string(q8.dim));
  const auto w = witt_split(q8);
  c.expect(w.planes == 4 && w.anisotropic_dim == 0, "E8: quadratic form is not hyperbolic");
  const auto mc = maximal_cubes(e8);
  std::size_t steiner = 0;
  for (const auto& b : mc) {
    const auto st = steiner_check(q8, e8, b);
    if (st.unique_completion && st.unique_block && st.affine_closed && st.blocks.size() == 14) ++steiner;
  }
  c.expect(steiner == 2025 && mc.size() == 2025, "E8: Steiner property on " + std::to_string(steiner) + " bases");

  const RootSystem e6 = c.build("E6");
  const LatticeQuotient q6 = lattice_quotient(e6, 3, Sublattice::pP);
  c.expect(q6.dim == 5, "E6: quotient of dimension " + std::to_string(q6.dim));
  auto g6 = enumerate_group(e6, c.opts.limit);
  if (g6) {
    const auto oi = orthogonal_image_check(q6, e6, *g6);
    c.expect(oi.image_size == 51840 && oi.group_size == 51840 && oi.multiplicative && oi.special && oi.preserves_form,
             "E6: map to SO5(F3) has image " + std::to_string(oi.image_size));
  } else {
    c.expect(false, "E6: not enumerable under the limit");
  }
  const auto fix = reflection_subgroup_order(e6, fixator_reflections(e6, {fundamental_weight(e6, 1)}), c.opts.limit);
  c.expect(fix == 1920, "E6: fixator of omega1 has order " + std::to_string(fix));
  return "E7 V6, 135 isotropic planes, witnesses; E8 2025 Steiner bases; E6 SO5(F3), fixator 1920";
}

std::string check_binary(Ctx& c) {
  struct Case {
    BinaryKind kind;
    int m;
    int order, ab;
    long bgc;
    std::string type;
  };
  const std::vector<Case> cases = {
      {BinaryKind::Cyclic, 5, 10, 10, 10, "I2(5)"},
      {BinaryKind::Cyclic, 6, 12, 12, 12, "G2"},
      {BinaryKind::Cyclic, 8, 16, 16, 16, "I2(8)"},
      {BinaryKind::Dihedral, 3, 12, 4, 36, "A2xA2"},
      {BinaryKind::Dihedral, 4, 16, 4, 64, "B2xB2"},
      {BinaryKind::Dihedral, 5, 20, 4, 100, "I2(5)xI2(5)"},
      {BinaryKind::Tetrahedral, 0, 24, 3, 192, "D4"},
      {BinaryKind::Octahedral, 0, 48, 2, 1152, "F4"},
      {BinaryKind::Icosahedral, 0, 120, 1, 14400, "H4"},
  };
  for (const auto& k : cases) {
    const BinaryGroup g = build_binary_group(k.kind, k.m);
    const BGC b(g);
    const std::string n = g.name();
    c.expect(g.n == k.order && g.abelianization_order() == k.ab, n + ": order or abelianization");
    const auto g2 = gamma2_check(g);
    c.expect(g2.sets_equal && g2.coset_map_bijective, n + ": Gamma_2 membership test");
    c.expect(b.formula_order() == k.bgc, n + ": |B(Gamma)^c| formula");
    c.expect(sigma_pair_order_failures(b) == 0, n + ": product orders of sigma pairs");
    const auto id = identify_bgc(b, explicit_base(g));
    c.expect(id.ok() && canonical_name(id.found) == k.type && id.group_size == static_cast<std::size_t>(k.bgc),
             n + ": identified as " + canonical_name(id.found));
  }
  const BinaryGroup g = build_binary_group(BinaryKind::Icosahedral);
  const BGC b(g);
  const auto o4 = o4_check(b);
  c.expect(o4.distinct_images == 14400 && o4.multiplicative && o4.orthogonal, "2I: phi_to_o4 is not an embedding");
  c.expect(o4.reflection_images == 60 && o4.reflections_ok, "2I: reflection images");
  const std::vector<std::tuple<int, std::string, std::size_t>> incl = {{24, "D4", 192}, {12, "A2xA2", 36}, {20, "I2(5)xI2(5)", 100}};
  for (const auto& [order, type, size] : incl) {
    const auto r = inclusion(b, find_subgroup(g, order));
    c.expect(r.type == type && r.generated == size && r.formula_order == static_cast<long>(size) && r.reflections_only,
             "2I: subgroup of order " + std::to_string(order) + " gives " + r.type);
  }
  return std::to_string(cases.size()) + " binary groups; O4 image; 3 inclusions";
}

std::string check_quaternionic(Ctx& c) {
  const BinaryGroup g = build_binary_group(BinaryKind::Icosahedral);
  const QuaternionicH4 q = quaternionic_h4(BGC(g));
  const RootSystem h4 = c.build("H4");
  auto grp = enumerate_group(h4, c.opts.limit);
  const std::size_t order = grp ? grp->size() : 0;
  c.expect(q.order == order, "order " + std::to_string(q.order) + " vs " + std::to_string(order));
  c.expect(q.reflections == static_cast<std::size_t>(h4.npos()), "reflections " + std::to_string(q.reflections));
  c.expect(q.hpoly == c.hpoly("H4"), "h-polynomial " + hstr(q.hpoly));
  const auto mc = maximal_cubes(h4).size();
  c.expect(q.maximal_cubes == mc && mc == 75, "maximal cubes " + std::to_string(q.maximal_cubes) + " vs " + std::to_string(mc));
  return "order 14400, 60 reflections, h = " + hstr(q.hpoly) + ", 75 maximal cubes";
}

std::string check_e8_census(Ctx& c) {
  const RootSystem e8 = c.build("E8");
  const auto counts = cube_census(e8);
  c.expect(counts.size() == 9, "E8: cubes up to rank " + std::to_string(counts.size() - 1));
  c.expect(counts.size() > 2 && counts[1] == 120 && counts[2] == 120 * 63 / 2, "E8: rank 1 and 2 counts");
  const std::size_t top = counts.size() == 9 ? counts[8] : 0;
  c.expect(top == 2025, "E8 maximal cubes = " + std::to_string(top));
  const Elem w0 = longest_element(e8);
  std::size_t minus_one = 0;
  for (const auto& b : maximal_cubes(e8)) minus_one += extremity(e8, b) == w0;
  c.expect(minus_one == 2025, "E8: maximal cubes with extremity -1: " + std::to_string(minus_one));
  std::uint64_t total = 0;
  for (auto x : counts) total += x;
  return "E8 maximal cubes = " + std::to_string(top) + ", " + std::to_string(total) + " cubes in all";
}

std::string check_e6_f3(Ctx& c) {
  const RootSystem e6 = c.build("E6");
  const LatticeQuotient q = lattice_quotient(e6, 3, Sublattice::pP);
  auto g = enumerate_group(e6, c.opts.limit);
  if (!g) {
    c.expect(false, "E6: not enumerable under the limit");
    return "";
  }
  // |SO_5(F_3)| = 3^4 (3^2 - 1)(3^4 - 1)
  const std::size_t so5 = 81 * 8 * 80;
  const auto oi = orthogonal_image_check(q, e6, *g);
  c.expect(oi.image_size == so5 && oi.group_size == so5, "E6: image of order " + std::to_string(oi.image_size));
  c.expect(oi.multiplicative && oi.special && oi.preserves_form, "E6: image not inside SO5(F3)");
  auto psi = [&](const Elem& x) {
    MatFp m = induced_matrix(q, e6, x);
    if (e6.length(x) % 2) {
      MatFp minus = MatFp::identity(3, static_cast<std::size_t>(q.dim));
      for (int i = 0; i < q.dim; ++i) minus.set(i, i, -1);
      m = minus * m;
    }
    return m;
  };
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, g->size() - 1);
  int bad = 0;
  for (int k = 0; k < 5000; ++k) {
    const Elem x = g->at(pick(rng)), y = g->at(pick(rng));
    if (!(psi(e6.compose(x, y)) == psi(x) * psi(y))) ++bad;
  }
  c.expect(bad == 0, "E6: " + std::to_string(bad) + " random pairs break multiplicativity");
  return "W(E6) -> SO5(F3) bijective, " + std::to_string(so5) + " elements";
}

std::string check_e7_sp6(Ctx& c) {
  const RootSystem e7 = c.build("E7");
  const LatticeQuotient q = lattice_quotient(e7, 2, Sublattice::pP);
  const auto sc = symplectic_check(q, e7, 2000, 11, true);
  const BigInt sp6 = symplectic_group_order(3, 2);
  c.expect(sc.multiplicative && sc.kernel_is_pm1 && sc.preserves_form, "E7: map to Sp6(F2)");
  c.expect(BigInt(static_cast<unsigned long>(sc.image_order)) == sp6,
           "E7: image of order " + std::to_string(sc.image_order));
  return "W(E7)/{+-1} onto Sp6(F2), " + sp6.get_str() + " elements";
}

struct Check {
  const char* name;
  bool heavy_only;
  std::function<std::string(Ctx&)> run;
};

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = {
      {"01-orders-reflections", false, check_orders},
      {"02-h-polynomials", false, check_hpolys},
      {"03-h-reciprocity", false, check_reciprocity},
      {"04-cube-census", false, [](Ctx& c) { return check_cubes(c, true); }},
      {"05-phi-groups", false, check_phi},
      {"06-odd-type-conjugacy", false, check_odd_conjugacy},
      {"07-adjoint-involutions", false, check_adjoints},
      {"08-characteristic-degrees", false, check_degrees},
      {"09-centralizers", false, check_centralizers},
      {"10-modp-models", false, check_modp},
      {"11-binary-groups", false, check_binary},
      {"12-quaternionic-h4", false, check_quaternionic},
      {"13-e8-cube-census", true, check_e8_census},
      {"14-e6-f3-isomorphism", true, check_e6_f3},
      {"15-e7-sp6-image", true, check_e7_sp6},
  };
  return checks;
}

}  // namespace

std::vector<std::string> check_names(const std::string& suite) {
  if (suite != "core" && suite != "heavy") throw std::invalid_argument("unknown suite '" + suite + "' (expected core or heavy)");
  std::vector<std::string> v;
  for (const auto& c : registry())
    if (suite == "heavy" || !c.heavy_only) v.emplace_back(c.name);
  return v;
}

std::vector<CheckResult> run_verify(const VerifyOptions& opts) {
  if (!opts.inject_fault.empty() && opts.inject_fault != "root-table")
    throw std::invalid_argument("unknown fault '" + opts.inject_fault + "' (expected root-table)");
  const auto wanted = check_names(opts.suite);
  for (const auto& n : opts.only)
    if (std::find(wanted.begin(), wanted.end(), n) == wanted.end())
      throw std::invalid_argument("no check named '" + n + "' in suite " + opts.suite);
  Ctx ctx(opts);
  std::vector<CheckResult> out;
  for (const auto& c : registry()) {
    if (std::find(wanted.begin(), wanted.end(), c.name) == wanted.end()) continue;
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), c.name) == opts.only.end()) continue;
    CheckResult r;
    r.name = c.name;
    ctx.failures.clear();
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.detail = c.run(ctx);
      r.passed = ctx.failures.empty();
      if (!r.passed) {
        r.detail.clear();
        for (std::size_t i = 0; i < ctx.failures.size() && i < 5; ++i) r.detail += (i ? "; " : "") + ctx.failures[i];
        if (ctx.failures.size() > 5) r.detail += "; +" + std::to_string(ctx.failures.size() - 5) + " more";
      }
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::string verify_summary(const std::vector<CheckResult>& results, bool timing) {
  std::ostringstream o;
  std::size_t failed = 0;
  double total = 0;
  for (const auto& r : results) {
    o << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail;
    if (timing) o << " (" << static_cast<long long>(r.seconds * 1000 + 0.5) << " ms)";
    o << "\n";
    failed += !r.passed;
    total += r.seconds;
  }
  o << (failed ? "FAILED " : "OK ") << results.size() - failed << "/" << results.size() << " checks passed";
  if (failed) {
    o << "; failed:";
    for (const auto& r : results)
      if (!r.passed) o << " " << r.name;
  }
  if (timing) o << " (" << static_cast<long long>(total * 1000 + 0.5) << " ms)";
  o << "\n";
  return o.str();
}

}  // namespace coxinv
