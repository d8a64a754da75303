// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "coxinv/cubes.hpp"
#include "coxinv/involutions.hpp"
#include "coxinv/modp.hpp"
#include "coxinv/quaternion.hpp"

using namespace coxinv;

namespace {

struct Failures {
  std::vector<std::string> items;
  void operator()(bool ok, const std::string& what) {
    if (!ok) items.push_back(what);
  }
};

std::string hstr(const HPoly& h) {
  std::string s;
  for (std::size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + std::to_string(h[i]);
  return s;
}

std::vector<std::string> family(char f, int lo, int hi) {
  std::vector<std::string> v;
  for (int n = lo; n <= hi; ++n) v.push_back(std::string(1, f) + std::to_string(n));
  return v;
}

std::vector<std::string> dihedral(std::initializer_list<int> ms) {
  std::vector<std::string> v;
  for (int m : ms) v.push_back("I2(" + std::to_string(m) + ")");
  return v;
}

std::vector<std::string> join(std::initializer_list<std::vector<std::string>> parts) {
  std::vector<std::string> v;
  for (const auto& p : parts) v.insert(v.end(), p.begin(), p.end());
  return v;
}

RootSystem build(const std::string& s) { return RootSystem::build(CoxeterType::parse(s)); }

long long factorial(int n) { return n < 2 ? 1 : n * factorial(n - 1); }

bool reciprocal(const HPoly& h) { return std::equal(h.begin(), h.end(), h.rbegin()); }

bool increasing_to_middle(const HPoly& h) {
  const std::size_t d = h.size() - 1;
  for (std::size_t n = 0; 2 * n < d; ++n)
    if (h[n] > h[n + 1]) return false;
  return true;
}

// every h-polynomial computed by criterion 2, for criterion 3
std::map<std::string, HPoly> computed;

const std::map<std::string, HPoly> kPrinted = {
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

std::string orders(Failures& f) {
  const std::map<std::string, std::pair<long, int>> table = {{"E6", {51840, 36}}, {"E7", {2903040, 63}},
                                                             {"E8", {696729600, 120}}, {"H3", {120, 15}},
                                                             {"H4", {14400, 60}}, {"F4", {1152, 24}}};
  const auto types = join({family('A', 1, 8), family('B', 2, 8), family('D', 4, 8), {"E6", "E7", "E8", "F4", "G2", "H3", "H4"},
                           dihedral({3, 4, 5, 6, 7, 8, 9, 10, 11, 12})});
  int enumerated = 0;
  for (const auto& s : types) {
    const auto t = CoxeterType::parse(s);
    const RootSystem rs = build(s);
    f(rs.npos() == reflection_count(t), s + " reflections");
    if (auto it = table.find(s); it != table.end()) {
      f(rs.npos() == it->second.second, s + " reflections vs table");
      f(group_order(t) == it->second.first, s + " order vs table");
    }
    if (auto g = enumerate_group(rs)) {
      ++enumerated;
      f(BigInt(static_cast<unsigned long>(g->size())) == group_order(t), s + " enumerated order");
      if (auto it = table.find(s); it != table.end())
        f(g->size() == static_cast<std::size_t>(it->second.first), s + " enumerated order vs table");
    }
  }
  return std::to_string(types.size()) + " types, " + std::to_string(enumerated) + " enumerated";
}

std::string hpolys(Failures& f) {
  const auto base = join({family('A', 1, 8), family('B', 2, 6), family('D', 3, 6), {"F4", "G2", "H3", "H4", "E6"},
                          dihedral({3, 4, 5, 6, 7, 8, 9, 10, 11, 12})});
  auto check = [&](const std::string& s) {
    const auto t = CoxeterType::parse(s);
    const auto e = enumerated_hpoly(t);
    computed[s] = e.hpoly;
    f(e.hpoly == h_polynomial_formula(t), s + ": enumerated " + hstr(e.hpoly));
    return e.method;
  };
  for (const auto& s : base) check(s);
  int products = 0;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j) {
      const std::string s = base[i] + "x" + base[j];
      if (group_order(CoxeterType::parse(s)) > 1000000) continue;
      ++products;
      check(s);
    }
  for (const auto& [s, h] : kPrinted) {
    const std::string method = check(s);
    f(computed[s] == h, s + ": printed list " + hstr(h) + ", computed " + hstr(computed[s]));
    if (s == "E7" || s == "E8") f(method == "phi", s + " not computed through Phi orbits");
  }
  return std::to_string(base.size()) + " types, " + std::to_string(products) + " products, " +
         std::to_string(kPrinted.size()) + " printed lists";
}

std::string reciprocity(Failures& f) {
  f(!computed.empty(), "no h-polynomials computed");
  for (const auto& [s, h] : computed) {
    f(reciprocal(h), s + " not reciprocal");
    f(increasing_to_middle(h), s + " not increasing to the middle");
  }
  return std::to_string(computed.size()) + " polynomials";
}

std::string cubes(Failures& f) {
  std::map<std::string, std::size_t> want = {{"H3", 5}, {"H4", 75}, {"E7", 135}, {"E8", 2025},
                                             {"D4", 3}, {"D6", 15}, {"D8", 105}, {"B2", 2}, {"G2", 3}};
  for (const auto& [s, w] : want) {
    const auto n = maximal_cubes(build(s)).size();
    f(n == w, s + ": " + std::to_string(n) + " maximal cubes");
  }
  int tested = 0;
  for (const auto& s : join({family('A', 1, 8), family('D', 4, 8), {"E6", "E7", "E8", "H3", "H4"}, dihedral({3, 5, 7, 9, 11})})) {
    const RootSystem rs = build(s);
    const Elem w0 = longest_element(rs);
    if (rs.negated(w0).count() != static_cast<std::size_t>(rs.npos())) continue;
    ++tested;
    const auto n = cubes_with_extremity(rs, w0).size();
    f(n % 2 == 1, s + ": " + std::to_string(n) + " cubes with extremity -1");
  }
  return std::to_string(want.size()) + " counts, " + std::to_string(tested) + " types containing -1";
}

std::string phi(Failures& f) {
  const std::map<std::string, std::size_t> want = {{"E7", 168}, {"E8", 1344}, {"H4", 12}, {"H3", 3}};
  for (const auto& [s, w] : want) f(phi_data(build(s)).phi.order() == w, s + " |Phi|");
  for (int n = 2; n <= 9; ++n) {
    const auto k = phi_data(build("A" + std::to_string(n - 1))).phi.order();
    f(static_cast<long long>(k) == factorial(n / 2), "A" + std::to_string(n - 1) + " |Phi| = " + std::to_string(k));
  }
  // Alt4: order 12, three involutions, eight 3-cycles
  const PhiData h4 = phi_data(build("H4"));
  std::map<int, int> ord;
  for (const auto& p : h4.phi.elements) ++ord[perm_order(p)];
  f(ord == std::map<int, int>{{1, 1}, {2, 3}, {3, 8}}, "H4: Phi is not Alt4");
  f(derived_subgroup_order(h4.phi) == 4, "H4: derived subgroup");

  const RootSystem e7 = build("E7");
  const PhiData d7 = phi_data(e7);
  const LatticeQuotient q7 = lattice_quotient(e7, 2, Sublattice::pP);
  std::vector<int> pts;
  for (int r : d7.cube) pts.push_back(q7.encode(root_image(q7, e7, r)));
  const auto lines = zero_sum_subsets(q7, pts, 3);
  // a Fano plane: 7 lines, any two points on exactly one
  bool fano = lines.size() == 7;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b) {
      int n = 0;
      for (auto l : lines) n += (l >> a & 1) && (l >> b & 1);
      fano = fano && n == 1;
    }
  f(fano, "E7: no Fano plane on the base");
  f(preserves_family(d7.phi, lines), "E7: Phi moves the Fano lines");

  const RootSystem e8 = build("E8");
  const PhiData d8 = phi_data(e8);
  const SteinerCheck st = steiner_check(lattice_quotient(e8, 2, Sublattice::pR), e8, d8.cube);
  f(st.blocks.size() == 14 && st.unique_block && st.unique_completion, "E8: Steiner system");
  f(preserves_family(d8.phi, st.blocks), "E8: Phi moves the blocks");
  const AffineCheck a = affine_check(d8.phi, st.blocks);
  f(a.preserves_blocks && a.transitive && a.point_stabilizer == 168 && a.translations == 8 && a.translations_closed,
    "E8: affine structure");
  return "E7 168, E8 1344, H4 Alt4, H3 3, A1..A8";
}

std::string conjugacy(Failures& f) {
  const auto types = join({family('A', 2, 6), family('D', 3, 6), {"E6", "H3", "H4"}, dihedral({3, 5, 7, 9, 11})});
  std::size_t fusion_tests = 0;
  std::mt19937_64 rng(77);
  for (const auto& s : types) {
    const RootSystem rs = build(s);
    const auto g = enumerate_group(rs);
    f(g.has_value(), s + " not enumerable");
    if (!g) continue;
    const InvolutionCensus c = census(rs, involutions_by_filter(rs, *g));
    int top = 0;
    for (int k = 0; k < c.num_classes; ++k) {
      top += c.class_degree[k] == c.max_degree();
      f(cubes_with_extremity_conjugate(rs, c.elems[c.class_rep[k]]), s + ": cubes with equal extremity not conjugate");
    }
    f(top == 1, s + ": " + std::to_string(top) + " maximal classes");
    f(maximal_cubes(rs).size() % 2 == 1, s + ": even maximal cube count");
    std::vector<Elem> elems;
    if (g->size() <= 10000) {
      for (std::size_t i = 0; i < g->size(); ++i) elems.push_back(g->at(i));
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, g->size() - 1);
      for (int i = 0; i < 1000; ++i) elems.push_back(g->at(pick(rng)));
    }
    const PhiData d = phi_data(rs);
    const FusionResult fr = fusion_check(rs, d.cube, d.phi, elems);
    f(fr.failures == 0 && fr.tested == elems.size(), s + ": fusion");
    fusion_tests += fr.tested;
  }
  return std::to_string(types.size()) + " groups, " + std::to_string(fusion_tests) + " fusion tests";
}

std::string adjoints(Failures& f) {
  const auto types = join({family('A', 1, 6), family('B', 2, 6), family('D', 4, 6), {"E6", "F4", "G2", "H3", "H4", "A2xB2", "A1xH3"},
                           dihedral({5, 6, 7, 8})});
  std::size_t n_inv = 0;
  for (const auto& s : types) {
    const RootSystem rs = build(s);
    const auto g = enumerate_group(rs);
    if (!g) {
      f(false, s + " not enumerable");
      continue;
    }
    const int rgr = reduced_rank(rs.type());
    const bool bn = s[0] == 'B' && s.find('x') == std::string::npos;
    const InvolutionCensus c = census(rs, involutions_by_filter(rs, *g));
    const auto& invs = c.elems;
    n_inv += invs.size();
    std::map<Elem, int> index;
    for (std::size_t i = 0; i < invs.size(); ++i) index[invs[i]] = static_cast<int>(i);
    // the adjoint class of each class, which must not depend on the representative
    std::vector<int> adj_class(c.num_classes, -1);
    bool well_defined = true;
    for (const auto& u : invs) {
      const Elem v = adjoint(rs, u);
      const auto it = index.find(v);
      if (it != index.end()) {
        int& a = adj_class[c.cls[index.at(u)]];
        if (a >= 0 && a != c.cls[it->second]) well_defined = false;
        a = c.cls[it->second];
      }
      if (!(is_involution(rs, v) || rs.is_identity(v)) || rs.compose(u, v) != rs.compose(v, u) ||
          degree(rs, u) + degree(rs, v) != rgr || degree(rs, rs.compose(u, v)) != rgr) {
        f(false, s + ": adjoint missing");
        break;
      }
      if (bn) {
        const auto iu = bn_invariants(rs, u), iv = bn_invariants(rs, v);
        f(iv.a == rs.rank() - iu.a - 2 * iu.b && iv.b == iu.b, s + ": adjoint invariants");
      }
    }
    // Inv_n: classes of involutions of degree n; adjunction maps Inv_n onto Inv_(d-n)
    std::vector<long long> classes(rgr + 1, 0);
    for (int k = 0; k < c.num_classes; ++k) ++classes[c.class_degree[k]];
    f(reciprocal(classes), s + ": |Inv_n| != |Inv_(d-n)|");
    f(well_defined, s + ": adjoint class depends on the representative");
    std::set<int> image(adj_class.begin(), adj_class.end());
    f(image.size() == static_cast<std::size_t>(c.num_classes) && !image.count(-1), s + ": adjunction is not a bijection of classes");
    for (int k = 0; k < c.num_classes; ++k)
      if (adj_class[k] >= 0) f(c.class_degree[adj_class[k]] == rgr - c.class_degree[k], s + ": adjoint class degree");
  }
  return std::to_string(types.size()) + " groups, " + std::to_string(n_inv) + " involutions";
}

std::string degrees(Failures& f) {
  const auto types = join({family('A', 1, 8), family('B', 2, 8), family('D', 4, 8), {"E6", "E7", "E8", "F4", "G2", "H3", "H4"},
                           dihedral({3, 4, 5, 6, 7, 8, 9, 10, 11, 12})});
  for (const auto& s : types) {
    const auto t = CoxeterType::parse(s);
    const auto d = characteristic_degrees(t.single());
    BigInt prod = 1;
    long long odd = 1;
    int sum = 0, even = 0;
    for (int x : d) {
      prod *= x;
      sum += x - 1;
      even += x % 2 == 0;
      if (x % 2) odd *= x;
    }
    f(prod == group_order(t), s + ": product of degrees");
    f(sum == reflection_count(t), s + ": sum of d - 1");
    f(even == reduced_rank(t), s + ": even degrees");
    const RootSystem rs = build(s);
    std::set<Elem> maximal;
    for (const auto& b : maximal_cubes(rs)) maximal.insert(extremity(rs, b));
    const auto m = static_cast<long long>(maximal.size());
    f(m == odd && m % 2 == 1, s + ": " + std::to_string(m) + " maximal involutions vs " + std::to_string(odd));
    if (s == "E6") f(m == 45, "E6: 45 maximal involutions");
    if (s[0] == 'A') {
      // f(n): fixed-point-free-as-possible involutions of Sym_n
      const int n = t.rank() + 1, k = n / 2;
      f(m == factorial(n) / (factorial(k) * (1ll << k) * factorial(n - 2 * k)), s + ": f(n)");
    }
  }
  return std::to_string(types.size()) + " types";
}

std::string centralizers(Failures& f) {
  for (const auto& s : join({family('A', 2, 5), family('B', 2, 5), family('D', 4, 5), {"E6", "F4", "G2", "H3", "H4"}, dihedral({5, 8})})) {
    const RootSystem rs = build(s);
    const auto g = enumerate_group(rs);
    if (!g) {
      f(false, s + " not enumerable");
      continue;
    }
    for (int r = 0; r < rs.npos(); ++r) {
      const CubeCentralizer c = cube_centralizer(rs, *g, {r});
      f(c.decomposes && c.centralizer == 2 * c.fixator, s + ": reflection centralizer");
      if (!c.decomposes) break;
    }
  }
  const std::vector<std::tuple<std::string, std::string, std::size_t>> th = {
      {"A3", "B2", 8}, {"D5", "B4", 384}, {"E6", "F4", 1152}};
  for (const auto& [s, type, order] : th) {
    const RootSystem rs = build(s);
    const MaximalCentralizer m = centralizer_of_maximal(rs, extremity(rs, maximal_cubes(rs).front()));
    f(m.type == type && m.order == order, s + ": centralizer " + m.type + " of order " + std::to_string(m.order));
  }
  const RootSystem h4 = build("H4");
  const auto g = enumerate_group(h4);
  const auto n = centralizer_order(h4, *g, extremity(h4, cubes_of_rank(h4, 2).front()));
  f(n == 32, "H4: degree-2 centralizer " + std::to_string(n));
  return "A3 B2 8, D5 B4 384, E6 F4 1152, H4 degree 2: 32";
}

std::string modp(Failures& f) {
  const RootSystem e7 = build("E7");
  const LatticeQuotient q7 = lattice_quotient(e7, 2, Sublattice::pP);
  const auto rm = reflection_map_check(q7, e7);
  f(q7.dim == 6 && rm.distinct_images == 63 && rm.nonzero_vectors == 63 && !rm.zero_hit, "E7: bijection onto V6 - 0");
  f(rm.pairs == 1953 && rm.mismatches == 0, "E7: commuting vs orthogonal");
  std::set<std::vector<int>> images;
  for (const auto& b : maximal_cubes(e7)) images.insert(base_image(q7, e7, b));
  const auto iso = isotropic_subspaces(q7, 3);
  f(iso.size() == 135 && std::set<std::vector<int>>(iso.begin(), iso.end()) == images, "E7: 135 isotropic planes");
  std::vector<long> prod;
  f(e7_half_sum_in_weight_lattice(e7, {e7.simple(1), e7.simple(4), e7.simple(6)}, &prod) &&
        prod == std::vector<long>{0, 2, 0, -2, 2, -2, 2},
    "E7: line witness");
  f(!e7_half_sum_in_weight_lattice(e7, {e7.simple(0), e7.simple(1), e7.simple(4)}), "E7: triangle witness");

  const RootSystem e8 = build("E8");
  const LatticeQuotient q8 = lattice_quotient(e8, 2, Sublattice::pR);
  std::size_t ok = 0;
  const auto mc = maximal_cubes(e8);
  for (const auto& b : mc) {
    const auto st = steiner_check(q8, e8, b);
    ok += st.unique_completion && st.unique_block;
  }
  f(mc.size() == 2025 && ok == 2025, "E8: Steiner property on " + std::to_string(ok) + " bases");

  const RootSystem e6 = build("E6");
  const auto g6 = enumerate_group(e6);
  const auto oi = orthogonal_image_check(lattice_quotient(e6, 3, Sublattice::pP), e6, *g6);
  f(oi.image_size == 51840 && oi.group_size == 51840 && oi.multiplicative && oi.special && oi.preserves_form,
    "E6: SO5(F3) image " + std::to_string(oi.image_size));
  const auto fix = reflection_subgroup_order(e6, fixator_reflections(e6, {fundamental_weight(e6, 1)}));
  f(fix == 1920, "E6: fixator of omega1 " + std::to_string(fix));
  return "E7, E8 (2025 bases), E6";
}

std::string binary(Failures& f) {
  struct Case {
    BinaryKind kind;
    int m, order, ab;
    long bgc;
    const char* type;
  };
  const Case cases[] = {
      {BinaryKind::Cyclic, 5, 10, 10, 10, "I2(5)"},           {BinaryKind::Cyclic, 8, 16, 16, 16, "I2(8)"},
      {BinaryKind::Dihedral, 3, 12, 4, 36, "A2xA2"},          {BinaryKind::Dihedral, 4, 16, 4, 64, "B2xB2"},
      {BinaryKind::Dihedral, 5, 20, 4, 100, "I2(5)xI2(5)"},   {BinaryKind::Tetrahedral, 0, 24, 3, 192, "D4"},
      {BinaryKind::Octahedral, 0, 48, 2, 1152, "F4"},         {BinaryKind::Icosahedral, 0, 120, 1, 14400, "H4"},
  };
  for (const auto& c : cases) {
    const BinaryGroup g = build_binary_group(c.kind, c.m);
    const BGC b(g);
    const std::string n = g.name();
    f(g.n == c.order && g.abelianization_order() == c.ab, n + ": order/abelianization");
    f(b.formula_order() == c.bgc, n + ": |B(Gamma)^c|");
    f(sigma_pair_order_failures(b) == 0, n + ": sigma pair orders");
    const auto id = identify_bgc(b, explicit_base(g));
    f(id.ok() && canonical_name(id.found) == c.type, n + ": identified as " + canonical_name(id.found));
  }
  const BinaryGroup ic = build_binary_group(BinaryKind::Icosahedral);
  const BGC b(ic);
  const O4Check o = o4_check(b);
  f(o.distinct_images == 14400 && o.multiplicative && o.reflection_images == 60, "2I: O4 embedding");
  for (const auto& [order, type] : {std::pair{24, "D4"}, std::pair{12, "A2xA2"}, std::pair{20, "I2(5)xI2(5)"}}) {
    const auto r = inclusion(b, find_subgroup(ic, order));
    f(r.type == type && r.reflections_only && BigInt(static_cast<unsigned long>(r.generated)) == r.formula_order,
      std::string(type) + " inside H4: got " + r.type);
  }
  return "8 groups, O4, 3 inclusions";
}

std::string quaternionic(Failures& f) {
  const BinaryGroup g = build_binary_group(BinaryKind::Icosahedral);
  const QuaternionicH4 q = quaternionic_h4(BGC(g));
  const RootSystem h4 = build("H4");
  f(q.order == enumerate_group(h4)->size(), "order");
  f(q.reflections == static_cast<std::size_t>(h4.npos()), "reflections");
  f(q.hpoly == enumerated_hpoly(CoxeterType::parse("H4")).hpoly, "h-polynomial " + hstr(q.hpoly));
  f(q.maximal_cubes == maximal_cubes(h4).size() && q.maximal_cubes == 75, "maximal cubes");
  return "order " + std::to_string(q.order) + ", h = " + hstr(q.hpoly) + ", " + std::to_string(q.maximal_cubes) + " maximal cubes";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;  // seconds, 0 for none
    std::function<std::string(Failures&)> run;
  };
  const Criterion criteria[] = {
      {1, "orders and reflections", 30, orders},
      {2, "h-polynomials", 120, hpolys},
      {3, "reciprocity and monotonicity", 0, reciprocity},
      {4, "cube census", 180, cubes},
      {5, "Phi groups", 0, phi},
      {6, "odd-type conjugacy", 0, conjugacy},
      {7, "adjoint involutions", 0, adjoints},
      {8, "characteristic degrees", 5, degrees},
      {9, "centralizers", 0, centralizers},
      {10, "mod-p models", 300, modp},
      {11, "binary groups", 120, binary},
      {12, "quaternionic H4", 0, quaternionic},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Failures f;
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      detail = c.run(f);
    } catch (const std::exception& e) {
      f(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget > 0 && secs > c.budget) f(false, "over the " + std::to_string(static_cast<int>(c.budget)) + " s budget");
    const bool ok = f.items.empty();
    failed += !ok;
    std::printf("%s criterion %d (%s): %s [%.1f s]\n", ok ? "PASS" : "FAIL", c.id, c.name,
                ok ? detail.c_str() : (f.items.front() + (f.items.size() > 1 ? " (+" + std::to_string(f.items.size() - 1) + " more)" : "")).c_str(),
                secs);
    std::fflush(stdout);
  }
  std::printf("%d/12 criteria passed\n", 12 - failed);
  return failed ? 1 : 0;
}
