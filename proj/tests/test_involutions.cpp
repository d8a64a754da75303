#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "coxinv/cubes.hpp"
#include "coxinv/dihedral.hpp"
#include "coxinv/involutions.hpp"

using namespace coxinv;

namespace {

InvolutionCensus census_of(const RootSystem& rs) {
  const auto g = enumerate_group(rs);
  REQUIRE(g.has_value());
  return census(rs, involutions_by_filter(rs, *g));
}

// Involutions of the signed permutation group, counted directly:
// all of B_n, or only those with an even number of sign changes.
std::size_t signed_involutions_brute(int n, bool even_only) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    bool inv = true;
    for (int i = 0; i < n; ++i) inv = inv && perm[perm[i]] == i;
    if (!inv) continue;
    for (int signs = 0; signs < (1 << n); ++signs) {
      bool ok = true;
      // e_i -> s_i e_p(i); squaring gives s_i s_p(i) on e_i
      for (int i = 0; i < n; ++i) ok = ok && ((signs >> i & 1) == (signs >> perm[i] & 1));
      if (ok && (!even_only || __builtin_popcount(signs) % 2 == 0)) ++count;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::multiset<std::pair<int, std::size_t>> degree_sizes(const InvolutionCensus& c) {
  std::multiset<std::pair<int, std::size_t>> m;
  for (int k = 0; k < c.num_classes; ++k) m.insert({c.class_degree[k], c.class_size[k]});
  return m;
}

}  // namespace

TEST_CASE("degree from negated roots equals the matrix rank") {
  for (const char* s : {"B4", "F4", "H4", "D5", "A2xG2"}) {
    const RootSystem rs = RootSystem::build(CoxeterType::parse(s));
    const InvolutionCensus c = census_of(rs);
    for (std::size_t i = 0; i < c.elems.size(); ++i) CHECK(c.degree[i] == degree_by_matrix(rs, c.elems[i]));
  }
}

TEST_CASE("orthogonal product bases") {
  const RootSystem rs = RootSystem::build(CoxeterType::parse("E6"));
  const InvolutionCensus c = census_of(rs);
  for (std::size_t i = 0; i < c.elems.size(); i += 7) {
    const auto base = orthogonal_product_base(rs, c.elems[i]);
    CHECK(static_cast<int>(base.size()) == c.degree[i]);
    CHECK(product_of_reflections(rs, base) == c.elems[i]);
    for (std::size_t a = 0; a < base.size(); ++a)
      for (std::size_t b = a + 1; b < base.size(); ++b) CHECK(rs.orthogonal(base[a], base[b]));
  }
}

TEST_CASE("signed census against brute force and orbits") {
  for (int n = 2; n <= 5; ++n) {
    const SignedCensus b = signed_permutation_census(Family::B, n);
    CHECK(b.involutions == signed_involutions_brute(n, false));
    const auto cb = census_of(RootSystem::build(make_irreducible(Family::B, n)));
    CHECK(b.involutions == cb.elems.size());
    std::multiset<std::pair<int, std::size_t>> sb;
    for (const auto& [k, sz] : b.class_sizes) sb.insert({b.class_degree.at(k), sz});
    CHECK(sb == degree_sizes(cb));
    CHECK(b.hpoly() == h_polynomial_formula(make_irreducible(Family::B, n)));
  }
  for (int n = 4; n <= 6; ++n) {
    const SignedCensus d = signed_permutation_census(Family::D, n);
    CHECK(d.involutions == signed_involutions_brute(n, true));
    const auto cd = census_of(RootSystem::build(make_irreducible(Family::D, n)));
    std::multiset<std::pair<int, std::size_t>> sd;
    for (const auto& [k, sz] : d.class_sizes) sd.insert({d.class_degree.at(k), sz});
    CHECK(sd == degree_sizes(cd));
  }
}

TEST_CASE("class keys separate exactly the conjugacy classes") {
  for (const char* s : {"B4", "D4", "D6", "F4", "H3", "H4", "E6", "G2", "I2(8)", "A5"}) {
    CAPTURE(s);
    const RootSystem rs = RootSystem::build(CoxeterType::parse(s));
    const InvolutionCensus c = census_of(rs);
    std::map<std::string, std::set<int>> by_key;
    std::map<int, std::set<std::string>> by_class;
    for (std::size_t i = 0; i < c.elems.size(); ++i) {
      const auto k = class_key(rs, c.elems[i]);
      by_key[k].insert(c.cls[i]);
      by_class[c.cls[i]].insert(k);
    }
    for (const auto& [k, v] : by_key) CHECK(v.size() == 1);
    for (const auto& [k, v] : by_class) CHECK(v.size() == 1);
  }
}

TEST_CASE("adjoint involutions") {
  std::mt19937_64 rng(5);
  for (const char* s : {"A5", "D5", "H4", "F4", "E6"}) {
    const RootSystem rs = RootSystem::build(CoxeterType::parse(s));
    const int rgr = reduced_rank(rs.type());
    CHECK(computed_reduced_rank(rs) == rgr);
    const InvolutionCensus c = census_of(rs);
    std::uniform_int_distribution<std::size_t> pick(0, c.elems.size() - 1);
    for (int k = 0; k < 100; ++k) {
      const Elem& u = c.elems[pick(rng)];
      const Elem v = adjoint(rs, u);
      CHECK(rs.compose(u, v) == rs.compose(v, u));
      CHECK(degree(rs, u) + degree(rs, v) == rgr);
      CHECK(is_maximal(rs, rs.compose(u, v)));
    }
  }
  for (int n = 2; n <= 5; ++n) {
    const RootSystem rs = RootSystem::build(make_irreducible(Family::B, n));
    for (const auto& u : census_of(rs).elems) {
      const auto iu = bn_invariants(rs, u), iv = bn_invariants(rs, adjoint(rs, u));
      CHECK(iv.a == n - iu.a - 2 * iu.b);
      CHECK(iv.b == iu.b);
    }
  }
}

TEST_CASE("maximal involutions are the regular ones in odd types") {
  for (const char* s : {"A4", "E6", "H3", "D5"}) {
    const RootSystem rs = RootSystem::build(CoxeterType::parse(s));
    for (const auto& u : census_of(rs).elems)
      if (is_maximal(rs, u)) CHECK(is_regular(rs, u));
  }
}

TEST_CASE("characteristic degrees") {
  const std::map<std::string, std::vector<int>> table = {
      {"A4", {2, 3, 4, 5}},         {"B3", {2, 4, 6}},           {"D4", {2, 4, 4, 6}},
      {"D5", {2, 4, 5, 6, 8}},      {"E6", {2, 5, 6, 8, 9, 12}}, {"E7", {2, 6, 8, 10, 12, 14, 18}},
      {"E8", {2, 8, 12, 14, 18, 20, 24, 30}},                    {"F4", {2, 6, 8, 12}},
      {"G2", {2, 6}},               {"H3", {2, 6, 10}},          {"H4", {2, 12, 20, 30}},
      {"I2(7)", {2, 7}},            {"I2(12)", {2, 12}}};
  for (const auto& [s, d] : table) {
    auto got = characteristic_degrees(CoxeterType::parse(s).single());
    std::sort(got.begin(), got.end());
    CHECK(got == d);
  }
}

TEST_CASE("centralizers of maximal involutions") {
  const std::vector<std::tuple<const char*, const char*, std::size_t>> cases = {
      {"A3", "B2", 8}, {"A5", "B3", 48}, {"D5", "B4", 384}, {"E6", "F4", 1152}, {"H3", "H3", 120}};
  for (const auto& [s, type, order] : cases) {
    const RootSystem rs = RootSystem::build(CoxeterType::parse(s));
    const auto mc = maximal_cubes(rs);
    const MaximalCentralizer m = centralizer_of_maximal(rs, extremity(rs, mc.front()));
    CAPTURE(s);
    CHECK(m.type == type);
    CHECK(m.order == order);
    const auto g = enumerate_group(rs);
    CHECK(centralizer_order(rs, *g, extremity(rs, mc.front())) == order);
  }
}

TEST_CASE("dihedral closed form agrees with the root model") {
  for (int m = 3; m <= 12; ++m) {
    const RootSystem rs = RootSystem::build(make_irreducible(Family::I, 2, m));
    for (int k = 0; k < m; ++k)
      for (int f = 0; f < 2; ++f) {
        const DihedralElement d{m, k, f == 1};
        const Elem e = to_permutation(rs, d);
        CHECK(rs.order(e) == d.order());
        if (d.is_involution()) CHECK(degree(rs, e) == d.degree());
        for (int k2 = 0; k2 < m; k2 += 2) {
          const DihedralElement d2{m, k2, true};
          CHECK(to_permutation(rs, d * d2) == rs.compose(e, to_permutation(rs, d2)));
        }
      }
    CHECK(to_permutation(rs, DihedralElement::generator(m, 0)) == rs.simple_reflection(0));
    CHECK(to_permutation(rs, DihedralElement::generator(m, 1)) == rs.simple_reflection(1));
  }
}

TEST_CASE("h-polynomial methods agree where they overlap") {
  // E6 through Phi orbits against the full census
  const auto e6 = CoxeterType::parse("E6");
  const auto phi = enumerated_hpoly(e6, 1000);
  CHECK(phi.method == "phi");
  CHECK(phi.hpoly == census_of(RootSystem::build(e6)).hpoly());
  // B5 and D6 through the signed census
  for (const char* s : {"B5", "D6"}) {
    const auto t = CoxeterType::parse(s);
    const auto sgn = enumerated_hpoly(t, 100);
    CHECK(sgn.method == "signed");
    CHECK(sgn.hpoly == census_of(RootSystem::build(t)).hpoly());
  }
  // products through factor involutions
  const auto p = CoxeterType::parse("A3xG2");
  const auto prod = enumerated_hpoly(p);
  CHECK(prod.method == "product");
  CHECK(prod.hpoly == census_of(RootSystem::build(p)).hpoly());
  CHECK_THROWS_AS(enumerated_hpoly(CoxeterType::parse("F4xF4xF4"), 1000), LimitExceeded);
}

TEST_CASE("E7 half sums") {
  const RootSystem e7 = RootSystem::build(CoxeterType::parse("E7"));
  std::vector<long> p;
  CHECK(e7_half_sum_in_weight_lattice(e7, {e7.simple(1), e7.simple(4), e7.simple(6)}, &p));
  CHECK(p == std::vector<long>{0, 2, 0, -2, 2, -2, 2});
  CHECK_FALSE(e7_half_sum_in_weight_lattice(e7, {e7.simple(0), e7.simple(1), e7.simple(4)}, &p));
}
