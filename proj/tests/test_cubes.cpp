#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "coxinv/cubes.hpp"
#include "coxinv/involutions.hpp"

using namespace coxinv;

namespace {

// Sets of pairwise orthogonal positive roots, by subset enumeration with
// orthogonality read off the coordinates.
std::vector<std::uint64_t> cliques_by_subsets(const RootSystem& rs) {
  const int n = rs.npos();
  std::vector<std::vector<bool>> orth(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) orth[i][j] = inner_product(rs.root(i), rs.root(j)).is_zero();
  std::vector<std::uint64_t> count(n + 1, 0);
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (m >> i & 1)
        for (int j = i + 1; j < n && ok; ++j)
          if (m >> j & 1) ok = orth[i][j];
    if (ok) ++count[__builtin_popcount(m)];
  }
  while (count.size() > 1 && count.back() == 0) count.pop_back();
  return count;
}

long long involutions_of_sym(int n) {
  long long a = 1, b = 1;  // i(0), i(1)
  if (n == 0) return 1;
  for (int k = 2; k <= n; ++k) {
    const long long c = b + (k - 1) * a;
    a = b;
    b = c;
  }
  return b;
}

}  // namespace

TEST_CASE("cube census against subset enumeration") {
  for (const char* s : {"A3", "A4", "B3", "B4", "D4", "G2", "H3", "A2xB2"}) {
    CAPTURE(s);
    const RootSystem rs = RootSystem::build(CoxeterType::parse(s));
    CHECK(cube_census(rs) == cliques_by_subsets(rs));
  }
}

TEST_CASE("every cube is visited once with its extremity") {
  const RootSystem rs = RootSystem::build(CoxeterType::parse("D5"));
  std::set<Base> seen;
  bool extremities = true;
  for_each_cube(
      rs,
      [&](const CubeVisit& v) {
        seen.insert(v.base);
        extremities = extremities && *v.extremity == extremity(rs, v.base);
        CHECK(is_cube_base(rs, v.base));
      },
      nullptr, 0, true);
  std::uint64_t total = 0;
  for (auto c : cube_census(rs)) total += c;
  CHECK(seen.size() == total);
  CHECK(extremities);
}

TEST_CASE("maximal cube counts") {
  for (int n = 4; n <= 8; n += 2) {
    std::size_t dfact = 1;
    for (int k = n - 1; k > 1; k -= 2) dfact *= k;
    CHECK(maximal_cubes(RootSystem::build(make_irreducible(Family::D, n))).size() == dfact);
  }
  // B_n: a matching of coordinates into {e_i - e_j, e_i + e_j} pairs, e_k elsewhere
  for (int n = 2; n <= 7; ++n)
    CHECK(static_cast<long long>(maximal_cubes(RootSystem::build(make_irreducible(Family::B, n))).size()) ==
          involutions_of_sym(n));
  const std::map<std::string, std::size_t> fixed = {{"H3", 5}, {"H4", 75}, {"E7", 135}, {"E8", 2025},
                                                    {"G2", 3}};
  for (const auto& [s, n] : fixed) CHECK(maximal_cubes(RootSystem::build(CoxeterType::parse(s))).size() == n);
}

TEST_CASE("cubes are conjugate when extremities agree") {
  for (const char* s : {"A5", "D5", "E6", "H3"}) {
    const RootSystem rs = RootSystem::build(CoxeterType::parse(s));
    const auto g = enumerate_group(rs);
    const auto c = census(rs, involutions_by_filter(rs, *g));
    for (int k = 0; k < c.num_classes; ++k) CHECK(cubes_with_extremity_conjugate(rs, c.elems[c.class_rep[k]]));
  }
  // B2: the two maximal cubes share the extremity -1 but are not conjugate
  const RootSystem b2 = RootSystem::build(CoxeterType::parse("B2"));
  CHECK_FALSE(cubes_with_extremity_conjugate(b2, longest_element(b2)));
}

TEST_CASE("conjugating a cube") {
  std::mt19937_64 rng(9);
  const RootSystem rs = RootSystem::build(CoxeterType::parse("E7"));
  const auto mc = maximal_cubes(rs);
  const std::set<Base> all(mc.begin(), mc.end());
  for (int k = 0; k < 30; ++k) {
    const Elem g = random_element(rs, rng);
    CHECK(all.count(conjugate_cube(rs, g, mc[k])) == 1);
  }
  const Base small = {mc[0][0], mc[0][1]};
  const Base big = embed_in_maximal(rs, small);
  CHECK(big.size() == 7);
  CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
}

TEST_CASE("permutation group helpers") {
  const Perm c = {1, 2, 3, 0}, t = {1, 0, 2, 3};
  const PermGroup s4 = perm_closure(4, {c, t});
  CHECK(s4.order() == 24);
  CHECK(derived_subgroup_order(s4) == 12);
  CHECK(perm_order(c) == 4);
  CHECK(perm_compose(c, perm_inverse(c)) == Perm{0, 1, 2, 3});
  // Sym4 on subsets of 4 points: one orbit per size
  CHECK(subset_orbit_counts(4, {c, t}) == std::vector<long long>{1, 1, 1, 1, 1});
  const Perm dbl = {1, 0, 3, 2};
  CHECK(subset_orbit_counts(4, {dbl}) == std::vector<long long>{1, 2, 4, 2, 1});
}

TEST_CASE("Phi groups and subset orbits") {
  const std::map<std::string, std::size_t> order = {{"H3", 3}, {"H4", 12}, {"E7", 168}, {"E8", 1344},
                                                    {"A5", 6},  {"D4", 4}};
  for (const auto& [s, n] : order) {
    CAPTURE(s);
    const auto t = CoxeterType::parse(s);
    const RootSystem rs = RootSystem::build(t);
    const PhiData d = phi_data(rs);
    CHECK(d.phi.order() == n);
    CHECK(d.normalizer_order == group_order(t) / BigInt(static_cast<unsigned long>(d.orbit_size)));
    // N_C / C has order |N_C| / 2^rank
    CHECK(BigInt(static_cast<unsigned long>(n)) * (BigInt(1) << static_cast<unsigned long>(d.cube.size())) ==
          d.normalizer_order);
    if (is_odd_type(t)) CHECK(subset_orbit_counts(d.phi.degree, d.phi.generators) == h_polynomial_formula(t));
  }
}

TEST_CASE("fusion in odd types") {
  for (const char* s : {"A4", "D4", "H3"}) {
    const RootSystem rs = RootSystem::build(CoxeterType::parse(s));
    const auto g = enumerate_group(rs);
    std::vector<Elem> all;
    for (std::size_t i = 0; i < g->size(); ++i) all.push_back(g->at(i));
    const PhiData d = phi_data(rs);
    const FusionResult f = fusion_check(rs, d.cube, d.phi, all);
    CHECK(f.tested == all.size());
    CHECK(f.failures == 0);
  }
}

TEST_CASE("cube centralizers") {
  const RootSystem h4 = RootSystem::build(CoxeterType::parse("H4"));
  const auto g = enumerate_group(h4);
  const CubeCentralizer one = cube_centralizer(h4, *g, {0});
  CHECK(one.decomposes);
  CHECK(one.centralizer == 240);
  CHECK(one.fixator == 120);
  const CubeCentralizer top = cube_centralizer(h4, *g, maximal_cubes(h4).front());
  CHECK(top.centralizer == 16);
  CHECK(top.fixator == 1);
}

TEST_CASE("B_n cube invariant") {
  const RootSystem b4 = RootSystem::build(make_irreducible(Family::B, 4));
  for (const auto& base : maximal_cubes(b4)) {
    // every maximal cube of B_n has extremity -1, with invariants (n, 0)
    const auto inv = bn_cube_invariant(b4, base);
    CHECK(inv.a == 4);
    CHECK(inv.b == 0);
    int shorts = 0;
    for (int r : base) shorts += (inner_product(b4.root(r), b4.root(r)) - QNum(2)).sign() < 0;
    CHECK(inv.a - 2 * inv.c == shorts);
  }
}
