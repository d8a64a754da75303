#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "coxinv/group.hpp"
#include "coxinv/root_system.hpp"

using namespace coxinv;

namespace {

// Components of the graph on the simple reflections with an edge where m_ij is odd.
int odd_components(const CoxeterMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && m[i][j] % 2 == 1) parent[find(i)] = find(j);
  int c = 0;
  for (int i = 0; i < n; ++i) c += find(i) == i;
  return c;
}

}  // namespace

TEST_CASE("enumerated orders match the order formula") {
  for (const char* s : {"A1", "A4", "A6", "B3", "B5", "D4", "D5", "E6", "F4", "G2", "H3", "H4", "I2(7)", "I2(10)",
                        "A2xB3", "A1xA1xA1"}) {
    CAPTURE(s);
    const auto t = CoxeterType::parse(s);
    const RootSystem rs = RootSystem::build(t);
    auto g = enumerate_group(rs);
    REQUIRE(g.has_value());
    CHECK(BigInt(static_cast<unsigned long>(g->size())) == group_order(t));
  }
}

TEST_CASE("enumeration refuses groups over the limit") {
  const RootSystem e7 = RootSystem::build(CoxeterType::parse("E7"));
  CHECK_FALSE(enumerate_group(e7).has_value());
  const RootSystem h4 = RootSystem::build(CoxeterType::parse("H4"));
  CHECK_FALSE(enumerate_group(h4, 1000).has_value());
  CHECK_THROWS_AS(closure(h4, h4.simple_reflections(), 1000), LimitExceeded);
}

TEST_CASE("reflection classes follow the odd-edge graph") {
  for (const char* s : {"A5", "B4", "D5", "E6", "F4", "G2", "H3", "H4", "I2(5)", "I2(8)", "A2xB3", "B2xB2"}) {
    CAPTURE(s);
    const auto t = CoxeterType::parse(s);
    CHECK(reflection_class_count(RootSystem::build(t)) == odd_components(coxeter_matrix(t)));
  }
}

TEST_CASE("pair products of reflections and the entries of the Coxeter matrix") {
  for (const char* s : {"B3", "F4", "G2", "H3", "H4", "I2(12)", "A3xI2(5)"}) {
    const RootSystem rs = RootSystem::build(CoxeterType::parse(s));
    for (int n = 3; n <= 12; ++n) {
      const PairOrderCheck r = check_pair_orders(rs, n);
      CAPTURE(s);
      CAPTURE(n);
      CHECK(r.pair_exists == r.divides);
    }
  }
}

TEST_CASE("conjugation orbits of reflections are conjugacy classes") {
  const RootSystem rs = RootSystem::build(CoxeterType::parse("B4"));
  std::vector<Elem> refl;
  for (int i = 0; i < rs.npos(); ++i) refl.push_back(rs.reflection(i));
  int n = 0;
  const auto ids = conjugation_orbits(rs, refl, rs.simple_reflections(), &n);
  CHECK(n == 2);
  // orbit sizes 12 (long) and 4 (short)
  std::vector<int> size(n);
  for (int id : ids) ++size[id];
  std::sort(size.begin(), size.end());
  CHECK(size == std::vector<int>{4, 12});
}

TEST_CASE("random elements and inverses") {
  std::mt19937_64 rng(3);
  const RootSystem rs = RootSystem::build(CoxeterType::parse("E8"));
  for (int k = 0; k < 50; ++k) {
    const Elem g = random_element(rs, rng);
    CHECK(rs.is_identity(rs.compose(g, rs.inverse(g))));
    CHECK(rs.length(g) == rs.length(rs.inverse(g)));
  }
}

TEST_CASE("centralizer orders") {
  const RootSystem rs = RootSystem::build(CoxeterType::parse("A3"));
  const auto g = *enumerate_group(rs);
  // a transposition in Sym4 has centralizer of order 4, the longest element (2 disjoint swaps) 8
  CHECK(centralizer_order(rs, g, rs.simple_reflection(0)) == 4);
  CHECK(centralizer_order(rs, g, longest_element(rs)) == 8);
  CHECK(centralizer_order(rs, g, rs.identity()) == 24);
}

TEST_CASE("fixators are generated by orthogonal reflections") {
  const RootSystem rs = RootSystem::build(CoxeterType::parse("B3"));
  // fixator of the first simple root
  const auto fr = fixator_reflections(rs, {rs.simple_root(0)});
  for (int r : fr) CHECK(inner_product(rs.root(r), rs.simple_root(0)).is_zero());
  // the fixator of a root is its stabilizer: |W| over the number of roots of that length
  int same = 0;
  for (int r = 0; r < rs.nroots(); ++r)
    same += inner_product(rs.root(r), rs.root(r)) == inner_product(rs.simple_root(0), rs.simple_root(0));
  CHECK(reflection_subgroup_order(rs, fr) == static_cast<std::size_t>(48 / same));
}
