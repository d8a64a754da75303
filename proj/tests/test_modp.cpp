#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "coxinv/cubes.hpp"
#include "coxinv/modp.hpp"

using namespace coxinv;

namespace {

MatQ cartan_q(const LatticeQuotient& q) {
  MatQ m(q.n, q.n);
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j) m(i, j) = QNum(q.cartan[i][j]);
  return m;
}

long as_integer(const QNum& x) {
  REQUIRE(x.coeff(1) == 0);
  REQUIRE(x.coeff(2) == 0);
  REQUIRE(x.coeff(3) == 0);
  REQUIRE(x.coeff(0).get_den() == 1);
  return x.coeff(0).get_num().get_si();
}

MatFp column(int p, const std::vector<int>& x) {
  MatFp m(p, x.size(), 1);
  for (std::size_t i = 0; i < x.size(); ++i) m.set(i, 0, x[i]);
  return m;
}

std::vector<long> random_coeffs(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> d(-9, 9);
  std::vector<long> c(n);
  for (auto& x : c) x = d(rng);
  return c;
}

}  // namespace

TEST_CASE("quotient maps are well defined") {
  std::mt19937_64 rng(17);
  const struct {
    const char* type;
    int p;
    Sublattice sub;
    int dim;
  } cases[] = {{"E7", 2, Sublattice::pP, 6}, {"E8", 2, Sublattice::pR, 8}, {"E6", 3, Sublattice::pP, 5},
               {"A4", 5, Sublattice::pP, 3}, {"D4", 2, Sublattice::pR, 4}};
  for (const auto& cs : cases) {
    CAPTURE(cs.type);
    const RootSystem rs = RootSystem::build(CoxeterType::parse(cs.type));
    const LatticeQuotient q = lattice_quotient(rs, cs.p, cs.sub);
    CHECK(q.dim == cs.dim);
    CHECK(q.size() == static_cast<int>(std::pow(cs.p, cs.dim) + 0.5));
    // the kernel: p times the simple roots, or p times the fundamental weights in root coordinates
    std::vector<std::vector<long>> kernel;
    if (cs.sub == Sublattice::pR) {
      for (int i = 0; i < q.n; ++i) {
        std::vector<long> v(q.n, 0);
        v[i] = cs.p;
        kernel.push_back(v);
      }
    } else {
      const MatQ inv = cartan_q(q).inverse();
      for (int j = 0; j < q.n; ++j) {
        std::vector<long> v(q.n);
        for (int i = 0; i < q.n; ++i) v[i] = as_integer(QNum(cs.p) * inv(i, j));
        kernel.push_back(v);
      }
    }
    for (int k = 0; k < 20; ++k) {
      const auto c = random_coeffs(rng, q.n);
      for (const auto& v : kernel) {
        auto d = c;
        for (int i = 0; i < q.n; ++i) d[i] += v[i];
        CHECK(q.reduce(d) == q.reduce(c));
      }
      const auto x = q.reduce(c);
      CHECK(q.decode(q.encode(x)) == x);
    }
  }
}

TEST_CASE("the Weyl group preserves the induced form") {
  std::mt19937_64 rng(23);
  for (const auto& [type, p, sub] : {std::tuple{"E7", 2, Sublattice::pP}, std::tuple{"E8", 2, Sublattice::pR},
                                     std::tuple{"E6", 3, Sublattice::pP}}) {
    const RootSystem rs = RootSystem::build(CoxeterType::parse(type));
    const LatticeQuotient q = lattice_quotient(rs, p, sub);
    for (int k = 0; k < 20; ++k) {
      const Elem g = random_element(rs, rng), h = random_element(rs, rng);
      const MatFp m = induced_matrix(q, rs, g);
      CHECK(m.transpose() * q.gram * m == q.gram);
      CHECK(induced_matrix(q, rs, rs.compose(g, h)) == m * induced_matrix(q, rs, h));
      // the induced map agrees with reducing the image of each root
      for (int r = 0; r < rs.nroots(); r += 11) {
        const MatFp img = m * column(p, root_image(q, rs, r));
        CHECK(column(p, root_image(q, rs, rs.apply(g, r))) == img);
      }
    }
  }
}

TEST_CASE("E7 modulo 2P is a symplectic 6-space") {
  const RootSystem e7 = RootSystem::build(CoxeterType::parse("E7"));
  const LatticeQuotient q = lattice_quotient(e7, 2, Sublattice::pP);
  CHECK(q.gram.rank() == 6);
  for (int i = 0; i < 6; ++i) CHECK(q.gram(i, i) == 0);
  const auto rm = reflection_map_check(q, e7);
  CHECK(rm.distinct_images == 63);
  CHECK(rm.mismatches == 0);
  // totally isotropic subspaces of a symplectic F2^6: 63 points, 315 lines, 135 planes
  CHECK(isotropic_subspaces(q, 1).size() == 63);
  CHECK(isotropic_subspaces(q, 2).size() == 63 * 30 / 6);
  CHECK(isotropic_subspaces(q, 3).size() == (8 + 1) * (4 + 1) * (2 + 1));
  std::set<std::vector<int>> planes;
  for (const auto& s : isotropic_subspaces(q, 3)) planes.insert(s);
  for (const auto& b : maximal_cubes(e7)) CHECK(planes.count(base_image(q, e7, b)) == 1);
}

TEST_CASE("E8 modulo 2R is a hyperbolic quadratic 8-space") {
  const RootSystem e8 = RootSystem::build(CoxeterType::parse("E8"));
  const LatticeQuotient q = lattice_quotient(e8, 2, Sublattice::pR);
  int nonsingular = 0;
  for (int code = 1; code < q.size(); ++code) nonsingular += q.quadratic(q.decode(code));
  // 2^7 - 2^3 nonsingular vectors for the plus-type form
  CHECK(nonsingular == 120);
  std::set<int> images;
  for (int r = 0; r < e8.npos(); ++r) {
    const auto x = root_image(q, e8, r);
    CHECK(q.quadratic(x) == 1);
    images.insert(q.encode(x));
  }
  CHECK(images.size() == 120);
  const auto w = witt_split(q);
  CHECK(w.planes == 4);
  CHECK(w.anisotropic_dim == 0);
  const auto st = steiner_check(q, e8, maximal_cubes(e8).front());
  CHECK(st.blocks.size() == 14);
  CHECK(st.unique_block);
  CHECK(st.unique_completion);
  CHECK(st.affine_closed);
}

TEST_CASE("zero-sum subsets and family preservation") {
  const RootSystem e8 = RootSystem::build(CoxeterType::parse("E8"));
  const LatticeQuotient q = lattice_quotient(e8, 2, Sublattice::pR);
  const PhiData d = phi_data(e8);
  std::vector<int> pts;
  for (int r : d.cube) pts.push_back(q.encode(root_image(q, e8, r)));
  const auto blocks = zero_sum_subsets(q, pts, 4);
  CHECK(blocks.size() == 14);
  CHECK(zero_sum_subsets(q, pts, 3).empty());
  CHECK(preserves_family(d.phi, blocks));
  const AffineCheck a = affine_check(d.phi, blocks);
  CHECK(a.preserves_blocks);
  CHECK(a.transitive);
  CHECK(a.point_stabilizer == 168);
  CHECK(a.translations == 8);
  CHECK(a.translations_closed);
}

TEST_CASE("symplectic group orders") {
  CHECK(symplectic_group_order(1, 2) == 6);
  CHECK(symplectic_group_order(1, 3) == 24);
  CHECK(symplectic_group_order(2, 2) == 720);
  CHECK(symplectic_group_order(3, 2) == 1451520);
  CHECK(symplectic_group_order(3, 2) * 2 == group_order(CoxeterType::parse("E7")));
}

TEST_CASE("fundamental weights are dual to the simple roots") {
  for (const char* s : {"E6", "E7", "E8", "D5", "A4"}) {
    const RootSystem rs = RootSystem::build(CoxeterType::parse(s));
    for (int j = 1; j <= rs.rank(); ++j) {
      const VecQ w = fundamental_weight(rs, j);
      for (int i = 0; i < rs.rank(); ++i) {
        const QNum ip = QNum(2) * inner_product(w, rs.simple_root(i)) / inner_product(rs.simple_root(i), rs.simple_root(i));
        CHECK(ip == QNum(i + 1 == j ? 1 : 0));
      }
    }
  }
}
