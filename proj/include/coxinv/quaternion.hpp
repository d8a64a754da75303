// Binary polyhedral groups, the groups B(Gamma)^c built from pairs of their
// elements, the reflections sigma_a, and the representation in O_4.
//
// Cyclic and binary dihedral groups are kept as abstract multiplication
// tables (cos(pi/m) is not in our field for general m); 2T, 2O and 2I are
// closures of explicit unit quaternions.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "coxinv/coxeter_type.hpp"
#include "coxinv/exactnum.hpp"

namespace coxinv {

struct Quaternion {
  std::array<QNum, 4> c;  // 1, i, j, k

  Quaternion() = default;
  Quaternion(QNum w, QNum x, QNum y, QNum z) : c{std::move(w), std::move(x), std::move(y), std::move(z)} {}
  static Quaternion one() { return {1, 0, 0, 0}; }

  Quaternion conj() const { return {c[0], -c[1], -c[2], -c[3]}; }
  QNum norm() const;
  Quaternion operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  friend bool operator==(const Quaternion& a, const Quaternion& b) { return a.c == b.c; }
  std::string str() const;
  VecQ vec() const { return {c[0], c[1], c[2], c[3]}; }
};

enum class BinaryKind { Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral };

/// A finite group Gamma with a central element e of order 2.
struct BinaryGroup {
  BinaryKind kind = BinaryKind::Cyclic;
  int m = 0;                       // cyclic / dihedral parameter
  int n = 0;                       // order
  int one = 0, e = 0;
  std::vector<int> table;          // n*n
  std::vector<int> inverse;
  std::vector<Quaternion> quats;   // empty for abstract groups
  std::vector<char> in_derived;    // membership in D(Gamma)
  int derived_order = 0;

  int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * n + b]; }
  int order_of(int a) const;
  /// Order of the image in Gamma_0 = Gamma / {1, e}.
  int order_mod_e(int a) const;
  int abelianization_order() const { return n / derived_order; }
  std::string name() const;
};

/// Throws std::logic_error when the seeds do not close up to the expected order.
BinaryGroup build_binary_group(BinaryKind kind, int m = 0);

/// Elements of the subgroup generated by `gens`.
std::vector<int> subgroup_closure(const BinaryGroup& g, const std::vector<int>& gens);
/// A subgroup of the given order generated by two elements, or empty.
std::vector<int> find_subgroup(const BinaryGroup& g, int order);

/// Membership in Gamma_2: a b in D(Gamma).
bool gamma2_member(const BinaryGroup& g, int a, int b);

/// Gamma_2 = <(x, x^-1)> computed as a closure in Gamma^2, compared with the
/// membership test; and the coset count of Gamma_2 in Gamma^2.
struct Gamma2Check {
  std::size_t closure_size = 0;
  std::size_t member_count = 0;
  bool sets_equal = false;
  std::size_t cosets = 0;           // |Gamma|^2 / |Gamma_2|
  bool coset_map_bijective = false; // (x, y) -> x y mod D(Gamma)
};
Gamma2Check gamma2_check(const BinaryGroup& g);

/// B(Gamma)^c: elements (a, b) sigma^s with a b in D(Gamma), modulo
/// (a, b) ~ (ae, be). Codes keep the representative with the smaller a.
class BGC {
public:
  explicit BGC(const BinaryGroup& g) : g_(&g) {}

  using Code = std::uint32_t;
  Code make(int a, int b, int s) const;
  int first(Code x) const { return static_cast<int>(x / 2 / g_->n); }
  int second(Code x) const { return static_cast<int>(x / 2 % g_->n); }
  int swap_bit(Code x) const { return static_cast<int>(x % 2); }

  Code identity() const { return make(g_->one, g_->one, 0); }
  Code sigma(int a) const { return make(a, g_->inverse[a], 1); }
  Code mul(Code x, Code y) const;
  int order_of(Code x) const;
  /// Closure of the sigma_a, a in `from` (all of Gamma when empty).
  std::vector<Code> elements(const std::vector<int>& from = {}) const;
  std::vector<Code> closure(const std::vector<Code>& gens) const;
  BigInt formula_order() const;

  const BinaryGroup& group() const { return *g_; }

private:
  const BinaryGroup* g_;
};

/// Over all pairs of Gamma: number of (a, b) with
/// order(sigma_a sigma_b) != order of a b^-1 in Gamma_0.
std::size_t sigma_pair_order_failures(const BGC& bgc);

/// Permutation model of Gamma_0 for 2T, 2O, 2I (Alt4, Sym4, Alt5) through
/// conjugation on its Sylow 3-subgroups (2T, 2O) or Sylow 2-subgroups (2I).
/// perms[a] is the permutation (0-based images) of the class of a.
std::vector<std::vector<int>> gamma0_permutations(const BinaryGroup& g);
/// Parse "(123)(45)" on points 1..n to 0-based images.
std::vector<int> parse_cycles(const std::string& s, int n);

/// The explicit reflection base of B(Gamma)^c and the type it should have.
struct ExplicitBase {
  std::vector<int> elements;   // a in Gamma, sigma_a are the generators
  CoxeterType expected;
};
ExplicitBase explicit_base(const BinaryGroup& g);
/// Elements of Gamma given as permutations of Gamma_0.
std::vector<int> elements_from_permutations(const BinaryGroup& g, const std::vector<std::string>& cycles);

struct TypeIdentification {
  CoxeterMatrix matrix;
  CoxeterType found;
  bool matrix_matches = false;   // identified type equals the expected one
  std::size_t generated = 0;     // closure of the base
  std::size_t group_size = 0;    // all of B(Gamma)^c
  BigInt expected_order;
  bool ok() const {
    return matrix_matches && generated == group_size && BigInt(static_cast<unsigned long>(group_size)) == expected_order;
  }
};
TypeIdentification identify_bgc(const BGC& bgc, const ExplicitBase& base);

/// z -> a z conj(b), composed with z -> -conj(z) when the swap bit is set.
MatQ phi_to_o4(const BGC& bgc, BGC::Code x);

struct O4Check {
  std::size_t elements = 0;
  std::size_t distinct_images = 0;
  bool multiplicative = false;     // on x sigma_a for all x and a
  bool orthogonal = false;
  std::size_t reflection_images = 0;  // distinct phi(sigma_a)
  bool reflections_ok = false;     // trace 2, det -1, a -> -a
};
O4Check o4_check(const BGC& bgc);

/// B(Gamma')^c inside B(Gamma)^c for a subgroup Gamma' containing e: type
/// read off the root set {a : a in Gamma'} in H = R^4, order of the
/// subgroup generated by its sigma_a.
struct InclusionResult {
  std::size_t generated = 0;
  BigInt formula_order;           // |Gamma'|^2 / |Gamma'^ab|
  std::string type;               // canonical name
  bool reflections_only = false;  // generated by reflections of B(Gamma)^c
};
InclusionResult inclusion(const BGC& bgc, const std::vector<int>& sub);

/// Invariants of B(2I)^c computed inside the abstract group: reflections
/// are the sigma_a, involution degrees come from phi_to_o4, cubes are sets
/// of pairwise commuting sigma_a.
struct QuaternionicH4 {
  std::size_t order = 0;
  std::size_t reflections = 0;
  HPoly hpoly;
  std::size_t maximal_cubes = 0;
};
QuaternionicH4 quaternionic_h4(const BGC& bgc);

}  // namespace coxinv
