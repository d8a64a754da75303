// Involutions: degree, orthogonal bases, maximal involutions and adjoints,
// conjugacy classes and h-polynomials, centralizers, characteristic degrees.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "coxinv/group.hpp"
#include "coxinv/root_system.hpp"

namespace coxinv {

bool is_involution(const RootSystem& rs, const Elem& u);

/// Dimension of the -1 eigenspace. Computed from the roots u negates (they
/// span that eigenspace); throws std::invalid_argument if u^2 != 1.
int degree(const RootSystem& rs, const Elem& u);
/// Same quantity as rank(M - I) of the matrix of u; needs coordinates.
int degree_by_matrix(const RootSystem& rs, const Elem& u);

/// deg(u) pairwise orthogonal roots whose reflections multiply to u; greedy
/// in increasing root index.
std::vector<int> orthogonal_product_base(const RootSystem& rs, const Elem& u);

/// Maximal involution degree, computed by extending the identity.
int computed_reduced_rank(const RootSystem& rs);
bool is_maximal(const RootSystem& rs, const Elem& u);
/// No root lies in the +1 eigenspace of u.
bool is_regular(const RootSystem& rs, const Elem& u);

/// Roots s_1..s_m, pairwise orthogonal and orthogonal to the -1 space of u,
/// such that u s_1 ... s_m is maximal; lowest index first.
std::vector<int> extend_to_maximal(const RootSystem& rs, const Elem& u);
Elem adjoint(const RootSystem& rs, const Elem& u);

/// Invariants of an involution of B_n or D_n in the signed permutation
/// model: a = basis vectors negated, b = 2-cycles, parity = number of
/// 2-cycles with a sign change, mod 2.
struct BnInvariants {
  int a = 0, b = 0, parity = 0;
  friend bool operator==(const BnInvariants&, const BnInvariants&) = default;
};
BnInvariants bn_invariants(const RootSystem& rs, const Elem& u);
/// Same invariants for a signed permutation given directly: p[i] = j+1 or
/// -(j+1) when e_i maps to +-e_j.
BnInvariants bn_invariants(const std::vector<int>& signed_perm);

/// Type of the root subsystem formed by a set of positive roots closed
/// under its own reflections, each component tagged with its root count per
/// length class, e.g. "A1[0:1]+B2[0:2,1:2]".
std::string subsystem_type(const RootSystem& rs, const RootSet& roots);

/// Conjugation-invariant key of an involution of an irreducible group.
std::string class_key(const RootSystem& rs, const Elem& u);

/// E7: does (a+b+c)/2 lie in the weight lattice for the orthogonal base of
/// a degree-3 involution ("line"), or not ("triangle")? Also returns the
/// inner products of a+b+c with the simple roots.
bool e7_half_sum_in_weight_lattice(const RootSystem& rs, const std::vector<int>& base,
                                   std::vector<long>* products = nullptr);

struct InvolutionCensus {
  std::vector<Elem> elems;
  std::vector<int> degree;
  std::vector<int> cls;  // conjugacy class, by orbit BFS
  int num_classes = 0;
  std::vector<int> class_degree;
  std::vector<std::size_t> class_size;
  std::vector<int> class_rep;  // index into elems

  HPoly hpoly() const;
  int max_degree() const;
};

std::vector<Elem> involutions_by_filter(const RootSystem& rs, const ElementSet& group);
/// Distinct extremities of all cubes (every involution is one).
std::vector<Elem> involutions_from_cubes(const RootSystem& rs);
/// Involutions of a product from the involutions of its factors.
std::vector<Elem> involutions_of_product(const RootSystem& product, const std::vector<RootSystem>& factors,
                                         const std::vector<std::vector<Elem>>& factor_involutions);
InvolutionCensus census(const RootSystem& rs, std::vector<Elem> involutions);

/// Graph on simple reflections with edges where m is odd: component count.
int h1_rank(const CoxeterType& t);

/// Degrees of the basic invariants from the eigenvalues of a Coxeter
/// element. Throws std::logic_error when the exact checks
/// prod d = |G| and sum (d-1) = N fail.
std::vector<int> characteristic_degrees(const Irreducible& t);

struct MaximalCentralizer {
  std::vector<Elem> generators;
  std::size_t order = 0;      // closure of the generators
  std::string type;           // canonical name of the Coxeter type on V_u^-
};
/// Centralizer of a maximal involution: reflections commuting with u and
/// products s s' of orthogonal reflections swapped by u.
MaximalCentralizer centralizer_of_maximal(const RootSystem& rs, const Elem& u, std::size_t limit = kDefaultLimit);

/// Every involution of the signed permutation group B_n (or its index-2
/// subgroup D_n), keyed by (a, b) and, for the split D_n class, parity.
struct SignedCensus {
  std::size_t involutions = 0;
  std::map<std::string, std::size_t> class_sizes;
  std::map<std::string, int> class_degree;
  HPoly hpoly() const;
};
SignedCensus signed_permutation_census(Family f, int n);

/// h-polynomial computed from the group rather than the formula. Methods:
/// "group" (enumerate, filter involutions, conjugation orbits), "product"
/// (pairs of factor involutions, orbits in the product), "signed" (B_n and
/// D_n census), "phi" (orbits of Phi on subsets of a maximal cube base; odd
/// types only). Throws LimitExceeded when no method applies.
struct HPolyComputation {
  HPoly hpoly;
  std::string method;
  std::size_t involutions = 0;  // 0 for "phi"
};
HPolyComputation enumerated_hpoly(const CoxeterType& t, std::size_t limit = kDefaultLimit);

}  // namespace coxinv
