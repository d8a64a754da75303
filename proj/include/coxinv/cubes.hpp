// Cubes (groups generated by pairwise commuting reflections), their
// conjugation orbits, and the permutation groups Phi_C = N_C / C.
#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "coxinv/group.hpp"
#include "coxinv/root_system.hpp"

namespace coxinv {

/// Sorted positive-root indices, pairwise orthogonal.
using Base = std::vector<int>;
using Perm = std::vector<std::uint8_t>;

bool is_cube_base(const RootSystem& rs, const Base& b);

/// Visits every cube once (vertex-ordered clique search on the
/// orthogonality graph), the empty cube included. With `within`, only roots
/// of that set are used; with min_size, branches that cannot reach it are
/// cut. `extremity` is the product of the base reflections when requested.
struct CubeVisit {
  const Base& base;
  const Elem* extremity;
};
void for_each_cube(const RootSystem& rs, const std::function<void(const CubeVisit&)>& visit,
                   const RootSet* within = nullptr, int min_size = 0, bool want_extremity = false);

/// Number of cubes of each rank 0..max.
std::vector<std::uint64_t> cube_census(const RootSystem& rs);
/// All cubes of the given rank.
std::vector<Base> cubes_of_rank(const RootSystem& rs, int rank);
/// All maximal cubes (rank = reduced rank).
std::vector<Base> maximal_cubes(const RootSystem& rs);

Elem extremity(const RootSystem& rs, const Base& b);
/// Cubes whose extremity is the involution u.
std::vector<Base> cubes_with_extremity(const RootSystem& rs, const Elem& u);
/// A maximal cube containing the given one.
Base embed_in_maximal(const RootSystem& rs, const Base& b);

/// Image of a cube under conjugation by g.
Base conjugate_cube(const RootSystem& rs, const Elem& g, const Base& b);

struct CubeOrbit {
  std::vector<Base> cubes;         // cubes[0] is the starting cube
  std::vector<Elem> transversal;   // transversal[k] maps cubes[0] to cubes[k]
  std::vector<Perm> phi_generators;  // Schreier generators acting on base positions
};
/// Orbit under conjugation by simple reflections. The Schreier generators
/// t_l^-1 s t_k of the stabilizer N_C are projected to permutations of the
/// base of cubes[0] when `schreier` is set.
CubeOrbit cube_orbit(const RootSystem& rs, const Base& start, bool schreier = true);

struct PermGroup {
  int degree = 0;
  std::vector<Perm> generators;
  std::vector<Perm> elements;  // identity first

  std::size_t order() const { return elements.size(); }
};
PermGroup perm_closure(int degree, const std::vector<Perm>& gens);
Perm perm_compose(const Perm& a, const Perm& b);  // a after b
Perm perm_inverse(const Perm& p);
int perm_order(const Perm& p);
/// Order of the subgroup generated by all commutators.
std::size_t derived_subgroup_order(const PermGroup& g);

/// Number of orbits on k-subsets of the points, k = 0..degree.
std::vector<long long> subset_orbit_counts(int degree, const std::vector<Perm>& gens);

struct PhiData {
  Base cube;                 // a maximal cube
  std::size_t orbit_size = 0;
  BigInt normalizer_order;   // |G| / orbit size
  PermGroup phi;
};
PhiData phi_data(const RootSystem& rs);

/// All cubes with extremity u lie in one conjugation orbit.
bool cubes_with_extremity_conjugate(const RootSystem& rs, const Elem& u);

/// Fusion test for a maximal cube: for each g, the elements a of C with
/// g a g^-1 in C must be conjugated the same way by some element of N_C.
struct FusionResult {
  std::size_t tested = 0;
  std::size_t failures = 0;
};
FusionResult fusion_check(const RootSystem& rs, const Base& cube, const PermGroup& phi,
                          const std::vector<Elem>& elements);

/// Elementwise centralizer of a cube against C x G_u^+, with G_u^+ the
/// group generated by the reflections orthogonal to the whole base. A
/// single reflection is the rank-1 case {1, s} x G_s^+.
struct CubeCentralizer {
  std::size_t centralizer = 0;   // elements of the group commuting with every base reflection
  std::size_t cube = 0;          // 2^rank
  std::size_t fixator = 0;       // |G_u^+|
  bool decomposes = false;       // centralizer = C x G_u^+ as sets, C and G_u^+ commute, meet trivially
};
CubeCentralizer cube_centralizer(const RootSystem& rs, const ElementSet& group, const Base& base);

/// B_n cube invariant: extremity invariants (a, b) and c with a-2c short
/// and b+2c long roots in the base.
struct BnCubeInvariant {
  int a = 0, b = 0, c = 0;
};
BnCubeInvariant bn_cube_invariant(const RootSystem& rs, const Base& base);

}  // namespace coxinv
