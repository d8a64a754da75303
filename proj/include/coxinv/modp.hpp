// Lattice quotients R/pR and R/pP of simply-laced root lattices and the
// finite geometries they carry: E7's symplectic F2-space, E8's quadratic
// F2-space with its Steiner system, E6's orthogonal F3-space.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxinv/cubes.hpp"
#include "coxinv/exactnum.hpp"
#include "coxinv/group.hpp"
#include "coxinv/root_system.hpp"

namespace coxinv {

enum class Sublattice { pR, pP };

/// V = R / L with L = pR or pP. Vectors of V are given by coordinates in
/// the images of `basis` (a subset of the simple roots).
struct LatticeQuotient {
  int p = 2;
  Sublattice sub = Sublattice::pR;
  int n = 0;                               // rank of R
  int dim = 0;
  std::vector<std::vector<long>> cartan;   // integral Gram matrix of the simple roots
  std::vector<int> basis;
  std::vector<std::vector<int>> coords;    // per positive root
  MatFp gram;                              // bilinear form on the basis, mod p

  /// Image of sum c_i alpha_i.
  std::vector<int> reduce(const std::vector<long>& c) const;
  int form(const std::vector<int>& x, const std::vector<int>& y) const;
  /// (x.x)/2 mod 2 for p = 2, from any integral lift.
  int quadratic(const std::vector<int>& x) const;

  int encode(const std::vector<int>& x) const;
  std::vector<int> decode(int code) const;
  int size() const;  // p^dim
  int add(int a, int b) const;
};

/// Needs an integral Gram matrix (simply-laced types).
LatticeQuotient lattice_quotient(const RootSystem& rs, int p, Sublattice sub);

/// Coordinates of the image of a root (negative roots included).
std::vector<int> root_image(const LatticeQuotient& q, const RootSystem& rs, int r);

/// Matrix of the map induced by g on V, columns = images of the basis.
MatFp induced_matrix(const LatticeQuotient& q, const RootSystem& rs, const Elem& g);

struct ReflectionMapCheck {
  std::size_t distinct_images = 0;
  std::size_t nonzero_vectors = 0;  // p^dim - 1
  std::size_t pairs = 0;
  std::size_t mismatches = 0;       // commute XOR form zero
  bool zero_hit = false;
};
/// Reflections -> V (root up to sign), and commuting <=> form zero on
/// every pair of distinct reflections.
ReflectionMapCheck reflection_map_check(const LatticeQuotient& q, const RootSystem& rs);

/// Nonzero vectors (codes, sorted) of every totally isotropic subspace of
/// dimension k for the bilinear form of q.
std::vector<std::vector<int>> isotropic_subspaces(const LatticeQuotient& q, int k);

/// Images of the roots of a cube base, sorted codes.
std::vector<int> base_image(const LatticeQuotient& q, const RootSystem& rs, const Base& base);

/// Triples of positions {i,j,k} with x_i + x_j + x_k = 0, as bit masks.
std::vector<std::uint32_t> zero_sum_subsets(const LatticeQuotient& q, const std::vector<int>& points, int size);

/// Does every element of the group map the given position subsets to
/// subsets of the same family?
bool preserves_family(const PermGroup& g, const std::vector<std::uint32_t>& family);

/// Number of hyperbolic planes split off a quadratic F2-space, and the
/// dimension left over (0 for a hyperbolic form).
struct WittSplit {
  int planes = 0;
  int anisotropic_dim = 0;
};
WittSplit witt_split(const LatticeQuotient& q);

/// E8 Steiner properties on one maximal cube base.
struct SteinerCheck {
  bool unique_completion = false;  // each 3-subset A: exactly one s outside A with s = e(A)
  bool unique_block = false;       // each 3-subset in exactly one block
  bool affine_closed = false;      // x + y + z in X for distinct x, y, z in X
  std::vector<std::uint32_t> blocks;  // 4-subsets with zero sum, as position masks
};
SteinerCheck steiner_check(const LatticeQuotient& q, const RootSystem& rs, const Base& base);

/// Phi acting on the 8 positions of an E8 maximal cube.
struct AffineCheck {
  bool preserves_blocks = false;
  bool transitive = false;
  std::size_t point_stabilizer = 0;
  std::size_t translations = 0;       // 1 and the block-preserving pairings x <-> x + v
  bool translations_closed = false;
};
AffineCheck affine_check(const PermGroup& phi, const std::vector<std::uint32_t>& blocks);

/// The map g -> det(g) g_V on an enumerated group: image size, injectivity,
/// multiplicativity (checked on g s for every g and simple s), determinant
/// one and preservation of the form.
struct OrthogonalImageCheck {
  std::size_t group_size = 0;
  std::size_t image_size = 0;
  bool multiplicative = false;
  bool special = false;
  bool preserves_form = false;
};
OrthogonalImageCheck orthogonal_image_check(const LatticeQuotient& q, const RootSystem& rs, const ElementSet& group);

/// E7 on V6: random words, kernel and form preservation; optionally the
/// order of the group generated by the images of the simple reflections.
struct SymplecticCheck {
  std::size_t samples = 0;
  bool multiplicative = false;
  bool kernel_is_pm1 = false;    // -1 maps to 1, no sampled g other than +-1 does
  bool preserves_form = false;
  std::size_t image_order = 0;   // 0 when not computed
};
SymplecticCheck symplectic_check(const LatticeQuotient& q, const RootSystem& rs, std::size_t samples,
                                 std::uint64_t seed, bool closure);

/// |Sp_2m(F_q)|.
BigInt symplectic_group_order(int m, int q);

/// Fundamental weight omega_j (1-based Bourbaki label) in ambient coordinates.
VecQ fundamental_weight(const RootSystem& rs, int j);

}  // namespace coxinv
