// Closed-form model of the dihedral group I2(m): rotations r^k and
// reflections r^k s, used to cross-check the root-permutation model.
#pragma once

#include "coxinv/root_system.hpp"

namespace coxinv {

struct DihedralElement {
  int m = 1;
  int rotation = 0;   // k in r^k, r = s_0 s_1
  bool flip = false;  // times s_0 on the right

  static DihedralElement generator(int m, int j);  // s_0 or s_1
  DihedralElement operator*(const DihedralElement& o) const;
  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;

  int order() const;
  bool is_involution() const { return order() == 2; }
  /// Degree of an involution: 1 for reflections, 2 for the half-turn,
  /// 0 for the identity. Throws for other elements.
  int degree() const;
};

/// The same element as a signed permutation of the I2(m) positive roots.
Elem to_permutation(const RootSystem& rs, const DihedralElement& d);

}  // namespace coxinv
