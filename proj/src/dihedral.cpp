#include "coxinv/dihedral.hpp"

#include <numeric>
#include <stdexcept>

namespace coxinv {

DihedralElement DihedralElement::generator(int m, int j) {
  if (j == 0) return {m, 0, true};
  // s_1 = s_0 r = r^-1 s_0
  return {m, m - 1, true};
}

DihedralElement DihedralElement::operator*(const DihedralElement& o) const {
  // r^a s^f r^b s^g = r^(a + (-1)^f b) s^(f+g)
  const int b = flip ? m - o.rotation : o.rotation;
  return {m, (rotation + b) % m, flip != o.flip};
}

int DihedralElement::order() const {
  if (flip) return 2;
  return m / std::gcd(m, rotation);
}

int DihedralElement::degree() const {
  if (flip) return 1;
  if (rotation == 0) return 0;
  if (2 * rotation == m) return 2;
  throw std::invalid_argument("degree of a non-involution");
}

Elem to_permutation(const RootSystem& rs, const DihedralElement& d) {
  const auto& t = rs.type();
  if (!t.irreducible() || t.rank() != 2) throw std::invalid_argument("to_permutation needs a rank-2 system");
  Elem r = rs.compose(rs.simple_reflection(0), rs.simple_reflection(1));
  Elem out = rs.identity();
  for (int k = 0; k < d.rotation; ++k) out = rs.compose(out, r);
  if (d.flip) out = rs.compose(out, rs.simple_reflection(0));
  return out;
}

}  // namespace coxinv
