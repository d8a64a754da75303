// Root systems and their Weyl/Coxeter groups acting as signed permutations
// of the positive roots.
//
// Roots are indexed 0..2N-1: index r < N is the positive root beta_r and
// r >= N is -beta_{r-N}. A group element is stored as the image of every
// positive root (a full index), which records both the permutation and the
// signs. I2(m) has no coordinates in our field; it is built directly from
// the angle model (root k at angle k*pi/m).
#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxinv/coxeter_type.hpp"
#include "coxinv/exactnum.hpp"

namespace coxinv {

constexpr int kMaxPositiveRoots = 256;

/// Fixed-width bit set over positive-root indices.
struct RootSet {
  std::array<std::uint64_t, 4> w{};

  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  bool empty() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }
  /// Smallest element >= i, or -1.
  int next(int i) const {
    if (i >= kMaxPositiveRoots) return -1;
    int k = i >> 6;
    std::uint64_t x = w[k] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (x) return (k << 6) + std::countr_zero(x);
      if (++k == 4) return -1;
      x = w[k];
    }
  }
  std::vector<int> elements() const {
    std::vector<int> v;
    for (int i = next(0); i >= 0; i = next(i + 1)) v.push_back(i);
    return v;
  }
  RootSet operator&(const RootSet& o) const {
    RootSet r;
    for (int k = 0; k < 4; ++k) r.w[k] = w[k] & o.w[k];
    return r;
  }
  friend bool operator==(const RootSet&, const RootSet&) = default;
};

struct RootSetHash {
  std::size_t operator()(const RootSet& s) const {
    std::size_t h = 0;
    for (auto x : s.w) h = h * 0x9E3779B97F4A7C15ull ^ (x + (h >> 7));
    return h;
  }
};

using Elem = std::vector<std::uint16_t>;

struct ElemHash {
  std::size_t operator()(const Elem& e) const;
};

class RootSystem {
public:
  static RootSystem build(const CoxeterType& t);
  static RootSystem build(const Irreducible& t);
  /// Root system on an explicit root set (closed under its reflections,
  /// no two roots proportional except +-). Positivity comes from a generic
  /// linear functional; the type is identified from the Coxeter matrix.
  static RootSystem from_roots(const std::vector<VecQ>& roots);
  /// Orthogonal direct sum.
  static RootSystem product(const std::vector<RootSystem>& factors);

  const CoxeterType& type() const { return type_; }
  int rank() const { return static_cast<int>(simple_.size()); }
  int npos() const { return n_; }
  int nroots() const { return 2 * n_; }
  int neg(int r) const { return r < n_ ? r + n_ : r - n_; }
  bool positive(int r) const { return r < n_; }
  int abs_index(int r) const { return r < n_ ? r : r - n_; }
  /// Positive index of the j-th simple root.
  int simple(int j) const { return simple_[j]; }
  const std::vector<int>& simple_indices() const { return simple_; }

  bool has_coordinates() const { return !roots_.empty(); }
  int ambient_dim() const { return dim_; }
  /// Coordinates of a root by full index; requires coordinates.
  const VecQ& root(int r) const;
  const VecQ& simple_root(int j) const { return root(simple_[j]); }
  /// Full index of a vector, -1 if it is not a root.
  int index_of(const VecQ& v) const;
  /// Coefficients of a positive root in the simple-root basis.
  const VecQ& simple_coefficients(int i) const;
  MatQ gram() const;

  bool orthogonal(int i, int j) const { return orth_[i].test(j); }
  const RootSet& orthogonal_set(int i) const { return orth_[i]; }
  /// Label of the W-orbit of the root (one label per root length).
  int length_class(int i) const { return length_class_[i]; }
  int num_length_classes() const { return num_length_classes_; }
  /// Irreducible factor containing the root.
  int component(int i) const { return component_[i]; }
  int component_offset(int f) const { return offsets_[f]; }

  Elem identity() const;
  const Elem& reflection(int i) const { return refl_[i]; }
  const Elem& simple_reflection(int j) const { return refl_[simple_[j]]; }
  std::vector<Elem> simple_reflections() const;

  int apply(const Elem& g, int r) const {
    return r < n_ ? g[r] : neg(g[r - n_]);
  }
  /// (g h)(x) = g(h(x)).
  Elem compose(const Elem& g, const Elem& h) const;
  Elem inverse(const Elem& g) const;
  /// g x g^-1
  Elem conjugate(const Elem& g, const Elem& x) const;
  bool is_identity(const Elem& g) const;
  int order(const Elem& g) const;
  /// Number of positive roots sent to negative roots (the length).
  int length(const Elem& g) const;
  /// Positive roots beta with g(beta) = -beta.
  RootSet negated(const Elem& g) const;
  /// Action on the ambient space (roots' span acted on, complement fixed).
  MatQ element_matrix(const Elem& g) const;

  /// Coxeter matrix of a list of involutions: entry = order of g_i g_j.
  CoxeterMatrix coxeter_matrix_of(const std::vector<Elem>& gens) const;

private:
  void finish_combinatorics();
  void build_coordinates_tables();

  CoxeterType type_;
  int n_ = 0;
  int dim_ = 0;
  std::vector<int> simple_;
  std::vector<Elem> refl_;
  std::vector<RootSet> orth_;
  std::vector<int> length_class_;
  int num_length_classes_ = 0;
  std::vector<int> component_;
  std::vector<int> offsets_;

  std::vector<VecQ> roots_;   // 2N entries when coordinates exist
  std::vector<VecQ> coeffs_;  // N entries
  std::unordered_map<std::string, int> index_;
  MatQ basis_inv_;            // inverse of [simple roots | complement]
  std::vector<VecQ> complement_;
};

/// Positive index of the root of a reflection element, or -1.
int reflection_root(const RootSystem& rs, const Elem& g);

}  // namespace coxinv
