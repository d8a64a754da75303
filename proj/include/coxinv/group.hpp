// Group-level algorithms on signed-permutation elements: closure and
// enumeration, conjugation orbits, longest element, fixators.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "coxinv/root_system.hpp"

namespace coxinv {

constexpr std::size_t kDefaultLimit = 1000000;

struct LimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Hash set of elements of one root system, stored in a flat pool.
class ElementSet {
public:
  explicit ElementSet(int npos);
  ElementSet(const ElementSet&) = delete;
  ElementSet& operator=(const ElementSet&) = delete;
  ElementSet(ElementSet&& o) noexcept;
  ElementSet& operator=(ElementSet&&) = delete;

  std::size_t size() const { return count_; }
  /// Index of the element and whether it was new.
  std::pair<std::size_t, bool> insert(const Elem& e);
  /// Index or -1.
  long find(const Elem& e) const;
  bool contains(const Elem& e) const { return find(e) >= 0; }
  Elem at(std::size_t i) const;
  const std::uint16_t* data(std::size_t i) const { return pool_.data() + i * n_; }
  void reserve(std::size_t k);

private:
  struct Hash {
    const ElementSet* s;
    std::size_t operator()(std::uint32_t i) const;
  };
  struct Eq {
    const ElementSet* s;
    bool operator()(std::uint32_t a, std::uint32_t b) const;
  };
  const std::uint16_t* ptr(std::uint32_t i) const;

  static constexpr std::uint32_t kProbe = 0xFFFFFFFFu;
  int n_;
  std::size_t count_ = 0;
  std::vector<std::uint16_t> pool_;
  mutable const std::uint16_t* probe_ = nullptr;
  std::unordered_set<std::uint32_t, Hash, Eq> index_;
};

/// Closure of a generating set (BFS by right multiplication).
/// Throws LimitExceeded when more than `limit` elements appear.
ElementSet closure(const RootSystem& rs, const std::vector<Elem>& gens, std::size_t limit = kDefaultLimit);

/// All elements, or nullopt when the known order exceeds `limit`.
std::optional<ElementSet> enumerate_group(const RootSystem& rs, std::size_t limit = kDefaultLimit);

/// Orbits of a conjugation-stable list under conjugation by `gens`; returns
/// an orbit id per entry (ids in order of first appearance).
std::vector<int> conjugation_orbits(const RootSystem& rs, const std::vector<Elem>& set,
                                    const std::vector<Elem>& gens, int* num_orbits = nullptr);

/// The element sending every positive root to a negative root.
Elem longest_element(const RootSystem& rs);

/// Product of a random word of length <= max_len in the simple reflections.
Elem random_element(const RootSystem& rs, std::mt19937_64& rng, int max_len = 60);

/// Positive roots orthogonal to every vector of X (their reflections
/// generate the fixator of X).
std::vector<int> fixator_reflections(const RootSystem& rs, const std::vector<VecQ>& x);

/// Both sides of: some pair of reflections has product of order n  <=>
/// n divides an element of M_G.
struct PairOrderCheck {
  bool pair_exists = false;
  bool divides = false;
};
PairOrderCheck check_pair_orders(const RootSystem& rs, int n);

/// Number of elements of an enumerated group commuting with x.
std::size_t centralizer_order(const RootSystem& rs, const ElementSet& group, const Elem& x);

/// Number of conjugacy classes of reflections, by conjugation orbits.
int reflection_class_count(const RootSystem& rs);

/// Product of the reflections in the given positive roots (in order).
Elem product_of_reflections(const RootSystem& rs, const std::vector<int>& roots);

/// Group generated by the reflections of the given roots, as a closure.
std::size_t reflection_subgroup_order(const RootSystem& rs, const std::vector<int>& roots,
                                      std::size_t limit = kDefaultLimit);

}  // namespace coxinv
