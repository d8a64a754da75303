#include "coxinv/group.hpp"

#include <algorithm>
#include <cstring>

namespace coxinv {

ElementSet::ElementSet(int npos)
    : n_(npos), index_(16, Hash{this}, Eq{this}) {}

ElementSet::ElementSet(ElementSet&& o) noexcept
    : n_(o.n_), count_(o.count_), pool_(std::move(o.pool_)), index_(16, Hash{this}, Eq{this}) {
  index_.reserve(count_);
  for (std::uint32_t i = 0; i < count_; ++i) index_.insert(i);
  o.count_ = 0;
  o.index_.clear();
}

const std::uint16_t* ElementSet::ptr(std::uint32_t i) const {
  return i == kProbe ? probe_ : pool_.data() + static_cast<std::size_t>(i) * n_;
}

std::size_t ElementSet::Hash::operator()(std::uint32_t i) const {
  const std::uint16_t* p = s->ptr(i);
  std::uint64_t h = 1469598103934665603ull;
  for (int k = 0; k < s->n_; ++k) {
    h ^= p[k];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

bool ElementSet::Eq::operator()(std::uint32_t a, std::uint32_t b) const {
  return std::memcmp(s->ptr(a), s->ptr(b), sizeof(std::uint16_t) * s->n_) == 0;
}

void ElementSet::reserve(std::size_t k) {
  pool_.reserve(k * n_);
  index_.reserve(k);
}

std::pair<std::size_t, bool> ElementSet::insert(const Elem& e) {
  const long f = find(e);
  if (f >= 0) return {static_cast<std::size_t>(f), false};
  pool_.insert(pool_.end(), e.begin(), e.end());
  index_.insert(static_cast<std::uint32_t>(count_));
  return {count_++, true};
}

long ElementSet::find(const Elem& e) const {
  probe_ = e.data();
  auto it = index_.find(kProbe);
  probe_ = nullptr;
  return it == index_.end() ? -1 : static_cast<long>(*it);
}

Elem ElementSet::at(std::size_t i) const {
  const std::uint16_t* p = data(i);
  return Elem(p, p + n_);
}

ElementSet closure(const RootSystem& rs, const std::vector<Elem>& gens, std::size_t limit) {
  ElementSet set(rs.npos());
  set.insert(rs.identity());
  Elem cur(rs.npos()), next(rs.npos());
  for (std::size_t k = 0; k < set.size(); ++k) {
    cur = set.at(k);
    for (const auto& g : gens) {
      for (int i = 0; i < rs.npos(); ++i) next[i] = static_cast<std::uint16_t>(rs.apply(cur, g[i]));
      if (set.insert(next).second && set.size() > limit)
        throw LimitExceeded("group closure exceeds limit of " + std::to_string(limit) + " elements");
    }
  }
  return set;
}

std::optional<ElementSet> enumerate_group(const RootSystem& rs, std::size_t limit) {
  if (group_order(rs.type()) > limit) return std::nullopt;
  ElementSet set = closure(rs, rs.simple_reflections(), limit);
  return set;
}

std::vector<int> conjugation_orbits(const RootSystem& rs, const std::vector<Elem>& set,
                                    const std::vector<Elem>& gens, int* num_orbits) {
  std::unordered_map<Elem, int, ElemHash> pos;
  for (std::size_t i = 0; i < set.size(); ++i) pos.emplace(set[i], static_cast<int>(i));
  std::vector<int> orbit(set.size(), -1);
  int count = 0;
  for (std::size_t s = 0; s < set.size(); ++s) {
    if (orbit[s] >= 0) continue;
    std::vector<int> queue{static_cast<int>(s)};
    orbit[s] = count;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const Elem& x = set[queue[k]];
      for (const auto& g : gens) {
        auto it = pos.find(rs.conjugate(g, x));
        if (it == pos.end()) throw std::invalid_argument("conjugation_orbits: set not stable under conjugation");
        if (orbit[it->second] < 0) {
          orbit[it->second] = count;
          queue.push_back(it->second);
        }
      }
    }
    ++count;
  }
  if (num_orbits) *num_orbits = count;
  return orbit;
}

Elem longest_element(const RootSystem& rs) {
  Elem w = rs.identity();
  for (bool changed = true; changed;) {
    changed = false;
    for (int j = 0; j < rs.rank(); ++j)
      if (rs.positive(rs.apply(w, rs.simple(j)))) {
        w = rs.compose(w, rs.simple_reflection(j));
        changed = true;
      }
  }
  return w;
}

Elem random_element(const RootSystem& rs, std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(0, rs.rank() - 1);
  Elem w = rs.identity();
  for (int k = len(rng); k > 0; --k) w = rs.compose(w, rs.simple_reflection(gen(rng)));
  return w;
}

std::vector<int> fixator_reflections(const RootSystem& rs, const std::vector<VecQ>& x) {
  std::vector<int> out;
  for (int i = 0; i < rs.npos(); ++i) {
    bool ok = true;
    for (const auto& v : x)
      if (!inner_product(rs.root(i), v).is_zero()) ok = false;
    if (ok) out.push_back(i);
  }
  return out;
}

PairOrderCheck check_pair_orders(const RootSystem& rs, int n) {
  PairOrderCheck r;
  for (int i = 0; i < rs.npos() && !r.pair_exists; ++i)
    for (int j = i + 1; j < rs.npos(); ++j)
      if (rs.order(rs.compose(rs.reflection(i), rs.reflection(j))) == n) {
        r.pair_exists = true;
        break;
      }
  for (int m : m_set(rs.type()))
    if (m % n == 0) r.divides = true;
  return r;
}

std::size_t centralizer_order(const RootSystem& rs, const ElementSet& group, const Elem& x) {
  std::size_t n = 0;
  for (std::size_t k = 0; k < group.size(); ++k) {
    const Elem g = group.at(k);
    if (rs.compose(g, x) == rs.compose(x, g)) ++n;
  }
  return n;
}

int reflection_class_count(const RootSystem& rs) {
  std::vector<Elem> refl;
  for (int i = 0; i < rs.npos(); ++i) refl.push_back(rs.reflection(i));
  int count = 0;
  conjugation_orbits(rs, refl, rs.simple_reflections(), &count);
  return count;
}

Elem product_of_reflections(const RootSystem& rs, const std::vector<int>& roots) {
  Elem w = rs.identity();
  for (int r : roots) w = rs.compose(w, rs.reflection(r));
  return w;
}

std::size_t reflection_subgroup_order(const RootSystem& rs, const std::vector<int>& roots, std::size_t limit) {
  std::vector<Elem> gens;
  for (int r : roots) gens.push_back(rs.reflection(r));
  return closure(rs, gens, limit).size();
}

}  // namespace coxinv
