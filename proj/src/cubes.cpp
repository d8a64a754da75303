#include "coxinv/cubes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "coxinv/involutions.hpp"

namespace coxinv {

bool is_cube_base(const RootSystem& rs, const Base& b) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] < 0 || b[i] >= rs.npos()) return false;
    if (i && b[i] <= b[i - 1]) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!rs.orthogonal(b[i], b[j])) return false;
  }
  return true;
}

namespace {

struct CliqueSearch {
  const RootSystem& rs;
  const std::function<void(const CubeVisit&)>& visit;
  int min_size;
  bool want_ext;
  std::vector<RootSet> above;
  Base cur;
  std::vector<Elem> ext;  // ext[k] = product of the first k reflections

  void run(const RootSet& cand) {
    visit(CubeVisit{cur, want_ext ? &ext[cur.size()] : nullptr});
    const int need = min_size - static_cast<int>(cur.size()) - 1;
    for (int v = cand.next(0); v >= 0; v = cand.next(v + 1)) {
      RootSet next = cand & rs.orthogonal_set(v) & above[v];
      if (need > 0 && next.count() < need) continue;
      cur.push_back(v);
      if (want_ext) {
        if (ext.size() <= cur.size()) ext.resize(cur.size() + 1);
        ext[cur.size()] = rs.compose(ext[cur.size() - 1], rs.reflection(v));
      }
      run(next);
      cur.pop_back();
    }
  }
};

}  // namespace

void for_each_cube(const RootSystem& rs, const std::function<void(const CubeVisit&)>& visit,
                   const RootSet* within, int min_size, bool want_extremity) {
  CliqueSearch s{rs, visit, min_size, want_extremity, {}, {}, {}};
  s.above.resize(rs.npos());
  for (int v = 0; v < rs.npos(); ++v)
    for (int w = v + 1; w < rs.npos(); ++w) s.above[v].set(w);
  RootSet all;
  for (int v = 0; v < rs.npos(); ++v) all.set(v);
  if (want_extremity) s.ext.push_back(rs.identity());
  s.run(within ? (*within & all) : all);
}

std::vector<std::uint64_t> cube_census(const RootSystem& rs) {
  std::vector<std::uint64_t> counts;
  for_each_cube(rs, [&](const CubeVisit& c) {
    if (counts.size() <= c.base.size()) counts.resize(c.base.size() + 1, 0);
    ++counts[c.base.size()];
  });
  return counts;
}

std::vector<Base> cubes_of_rank(const RootSystem& rs, int rank) {
  std::vector<Base> out;
  for_each_cube(
      rs,
      [&](const CubeVisit& c) {
        if (static_cast<int>(c.base.size()) == rank) out.push_back(c.base);
      },
      nullptr, rank);
  return out;
}

std::vector<Base> maximal_cubes(const RootSystem& rs) {
  return cubes_of_rank(rs, reduced_rank(rs.type()));
}

Elem extremity(const RootSystem& rs, const Base& b) {
  if (!is_cube_base(rs, b)) throw std::invalid_argument("not a cube base: roots must be sorted and pairwise orthogonal");
  return product_of_reflections(rs, b);
}

std::vector<Base> cubes_with_extremity(const RootSystem& rs, const Elem& u) {
  const int d = degree(rs, u);
  const RootSet neg = rs.negated(u);
  std::vector<Base> out;
  for_each_cube(
      rs,
      [&](const CubeVisit& c) {
        if (static_cast<int>(c.base.size()) == d) out.push_back(c.base);
      },
      &neg, d);
  return out;
}

Base embed_in_maximal(const RootSystem& rs, const Base& b) {
  Base out = b;
  for (int r : extend_to_maximal(rs, extremity(rs, b))) out.push_back(r);
  std::sort(out.begin(), out.end());
  return out;
}

Base conjugate_cube(const RootSystem& rs, const Elem& g, const Base& b) {
  Base out;
  out.reserve(b.size());
  for (int r : b) out.push_back(rs.abs_index(rs.apply(g, r)));
  std::sort(out.begin(), out.end());
  return out;
}

CubeOrbit cube_orbit(const RootSystem& rs, const Base& start, bool schreier) {
  CubeOrbit o;
  std::map<Base, int> pos;
  o.cubes.push_back(start);
  o.transversal.push_back(rs.identity());
  pos.emplace(start, 0);
  std::vector<int> where(rs.npos(), -1);
  for (std::size_t p = 0; p < start.size(); ++p) where[start[p]] = static_cast<int>(p);
  std::set<Perm> gens;
  const auto simple = rs.simple_reflections();
  for (std::size_t k = 0; k < o.cubes.size(); ++k) {
    for (const auto& s : simple) {
      Base c = conjugate_cube(rs, s, o.cubes[k]);
      auto [it, fresh] = pos.emplace(c, static_cast<int>(o.cubes.size()));
      if (fresh) {
        o.cubes.push_back(std::move(c));
        o.transversal.push_back(rs.compose(s, o.transversal[k]));
        continue;
      }
      if (!schreier) continue;
      const Elem n = rs.compose(rs.inverse(o.transversal[it->second]), rs.compose(s, o.transversal[k]));
      Perm p(start.size());
      for (std::size_t i = 0; i < start.size(); ++i) {
        const int w = where[rs.abs_index(rs.apply(n, start[i]))];
        if (w < 0) throw std::logic_error("Schreier generator does not normalize the cube");
        p[i] = static_cast<std::uint8_t>(w);
      }
      gens.insert(std::move(p));
    }
  }
  o.phi_generators.assign(gens.begin(), gens.end());
  return o;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint8_t>(i);
  return r;
}

std::size_t derived_subgroup_order(const PermGroup& g) {
  std::set<Perm> comms;
  for (const auto& a : g.elements)
    for (const auto& b : g.elements)
      comms.insert(perm_compose(perm_compose(a, b), perm_compose(perm_inverse(a), perm_inverse(b))));
  return perm_closure(g.degree, {comms.begin(), comms.end()}).order();
}

int perm_order(const Perm& p) {
  Perm q = p;
  int k = 1;
  auto is_id = [](const Perm& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != i) return false;
    return true;
  };
  while (!is_id(q)) {
    q = perm_compose(p, q);
    ++k;
  }
  return k;
}

PermGroup perm_closure(int degree, const std::vector<Perm>& gens) {
  PermGroup g;
  g.degree = degree;
  g.generators = gens;
  Perm id(degree);
  std::iota(id.begin(), id.end(), std::uint8_t{0});
  std::set<Perm> seen{id};
  g.elements.push_back(id);
  for (std::size_t k = 0; k < g.elements.size(); ++k)
    for (const auto& s : gens) {
      Perm p = perm_compose(s, g.elements[k]);
      if (seen.insert(p).second) g.elements.push_back(std::move(p));
    }
  return g;
}

std::vector<long long> subset_orbit_counts(int degree, const std::vector<Perm>& gens) {
  if (degree > 24) throw std::invalid_argument("subset_orbit_counts: degree too large");
  const std::uint32_t total = 1u << degree;
  std::vector<std::uint32_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens)
    for (std::uint32_t m = 0; m < total; ++m) {
      std::uint32_t img = 0;
      for (int p = 0; p < degree; ++p)
        if (m >> p & 1) img |= 1u << g[p];
      const auto a = find(m), b = find(img);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<long long> counts(degree + 1, 0);
  for (std::uint32_t m = 0; m < total; ++m)
    if (find(m) == m) ++counts[std::popcount(m)];
  return counts;
}

PhiData phi_data(const RootSystem& rs) {
  PhiData d;
  d.cube = embed_in_maximal(rs, {});
  CubeOrbit o = cube_orbit(rs, d.cube, true);
  d.orbit_size = o.cubes.size();
  d.normalizer_order = group_order(rs.type()) / BigInt(static_cast<unsigned long>(d.orbit_size));
  d.phi = perm_closure(static_cast<int>(d.cube.size()), o.phi_generators);
  return d;
}

bool cubes_with_extremity_conjugate(const RootSystem& rs, const Elem& u) {
  const auto cubes = cubes_with_extremity(rs, u);
  if (cubes.size() <= 1) return true;
  const CubeOrbit o = cube_orbit(rs, cubes[0], false);
  std::set<Base> orbit(o.cubes.begin(), o.cubes.end());
  for (const auto& c : cubes)
    if (!orbit.count(c)) return false;
  return true;
}

FusionResult fusion_check(const RootSystem& rs, const Base& cube, const PermGroup& phi,
                          const std::vector<Elem>& elements) {
  const int k = static_cast<int>(cube.size());
  const std::uint32_t total = 1u << k;
  std::unordered_map<Elem, std::uint32_t, ElemHash> subset_of;
  std::vector<Elem> prod(total);
  for (std::uint32_t m = 0; m < total; ++m) {
    std::vector<int> roots;
    for (int p = 0; p < k; ++p)
      if (m >> p & 1) roots.push_back(cube[p]);
    prod[m] = product_of_reflections(rs, roots);
    subset_of.emplace(prod[m], m);
  }
  // Images of every subset under every element of phi.
  std::vector<std::vector<std::uint32_t>> image(phi.order(), std::vector<std::uint32_t>(total));
  for (std::size_t f = 0; f < phi.order(); ++f)
    for (std::uint32_t m = 0; m < total; ++m) {
      std::uint32_t img = 0;
      for (int p = 0; p < k; ++p)
        if (m >> p & 1) img |= 1u << phi.elements[f][p];
      image[f][m] = img;
    }
  FusionResult r;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> fused;
  for (const auto& g : elements) {
    fused.clear();
    const Elem gi = rs.inverse(g);
    for (std::uint32_t m = 1; m < total; ++m) {
      auto it = subset_of.find(rs.compose(rs.compose(g, prod[m]), gi));
      if (it != subset_of.end()) fused.emplace_back(m, it->second);
    }
    bool found = false;
    for (std::size_t f = 0; f < phi.order() && !found; ++f) {
      bool ok = true;
      for (const auto& [a, b] : fused)
        if (image[f][a] != b) {
          ok = false;
          break;
        }
      found = ok;
    }
    ++r.tested;
    if (!found) ++r.failures;
  }
  return r;
}

CubeCentralizer cube_centralizer(const RootSystem& rs, const ElementSet& group, const Base& base) {
  CubeCentralizer c;
  std::vector<Elem> refl;
  for (int r : base) refl.push_back(rs.reflection(r));
  for (std::size_t k = 0; k < group.size(); ++k) {
    const Elem g = group.at(k);
    bool ok = true;
    for (const auto& s : refl) ok = ok && rs.compose(g, s) == rs.compose(s, g);
    if (ok) ++c.centralizer;
  }
  RootSet orth;
  for (int i = 0; i < rs.npos(); ++i) orth.set(i);
  for (int r : base) orth = orth & rs.orthogonal_set(r);
  std::vector<Elem> fix_gens;
  for (int i : orth.elements()) fix_gens.push_back(rs.reflection(i));
  const ElementSet fix = closure(rs, fix_gens, group.size());
  const ElementSet cube = closure(rs, refl, group.size());
  c.cube = cube.size();
  c.fixator = fix.size();
  bool commute = true, trivial = true;
  for (std::size_t i = 0; i < cube.size(); ++i) {
    const Elem x = cube.at(i);
    if (i && fix.contains(x)) trivial = false;
    for (const auto& g : fix_gens) commute = commute && rs.compose(x, g) == rs.compose(g, x);
  }
  // With commuting factors meeting trivially, C G_u^+ has |C| |G_u^+| elements
  // inside the centralizer; equal orders give equality.
  c.decomposes = commute && trivial && c.centralizer == c.cube * c.fixator;
  return c;
}

BnCubeInvariant bn_cube_invariant(const RootSystem& rs, const Base& base) {
  const auto& t = rs.type();
  if (!t.irreducible() || t.single().family != Family::B || !rs.has_coordinates())
    throw std::invalid_argument("bn_cube_invariant: needs the B_n signed model");
  const BnInvariants inv = bn_invariants(rs, extremity(rs, base));
  int longs = 0;
  for (int r : base)
    if (inner_product(rs.root(r), rs.root(r)) == QNum(2)) ++longs;
  BnCubeInvariant c{inv.a, inv.b, (longs - inv.b) / 2};
  if (inv.a - 2 * c.c != static_cast<int>(base.size()) - longs) throw std::logic_error("inconsistent B_n cube invariant");
  return c;
}

}  // namespace coxinv
