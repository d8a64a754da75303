#include "coxinv/quaternion.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "coxinv/root_system.hpp"

namespace coxinv {

QNum Quaternion::norm() const { return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]; }

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  const auto& [a1, b1, c1, d1] = a.c;
  const auto& [a2, b2, c2, d2] = b.c;
  return {a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2, a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
          a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2, a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2};
}

std::string Quaternion::str() const {
  return "(" + c[0].str() + ", " + c[1].str() + ", " + c[2].str() + ", " + c[3].str() + ")";
}

int BinaryGroup::order_of(int a) const {
  int k = 1;
  for (int x = a; x != one; x = mul(x, a)) ++k;
  return k;
}

int BinaryGroup::order_mod_e(int a) const {
  int k = 1;
  for (int x = a; x != one && x != e; x = mul(x, a)) ++k;
  return k;
}

std::string BinaryGroup::name() const {
  switch (kind) {
    case BinaryKind::Cyclic: return "cyclic(" + std::to_string(m) + ")";
    case BinaryKind::Dihedral: return "binary_dihedral(" + std::to_string(m) + ")";
    case BinaryKind::Tetrahedral: return "2T";
    case BinaryKind::Octahedral: return "2O";
    case BinaryKind::Icosahedral: return "2I";
  }
  return "?";
}

namespace {

void finish(BinaryGroup& g) {
  g.inverse.assign(g.n, -1);
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      if (g.mul(a, b) == g.one) g.inverse[a] = b;
  std::vector<int> comms;
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) comms.push_back(g.mul(g.mul(a, b), g.mul(g.inverse[a], g.inverse[b])));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  const auto d = subgroup_closure(g, comms);
  g.in_derived.assign(g.n, 0);
  for (int x : d) g.in_derived[x] = 1;
  g.derived_order = static_cast<int>(d.size());
}

BinaryGroup from_quaternions(BinaryKind kind, const std::vector<Quaternion>& seeds, int expected) {
  BinaryGroup g;
  g.kind = kind;
  std::unordered_map<std::string, int> index;
  auto add = [&](const Quaternion& q) {
    auto [it, fresh] = index.emplace(q.str(), static_cast<int>(g.quats.size()));
    if (fresh) g.quats.push_back(q);
    return it->second;
  };
  add(Quaternion::one());
  for (std::size_t k = 0; k < g.quats.size(); ++k) {
    for (const auto& s : seeds) add(g.quats[k] * s);
    if (static_cast<int>(g.quats.size()) > expected)
      throw std::logic_error("quaternion seeds generate more than " + std::to_string(expected) + " elements");
  }
  g.n = static_cast<int>(g.quats.size());
  if (g.n != expected) throw std::logic_error("quaternion seeds generate " + std::to_string(g.n) + " elements");
  g.table.resize(static_cast<std::size_t>(g.n) * g.n);
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) g.table[static_cast<std::size_t>(a) * g.n + b] = index.at((g.quats[a] * g.quats[b]).str());
  g.one = 0;
  g.e = index.at((-Quaternion::one()).str());
  finish(g);
  return g;
}

}  // namespace

BinaryGroup build_binary_group(BinaryKind kind, int m) {
  const QNum half(Rational(1, 2));
  const Quaternion omega{half, half, half, half};
  const Quaternion i{0, 1, 0, 0};
  switch (kind) {
    case BinaryKind::Cyclic:
    case BinaryKind::Dihedral: {
      if (m < 1) throw std::invalid_argument("binary group parameter must be >= 1");
      BinaryGroup g;
      g.kind = kind;
      g.m = m;
      const int c = 2 * m;
      // Cyclic: x^k. Dihedral: x^k y^f stored as k + 2m f, y^2 = x^m, y x y^-1 = x^-1.
      g.n = kind == BinaryKind::Cyclic ? c : 2 * c;
      g.table.resize(static_cast<std::size_t>(g.n) * g.n);
      for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) {
          const int ka = a % c, fa = a / c, kb = b % c, fb = b / c;
          int k = ka + (fa ? c - kb : kb);
          int f = fa ^ fb;
          if (fa && fb) k += m;
          g.table[static_cast<std::size_t>(a) * g.n + b] = k % c + c * f;
        }
      g.one = 0;
      g.e = m;
      finish(g);
      return g;
    }
    case BinaryKind::Tetrahedral: return from_quaternions(kind, {omega, i}, 24);
    case BinaryKind::Octahedral: {
      const QNum r = QNum::sqrt2() * half;
      return from_quaternions(kind, {omega, i, Quaternion{r, r, 0, 0}}, 48);
    }
    case BinaryKind::Icosahedral: {
      const QNum tau = QNum::golden();
      return from_quaternions(kind, {omega, Quaternion{tau * half, tau.inv() * half, half, 0}}, 120);
    }
  }
  throw std::invalid_argument("unknown binary group kind");
}

std::vector<int> subgroup_closure(const BinaryGroup& g, const std::vector<int>& gens) {
  std::vector<char> seen(g.n, 0);
  std::vector<int> out{g.one};
  seen[g.one] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int s : gens) {
      const int x = g.mul(out[k], s);
      if (!seen[x]) {
        seen[x] = 1;
        out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> find_subgroup(const BinaryGroup& g, int order) {
  for (int a = 0; a < g.n; ++a)
    for (int b = a; b < g.n; ++b) {
      if (order % g.order_of(a) || order % g.order_of(b)) continue;
      auto s = subgroup_closure(g, {a, b});
      if (static_cast<int>(s.size()) == order) return s;
    }
  return {};
}

bool gamma2_member(const BinaryGroup& g, int a, int b) { return g.in_derived[g.mul(a, b)]; }

Gamma2Check gamma2_check(const BinaryGroup& g) {
  Gamma2Check c;
  const std::size_t n = g.n;
  std::vector<char> seen(n * n, 0);
  std::vector<std::size_t> queue{g.one * n + g.one};
  seen[queue[0]] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const int a = static_cast<int>(queue[k] / n), b = static_cast<int>(queue[k] % n);
    for (int x = 0; x < g.n; ++x) {
      const std::size_t y = g.mul(a, x) * n + g.mul(b, g.inverse[x]);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  c.closure_size = queue.size();
  c.sets_equal = true;
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) {
      const bool m = gamma2_member(g, a, b);
      if (m) ++c.member_count;
      if (m != static_cast<bool>(seen[a * n + b])) c.sets_equal = false;
    }
  c.cosets = n * n / c.closure_size;
  // Same coset <=> same class of x y mod D(Gamma); count the classes hit.
  std::set<std::vector<int>> classes;
  for (int x = 0; x < g.n; ++x) {
    std::vector<int> coset;
    for (int d = 0; d < g.n; ++d)
      if (g.in_derived[d]) coset.push_back(g.mul(x, d));
    std::sort(coset.begin(), coset.end());
    classes.insert(coset);
  }
  c.coset_map_bijective = classes.size() == c.cosets && static_cast<int>(c.cosets) == g.abelianization_order();
  return c;
}

BGC::Code BGC::make(int a, int b, int s) const {
  const int ae = g_->mul(a, g_->e), be = g_->mul(b, g_->e);
  if (ae < a) {
    a = ae;
    b = be;
  }
  return (static_cast<Code>(a) * g_->n + b) * 2 + s;
}

BGC::Code BGC::mul(Code x, Code y) const {
  const int a = first(x), b = second(x), c = first(y), d = second(y);
  if (!swap_bit(x)) return make(g_->mul(a, c), g_->mul(b, d), swap_bit(y));
  return make(g_->mul(a, d), g_->mul(b, c), 1 - swap_bit(y));
}

int BGC::order_of(Code x) const {
  int k = 1;
  for (Code y = x; y != identity(); y = mul(y, x)) ++k;
  return k;
}

std::vector<BGC::Code> BGC::closure(const std::vector<Code>& gens) const {
  std::unordered_set<Code> seen{identity()};
  std::vector<Code> out{identity()};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (Code s : gens) {
      const Code y = mul(out[k], s);
      if (seen.insert(y).second) out.push_back(y);
    }
  return out;
}

std::vector<BGC::Code> BGC::elements(const std::vector<int>& from) const {
  std::set<Code> gens;
  if (from.empty())
    for (int a = 0; a < g_->n; ++a) gens.insert(sigma(a));
  else
    for (int a : from) gens.insert(sigma(a));
  return closure({gens.begin(), gens.end()});
}

BigInt BGC::formula_order() const {
  return BigInt(g_->n) * g_->n / g_->abelianization_order();
}

std::size_t sigma_pair_order_failures(const BGC& bgc) {
  const auto& g = bgc.group();
  std::size_t fails = 0;
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      if (bgc.order_of(bgc.mul(bgc.sigma(a), bgc.sigma(b))) != g.order_mod_e(g.mul(a, g.inverse[b]))) ++fails;
  return fails;
}

std::vector<std::vector<int>> gamma0_permutations(const BinaryGroup& g) {
  auto rep = [&](int a) { return std::min(a, g.mul(a, g.e)); };
  std::set<std::vector<int>> found;
  if (g.kind == BinaryKind::Tetrahedral || g.kind == BinaryKind::Octahedral) {
    for (int a = 0; a < g.n; ++a)
      if (g.order_mod_e(a) == 3) {
        std::vector<int> s{rep(g.one), rep(a), rep(g.mul(a, a))};
        std::sort(s.begin(), s.end());
        found.insert(s);
      }
  } else if (g.kind == BinaryKind::Icosahedral) {
    for (int x = 0; x < g.n; ++x)
      for (int y = 0; y < g.n; ++y) {
        if (g.order_mod_e(x) != 2 || g.order_mod_e(y) != 2 || rep(x) == rep(y)) continue;
        if (rep(g.mul(x, y)) != rep(g.mul(y, x))) continue;
        std::vector<int> s{rep(g.one), rep(x), rep(y), rep(g.mul(x, y))};
        std::sort(s.begin(), s.end());
        found.insert(s);
      }
  } else {
    throw std::invalid_argument("permutation model only for 2T, 2O, 2I");
  }
  const std::vector<std::vector<int>> sylow(found.begin(), found.end());
  std::vector<std::vector<int>> perms(g.n);
  for (int a = 0; a < g.n; ++a)
    for (const auto& p : sylow) {
      std::vector<int> img;
      for (int x : p) img.push_back(rep(g.mul(g.mul(a, x), g.inverse[a])));
      std::sort(img.begin(), img.end());
      perms[a].push_back(static_cast<int>(std::find(sylow.begin(), sylow.end(), img) - sylow.begin()));
    }
  return perms;
}

std::vector<int> parse_cycles(const std::string& s, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<int> cyc;
  for (char ch : s) {
    if (ch == '(') cyc.clear();
    else if (ch == ')') {
      for (std::size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = cyc[(k + 1) % cyc.size()];
    } else if (ch >= '1' && ch <= '9') {
      if (ch - '1' >= n) throw std::invalid_argument("cycle point out of range: " + s);
      cyc.push_back(ch - '1');
    }
  }
  return p;
}

std::vector<int> elements_from_permutations(const BinaryGroup& g, const std::vector<std::string>& cycles) {
  const auto perms = gamma0_permutations(g);
  const int deg = static_cast<int>(perms[0].size());
  std::vector<int> out;
  for (const auto& c : cycles) {
    const auto target = parse_cycles(c, deg);
    const auto it = std::find(perms.begin(), perms.end(), target);
    if (it == perms.end()) throw std::logic_error("permutation " + c + " not in the image of Gamma_0");
    out.push_back(static_cast<int>(it - perms.begin()));
  }
  return out;
}

ExplicitBase explicit_base(const BinaryGroup& g) {
  ExplicitBase b;
  const auto I2 = [](int m) { return make_irreducible(Family::I, 2, m); };
  switch (g.kind) {
    case BinaryKind::Cyclic:
      b.elements = {g.one, 1};
      b.expected = CoxeterType({I2(g.m)});
      break;
    case BinaryKind::Dihedral: {
      const int x = 1, s = 2 * g.m;
      b.elements = {g.one, x, s, g.mul(s, x)};
      b.expected = CoxeterType({I2(g.m), I2(g.m)});
      break;
    }
    case BinaryKind::Tetrahedral:
      b.elements = elements_from_permutations(g, {"()", "(123)", "(142)", "(134)"});
      b.expected = CoxeterType({make_irreducible(Family::D, 4)});
      break;
    case BinaryKind::Octahedral:
      b.elements = elements_from_permutations(g, {"()", "(123)", "(14)", "(12)"});
      b.expected = CoxeterType({make_irreducible(Family::F, 4)});
      break;
    case BinaryKind::Icosahedral:
      b.elements = elements_from_permutations(g, {"()", "(12345)", "(15)(34)", "(15)(24)"});
      b.expected = CoxeterType({make_irreducible(Family::H, 4)});
      break;
  }
  return b;
}

TypeIdentification identify_bgc(const BGC& bgc, const ExplicitBase& base) {
  TypeIdentification t;
  const std::size_t k = base.elements.size();
  t.matrix.assign(k, std::vector<int>(k, 1));
  std::vector<BGC::Code> gens;
  for (int a : base.elements) gens.push_back(bgc.sigma(a));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) t.matrix[i][j] = bgc.order_of(bgc.mul(gens[i], gens[j]));
  t.found = identify_type(t.matrix);
  t.matrix_matches = canonical_name(t.found) == canonical_name(base.expected);
  t.generated = bgc.closure(gens).size();
  t.group_size = bgc.elements().size();
  t.expected_order = group_order(base.expected);
  return t;
}

MatQ phi_to_o4(const BGC& bgc, BGC::Code x) {
  const auto& g = bgc.group();
  if (g.quats.empty()) throw std::invalid_argument("phi_to_o4 needs a quaternion group");
  const Quaternion& a = g.quats[bgc.first(x)];
  const Quaternion bbar = g.quats[bgc.second(x)].conj();
  MatQ m(4, 4);
  for (int col = 0; col < 4; ++col) {
    Quaternion u;
    u.c = {0, 0, 0, 0};
    u.c[col] = 1;
    if (bgc.swap_bit(x)) u = -u.conj();
    const Quaternion img = a * u * bbar;
    for (int r = 0; r < 4; ++r) m(r, col) = img.c[r];
  }
  return m;
}

namespace {

std::string matrix_key(const MatQ& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j).str() + ";";
  return s;
}

}  // namespace

O4Check o4_check(const BGC& bgc) {
  const auto& g = bgc.group();
  O4Check c;
  const auto elems = bgc.elements();
  c.elements = elems.size();
  std::unordered_map<BGC::Code, MatQ> phi;
  std::unordered_set<std::string> keys;
  c.orthogonal = true;
  for (auto x : elems) {
    MatQ m = phi_to_o4(bgc, x);
    keys.insert(matrix_key(m));
    if (!(m.transpose() * m == MatQ::identity(4))) c.orthogonal = false;
    phi.emplace(x, std::move(m));
  }
  c.distinct_images = keys.size();
  c.multiplicative = true;
  std::vector<MatQ> sig(g.n);
  for (int a = 0; a < g.n; ++a) sig[a] = phi.at(bgc.sigma(a));
  // The explicit base generates, so checking x s for its sigma_a suffices.
  for (auto x : elems)
    for (int a : explicit_base(g).elements)
      if (!(phi.at(bgc.mul(x, bgc.sigma(a))) == phi.at(x) * sig[a])) c.multiplicative = false;
  std::unordered_set<std::string> refl;
  c.reflections_ok = true;
  for (int a = 0; a < g.n; ++a) {
    const MatQ& m = sig[a];
    refl.insert(matrix_key(m));
    if (m.trace() != QNum(2) || m.determinant() != QNum(-1)) c.reflections_ok = false;
    const VecQ v = g.quats[a].vec();
    if (m * v != QNum(-1) * v) c.reflections_ok = false;
  }
  c.reflection_images = refl.size();
  return c;
}

namespace {

std::vector<BGC::Code> reflection_class(const BGC& bgc, const std::vector<BGC::Code>& gens) {
  std::unordered_set<BGC::Code> seen{bgc.sigma(bgc.group().one)};
  std::vector<BGC::Code> out(seen.begin(), seen.end());
  for (std::size_t k = 0; k < out.size(); ++k)
    for (auto s : gens) {
      const auto y = bgc.mul(bgc.mul(s, out[k]), s);
      if (seen.insert(y).second) out.push_back(y);
    }
  return out;
}

std::vector<BGC::Code> all_sigmas(const BGC& bgc) {
  std::set<BGC::Code> s;
  for (int a = 0; a < bgc.group().n; ++a) s.insert(bgc.sigma(a));
  return {s.begin(), s.end()};
}

}  // namespace

InclusionResult inclusion(const BGC& bgc, const std::vector<int>& sub) {
  const auto& g = bgc.group();
  if (std::find(sub.begin(), sub.end(), g.e) == sub.end())
    throw std::invalid_argument("inclusion: subgroup must contain e");
  InclusionResult r;
  r.generated = bgc.elements(sub).size();
  std::vector<int> comms;
  for (int a : sub)
    for (int b : sub) comms.push_back(g.mul(g.mul(a, b), g.mul(g.inverse[a], g.inverse[b])));
  const std::size_t derived = subgroup_closure(g, comms).size();
  r.formula_order = BigInt(static_cast<unsigned long>(sub.size())) * BigInt(static_cast<unsigned long>(derived));
  const auto refl = reflection_class(bgc, all_sigmas(bgc));
  const std::unordered_set<BGC::Code> rs(refl.begin(), refl.end());
  r.reflections_only = true;
  for (int a : sub)
    if (!rs.count(bgc.sigma(a))) r.reflections_only = false;
  if (!g.quats.empty()) {
    std::vector<VecQ> roots;
    for (int a : sub) roots.push_back(g.quats[a].vec());
    r.type = canonical_name(RootSystem::from_roots(roots).type());
  }
  return r;
}

QuaternionicH4 quaternionic_h4(const BGC& bgc) {
  QuaternionicH4 h;
  const auto elems = bgc.elements();
  h.order = elems.size();
  const auto gens = all_sigmas(bgc);
  const auto refl = reflection_class(bgc, gens);
  h.reflections = refl.size();

  std::vector<BGC::Code> invols;
  for (auto x : elems)
    if (bgc.mul(x, x) == bgc.identity()) invols.push_back(x);
  std::unordered_map<BGC::Code, int> cls;
  std::map<int, int> classes_by_degree;
  for (auto x : invols) {
    if (cls.count(x)) continue;
    const int id = static_cast<int>(cls.size());
    std::vector<BGC::Code> queue{x};
    cls[x] = id;
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (auto s : gens) {
        const auto y = bgc.mul(bgc.mul(s, queue[k]), s);
        if (cls.emplace(y, id).second) queue.push_back(y);
      }
    const MatQ m = phi_to_o4(bgc, x) - MatQ::identity(4);
    ++classes_by_degree[static_cast<int>(m.rank())];
  }
  h.hpoly.assign(classes_by_degree.rbegin()->first + 1, 0);
  for (auto [d, k] : classes_by_degree) h.hpoly[d] = k;

  const int n = static_cast<int>(refl.size());
  std::vector<std::vector<char>> commute(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) commute[i][j] = i != j && bgc.mul(refl[i], refl[j]) == bgc.mul(refl[j], refl[i]);
  std::map<int, std::size_t> cliques;
  std::function<void(std::vector<int>&, int)> grow = [&](std::vector<int>& cur, int from) {
    ++cliques[static_cast<int>(cur.size())];
    for (int v = from; v < n; ++v) {
      bool ok = true;
      for (int u : cur) ok = ok && commute[u][v];
      if (!ok) continue;
      cur.push_back(v);
      grow(cur, v + 1);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  grow(cur, 0);
  h.maximal_cubes = cliques.rbegin()->second;
  return h;
}

}  // namespace coxinv
