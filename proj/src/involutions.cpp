#include "coxinv/involutions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "coxinv/cubes.hpp"

namespace coxinv {

bool is_involution(const RootSystem& rs, const Elem& u) {
  for (int i = 0; i < rs.npos(); ++i)
    if (rs.apply(u, u[i]) != i) return false;
  return true;
}

namespace {

std::vector<int> greedy_orthogonal(const RootSystem& rs, const RootSet& pool) {
  std::vector<int> chosen;
  RootSet cand = pool;
  for (int v = cand.next(0); v >= 0; v = cand.next(v + 1)) {
    chosen.push_back(v);
    cand = cand & rs.orthogonal_set(v);
  }
  return chosen;
}

void require_involution(const RootSystem& rs, const Elem& u) {
  if (!is_involution(rs, u)) throw std::invalid_argument("element is not an involution");
}

}  // namespace

int degree(const RootSystem& rs, const Elem& u) {
  require_involution(rs, u);
  return static_cast<int>(greedy_orthogonal(rs, rs.negated(u)).size());
}

int degree_by_matrix(const RootSystem& rs, const Elem& u) {
  require_involution(rs, u);
  const MatQ m = rs.element_matrix(u);
  return static_cast<int>((m - MatQ::identity(m.rows())).rank());
}

std::vector<int> orthogonal_product_base(const RootSystem& rs, const Elem& u) {
  require_involution(rs, u);
  return greedy_orthogonal(rs, rs.negated(u));
}

std::vector<int> extend_to_maximal(const RootSystem& rs, const Elem& u) {
  require_involution(rs, u);
  std::vector<int> out;
  Elem v = u;
  for (int b = 0; b < rs.npos(); ++b) {
    // A root fixed by v lies in V_v^+; multiplying by its reflection raises the degree.
    if (v[b] != b) continue;
    out.push_back(b);
    v = rs.compose(v, rs.reflection(b));
  }
  return out;
}

int computed_reduced_rank(const RootSystem& rs) {
  return static_cast<int>(extend_to_maximal(rs, rs.identity()).size());
}

bool is_maximal(const RootSystem& rs, const Elem& u) {
  return degree(rs, u) == reduced_rank(rs.type());
}

bool is_regular(const RootSystem& rs, const Elem& u) {
  require_involution(rs, u);
  for (int i = 0; i < rs.npos(); ++i)
    if (u[i] == i) return false;
  return true;
}

Elem adjoint(const RootSystem& rs, const Elem& u) {
  return product_of_reflections(rs, extend_to_maximal(rs, u));
}

BnInvariants bn_invariants(const std::vector<int>& sp) {
  BnInvariants r;
  const int n = static_cast<int>(sp.size());
  for (int i = 0; i < n; ++i) {
    const int j = std::abs(sp[i]) - 1;
    if (j == i) {
      if (sp[i] < 0) ++r.a;
    } else if (j > i) {
      ++r.b;
      if (sp[i] < 0) r.parity ^= 1;
    }
  }
  return r;
}

BnInvariants bn_invariants(const RootSystem& rs, const Elem& u) {
  const auto& t = rs.type();
  if (!t.irreducible() || (t.single().family != Family::B && t.single().family != Family::D) || !rs.has_coordinates())
    throw std::invalid_argument("bn_invariants: needs the B_n or D_n signed model");
  require_involution(rs, u);
  const MatQ m = rs.element_matrix(u);
  const int n = static_cast<int>(m.rows());
  std::vector<int> sp(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (m(j, i).is_zero()) continue;
      if (m(j, i) == QNum(1)) sp[i] = j + 1;
      else if (m(j, i) == QNum(-1)) sp[i] = -(j + 1);
      else throw std::logic_error("bn_invariants: not a signed permutation");
    }
  return bn_invariants(sp);
}

std::string subsystem_type(const RootSystem& rs, const RootSet& roots) {
  const std::vector<int> pos = roots.elements();
  if (pos.empty()) return "1";
  std::vector<int> simple;
  for (int b : pos) {
    bool ok = true;
    for (int g : pos)
      if (g != b && !rs.positive(rs.reflection(b)[g])) {
        ok = false;
        break;
      }
    if (ok) simple.push_back(b);
  }
  std::vector<Elem> gens;
  for (int b : simple) gens.push_back(rs.reflection(b));
  std::vector<std::vector<int>> comps;
  const CoxeterType t = identify_type(rs.coxeter_matrix_of(gens), &comps);
  // Roots of one component are linked by non-orthogonality; tag each
  // component with its number of roots per length class.
  std::unordered_map<int, int> comp_of;
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[simple[v]] = static_cast<int>(c);
  std::vector<int> stack;
  for (int b : pos) {
    if (comp_of.count(b)) stack.push_back(b);
  }
  while (!stack.empty()) {
    const int b = stack.back();
    stack.pop_back();
    for (int g : pos)
      if (g != b && !comp_of.count(g) && !rs.orthogonal(b, g)) {
        comp_of[g] = comp_of[b];
        stack.push_back(g);
      }
  }
  std::vector<std::map<int, int>> counts(comps.size());
  for (int b : pos) ++counts.at(comp_of.at(b))[rs.length_class(b)];
  std::vector<std::string> parts;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    std::string s = canonical_name(CoxeterType(t.factors()[c])) + "[";
    bool first = true;
    for (const auto& [l, k] : counts[c]) {
      s += (first ? "" : ",") + std::to_string(l) + ":" + std::to_string(k);
      first = false;
    }
    parts.push_back(s + "]");
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "+" : "") + parts[i];
  return out;
}

bool e7_half_sum_in_weight_lattice(const RootSystem& rs, const std::vector<int>& base, std::vector<long>* products) {
  VecQ sum(rs.ambient_dim());
  for (int r : base) sum = sum + rs.root(r);
  bool even = true;
  if (products) products->clear();
  for (int j = 0; j < rs.rank(); ++j) {
    const QNum p = inner_product(sum, rs.simple_root(j));
    if (!p.is_integer()) throw std::logic_error("non-integral inner product in a root lattice");
    const long v = p.rational_part().get_num().get_si();
    if (products) products->push_back(v);
    if (v % 2 != 0) even = false;
  }
  return even;
}

std::string class_key(const RootSystem& rs, const Elem& u) {
  const int d = degree(rs, u);
  std::string key = "d=" + std::to_string(d) + ";";
  const auto& t = rs.type();
  const bool irr = t.irreducible();
  const Family f = irr ? t.single().family : Family::A;
  if (irr && (f == Family::B || f == Family::D) && rs.has_coordinates()) {
    const BnInvariants inv = bn_invariants(rs, u);
    key += "BD(" + std::to_string(inv.a) + "," + std::to_string(inv.b) + ")";
    const int n = t.single().rank;
    if (f == Family::D && n % 2 == 0 && inv.a == 0 && inv.b == n / 2) key += ";p" + std::to_string(inv.parity);
    return key;
  }
  key += subsystem_type(rs, rs.negated(u));
  if (irr && f == Family::E && t.single().rank == 7 && d == 3)
    key += e7_half_sum_in_weight_lattice(rs, orthogonal_product_base(rs, u)) ? ";line" : ";triangle";
  if (irr && f == Family::E && t.single().rank == 8 && d == 4)
    key += ";cubes=" + std::to_string(cubes_with_extremity(rs, u).size());
  return key;
}

HPoly InvolutionCensus::hpoly() const {
  HPoly h(max_degree() + 1, 0);
  for (int c = 0; c < num_classes; ++c) ++h[class_degree[c]];
  return h;
}

int InvolutionCensus::max_degree() const {
  int m = 0;
  for (int d : degree) m = std::max(m, d);
  return m;
}

std::vector<Elem> involutions_by_filter(const RootSystem& rs, const ElementSet& group) {
  std::vector<Elem> out;
  const int n = rs.npos();
  for (std::size_t k = 0; k < group.size(); ++k) {
    const std::uint16_t* g = group.data(k);
    bool inv = true;
    for (int i = 0; i < n && inv; ++i) {
      const int r = g[i];
      const int back = r < n ? g[r] : rs.neg(g[r - n]);
      inv = back == i;
    }
    if (inv) out.push_back(group.at(k));
  }
  return out;
}

std::vector<Elem> involutions_from_cubes(const RootSystem& rs) {
  std::unordered_map<RootSet, Elem, RootSetHash> seen;
  for_each_cube(
      rs,
      [&](const CubeVisit& c) {
        const RootSet key = rs.negated(*c.extremity);
        if (!seen.count(key)) seen.emplace(key, *c.extremity);
      },
      nullptr, 0, true);
  std::vector<Elem> out;
  out.reserve(seen.size());
  for (auto& [k, e] : seen) out.push_back(std::move(e));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> involutions_of_product(const RootSystem& product, const std::vector<RootSystem>& factors,
                                         const std::vector<std::vector<Elem>>& fi) {
  const int n = product.npos();
  std::vector<Elem> out{product.identity()};
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const int off = product.component_offset(static_cast<int>(f));
    const int nf = factors[f].npos();
    std::vector<Elem> next;
    next.reserve(out.size() * fi[f].size());
    for (const auto& base : out)
      for (const auto& u : fi[f]) {
        Elem e = base;
        for (int i = 0; i < nf; ++i) {
          const int r = u[i];
          e[off + i] = static_cast<std::uint16_t>(r < nf ? off + r : n + off + (r - nf));
        }
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

InvolutionCensus census(const RootSystem& rs, std::vector<Elem> involutions) {
  InvolutionCensus c;
  c.elems = std::move(involutions);
  c.degree.reserve(c.elems.size());
  for (const auto& u : c.elems) c.degree.push_back(degree(rs, u));
  c.cls = conjugation_orbits(rs, c.elems, rs.simple_reflections(), &c.num_classes);
  c.class_degree.assign(c.num_classes, 0);
  c.class_size.assign(c.num_classes, 0);
  c.class_rep.assign(c.num_classes, -1);
  for (std::size_t i = 0; i < c.elems.size(); ++i) {
    const int k = c.cls[i];
    if (c.class_rep[k] < 0) {
      c.class_rep[k] = static_cast<int>(i);
      c.class_degree[k] = c.degree[i];
    } else if (c.class_degree[k] != c.degree[i]) {
      throw std::logic_error("conjugate involutions of different degree");
    }
    ++c.class_size[k];
  }
  return c;
}

int h1_rank(const CoxeterType& t) {
  const CoxeterMatrix m = coxeter_matrix(t);
  const int n = static_cast<int>(m.size());
  std::vector<int> comp(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w)
        if (comp[w] < 0 && m[v][w] > 2 && m[v][w] % 2 == 1) {
          comp[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  return count;
}

std::vector<int> characteristic_degrees(const Irreducible& t) {
  const RootSystem rs = RootSystem::build(t);
  const CoxeterMatrix cm = coxeter_matrix(t);
  const int n = t.rank;
  // Geometric representation: s_i(e_j) = e_j - 2 B_ij e_i, B_ij = -cos(pi/m_ij).
  Eigen::MatrixXd c = Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXd s = Eigen::MatrixXd::Identity(n, n);
    for (int j = 0; j < n; ++j) s(i, j) -= 2.0 * -std::cos(std::numbers::pi / cm[i][j]);
    c = c * s;
  }
  Elem cox = rs.identity();
  for (int j = 0; j < n; ++j) cox = rs.compose(cox, rs.simple_reflection(j));
  const int h = rs.order(cox);
  Eigen::EigenSolver<Eigen::MatrixXd> es(c);
  std::vector<int> degs;
  for (int k = 0; k < n; ++k) {
    const auto lambda = es.eigenvalues()[k];
    double theta = std::atan2(lambda.imag(), lambda.real());
    if (theta < 0) theta += 2 * std::numbers::pi;
    const double x = h * theta / (2 * std::numbers::pi);
    const double r = std::round(x);
    if (std::abs(x - r) > 1e-6) throw std::logic_error("eigenangle of the Coxeter element is not a multiple of 2pi/h");
    degs.push_back(static_cast<int>(r) + 1);
  }
  std::sort(degs.begin(), degs.end());
  BigInt prod = 1;
  int sum = 0;
  for (int d : degs) {
    prod *= d;
    sum += d - 1;
  }
  if (prod != group_order(t) || sum != reflection_count(t))
    throw std::logic_error("characteristic degrees of " + t.name() + " fail the exact checks");
  return degs;
}

MaximalCentralizer centralizer_of_maximal(const RootSystem& rs, const Elem& u, std::size_t limit) {
  if (!is_maximal(rs, u)) throw std::invalid_argument("centralizer_of_maximal: involution is not maximal");
  MaximalCentralizer mc;
  std::vector<VecQ> vecs;
  for (int b = 0; b < rs.npos(); ++b) {
    const int ub = u[b];
    if (ub == rs.neg(b) || ub == b) {
      mc.generators.push_back(rs.reflection(b));
      if (ub != b && rs.has_coordinates()) vecs.push_back(rs.root(b));
    } else if (rs.orthogonal(b, rs.abs_index(ub)) && b < rs.abs_index(ub)) {
      mc.generators.push_back(rs.compose(rs.reflection(b), rs.reflection(rs.abs_index(ub))));
      if (rs.has_coordinates()) vecs.push_back(rs.root(b) - rs.root(ub));
    }
  }
  mc.order = closure(rs, mc.generators, limit).size();
  if (rs.has_coordinates()) {
    mc.type = canonical_name(RootSystem::from_roots(vecs).type());
  } else if (degree(rs, u) == 1) {
    mc.type = "A1";
  } else if (BigInt(static_cast<unsigned long>(mc.order)) == group_order(rs.type())) {
    mc.type = canonical_name(rs.type());
  } else {
    mc.type = "?";
  }
  return mc;
}

HPoly SignedCensus::hpoly() const {
  HPoly h;
  for (const auto& [key, d] : class_degree) {
    if (static_cast<int>(h.size()) <= d) h.resize(d + 1, 0);
    ++h[d];
  }
  return h;
}

SignedCensus signed_permutation_census(Family f, int n) {
  if ((f != Family::B && f != Family::D) || n < 1 || n > 14)
    throw std::invalid_argument("signed census needs B_n or D_n with n <= 14");
  SignedCensus c;
  std::vector<int> img(n, 0);  // +-(j+1)
  std::function<void(int)> rec = [&](int i) {
    while (i < n && img[i] != 0) ++i;
    if (i == n) {
      const BnInvariants inv = bn_invariants(img);
      if (f == Family::D && inv.a % 2) return;
      // -1 eigenspace: one dimension per negated fixed point and per 2-cycle.
      int fixed = 0;
      for (int k = 0; k < n; ++k)
        if (img[k] == k + 1 || (std::abs(img[k]) - 1 > k)) ++fixed;
      std::string key = "BD(" + std::to_string(inv.a) + "," + std::to_string(inv.b) + ")";
      if (f == Family::D && n % 2 == 0 && inv.a == 0 && inv.b == n / 2) key += ";p" + std::to_string(inv.parity);
      ++c.involutions;
      ++c.class_sizes[key];
      c.class_degree[key] = n - fixed;
      return;
    }
    for (int s : {1, -1}) {
      img[i] = s * (i + 1);
      rec(i + 1);
      for (int j = i + 1; j < n; ++j) {
        if (img[j] != 0) continue;
        img[i] = s * (j + 1);
        img[j] = s * (i + 1);
        rec(i + 1);
        img[j] = 0;
      }
      img[i] = 0;
    }
  };
  rec(0);
  return c;
}

namespace {

std::vector<Elem> factor_involutions(const RootSystem& rs, std::size_t limit) {
  if (group_order(rs.type()) <= limit) return involutions_by_filter(rs, *enumerate_group(rs, limit));
  return involutions_from_cubes(rs);
}

}  // namespace

HPolyComputation enumerated_hpoly(const CoxeterType& t, std::size_t limit) {
  HPolyComputation r;
  if (!t.irreducible()) {
    std::vector<RootSystem> factors;
    std::vector<std::vector<Elem>> invols;
    std::size_t total = 1;
    for (const auto& f : t.factors()) {
      factors.push_back(RootSystem::build(f));
      invols.push_back(factor_involutions(factors.back(), limit));
      total *= invols.back().size();
      if (total > limit) throw LimitExceeded("product has more than " + std::to_string(limit) + " involutions");
    }
    const RootSystem prod = RootSystem::product(factors);
    const InvolutionCensus c = census(prod, involutions_of_product(prod, factors, invols));
    r.hpoly = c.hpoly();
    r.method = "product";
    r.involutions = c.elems.size();
    return r;
  }
  const Irreducible& irr = t.single();
  const RootSystem rs = RootSystem::build(t);
  if (group_order(t) <= limit) {
    const InvolutionCensus c = census(rs, involutions_by_filter(rs, *enumerate_group(rs, limit)));
    r.hpoly = c.hpoly();
    r.method = "group";
    r.involutions = c.elems.size();
    return r;
  }
  if ((irr.family == Family::B || irr.family == Family::D) && irr.rank <= 12) {
    const SignedCensus c = signed_permutation_census(irr.family, irr.rank);
    r.hpoly = c.hpoly();
    r.method = "signed";
    r.involutions = c.involutions;
    return r;
  }
  if (is_odd_type(t)) {
    const PhiData pd = phi_data(rs);
    const auto counts = subset_orbit_counts(pd.phi.degree, pd.phi.generators);
    r.hpoly.assign(counts.begin(), counts.end());
    r.method = "phi";
    return r;
  }
  throw LimitExceeded("no enumeration method for " + t.name() + " within limit " + std::to_string(limit));
}

}  // namespace coxinv
