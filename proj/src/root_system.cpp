#include "coxinv/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace coxinv {

std::size_t ElemHash::operator()(const Elem& e) const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : e) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

namespace {

std::string vec_key(const VecQ& v) {
  std::string s;
  for (const auto& x : v) {
    s += x.str();
    s += ';';
  }
  return s;
}

VecQ unit(int dim, int i, const QNum& c = 1) {
  VecQ v(dim);
  v[i] = c;
  return v;
}

VecQ reflect(const VecQ& v, const VecQ& a) {
  const QNum k = QNum(2) * inner_product(v, a) / inner_product(a, a);
  return v - k * a;
}

QNum q(long n, long d = 1) { return QNum(Rational(n, d)); }

std::vector<VecQ> bourbaki_simple_roots(const Irreducible& t, int& dim) {
  const int n = t.rank;
  std::vector<VecQ> s;
  switch (t.family) {
    case Family::A:
      dim = n + 1;
      for (int i = 0; i < n; ++i) s.push_back(unit(dim, i) - unit(dim, i + 1));
      break;
    case Family::B:
      dim = n;
      for (int i = 0; i + 1 < n; ++i) s.push_back(unit(dim, i) - unit(dim, i + 1));
      s.push_back(unit(dim, n - 1));
      break;
    case Family::D:
      dim = n;
      for (int i = 0; i + 1 < n; ++i) s.push_back(unit(dim, i) - unit(dim, i + 1));
      s.push_back(unit(dim, n - 2) + unit(dim, n - 1));
      break;
    case Family::E: {
      dim = 8;
      VecQ a1(8, q(-1, 2));
      a1[0] = q(1, 2);
      a1[7] = q(1, 2);
      s.push_back(a1);
      s.push_back(unit(8, 0) + unit(8, 1));
      for (int i = 0; i < 6; ++i) s.push_back(unit(8, i + 1) - unit(8, i));
      s.resize(n);
      break;
    }
    case Family::F:
      dim = 4;
      s.push_back(unit(4, 1) - unit(4, 2));
      s.push_back(unit(4, 2) - unit(4, 3));
      s.push_back(unit(4, 3));
      s.push_back(VecQ{q(1, 2), q(-1, 2), q(-1, 2), q(-1, 2)});
      break;
    case Family::G:
      dim = 3;
      s.push_back(unit(3, 0) - unit(3, 1));
      s.push_back(VecQ{q(-2), q(1), q(1)});
      break;
    case Family::H: {
      const QNum half_tau{Rational(1, 4), 0, Rational(1, 4), 0};      // tau/2
      const QNum half_inv_tau{Rational(-1, 4), 0, Rational(1, 4), 0};  // 1/(2 tau)
      const QNum h = q(1, 2);
      if (n == 3) {
        dim = 3;
        s.push_back(VecQ{0, 0, 1});
        s.push_back(VecQ{half_inv_tau, -h, -half_tau});
        s.push_back(VecQ{0, 1, 0});
      } else {
        dim = 4;
        s.push_back(VecQ{0, h, -half_tau, -half_inv_tau});
        s.push_back(VecQ{0, -half_inv_tau, h, half_tau});
        s.push_back(VecQ{half_inv_tau, -h, 0, -half_tau});
        s.push_back(VecQ{-half_inv_tau, half_tau, h, 0});
      }
      break;
    }
    case Family::I:
      throw std::logic_error("I2(m) has no coordinate model");
  }
  return s;
}

// Lexicographic comparison of coefficient vectors as real numbers.
bool lex_less(const VecQ& a, const VecQ& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    return a[i] < b[i];
  }
  return false;
}

QNum height(const VecQ& c) {
  QNum h;
  for (const auto& x : c) h += x;
  return h;
}

}  // namespace

const VecQ& RootSystem::root(int r) const {
  if (!has_coordinates()) throw std::logic_error("root system " + type_.name() + " has no coordinates");
  return roots_.at(r);
}

const VecQ& RootSystem::simple_coefficients(int i) const {
  if (!has_coordinates()) throw std::logic_error("root system " + type_.name() + " has no coordinates");
  return coeffs_.at(i);
}

int RootSystem::index_of(const VecQ& v) const {
  auto it = index_.find(vec_key(v));
  return it == index_.end() ? -1 : it->second;
}

MatQ RootSystem::gram() const {
  const int r = rank();
  MatQ g(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) g(i, j) = inner_product(simple_root(i), simple_root(j));
  return g;
}

RootSystem RootSystem::build(const CoxeterType& t) {
  if (t.irreducible()) return build(t.single());
  std::vector<RootSystem> fs;
  for (const auto& f : t.factors()) fs.push_back(build(f));
  return product(fs);
}

RootSystem RootSystem::build(const Irreducible& t) {
  if (reflection_count(t) > kMaxPositiveRoots)
    throw std::length_error("type " + t.name() + " has too many roots");
  RootSystem rs;
  rs.type_ = CoxeterType(t);
  if (t.family == Family::I) {
    const int m = t.m;
    rs.n_ = m;
    rs.simple_ = {0, m - 1};
    rs.refl_.assign(m, Elem(m));
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) rs.refl_[j][k] = static_cast<std::uint16_t>(((2 * j + m - k) % (2 * m) + 2 * m) % (2 * m));
    rs.component_.assign(m, 0);
    rs.offsets_ = {0};
    rs.finish_combinatorics();
    return rs;
  }

  int dim = 0;
  const std::vector<VecQ> simple = bourbaki_simple_roots(t, dim);
  rs.dim_ = dim;
  // Closure of the simple roots under the simple reflections.
  std::vector<VecQ> all = simple;
  std::unordered_map<std::string, int> seen;
  for (std::size_t i = 0; i < all.size(); ++i) seen.emplace(vec_key(all[i]), static_cast<int>(i));
  for (std::size_t k = 0; k < all.size(); ++k) {
    for (const auto& a : simple) {
      VecQ w = reflect(all[k], a);
      if (seen.emplace(vec_key(w), static_cast<int>(all.size())).second) all.push_back(std::move(w));
    }
    if (all.size() > 2 * static_cast<std::size_t>(kMaxPositiveRoots)) throw std::logic_error("root closure overflow");
  }
  const MatQ ginv = [&] {
    MatQ g(simple.size(), simple.size());
    for (std::size_t i = 0; i < simple.size(); ++i)
      for (std::size_t j = 0; j < simple.size(); ++j) g(i, j) = inner_product(simple[i], simple[j]);
    return g.inverse();
  }();
  auto coefficients = [&](const VecQ& v) {
    VecQ b(simple.size());
    for (std::size_t j = 0; j < simple.size(); ++j) b[j] = inner_product(simple[j], v);
    return ginv * b;
  };

  struct Pos {
    VecQ v, c;
    int simple_pos;
  };
  std::vector<Pos> pos;
  for (const auto& v : all) {
    VecQ c = coefficients(v);
    int sgn = 0;
    for (const auto& x : c) {
      const int s = x.sign();
      if (s == 0) continue;
      if (sgn == 0) sgn = s;
      if (s != sgn) throw std::logic_error("root with mixed-sign coefficients in " + t.name());
    }
    if (sgn > 0) {
      int sp = -1;
      for (std::size_t j = 0; j < simple.size(); ++j)
        if (vec_key(simple[j]) == vec_key(v)) sp = static_cast<int>(j);
      pos.push_back({v, std::move(c), sp});
    }
  }
  std::sort(pos.begin(), pos.end(), [](const Pos& a, const Pos& b) {
    const bool as = a.simple_pos >= 0, bs = b.simple_pos >= 0;
    if (as != bs) return as;
    if (as) return a.simple_pos < b.simple_pos;
    const QNum ha = height(a.c), hb = height(b.c);
    if (ha != hb) return ha < hb;
    return lex_less(a.c, b.c);
  });
  const int n = static_cast<int>(pos.size());
  if (2 * n != static_cast<int>(all.size())) throw std::logic_error("roots do not come in +- pairs");
  rs.n_ = n;
  rs.roots_.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    rs.roots_[i] = pos[i].v;
    rs.roots_[i + n] = QNum(-1) * pos[i].v;
    rs.coeffs_.push_back(pos[i].c);
  }
  rs.simple_.resize(simple.size());
  std::iota(rs.simple_.begin(), rs.simple_.end(), 0);
  rs.component_.assign(n, 0);
  rs.offsets_ = {0};
  rs.build_coordinates_tables();
  rs.finish_combinatorics();
  if (rs.n_ != reflection_count(t)) throw std::logic_error("reflection count mismatch for " + t.name());
  return rs;
}

void RootSystem::build_coordinates_tables() {
  index_.clear();
  for (int r = 0; r < 2 * n_; ++r) index_.emplace(vec_key(roots_[r]), r);
  refl_.assign(n_, Elem(n_));
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const int j = index_of(reflect(roots_[k], roots_[i]));
      if (j < 0) throw std::logic_error("root set not closed under reflections");
      refl_[i][k] = static_cast<std::uint16_t>(j);
    }
  // Complement of the span of the simple roots, fixed by every element.
  MatQ s(simple_.size(), dim_);
  for (std::size_t j = 0; j < simple_.size(); ++j)
    for (int k = 0; k < dim_; ++k) s(j, k) = roots_[simple_[j]][k];
  complement_ = s.kernel();
  std::vector<VecQ> cols;
  for (int j : simple_) cols.push_back(roots_[j]);
  for (const auto& c : complement_) cols.push_back(c);
  basis_inv_ = MatQ::from_columns(cols).inverse();
}

void RootSystem::finish_combinatorics() {
  orth_.assign(n_, RootSet{});
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && refl_[i][j] == j) orth_[i].set(j);
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const int a = find(j), b = find(abs_index(refl_[i][j]));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  length_class_.assign(n_, -1);
  std::vector<int> label(n_, -1);
  num_length_classes_ = 0;
  for (int i = 0; i < n_; ++i) {
    const int r = find(i);
    if (label[r] < 0) label[r] = num_length_classes_++;
    length_class_[i] = label[r];
  }
}

RootSystem RootSystem::product(const std::vector<RootSystem>& factors) {
  if (factors.empty()) throw std::invalid_argument("empty product");
  if (factors.size() == 1) return factors[0];
  RootSystem rs;
  std::vector<Irreducible> types;
  bool coords = true;
  for (const auto& f : factors) {
    for (const auto& t : f.type_.factors()) types.push_back(t);
    rs.offsets_.push_back(rs.n_);
    rs.n_ += f.n_;
    rs.dim_ += f.dim_;
    coords = coords && f.has_coordinates();
  }
  if (rs.n_ > kMaxPositiveRoots) throw std::length_error("product has too many roots");
  rs.type_ = CoxeterType(types);
  const int n = rs.n_;
  rs.refl_.assign(n, Elem(n));
  rs.component_.assign(n, 0);
  int dim_off = 0;
  if (coords) rs.roots_.resize(2 * n);
  for (std::size_t fi = 0; fi < factors.size(); ++fi) {
    const auto& f = factors[fi];
    const int off = rs.offsets_[fi];
    auto lift = [&](int r) { return r < f.n_ ? off + r : n + off + (r - f.n_); };
    for (int j : f.simple_) rs.simple_.push_back(off + j);
    for (int i = 0; i < f.n_; ++i) {
      rs.component_[off + i] = static_cast<int>(fi);
      Elem& e = rs.refl_[off + i];
      std::iota(e.begin(), e.end(), std::uint16_t{0});
      for (int k = 0; k < f.n_; ++k) e[off + k] = static_cast<std::uint16_t>(lift(f.refl_[i][k]));
      if (coords) {
        VecQ v(rs.dim_);
        for (int k = 0; k < f.dim_; ++k) v[dim_off + k] = f.roots_[i][k];
        rs.roots_[off + i] = v;
        rs.roots_[n + off + i] = QNum(-1) * v;
      }
    }
    dim_off += f.dim_;
  }
  if (coords) {
    // Simple-root coefficients: block structure.
    const int r = static_cast<int>(rs.simple_.size());
    rs.coeffs_.assign(n, VecQ(r));
    int soff = 0;
    for (std::size_t fi = 0; fi < factors.size(); ++fi) {
      const auto& f = factors[fi];
      for (int i = 0; i < f.n_; ++i)
        for (int j = 0; j < f.rank(); ++j) rs.coeffs_[rs.offsets_[fi] + i][soff + j] = f.coeffs_[i][j];
      soff += f.rank();
    }
    rs.build_coordinates_tables();
  }
  rs.finish_combinatorics();
  return rs;
}

RootSystem RootSystem::from_roots(const std::vector<VecQ>& input) {
  if (input.empty()) throw std::invalid_argument("from_roots: empty root set");
  const int dim = static_cast<int>(input[0].size());
  // Generic functional: weights 1, e, e^2, ... with e small; retried until
  // no root is on its kernel.
  std::vector<VecQ> all;
  {
    std::unordered_map<std::string, int> seen;
    for (const auto& v : input) {
      if (static_cast<int>(v.size()) != dim) throw std::invalid_argument("from_roots: dimension mismatch");
      if (is_zero(v)) throw std::invalid_argument("from_roots: zero vector");
      if (seen.emplace(vec_key(v), 0).second) all.push_back(v);
      const VecQ m = QNum(-1) * v;
      if (seen.emplace(vec_key(m), 0).second) all.push_back(m);
    }
  }
  std::vector<QNum> f;
  for (long e = 97;; e += 2) {
    f.assign(dim, 0);
    Rational w = 1;
    for (int k = 0; k < dim; ++k) {
      f[k] = QNum(w);
      w /= e;
    }
    bool ok = true;
    for (const auto& v : all)
      if (inner_product(f, v).is_zero()) ok = false;
    if (ok) break;
    if (e > 10000) throw std::logic_error("from_roots: no generic functional found");
  }
  std::vector<VecQ> pos;
  for (const auto& v : all)
    if (inner_product(f, v).sign() > 0) pos.push_back(v);
  std::sort(pos.begin(), pos.end(),
            [&](const VecQ& a, const VecQ& b) { return inner_product(f, a) < inner_product(f, b); });
  const int n = static_cast<int>(pos.size());
  if (n > kMaxPositiveRoots) throw std::length_error("from_roots: too many roots");

  RootSystem rs;
  rs.n_ = n;
  rs.dim_ = dim;
  rs.roots_.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    rs.roots_[i] = pos[i];
    rs.roots_[i + n] = QNum(-1) * pos[i];
  }
  rs.index_.clear();
  for (int r = 0; r < 2 * n; ++r) rs.index_.emplace(vec_key(rs.roots_[r]), r);
  rs.refl_.assign(n, Elem(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int j = rs.index_of(reflect(rs.roots_[k], rs.roots_[i]));
      if (j < 0) throw std::invalid_argument("from_roots: set not closed under reflections");
      rs.refl_[i][k] = static_cast<std::uint16_t>(j);
    }
  // beta is simple iff s_beta permutes the other positive roots.
  std::vector<int> simple;
  for (int i = 0; i < n; ++i) {
    bool ok = true;
    for (int k = 0; k < n && ok; ++k)
      if (k != i && rs.refl_[i][k] >= n) ok = false;
    if (ok) simple.push_back(i);
  }
  rs.simple_ = simple;
  const CoxeterMatrix cm = rs.coxeter_matrix_of(rs.simple_reflections());
  std::vector<std::vector<int>> comps;
  rs.type_ = identify_type(cm, &comps);
  std::vector<int> reordered;
  for (const auto& c : comps)
    for (int v : c) reordered.push_back(simple[v]);
  rs.simple_ = reordered;

  // Simple-root coefficients and ambient complement.
  const int r = rs.rank();
  MatQ g(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) g(i, j) = inner_product(rs.roots_[rs.simple_[i]], rs.roots_[rs.simple_[j]]);
  const MatQ ginv = g.inverse();
  for (int i = 0; i < n; ++i) {
    VecQ b(r);
    for (int j = 0; j < r; ++j) b[j] = inner_product(rs.roots_[rs.simple_[j]], rs.roots_[i]);
    rs.coeffs_.push_back(ginv * b);
  }
  MatQ s(r, dim);
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < dim; ++k) s(j, k) = rs.roots_[rs.simple_[j]][k];
  rs.complement_ = s.kernel();
  std::vector<VecQ> cols;
  for (int j : rs.simple_) cols.push_back(rs.roots_[j]);
  for (const auto& c : rs.complement_) cols.push_back(c);
  rs.basis_inv_ = MatQ::from_columns(cols).inverse();

  rs.finish_combinatorics();
  // Components: connected pieces of the non-orthogonality graph, labelled
  // by the factor containing their simple roots.
  std::vector<int> simple_comp(n, -1);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) simple_comp[simple[v]] = static_cast<int>(c);
  rs.component_.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < r && rs.component_[i] < 0; ++j)
      if (!rs.coeffs_[i][j].is_zero()) rs.component_[i] = simple_comp[rs.simple_[j]];
  rs.offsets_.assign(comps.size(), 0);
  return rs;
}

Elem RootSystem::identity() const {
  Elem e(n_);
  std::iota(e.begin(), e.end(), std::uint16_t{0});
  return e;
}

std::vector<Elem> RootSystem::simple_reflections() const {
  std::vector<Elem> v;
  for (int j : simple_) v.push_back(refl_[j]);
  return v;
}

Elem RootSystem::compose(const Elem& g, const Elem& h) const {
  Elem r(n_);
  for (int i = 0; i < n_; ++i) r[i] = static_cast<std::uint16_t>(apply(g, h[i]));
  return r;
}

Elem RootSystem::inverse(const Elem& g) const {
  Elem r(n_);
  for (int i = 0; i < n_; ++i) {
    const int t = g[i];
    if (t < n_) r[t] = static_cast<std::uint16_t>(i);
    else r[t - n_] = static_cast<std::uint16_t>(i + n_);
  }
  return r;
}

Elem RootSystem::conjugate(const Elem& g, const Elem& x) const {
  return compose(compose(g, x), inverse(g));
}

bool RootSystem::is_identity(const Elem& g) const {
  for (int i = 0; i < n_; ++i)
    if (g[i] != i) return false;
  return true;
}

int RootSystem::order(const Elem& g) const {
  Elem p = g;
  int k = 1;
  while (!is_identity(p)) {
    p = compose(g, p);
    if (++k > 100000) throw std::logic_error("element order overflow");
  }
  return k;
}

int RootSystem::length(const Elem& g) const {
  int c = 0;
  for (int i = 0; i < n_; ++i) c += g[i] >= n_;
  return c;
}

RootSet RootSystem::negated(const Elem& g) const {
  RootSet s;
  for (int i = 0; i < n_; ++i)
    if (g[i] == i + n_) s.set(i);
  return s;
}

MatQ RootSystem::element_matrix(const Elem& g) const {
  if (!has_coordinates()) throw std::logic_error("element_matrix: " + type_.name() + " has no coordinates");
  std::vector<VecQ> cols;
  for (int j : simple_) cols.push_back(roots_[apply(g, j)]);
  for (const auto& c : complement_) cols.push_back(c);
  return MatQ::from_columns(cols) * basis_inv_;
}

CoxeterMatrix RootSystem::coxeter_matrix_of(const std::vector<Elem>& gens) const {
  const std::size_t k = gens.size();
  for (const auto& g : gens)
    if (!is_identity(compose(g, g)) || is_identity(g)) throw std::invalid_argument("coxeter_matrix_of: generator is not an involution");
  CoxeterMatrix m(k, std::vector<int>(k, 1));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) m[i][j] = m[j][i] = order(compose(gens[i], gens[j]));
  return m;
}

int reflection_root(const RootSystem& rs, const Elem& g) {
  const RootSet s = rs.negated(g);
  if (s.count() != 1) return -1;
  const int b = s.next(0);
  return rs.reflection(b) == g ? b : -1;
}

}  // namespace coxinv
