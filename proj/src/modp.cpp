#include "coxinv/modp.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace coxinv {

namespace {

// Image of sum c_i alpha_i in F_p^n before choosing a basis.
std::vector<int> raw_image(const LatticeQuotient& q, const std::vector<long>& c) {
  std::vector<int> y(q.n, 0);
  for (int i = 0; i < q.n; ++i) {
    long v = 0;
    if (q.sub == Sublattice::pR) v = c[i];
    else
      for (int j = 0; j < q.n; ++j) v += q.cartan[i][j] * c[j];
    y[i] = mod_p(v, q.p);
  }
  return y;
}

std::vector<long> unit(int n, int j) {
  std::vector<long> c(n, 0);
  c[j] = 1;
  return c;
}

}  // namespace

std::vector<int> LatticeQuotient::reduce(const std::vector<long>& c) const {
  const std::vector<int> y = raw_image(*this, c);
  MatFp aug(p, n, dim + 1);
  for (int k = 0; k < dim; ++k) {
    const auto col = raw_image(*this, unit(n, basis[k]));
    for (int i = 0; i < n; ++i) aug.set(i, k, col[i]);
  }
  for (int i = 0; i < n; ++i) aug.set(i, dim, y[i]);
  std::vector<std::size_t> piv;
  const MatFp r = aug.row_reduce(&piv);
  std::vector<int> x(dim, 0);
  for (std::size_t k = 0; k < piv.size(); ++k) {
    if (piv[k] == static_cast<std::size_t>(dim)) throw std::logic_error("vector outside the quotient image");
    x[piv[k]] = r(k, dim);
  }
  return x;
}

int LatticeQuotient::form(const std::vector<int>& x, const std::vector<int>& y) const {
  long s = 0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) s += static_cast<long>(x[i]) * gram(i, j) * y[j];
  return mod_p(s, p);
}

int LatticeQuotient::quadratic(const std::vector<int>& x) const {
  if (p != 2) throw std::invalid_argument("quadratic form needs p = 2");
  long s = 0;
  for (int i = 0; i < dim; ++i) {
    s += x[i] * x[i] * (cartan[basis[i]][basis[i]] / 2);
    for (int j = i + 1; j < dim; ++j) s += x[i] * x[j] * cartan[basis[i]][basis[j]];
  }
  return mod_p(s, 2);
}

int LatticeQuotient::encode(const std::vector<int>& x) const {
  int c = 0;
  for (int i = dim - 1; i >= 0; --i) c = c * p + x[i];
  return c;
}

std::vector<int> LatticeQuotient::decode(int code) const {
  std::vector<int> x(dim);
  for (int i = 0; i < dim; ++i) {
    x[i] = code % p;
    code /= p;
  }
  return x;
}

int LatticeQuotient::size() const {
  int s = 1;
  for (int i = 0; i < dim; ++i) s *= p;
  return s;
}

int LatticeQuotient::add(int a, int b) const {
  auto x = decode(a), y = decode(b);
  for (int i = 0; i < dim; ++i) x[i] = (x[i] + y[i]) % p;
  return encode(x);
}

LatticeQuotient lattice_quotient(const RootSystem& rs, int p, Sublattice sub) {
  if (!rs.has_coordinates()) throw std::invalid_argument("lattice quotient needs root coordinates");
  LatticeQuotient q;
  q.p = p;
  q.sub = sub;
  q.n = rs.rank();
  const MatQ g = rs.gram();
  q.cartan.assign(q.n, std::vector<long>(q.n));
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j) {
      if (!g(i, j).is_integer()) throw std::invalid_argument("lattice quotient needs an integral Gram matrix");
      q.cartan[i][j] = g(i, j).rational_part().get_num().get_si();
    }
  MatFp images(p, q.n, q.n);
  for (int j = 0; j < q.n; ++j) {
    const auto col = raw_image(q, unit(q.n, j));
    for (int i = 0; i < q.n; ++i) images.set(i, j, col[i]);
  }
  std::vector<std::size_t> piv;
  images.row_reduce(&piv);
  for (auto c : piv) q.basis.push_back(static_cast<int>(c));
  q.dim = static_cast<int>(q.basis.size());
  q.gram = MatFp(p, q.dim, q.dim);
  for (int i = 0; i < q.dim; ++i)
    for (int j = 0; j < q.dim; ++j) q.gram.set(i, j, q.cartan[q.basis[i]][q.basis[j]]);
  for (int r = 0; r < rs.npos(); ++r) {
    const VecQ& c = rs.simple_coefficients(r);
    std::vector<long> ci(q.n);
    for (int i = 0; i < q.n; ++i) ci[i] = c[i].rational_part().get_num().get_si();
    q.coords.push_back(q.reduce(ci));
  }
  return q;
}

std::vector<int> root_image(const LatticeQuotient& q, const RootSystem& rs, int r) {
  std::vector<int> x = q.coords[rs.abs_index(r)];
  if (!rs.positive(r))
    for (int& v : x) v = (q.p - v) % q.p;
  return x;
}

MatFp induced_matrix(const LatticeQuotient& q, const RootSystem& rs, const Elem& g) {
  MatFp m(q.p, q.dim, q.dim);
  for (int k = 0; k < q.dim; ++k) {
    const auto col = root_image(q, rs, rs.apply(g, rs.simple(q.basis[k])));
    for (int i = 0; i < q.dim; ++i) m.set(i, k, col[i]);
  }
  return m;
}

ReflectionMapCheck reflection_map_check(const LatticeQuotient& q, const RootSystem& rs) {
  ReflectionMapCheck c;
  std::set<int> images;
  for (int r = 0; r < rs.npos(); ++r) {
    const int code = q.encode(q.coords[r]);
    if (code == 0) c.zero_hit = true;
    images.insert(code);
  }
  c.distinct_images = images.size();
  c.nonzero_vectors = static_cast<std::size_t>(q.size() - 1);
  for (int a = 0; a < rs.npos(); ++a)
    for (int b = a + 1; b < rs.npos(); ++b) {
      ++c.pairs;
      const Elem& sa = rs.reflection(a);
      const Elem& sb = rs.reflection(b);
      const bool commute = rs.compose(sa, sb) == rs.compose(sb, sa);
      const bool zero = q.form(q.coords[a], q.coords[b]) == 0;
      if (commute != zero) ++c.mismatches;
    }
  return c;
}

std::vector<std::vector<int>> isotropic_subspaces(const LatticeQuotient& q, int k) {
  const int total = q.size();
  std::vector<std::vector<int>> vecs(total);
  for (int c = 0; c < total; ++c) vecs[c] = q.decode(c);
  std::set<std::vector<int>> found;
  // Grow spans one vector at a time, keeping only totally isotropic ones.
  std::function<void(std::vector<int>&, int, int)> grow = [&](std::vector<int>& span, int depth, int from) {
    if (depth == k) {
      std::vector<int> nz;
      for (int v : span)
        if (v) nz.push_back(v);
      std::sort(nz.begin(), nz.end());
      found.insert(nz);
      return;
    }
    for (int v = from; v < total; ++v) {
      if (std::find(span.begin(), span.end(), v) != span.end()) continue;
      bool iso = q.form(vecs[v], vecs[v]) == 0;
      for (int s : span)
        if (iso && q.form(vecs[v], vecs[s]) != 0) iso = false;
      if (!iso) continue;
      std::vector<int> next = span;
      for (int s : span) {
        int w = s;
        for (int t = 1; t < q.p; ++t) {
          w = q.add(w, v);
          next.push_back(w);
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      grow(next, depth + 1, v + 1);
    }
  };
  std::vector<int> span{0};
  grow(span, 0, 1);
  return {found.begin(), found.end()};
}

std::vector<int> base_image(const LatticeQuotient& q, const RootSystem& rs, const Base& base) {
  std::vector<int> out;
  for (int r : base) out.push_back(q.encode(root_image(q, rs, r)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> zero_sum_subsets(const LatticeQuotient& q, const std::vector<int>& points, int size) {
  std::vector<std::uint32_t> out;
  const int n = static_cast<int>(points.size());
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (std::popcount(m) != size) continue;
    int s = 0;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) s = q.add(s, points[i]);
    if (s == 0) out.push_back(m);
  }
  return out;
}

namespace {

std::uint32_t image_mask(const Perm& g, std::uint32_t m) {
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (m >> i & 1) r |= 1u << g[i];
  return r;
}

}  // namespace

bool preserves_family(const PermGroup& g, const std::vector<std::uint32_t>& family) {
  const std::set<std::uint32_t> fam(family.begin(), family.end());
  for (const auto& e : g.elements)
    for (auto m : family)
      if (!fam.count(image_mask(e, m))) return false;
  return true;
}

WittSplit witt_split(const LatticeQuotient& q) {
  if (q.p != 2) throw std::invalid_argument("witt_split needs p = 2");
  auto qv = [&](int c) { return q.quadratic(q.decode(c)); };
  auto b = [&](int x, int y) { return qv(q.add(x, y)) ^ qv(x) ^ qv(y); };
  std::vector<int> space;
  for (int c = 0; c < q.size(); ++c) space.push_back(c);
  WittSplit w;
  while (true) {
    int x = -1, y = -1;
    for (int c : space)
      if (c && qv(c) == 0) {
        for (int d : space)
          if (b(c, d) == 1) {
            x = c;
            y = qv(d) ? q.add(d, c) : d;
            break;
          }
        if (x >= 0) break;
      }
    if (x < 0) break;
    ++w.planes;
    std::vector<int> rest;
    for (int c : space)
      if (b(c, x) == 0 && b(c, y) == 0) rest.push_back(c);
    space = std::move(rest);
  }
  for (int s = static_cast<int>(space.size()); s > 1; s /= 2) ++w.anisotropic_dim;
  return w;
}

SteinerCheck steiner_check(const LatticeQuotient& q, const RootSystem& rs, const Base& base) {
  SteinerCheck c;
  std::vector<int> x;
  for (int r : base) x.push_back(q.encode(root_image(q, rs, r)));
  const int n = static_cast<int>(x.size());
  c.blocks = zero_sum_subsets(q, x, 4);
  c.unique_completion = c.unique_block = c.affine_closed = true;
  for (std::uint32_t a = 0; a < (1u << n); ++a) {
    if (std::popcount(a) != 3) continue;
    int e = 0;
    for (int i = 0; i < n; ++i)
      if (a >> i & 1) e = q.add(e, x[i]);
    int hits = 0;
    for (int i = 0; i < n; ++i)
      if (!(a >> i & 1) && x[i] == e) ++hits;
    if (hits != 1) c.unique_completion = false;
    if (std::find(x.begin(), x.end(), e) == x.end()) c.affine_closed = false;
    int containing = 0;
    for (auto blk : c.blocks)
      if ((blk & a) == a) ++containing;
    if (containing != 1) c.unique_block = false;
  }
  return c;
}

AffineCheck affine_check(const PermGroup& phi, const std::vector<std::uint32_t>& blocks) {
  AffineCheck c;
  c.preserves_blocks = preserves_family(phi, blocks);
  std::set<int> orbit;
  for (const auto& g : phi.elements) orbit.insert(g[0]);
  c.transitive = static_cast<int>(orbit.size()) == phi.degree;
  // Translations: the identity and the fixed-point-free involutions g with
  // {x, gx, y, gy} a block for all x, y in different g-pairs.
  const std::set<std::uint32_t> blk(blocks.begin(), blocks.end());
  std::vector<Perm> trans;
  for (const auto& g : phi.elements) {
    if (g[0] == 0) ++c.point_stabilizer;
    bool ok = g == phi.elements.front();
    if (!ok && g[0] != 0 && g[g[0]] == 0) {
      ok = true;
      for (int x = 0; x < phi.degree && ok; ++x) {
        if (g[x] == x || g[g[x]] != x) ok = false;
        for (int y = 0; y < phi.degree && ok; ++y)
          if (y != x && y != g[x] && !blk.count((1u << x) | (1u << g[x]) | (1u << y) | (1u << g[y]))) ok = false;
      }
    }
    if (ok) trans.push_back(g);
  }
  c.translations = trans.size();
  std::set<Perm> ts(trans.begin(), trans.end());
  c.translations_closed = true;
  for (const auto& a : trans)
    for (const auto& b : trans)
      if (!ts.count(perm_compose(a, b))) c.translations_closed = false;
  return c;
}

namespace {

std::uint64_t matrix_code(const MatFp& m) {
  std::uint64_t c = 0;
  for (auto v : m.data()) c = c * static_cast<std::uint64_t>(m.prime()) + v;
  return c;
}

MatFp scaled(const MatFp& m, int s) {
  MatFp r(m.prime(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.set(i, j, static_cast<long>(s) * m(i, j));
  return r;
}

}  // namespace

OrthogonalImageCheck orthogonal_image_check(const LatticeQuotient& q, const RootSystem& rs, const ElementSet& group) {
  OrthogonalImageCheck c;
  c.group_size = group.size();
  const auto psi = [&](const Elem& g) { return scaled(induced_matrix(q, rs, g), rs.length(g) % 2 ? -1 : 1); };
  std::vector<MatFp> simple;
  for (const auto& s : rs.simple_reflections()) simple.push_back(psi(s));
  std::unordered_set<std::uint64_t> image;
  c.multiplicative = c.special = c.preserves_form = true;
  for (std::size_t k = 0; k < group.size(); ++k) {
    const Elem g = group.at(k);
    const MatFp m = psi(g);
    image.insert(matrix_code(m));
    if (m.determinant() != 1) c.special = false;
    if (!(m.transpose() * q.gram * m == q.gram)) c.preserves_form = false;
    for (int j = 0; j < rs.rank(); ++j)
      if (!(psi(rs.compose(g, rs.simple_reflection(j))) == m * simple[j])) c.multiplicative = false;
  }
  c.image_size = image.size();
  return c;
}

SymplecticCheck symplectic_check(const LatticeQuotient& q, const RootSystem& rs, std::size_t samples,
                                 std::uint64_t seed, bool closure) {
  SymplecticCheck c;
  c.samples = samples;
  std::mt19937_64 rng(seed);
  const MatFp id = MatFp::identity(q.p, q.dim);
  const Elem w0 = longest_element(rs);
  c.multiplicative = c.preserves_form = true;
  c.kernel_is_pm1 = induced_matrix(q, rs, w0) == id;
  for (std::size_t k = 0; k < samples; ++k) {
    const Elem g = random_element(rs, rng), h = random_element(rs, rng);
    const MatFp mg = induced_matrix(q, rs, g), mh = induced_matrix(q, rs, h);
    if (!(induced_matrix(q, rs, rs.compose(g, h)) == mg * mh)) c.multiplicative = false;
    if (!(mg.transpose() * q.gram * mg == q.gram)) c.preserves_form = false;
    if (mg == id && !rs.is_identity(g) && g != w0) c.kernel_is_pm1 = false;
  }
  if (closure) {
    std::vector<MatFp> gens;
    for (const auto& s : rs.simple_reflections()) gens.push_back(induced_matrix(q, rs, s));
    std::unordered_set<std::uint64_t> seen{matrix_code(id)};
    std::vector<MatFp> queue{id};
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (const auto& s : gens) {
        MatFp m = queue[k] * s;
        if (seen.insert(matrix_code(m)).second) queue.push_back(std::move(m));
      }
    c.image_order = queue.size();
  }
  return c;
}

BigInt symplectic_group_order(int m, int q) {
  BigInt qq = q, order = 1;
  BigInt qm = 1;
  for (int i = 0; i < m * m; ++i) qm *= qq;
  order = qm;
  BigInt pw = 1;
  for (int i = 1; i <= m; ++i) {
    pw *= qq * qq;
    order *= pw - 1;
  }
  return order;
}

VecQ fundamental_weight(const RootSystem& rs, int j) {
  const MatQ ginv = rs.gram().inverse();
  VecQ w(rs.ambient_dim());
  // <omega_j, a_l> = delta_jl |a_j|^2 / 2
  const QNum half_norm = inner_product(rs.simple_root(j - 1), rs.simple_root(j - 1)) * QNum(Rational(1, 2));
  for (int k = 0; k < rs.rank(); ++k) w = w + (ginv(j - 1, k) * half_norm) * rs.simple_root(k);
  return w;
}

}  // namespace coxinv
