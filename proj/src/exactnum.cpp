#include "coxinv/exactnum.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace coxinv {

namespace {

// Sign of p + q*sqrt5.
int sign_sqrt5(const Rational& p, const Rational& q) {
  const int sp = ::sgn(p), sq = ::sgn(q);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  return cmp(p * p, 5 * q * q) > 0 ? sp : sq;
}

}  // namespace

QNum::QNum(Rational a, Rational b, Rational c, Rational d)
    : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  for (auto& x : c_) x.canonicalize();
}

QNum QNum::golden() { return {Rational(1, 2), 0, Rational(1, 2), 0}; }

bool QNum::is_zero() const {
  return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool QNum::is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

bool QNum::is_integer() const { return is_rational() && c_[0].get_den() == 1; }

int QNum::sign() const {
  // x = P + sqrt2*Q with P = a + c*sqrt5, Q = b + d*sqrt5.
  const int sp = sign_sqrt5(c_[0], c_[2]);
  const int sq = sign_sqrt5(c_[1], c_[3]);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Compare P^2 against 2 Q^2, both in Q(sqrt5).
  const Rational r = c_[0] * c_[0] + 5 * c_[2] * c_[2] - 2 * c_[1] * c_[1] - 10 * c_[3] * c_[3];
  const Rational s = 2 * c_[0] * c_[2] - 4 * c_[1] * c_[3];
  return sign_sqrt5(r, s) > 0 ? sp : sq;
}

double QNum::to_double() const {
  return c_[0].get_d() + c_[1].get_d() * std::sqrt(2.0) + c_[2].get_d() * std::sqrt(5.0) +
         c_[3].get_d() * std::sqrt(10.0);
}

QNum QNum::inv() const {
  if (is_zero()) throw std::domain_error("QNum: inverse of zero");
  if (is_rational()) return QNum(Rational(1) / c_[0]);
  const QNum s2(c_[0], -c_[1], c_[2], -c_[3]);
  const QNum s5(c_[0], c_[1], -c_[2], -c_[3]);
  const QNum s25(c_[0], -c_[1], -c_[2], c_[3]);
  const QNum rest = s2 * s5 * s25;
  const QNum norm = *this * rest;  // rational: product of all conjugates
  QNum out = rest;
  for (auto& x : out.c_) x /= norm.c_[0];
  return out;
}

QNum& QNum::operator+=(const QNum& o) {
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

QNum& QNum::operator-=(const QNum& o) {
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

QNum operator*(const QNum& x, const QNum& y) {
  const auto& [a1, b1, c1, d1] = x.c_;
  const auto& [a2, b2, c2, d2] = y.c_;
  if (x.is_rational()) {
    QNum r = y;
    for (auto& v : r.c_) v *= a1;
    return r;
  }
  if (y.is_rational()) {
    QNum r = x;
    for (auto& v : r.c_) v *= a2;
    return r;
  }
  QNum r;
  r.c_[0] = a1 * a2 + 2 * b1 * b2 + 5 * c1 * c2 + 10 * d1 * d2;
  r.c_[1] = a1 * b2 + b1 * a2 + 5 * (c1 * d2 + d1 * c2);
  r.c_[2] = a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2);
  r.c_[3] = a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2;
  return r;
}

QNum& QNum::operator*=(const QNum& o) { return *this = *this * o; }

QNum QNum::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

std::string QNum::str() const {
  static const char* names[4] = {"", "r2", "r5", "r10"};
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    if (!first && c_[i] > 0) os << '+';
    if (i == 0) {
      os << c_[i].get_str();
    } else if (c_[i] == 1) {
      os << names[i];
    } else if (c_[i] == -1) {
      os << '-' << names[i];
    } else {
      os << c_[i].get_str() << '*' << names[i];
    }
    first = false;
  }
  return first ? "0" : os.str();
}

std::size_t QNum::hash() const {
  std::size_t h = 0;
  for (const auto& q : c_) {
    h = h * 1000003u ^ std::hash<std::string>{}(q.get_str());
  }
  return h;
}

QNum inner_product(const VecQ& u, const VecQ& v) {
  if (u.size() != v.size()) throw std::invalid_argument("inner_product: dimension mismatch");
  QNum s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero() || v[i].is_zero()) continue;
    s += u[i] * v[i];
  }
  return s;
}

VecQ operator+(const VecQ& u, const VecQ& v) {
  if (u.size() != v.size()) throw std::invalid_argument("vector add: dimension mismatch");
  VecQ r(u);
  for (std::size_t i = 0; i < u.size(); ++i) r[i] += v[i];
  return r;
}

VecQ operator-(const VecQ& u, const VecQ& v) {
  if (u.size() != v.size()) throw std::invalid_argument("vector sub: dimension mismatch");
  VecQ r(u);
  for (std::size_t i = 0; i < u.size(); ++i) r[i] -= v[i];
  return r;
}

VecQ operator*(const QNum& s, const VecQ& v) {
  VecQ r(v);
  for (auto& x : r) x = s * x;
  return r;
}

bool is_zero(const VecQ& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::string to_string(const VecQ& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

// ---------------------------------------------------------------- MatQ

MatQ::MatQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

MatQ MatQ::identity(std::size_t n) {
  MatQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatQ MatQ::from_columns(const std::vector<VecQ>& cols) {
  if (cols.empty()) return {};
  MatQ m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows_) throw std::invalid_argument("from_columns: ragged input");
    for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

VecQ MatQ::column(std::size_t j) const {
  VecQ v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

MatQ MatQ::transpose() const {
  MatQ t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QNum MatQ::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace: not square");
  QNum s;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

namespace {

// In-place Gaussian elimination; returns rank, accumulates the determinant
// factor when `det` is given.
std::size_t eliminate(MatQ& m, QNum* det) {
  std::size_t rank = 0;
  if (det) *det = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) {
      if (det) *det = 0;
      continue;
    }
    if (piv != rank) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
      if (det) *det = -*det;
    }
    const QNum p = m(rank, col);
    if (det) *det *= p;
    const QNum pinv = p.inv();
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      const QNum f = m(i, col) * pinv;
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(rank, j).is_zero()) m(i, j) -= f * m(rank, j);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t MatQ::rank() const {
  MatQ m = *this;
  return eliminate(m, nullptr);
}

QNum MatQ::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: not square");
  MatQ m = *this;
  QNum d;
  const std::size_t r = eliminate(m, &d);
  return r == rows_ ? d : QNum(0);
}

std::vector<VecQ> MatQ::kernel() const {
  MatQ m = *this;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
    std::size_t p = r;
    while (p < rows_ && m(p, col).is_zero()) ++p;
    if (p == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(r, j));
    const QNum inv = m(r, col).inv();
    for (std::size_t j = 0; j < cols_; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || m(i, col).is_zero()) continue;
      const QNum f = m(i, col);
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) -= f * m(r, j);
    }
    piv.push_back(col);
    ++r;
  }
  std::vector<bool> is_piv(cols_, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<VecQ> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_piv[f]) continue;
    VecQ v(cols_);
    v[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

MatQ MatQ::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse: not square");
  const std::size_t n = rows_;
  MatQ aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && aug(piv, col).is_zero()) ++piv;
    if (piv == n) throw std::domain_error("inverse: singular matrix");
    if (piv != col)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(piv, j), aug(col, j));
    const QNum pinv = aug(col, col).inv();
    for (std::size_t j = 0; j < 2 * n; ++j) aug(col, j) *= pinv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || aug(i, col).is_zero()) continue;
      const QNum f = aug(i, col);
      for (std::size_t j = 0; j < 2 * n; ++j)
        if (!aug(col, j).is_zero()) aug(i, j) -= f * aug(col, j);
    }
  }
  MatQ inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

MatQ operator*(const MatQ& a, const MatQ& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  MatQ c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const QNum& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
    }
  return c;
}

VecQ operator*(const MatQ& a, const VecQ& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  VecQ r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero()) r[i] += a(i, j) * v[j];
  return r;
}

MatQ operator+(const MatQ& a, const MatQ& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix add: shape mismatch");
  MatQ c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

MatQ operator-(const MatQ& a, const MatQ& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sub: shape mismatch");
  MatQ c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

MatQ operator*(const QNum& s, const MatQ& a) {
  MatQ c = a;
  for (auto& x : c.data_) x = s * x;
  return c;
}

bool MatQ::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<double> MatQ::to_doubles() const {
  std::vector<double> out;
  out.reserve(data_.size());
  for (const auto& x : data_) out.push_back(x.to_double());
  return out;
}

PolyQ char_poly(const MatQ& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("char_poly: not square");
  const std::size_t n = a.rows();
  PolyQ c(n + 1);
  c[n] = 1;
  MatQ m(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    MatQ next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    c[n - k] = -((a * m).trace() / QNum(static_cast<long>(k)));
  }
  return c;
}

MatQ evaluate(const PolyQ& p, const MatQ& m) {
  const std::size_t n = m.rows();
  MatQ acc(n, n);
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

PolyQ poly_mul(const PolyQ& a, const PolyQ& b) {
  if (a.empty() || b.empty()) return {};
  PolyQ r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// ---------------------------------------------------------------- MatFp

MatFp::MatFp(int p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (p < 2 || p > 251) throw std::invalid_argument("MatFp: unsupported prime");
}

MatFp MatFp::identity(int p, std::size_t n) {
  MatFp m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void MatFp::set(std::size_t i, std::size_t j, long v) {
  data_[i * cols_ + j] = static_cast<std::uint8_t>(mod_p(v, p_));
}

namespace {

int inv_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  throw std::domain_error("inv_mod: not invertible");
}

}  // namespace

MatFp MatFp::row_reduce(std::vector<std::size_t>* pivots) const {
  MatFp m = *this;
  if (pivots) pivots->clear();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
    std::size_t piv = r;
    while (piv < rows_ && m(piv, col) == 0) ++piv;
    if (piv == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(m.data_[piv * cols_ + j], m.data_[r * cols_ + j]);
    const int inv = inv_mod(m(r, col), p_);
    for (std::size_t j = 0; j < cols_; ++j) m.set(r, j, m(r, j) * inv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || m(i, col) == 0) continue;
      const int f = m(i, col);
      for (std::size_t j = 0; j < cols_; ++j) m.set(i, j, m(i, j) - f * m(r, j));
    }
    if (pivots) pivots->push_back(col);
    ++r;
  }
  return m;
}

std::size_t MatFp::rank() const {
  std::vector<std::size_t> piv;
  row_reduce(&piv);
  return piv.size();
}

std::vector<std::vector<std::uint8_t>> MatFp::kernel() const {
  std::vector<std::size_t> piv;
  const MatFp r = row_reduce(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<std::uint8_t>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint8_t> v(cols_, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k)
      v[piv[k]] = static_cast<std::uint8_t>(mod_p(-static_cast<long>(r(k, free)), p_));
    basis.push_back(std::move(v));
  }
  return basis;
}

int MatFp::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: not square");
  MatFp m = *this;
  long det = 1;
  const std::size_t n = rows_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.data_[piv * n + j], m.data_[col * n + j]);
      det = -det;
    }
    det = mod_p(det * m(col, col), p_);
    const int inv = inv_mod(m(col, col), p_);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      const int f = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m.set(i, j, m(i, j) - f * m(col, j));
    }
  }
  return mod_p(det, p_);
}

MatFp MatFp::transpose() const {
  MatFp t(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
  return t;
}

MatFp operator*(const MatFp& a, const MatFp& b) {
  if (a.p_ != b.p_ || a.cols_ != b.rows_) throw std::invalid_argument("MatFp product: shape mismatch");
  MatFp c(a.p_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      long s = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) s += a(i, k) * b(k, j);
      c.set(i, j, s);
    }
  return c;
}

}  // namespace coxinv
