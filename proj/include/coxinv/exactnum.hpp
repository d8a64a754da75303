// Exact arithmetic for the coxinv library: rationals, the biquadratic field
// Q(sqrt2, sqrt5), small dense matrices over it, and matrices over F_p.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace coxinv {

using BigInt = mpz_class;
using Rational = mpq_class;

/// An element a + b*sqrt2 + c*sqrt5 + d*sqrt10 of Q(sqrt2, sqrt5).
///
/// The four basis elements are linearly independent over Q, so the
/// coefficient quadruple is a unique representation and equality is
/// coefficientwise. All operations are exact.
class QNum {
public:
  QNum() = default;
  QNum(long v) : c_{Rational(v), 0, 0, 0} {}  // NOLINT: implicit by design of the field embedding
  QNum(const Rational& q) : c_{q, 0, 0, 0} {}  // NOLINT
  QNum(Rational a, Rational b, Rational c, Rational d);

  static QNum sqrt2() { return {0, 1, 0, 0}; }
  static QNum sqrt5() { return {0, 0, 1, 0}; }
  static QNum sqrt10() { return {0, 0, 0, 1}; }
  /// (1 + sqrt5) / 2
  static QNum golden();

  const Rational& rational_part() const { return c_[0]; }
  const Rational& coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }
  const std::array<Rational, 4>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_integer() const;
  /// Exact sign of the real number this element denotes (-1, 0, +1).
  int sign() const;
  double to_double() const;
  /// Multiplicative inverse; throws std::domain_error on zero.
  QNum inv() const;

  QNum& operator+=(const QNum& o);
  QNum& operator-=(const QNum& o);
  QNum& operator*=(const QNum& o);
  QNum& operator/=(const QNum& o) { return *this *= o.inv(); }

  friend QNum operator+(QNum a, const QNum& b) { return a += b; }
  friend QNum operator-(QNum a, const QNum& b) { return a -= b; }
  friend QNum operator*(const QNum& a, const QNum& b);
  friend QNum operator/(QNum a, const QNum& b) { return a /= b; }
  QNum operator-() const;

  friend bool operator==(const QNum& a, const QNum& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QNum& a, const QNum& b) { return !(a == b); }
  /// Order as real numbers.
  friend bool operator<(const QNum& a, const QNum& b) { return (b - a).sign() > 0; }

  /// Human-readable form, e.g. "1/2+1/2*r5".
  std::string str() const;
  std::size_t hash() const;

private:
  std::array<Rational, 4> c_;
};

using VecQ = std::vector<QNum>;

/// Standard bilinear form sum u_i v_i; throws std::invalid_argument on a
/// dimension mismatch.
QNum inner_product(const VecQ& u, const VecQ& v);
VecQ operator+(const VecQ& u, const VecQ& v);
VecQ operator-(const VecQ& u, const VecQ& v);
VecQ operator*(const QNum& s, const VecQ& v);
bool is_zero(const VecQ& v);
std::string to_string(const VecQ& v);

/// Dense polynomial with QNum coefficients, lowest degree first.
using PolyQ = std::vector<QNum>;

class MatQ {
public:
  MatQ() = default;
  MatQ(std::size_t rows, std::size_t cols);
  static MatQ identity(std::size_t n);
  /// Matrix whose columns are the given vectors.
  static MatQ from_columns(const std::vector<VecQ>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  QNum& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const QNum& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  VecQ column(std::size_t j) const;
  MatQ transpose() const;
  QNum trace() const;
  std::size_t rank() const;
  /// Throws std::domain_error when singular.
  MatQ inverse() const;
  QNum determinant() const;
  /// Basis of {x : m x = 0}.
  std::vector<VecQ> kernel() const;

  friend MatQ operator*(const MatQ& a, const MatQ& b);
  friend VecQ operator*(const MatQ& a, const VecQ& v);
  friend MatQ operator+(const MatQ& a, const MatQ& b);
  friend MatQ operator-(const MatQ& a, const MatQ& b);
  friend MatQ operator*(const QNum& s, const MatQ& a);
  friend bool operator==(const MatQ& a, const MatQ& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero() const;
  std::vector<double> to_doubles() const;  // row-major

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<QNum> data_;
};

/// Characteristic polynomial det(t*I - m), monic, lowest degree first.
/// Faddeev-LeVerrier recursion; exact in characteristic zero.
PolyQ char_poly(const MatQ& m);
/// p(m) for a polynomial p (Horner).
MatQ evaluate(const PolyQ& p, const MatQ& m);
PolyQ poly_mul(const PolyQ& a, const PolyQ& b);

/// Matrix over the prime field F_p (p small, entries kept reduced).
class MatFp {
public:
  MatFp() = default;
  MatFp(int p, std::size_t rows, std::size_t cols);
  static MatFp identity(int p, std::size_t n);

  int prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint8_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, long v);

  /// Reduced row echelon form; `pivots` receives the pivot columns.
  MatFp row_reduce(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  /// Basis of {x : m x = 0}, one vector per free column.
  std::vector<std::vector<std::uint8_t>> kernel() const;
  int determinant() const;
  MatFp transpose() const;

  friend MatFp operator*(const MatFp& a, const MatFp& b);
  friend bool operator==(const MatFp& a, const MatFp& b) {
    return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  const std::vector<std::uint8_t>& data() const { return data_; }

private:
  int p_ = 2;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint8_t> data_;
};

/// Reduce an integer modulo p into [0, p).
inline int mod_p(long v, int p) {
  long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

}  // namespace coxinv
