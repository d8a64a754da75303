// Coxeter types: parsing, names, and the closed-form data attached to each
// irreducible type (order, reflection count, Coxeter matrix, h-polynomial).
#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coxinv/exactnum.hpp"

namespace coxinv {

enum class Family : char { A = 'A', B = 'B', D = 'D', E = 'E', F = 'F', G = 'G', H = 'H', I = 'I' };

struct Irreducible {
  Family family = Family::A;
  int rank = 1;
  int m = 0;  // only for I2(m)

  std::string name() const;
  friend bool operator==(const Irreducible&, const Irreducible&) = default;
};

class CoxeterType {
public:
  CoxeterType() = default;
  CoxeterType(Irreducible t) : factors_{t} {}  // NOLINT
  explicit CoxeterType(std::vector<Irreducible> factors);

  /// "E7", "B5", "I2(7)", "A2xA2". Throws std::invalid_argument.
  static CoxeterType parse(std::string_view s);

  const std::vector<Irreducible>& factors() const { return factors_; }
  bool irreducible() const { return factors_.size() == 1; }
  const Irreducible& single() const;
  int rank() const;
  std::string name() const;

  friend bool operator==(const CoxeterType&, const CoxeterType&) = default;

private:
  std::vector<Irreducible> factors_;
};

Irreducible make_irreducible(Family f, int rank, int m = 0);

/// Coxeter matrix in Bourbaki numbering (block diagonal for products, 2 off the blocks).
using CoxeterMatrix = std::vector<std::vector<int>>;
CoxeterMatrix coxeter_matrix(const Irreducible& t);
CoxeterMatrix coxeter_matrix(const CoxeterType& t);

BigInt group_order(const Irreducible& t);
BigInt group_order(const CoxeterType& t);
int reflection_count(const Irreducible& t);
int reflection_count(const CoxeterType& t);

/// Entries m_ij > 2 of the Coxeter matrix (union over factors).
std::set<int> m_set(const CoxeterType& t);
bool is_odd_type(const CoxeterType& t);
bool has_minus_one(const Irreducible& t);

/// Maximal involution degree, from the classification.
int reduced_rank(const Irreducible& t);
int reduced_rank(const CoxeterType& t);

/// Integer polynomial, lowest degree first.
using HPoly = std::vector<long long>;
HPoly h_polynomial_formula(const Irreducible& t);
HPoly h_polynomial_formula(const CoxeterType& t);
HPoly hpoly_mul(const HPoly& a, const HPoly& b);
std::string hpoly_str(const HPoly& p);

/// Names the finite type described by a Coxeter matrix. Factors come in
/// order of their smallest vertex; `components` receives the vertex sets.
/// Throws std::invalid_argument if the matrix is not that of a finite group.
CoxeterType identify_type(const CoxeterMatrix& m, std::vector<std::vector<int>>* components = nullptr);

/// Name with I2(3), I2(4), I2(6), D3 rewritten as A2, B2, G2, A3 and the
/// factors sorted, so that isomorphic types compare equal.
std::string canonical_name(const CoxeterType& t);

}  // namespace coxinv
