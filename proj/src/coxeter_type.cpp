#include "coxinv/coxeter_type.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace coxinv {

Irreducible make_irreducible(Family f, int rank, int m) {
  auto bad = [&] { return std::invalid_argument("invalid Coxeter type parameters"); };
  switch (f) {
    case Family::A: if (rank < 1) throw bad(); break;
    case Family::B: if (rank < 2) throw bad(); break;
    case Family::D: if (rank < 3) throw bad(); break;
    case Family::E: if (rank < 6 || rank > 8) throw bad(); break;
    case Family::F: if (rank != 4) throw bad(); break;
    case Family::G: if (rank != 2) throw bad(); break;
    case Family::H: if (rank != 3 && rank != 4) throw bad(); break;
    case Family::I: if (rank != 2 || m < 3) throw bad(); break;
  }
  return {f, rank, f == Family::I ? m : 0};
}

std::string Irreducible::name() const {
  if (family == Family::I) return "I2(" + std::to_string(m) + ")";
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

CoxeterType::CoxeterType(std::vector<Irreducible> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("empty Coxeter type");
}

const Irreducible& CoxeterType::single() const {
  if (!irreducible()) throw std::invalid_argument("type " + name() + " is not irreducible");
  return factors_[0];
}

int CoxeterType::rank() const {
  int r = 0;
  for (const auto& f : factors_) r += f.rank;
  return r;
}

std::string CoxeterType::name() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += 'x';
    s += factors_[i].name();
  }
  return s;
}

namespace {

int parse_int(std::string_view s, std::size_t& pos) {
  const std::size_t start = pos;
  long v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + (s[pos] - '0');
    if (v > 100000) throw std::invalid_argument("rank out of range");
    ++pos;
  }
  if (pos == start) throw std::invalid_argument("expected a number");
  return static_cast<int>(v);
}

Irreducible parse_factor(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty factor");
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  std::size_t pos = 1;
  if (c == 'I') {
    if (s.size() < 3 || s[1] != '2' || s[2] != '(') throw std::invalid_argument("expected I2(m)");
    pos = 3;
    const int m = parse_int(s, pos);
    if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("expected ')'");
    if (pos + 1 != s.size()) throw std::invalid_argument("trailing characters");
    return make_irreducible(Family::I, 2, m);
  }
  if (std::string_view("ABDEFGH").find(c) == std::string_view::npos)
    throw std::invalid_argument(std::string("unknown family '") + s[0] + "'");
  const int r = parse_int(s, pos);
  if (pos != s.size()) throw std::invalid_argument("trailing characters");
  return make_irreducible(static_cast<Family>(c), r);
}

}  // namespace

CoxeterType CoxeterType::parse(std::string_view s) {
  std::vector<Irreducible> fs;
  std::size_t start = 0;
  try {
    while (true) {
      std::size_t x = s.find_first_of("xX*", start);
      fs.push_back(parse_factor(s.substr(start, x == std::string_view::npos ? x : x - start)));
      if (x == std::string_view::npos) break;
      start = x + 1;
    }
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("bad type string '" + std::string(s) + "': " + e.what());
  }
  return CoxeterType(std::move(fs));
}

CoxeterMatrix coxeter_matrix(const Irreducible& t) {
  const int n = t.rank;
  CoxeterMatrix m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  auto edge = [&](int i, int j, int v) { m[i - 1][j - 1] = m[j - 1][i - 1] = v; };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) edge(i, i + 1, 3);
      break;
    case Family::B:
      for (int i = 1; i < n - 1; ++i) edge(i, i + 1, 3);
      edge(n - 1, n, 4);
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) edge(i, i + 1, 3);
      edge(n - 2, n, 3);
      break;
    case Family::E:
      edge(1, 3, 3);
      edge(2, 4, 3);
      for (int i = 3; i < n; ++i) edge(i, i + 1, 3);
      break;
    case Family::F:
      edge(1, 2, 3); edge(2, 3, 4); edge(3, 4, 3);
      break;
    case Family::G:
      edge(1, 2, 6);
      break;
    case Family::H:
      edge(1, 2, 5);
      for (int i = 2; i < n; ++i) edge(i, i + 1, 3);
      break;
    case Family::I:
      edge(1, 2, t.m);
      break;
  }
  return m;
}

CoxeterMatrix coxeter_matrix(const CoxeterType& t) {
  const int n = t.rank();
  CoxeterMatrix m(n, std::vector<int>(n, 2));
  int off = 0;
  for (const auto& f : t.factors()) {
    const auto b = coxeter_matrix(f);
    for (int i = 0; i < f.rank; ++i)
      for (int j = 0; j < f.rank; ++j) m[off + i][off + j] = b[i][j];
    off += f.rank;
  }
  return m;
}

namespace {

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt pow2(int n) {
  BigInt r = 1;
  r <<= n;
  return r;
}

}  // namespace

BigInt group_order(const Irreducible& t) {
  switch (t.family) {
    case Family::A: return factorial(t.rank + 1);
    case Family::B: return pow2(t.rank) * factorial(t.rank);
    case Family::D: return pow2(t.rank - 1) * factorial(t.rank);
    case Family::E:
      return t.rank == 6 ? BigInt(51840) : t.rank == 7 ? BigInt(2903040) : BigInt(696729600);
    case Family::F: return 1152;
    case Family::G: return 12;
    case Family::H: return t.rank == 3 ? 120 : 14400;
    case Family::I: return 2 * t.m;
  }
  return 0;
}

BigInt group_order(const CoxeterType& t) {
  BigInt r = 1;
  for (const auto& f : t.factors()) r *= group_order(f);
  return r;
}

int reflection_count(const Irreducible& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
    case Family::H: return n == 3 ? 15 : 60;
    case Family::I: return t.m;
  }
  return 0;
}

int reflection_count(const CoxeterType& t) {
  int r = 0;
  for (const auto& f : t.factors()) r += reflection_count(f);
  return r;
}

std::set<int> m_set(const CoxeterType& t) {
  std::set<int> s;
  for (const auto& row : coxeter_matrix(t))
    for (int v : row)
      if (v > 2) s.insert(v);
  return s;
}

bool is_odd_type(const CoxeterType& t) {
  for (int v : m_set(t))
    if (v % 2 == 0) return false;
  return true;
}

bool has_minus_one(const Irreducible& t) {
  switch (t.family) {
    case Family::A: return t.rank == 1;
    case Family::D: return t.rank % 2 == 0;
    case Family::E: return t.rank != 6;
    case Family::I: return t.m % 2 == 0;
    default: return true;
  }
}

int reduced_rank(const Irreducible& t) {
  switch (t.family) {
    case Family::A: return (t.rank + 1) / 2;
    case Family::D: return t.rank % 2 == 0 ? t.rank : t.rank - 1;
    case Family::E: return t.rank == 6 ? 4 : t.rank;
    case Family::I: return t.m % 2 == 0 ? 2 : 1;
    default: return t.rank;
  }
}

int reduced_rank(const CoxeterType& t) {
  int r = 0;
  for (const auto& f : t.factors()) r += reduced_rank(f);
  return r;
}

HPoly hpoly_mul(const HPoly& a, const HPoly& b) {
  if (a.empty() || b.empty()) return {};
  HPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

namespace {

HPoly ones(int deg) { return HPoly(static_cast<std::size_t>(deg) + 1, 1); }

HPoly div_one_plus_t(const HPoly& p) {
  HPoly q(p.size() - 1, 0);
  long long carry = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    q[i] = p[i] - carry;
    carry = q[i];
  }
  if (p.back() != carry) throw std::logic_error("h-polynomial not divisible by 1+t");
  return q;
}

}  // namespace

HPoly h_polynomial_formula(const Irreducible& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return ones((n + 1) / 2);
    case Family::B:
      return n % 2 == 0 ? hpoly_mul(ones(n / 2), ones(n / 2)) : hpoly_mul(ones((n - 1) / 2), ones((n + 1) / 2));
    case Family::D: {
      if (n % 2 == 1) return div_one_plus_t(hpoly_mul(ones((n - 1) / 2), ones((n + 1) / 2)));
      HPoly p = div_one_plus_t(hpoly_mul(ones(n / 2), ones(1 + n / 2)));
      p.resize(std::max<std::size_t>(p.size(), n / 2 + 1), 0);
      p[n / 2] += 1;
      return p;
    }
    case Family::E:
      if (n == 6) return {1, 1, 1, 1, 1};
      if (n == 7) return {1, 1, 1, 2, 2, 1, 1, 1};
      return {1, 1, 1, 1, 2, 1, 1, 1, 1};
    case Family::F: return {1, 2, 2, 2, 1};
    case Family::G: return {1, 2, 1};
    case Family::H: return n == 3 ? HPoly{1, 1, 1, 1} : HPoly{1, 1, 1, 1, 1};
    case Family::I: return t.m % 2 ? HPoly{1, 1} : HPoly{1, 2, 1};
  }
  return {};
}

HPoly h_polynomial_formula(const CoxeterType& t) {
  HPoly p{1};
  for (const auto& f : t.factors()) p = hpoly_mul(p, h_polynomial_formula(f));
  return p;
}

std::string hpoly_str(const HPoly& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0 || p[i] != 1) s += std::to_string(p[i]);
    if (i >= 1) s += "t";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

namespace {

Irreducible identify_component(const CoxeterMatrix& m, const std::vector<int>& vs) {
  auto bad = [] { return std::invalid_argument("Coxeter matrix of an infinite group"); };
  const int n = static_cast<int>(vs.size());
  if (n == 1) return make_irreducible(Family::A, 1);
  if (n == 2) {
    const int v = m[vs[0]][vs[1]];
    if (v == 3) return make_irreducible(Family::A, 2);
    if (v == 4) return make_irreducible(Family::B, 2);
    if (v == 6) return make_irreducible(Family::G, 2);
    return make_irreducible(Family::I, 2, v);
  }
  std::vector<std::vector<int>> adj(n);
  std::map<int, int> labels;
  int edges = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int v = m[vs[i]][vs[j]];
      if (v == 2) continue;
      adj[i].push_back(j);
      adj[j].push_back(i);
      ++labels[v];
      ++edges;
    }
  if (edges != n - 1) throw bad();  // connected with n-1 edges: a tree
  std::vector<int> branch, leaves;
  for (int i = 0; i < n; ++i) {
    if (adj[i].size() >= 3) branch.push_back(i);
    if (adj[i].size() == 1) leaves.push_back(i);
  }
  const bool simply_laced = labels.size() == 1 && labels.count(3);
  if (branch.empty()) {
    if (simply_laced) return make_irreducible(Family::A, n);
    if (labels.size() != 2 || !labels.count(3)) throw bad();
    auto it = labels.begin();
    if (it->first == 3) ++it;
    if (it->second != 1) throw bad();
    const int special = it->first;
    // Is the special edge at an end of the path?
    bool at_end = false;
    for (int l : leaves)
      if (m[vs[l]][vs[adj[l][0]]] == special) at_end = true;
    if (special == 4) {
      if (at_end) return make_irreducible(Family::B, n);
      if (n == 4) return make_irreducible(Family::F, 4);
      throw bad();
    }
    if (special == 5 && at_end && n <= 4) return make_irreducible(Family::H, n);
    throw bad();
  }
  if (!simply_laced || branch.size() != 1 || adj[branch[0]].size() != 3) throw bad();
  std::vector<int> arms;
  for (int start : adj[branch[0]]) {
    int prev = branch[0], cur = start, len = 1;
    while (adj[cur].size() == 2) {
      const int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return make_irreducible(Family::D, n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return make_irreducible(Family::E, n);
  throw bad();
}

}  // namespace

CoxeterType identify_type(const CoxeterMatrix& m, std::vector<std::vector<int>>* components) {
  const int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n || m[i][i] != 1) throw std::invalid_argument("malformed Coxeter matrix");
    for (int j = 0; j < n; ++j)
      if (i != j && (m[i][j] < 2 || m[i][j] != m[j][i])) throw std::invalid_argument("malformed Coxeter matrix");
  }
  if (n == 0) throw std::invalid_argument("empty Coxeter matrix");
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> vs{s};
    comp[s] = static_cast<int>(comps.size());
    for (std::size_t k = 0; k < vs.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (comp[j] < 0 && m[vs[k]][j] > 2) {
          comp[j] = comp[s];
          vs.push_back(j);
        }
    std::sort(vs.begin(), vs.end());
    comps.push_back(std::move(vs));
  }
  std::vector<Irreducible> fs;
  for (const auto& c : comps) fs.push_back(identify_component(m, c));
  if (components) *components = comps;
  return CoxeterType(std::move(fs));
}

std::string canonical_name(const CoxeterType& t) {
  std::vector<std::string> names;
  for (auto f : t.factors()) {
    if (f.family == Family::I && f.m == 3) f = make_irreducible(Family::A, 2);
    if (f.family == Family::I && f.m == 4) f = make_irreducible(Family::B, 2);
    if (f.family == Family::I && f.m == 6) f = make_irreducible(Family::G, 2);
    if (f.family == Family::D && f.rank == 3) f = make_irreducible(Family::A, 3);
    names.push_back(f.name());
  }
  std::sort(names.begin(), names.end());
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "x" : "") + names[i];
  return s;
}

}  // namespace coxinv
