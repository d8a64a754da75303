#include "coxinv/report.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "coxinv/cubes.hpp"
#include "coxinv/involutions.hpp"
#include "coxinv/root_system.hpp"

namespace coxinv {

namespace {

using json = nlohmann::ordered_json;

json hpoly_json(const HPoly& h) {
  json a = json::array();
  for (long long c : h) a.push_back(c);
  return a;
}

json quad(const QNum& x) {
  json a = json::array();
  for (const auto& c : x.coeffs()) a.push_back(c.get_str());
  return a;
}

json vec_json(const VecQ& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(quad(x));
  return a;
}

std::vector<int> type_degrees(const CoxeterType& t) {
  std::vector<int> d;
  for (const auto& f : t.factors()) {
    auto df = characteristic_degrees(f);
    d.insert(d.end(), df.begin(), df.end());
  }
  std::sort(d.begin(), d.end());
  return d;
}

// Classes sorted by (degree, key), with the key of every class.
struct ClassTable {
  InvolutionCensus census;
  std::vector<std::string> keys;
  std::vector<int> order;
  std::vector<int> position;  // class id -> row
};

ClassTable class_table(const RootSystem& rs, const ElementSet& group) {
  ClassTable t;
  t.census = census(rs, involutions_by_filter(rs, group));
  const auto& c = t.census;
  for (int k = 0; k < c.num_classes; ++k) t.keys.push_back(class_key(rs, c.elems[c.class_rep[k]]));
  t.order.resize(c.num_classes);
  for (int k = 0; k < c.num_classes; ++k) t.order[k] = k;
  std::sort(t.order.begin(), t.order.end(), [&](int a, int b) {
    if (c.class_degree[a] != c.class_degree[b]) return c.class_degree[a] < c.class_degree[b];
    if (t.keys[a] != t.keys[b]) return t.keys[a] < t.keys[b];
    return a < b;
  });
  t.position.resize(c.num_classes);
  for (int i = 0; i < c.num_classes; ++i) t.position[t.order[i]] = i;
  return t;
}

json representative_json(const RootSystem& rs, const Elem& u) {
  json roots = json::array(), coeffs = json::array();
  for (int r : orthogonal_product_base(rs, u)) {
    roots.push_back(r);
    if (!rs.has_coordinates()) continue;
    json c = json::array();
    for (const auto& x : rs.simple_coefficients(r)) c.push_back(x.str());
    coeffs.push_back(std::move(c));
  }
  // I2(m) roots have no coordinates in the field; indices only.
  return {{"roots", roots}, {"simple_coefficients", rs.has_coordinates() ? coeffs : json(nullptr)}};
}

json classes_json(const RootSystem& rs, const ClassTable& t) {
  json a = json::array();
  const auto& c = t.census;
  for (int k : t.order)
    a.push_back({{"degree", c.class_degree[k]},
                 {"class_key", t.keys[k]},
                 {"size", c.class_size[k]},
                 {"representative", representative_json(rs, c.elems[c.class_rep[k]])}});
  return a;
}

// Cube counts per rank; with a class table, also per extremity class.
json cube_ranks_json(const RootSystem& rs, const ClassTable* t) {
  const auto counts = cube_census(rs);
  std::vector<std::vector<std::uint64_t>> per;
  if (t) {
    std::unordered_map<Elem, int, ElemHash> cls;
    for (std::size_t i = 0; i < t->census.elems.size(); ++i) cls.emplace(t->census.elems[i], t->census.cls[i]);
    per.assign(counts.size(), std::vector<std::uint64_t>(t->census.num_classes, 0));
    for_each_cube(
        rs,
        [&](const CubeVisit& v) { ++per[v.base.size()][t->position[cls.at(*v.extremity)]]; },
        nullptr, 0, true);
  }
  json a = json::array();
  for (std::size_t k = 0; k < counts.size(); ++k) {
    json row = {{"rank", k}, {"count", counts[k]}};
    if (t) {
      json e = json::array();
      for (std::size_t i = 0; i < per[k].size(); ++i)
        if (per[k][i]) e.push_back({{"class_key", t->keys[t->order[i]]}, {"cubes", per[k][i]}});
      row["per_extremity_class"] = e;
    } else {
      row["per_extremity_class"] = nullptr;
    }
    a.push_back(std::move(row));
  }
  return a;
}

json phi_json(const RootSystem& rs) {
  if (!is_odd_type(rs.type())) return nullptr;
  const PhiData d = phi_data(rs);
  json cube = json::array();
  for (int r : d.cube) cube.push_back(r);
  return {{"cube", cube},
          {"orbit_size", d.orbit_size},
          {"normalizer_order", d.normalizer_order.get_str()},
          {"order", d.phi.order()},
          {"subset_orbits", hpoly_json(subset_orbit_counts(d.phi.degree, d.phi.generators))}};
}

class Stopwatch {
public:
  void lap(const char* name) {
    const auto now = std::chrono::steady_clock::now();
    laps_.emplace_back(name, std::chrono::duration<double, std::milli>(now - last_).count());
    last_ = now;
  }
  json to_json() const {
    json o = json::object();
    for (const auto& [k, v] : laps_) o[k] = static_cast<long long>(v + 0.5);
    return o;
  }

private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, double>> laps_;
};

json build_report(const CoxeterType& t, const ReportOptions& opts) {
  Stopwatch sw;
  const RootSystem rs = RootSystem::build(t);
  json r;
  r["type"] = t.name();
  r["order"] = group_order(t).get_str();
  r["reflections"] = reflection_count(t);
  r["rank"] = t.rank();
  r["rgr"] = reduced_rank(t);
  r["odd_type"] = is_odd_type(t);
  json deg = json::array();
  for (int d : type_degrees(t)) deg.push_back(d);
  r["degrees"] = deg;
  sw.lap("build");

  const HPoly formula = h_polynomial_formula(t);
  json h = {{"formula", hpoly_json(formula)}, {"formula_text", hpoly_str(formula)}};
  try {
    const auto e = enumerated_hpoly(t, opts.limit);
    h["enumerated"] = hpoly_json(e.hpoly);
    h["method"] = e.method;
    h["agree"] = e.hpoly == formula;
  } catch (const LimitExceeded&) {
    h["enumerated"] = nullptr;
    h["method"] = nullptr;
    h["agree"] = nullptr;
  }
  r["h_polynomial"] = h;
  sw.lap("h_polynomial");

  std::optional<ClassTable> table;
  if (auto group = enumerate_group(rs, opts.limit)) table = class_table(rs, *group);
  r["involution_classes"] = table ? classes_json(rs, *table) : json(nullptr);
  sw.lap("involution_classes");

  r["cube_census"] = cube_ranks_json(rs, table ? &*table : nullptr);
  sw.lap("cube_census");
  r["phi"] = phi_json(rs);
  sw.lap("phi");
  if (opts.timing) r["timing_ms"] = sw.to_json();
  return r;
}

std::string yes_no(const json& v) {
  if (v.is_null()) return "n/a";
  return v.get<bool>() ? "yes" : "no";
}

std::string join(const json& a, const char* sep) {
  std::string s;
  for (const auto& x : a) {
    if (!s.empty()) s += sep;
    s += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return s;
}

std::string render_text(const json& r) {
  std::ostringstream o;
  o << "type          " << r["type"].get<std::string>() << "\n";
  o << "order         " << r["order"].get<std::string>() << "\n";
  o << "reflections   " << r["reflections"] << "\n";
  o << "rank          " << r["rank"] << "\n";
  o << "rgr           " << r["rgr"] << "\n";
  o << "odd type      " << yes_no(r["odd_type"]) << "\n";
  o << "degrees       " << join(r["degrees"], " ") << "\n";
  const auto& h = r["h_polynomial"];
  o << "h formula     " << h["formula_text"].get<std::string>() << "\n";
  if (h["enumerated"].is_null()) {
    o << "h enumerated  (over limit)\n";
  } else {
    HPoly e;
    for (const auto& c : h["enumerated"]) e.push_back(c.get<long long>());
    o << "h enumerated  " << hpoly_str(e) << " [" << h["method"].get<std::string>() << ", "
      << (h["agree"].get<bool>() ? "agrees" : "MISMATCH") << "]\n";
  }
  o << "\ninvolution classes\n";
  if (r["involution_classes"].is_null()) {
    o << "  (group over the enumeration limit)\n";
  } else {
    for (const auto& c : r["involution_classes"])
      o << "  " << c["degree"] << "  " << c["size"] << "  " << c["class_key"].get<std::string>() << "  roots "
        << join(c["representative"]["roots"], ",") << "\n";
  }
  o << "\ncubes by rank\n";
  for (const auto& c : r["cube_census"]) o << "  " << c["rank"] << "  " << c["count"] << "\n";
  if (!r["phi"].is_null()) {
    const auto& p = r["phi"];
    o << "\nphi           order " << p["order"] << ", maximal cubes " << p["orbit_size"] << ", normalizer "
      << p["normalizer_order"].get<std::string>() << "\n";
    o << "subset orbits " << join(p["subset_orbits"], ",") << "\n";
  }
  if (r.contains("timing_ms")) {
    o << "\ntiming (ms)\n";
    for (const auto& [k, v] : r["timing_ms"].items()) o << "  " << k << "  " << v << "\n";
  }
  return o.str();
}

std::string csv_row(const std::string& name, const std::vector<std::string>& fields) {
  std::string s = name;
  for (const auto& f : fields) s += ", " + f;
  return s + "\n";
}

std::vector<std::string> type_list(std::initializer_list<std::pair<char, std::pair<int, int>>> ranges,
                                   std::initializer_list<const char*> extra) {
  std::vector<std::string> v;
  for (const auto& [f, r] : ranges)
    for (int n = r.first; n <= r.second; ++n) v.push_back(std::string(1, f) + std::to_string(n));
  for (const char* e : extra) v.emplace_back(e);
  return v;
}

std::string hpoly_table(std::size_t limit) {
  std::string out = "type, coefficients\n";
  const auto types = type_list({{'A', {1, 8}}, {'B', {2, 10}}, {'D', {4, 11}}},
                               {"E6", "E7", "E8", "F4", "G2", "H3", "H4", "I2(5)", "I2(7)", "I2(8)", "I2(12)"});
  for (const auto& s : types) {
    const auto t = CoxeterType::parse(s);
    const auto e = enumerated_hpoly(t, limit);
    if (e.hpoly != h_polynomial_formula(t))
      throw std::logic_error(s + ": enumerated h-polynomial differs from the formula");
    std::string coeffs;
    for (std::size_t i = 0; i < e.hpoly.size(); ++i) coeffs += (i ? "," : "") + std::to_string(e.hpoly[i]);
    out += s + ", " + coeffs + "\n";
  }
  return out;
}

std::string cube_count_table() {
  std::string out = "type, maximal_cubes\n";
  for (const char* s : {"A1", "B2", "G2", "D4", "D6", "D8", "E7", "E8", "H3", "H4", "I2(5)", "I2(7)", "I2(9)"}) {
    const auto rs = RootSystem::build(CoxeterType::parse(s));
    out += csv_row(s, {std::to_string(maximal_cubes(rs).size())});
  }
  return out;
}

std::string degree_table() {
  std::string out = "type, degrees, product, reflections, even_count, rgr, odd_product, maximal_involutions\n";
  const auto types = type_list({{'A', {1, 8}}, {'B', {2, 8}}, {'D', {4, 8}}},
                               {"E6", "E7", "E8", "F4", "G2", "H3", "H4", "I2(5)", "I2(8)"});
  for (const auto& s : types) {
    const auto t = CoxeterType::parse(s);
    const auto d = characteristic_degrees(t.single());
    BigInt prod = 1, odd = 1;
    int even = 0, refl = 0;
    std::string ds;
    for (int x : d) {
      prod *= x;
      refl += x - 1;
      if (x % 2 == 0) ++even; else odd *= x;
      ds += (ds.empty() ? "" : " ") + std::to_string(x);
    }
    const auto rs = RootSystem::build(t);
    std::set<Elem> maximal;
    for (const auto& b : maximal_cubes(rs)) maximal.insert(extremity(rs, b));
    out += csv_row(s, {ds, prod.get_str(), std::to_string(refl), std::to_string(even),
                       std::to_string(reduced_rank(t)), odd.get_str(), std::to_string(maximal.size())});
  }
  return out;
}

}  // namespace

std::string report_json(const CoxeterType& t, const ReportOptions& opts) {
  return build_report(t, opts).dump(2) + "\n";
}

std::string report_text(const CoxeterType& t, const ReportOptions& opts) {
  return render_text(build_report(t, opts));
}

std::string export_root_system(const CoxeterType& t) {
  const RootSystem rs = RootSystem::build(t);
  json r;
  r["type"] = t.name();
  r["ambient_dim"] = rs.ambient_dim();
  if (rs.has_coordinates()) {
    json simple = json::array(), roots = json::array();
    for (int j = 0; j < rs.rank(); ++j) simple.push_back(vec_json(rs.simple_root(j)));
    for (int i = 0; i < rs.npos(); ++i) roots.push_back(vec_json(rs.root(i)));
    r["simple_roots"] = simple;
    r["roots"] = roots;
  } else {
    r["simple_roots"] = nullptr;
    r["roots"] = nullptr;
  }
  return r.dump(2) + "\n";
}

std::string export_class_table(const CoxeterType& t, std::size_t limit) {
  const RootSystem rs = RootSystem::build(t);
  auto group = enumerate_group(rs, limit);
  if (!group) throw LimitExceeded(t.name() + ": group order exceeds the enumeration limit");
  const ClassTable table = class_table(rs, *group);
  json r;
  r["type"] = t.name();
  r["classes"] = classes_json(rs, table);
  return r.dump(2) + "\n";
}

std::string export_cube_census(const CoxeterType& t, std::size_t limit) {
  const RootSystem rs = RootSystem::build(t);
  std::optional<ClassTable> table;
  if (auto group = enumerate_group(rs, limit)) table = class_table(rs, *group);
  json r;
  r["type"] = t.name();
  const json phi = phi_json(rs);
  r["phi_order"] = phi.is_null() ? json(nullptr) : phi["order"];
  r["ranks"] = cube_ranks_json(rs, table ? &*table : nullptr);
  return r.dump(2) + "\n";
}

std::string table_csv(const std::string& which, std::size_t limit) {
  if (which == "h-poly") return hpoly_table(limit);
  if (which == "cube-counts") return cube_count_table();
  if (which == "degrees") return degree_table();
  throw std::invalid_argument("unknown table '" + which + "' (expected h-poly, cube-counts or degrees)");
}

}  // namespace coxinv
