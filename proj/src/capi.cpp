#include "coxinv/coxinv.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>

#include "coxinv/cubes.hpp"
#include "coxinv/involutions.hpp"
#include "coxinv/report.hpp"
#include "coxinv/root_system.hpp"
#include "coxinv/verify.hpp"

struct coxinv_rootsys {
  coxinv::RootSystem rs;
};

namespace {

thread_local std::string last_error;

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

coxinv::CoxeterType parse_type(const char* s) {
  if (!s) throw std::invalid_argument("null type string");
  std::string t;
  for (const char* p = s; *p; ++p)
    if (!std::isspace(static_cast<unsigned char>(*p))) t += *p;
  try {
    auto ct = coxinv::CoxeterType::parse(t);
    int npos = 0;
    for (const auto& f : ct.factors()) npos += coxinv::reflection_count(f);
    if (npos > coxinv::kMaxPositiveRoots)
      throw std::invalid_argument("more than " + std::to_string(coxinv::kMaxPositiveRoots) + " reflections");
    return ct;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
coxinv_status guard(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const ParseError& e) {
    last_error = e.what();
    return COXINV_ERR_PARSE;
  } catch (const coxinv::LimitExceeded& e) {
    last_error = e.what();
    return COXINV_ERR_LIMIT;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return COXINV_ERR_ARG;
  } catch (const std::exception& e) {
    last_error = e.what();
    return COXINV_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return COXINV_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw std::invalid_argument(std::string("null ") + what);
}

std::size_t effective_limit(std::size_t limit) { return limit ? limit : coxinv::kDefaultLimit; }

}  // namespace

extern "C" {

const char* coxinv_version(void) { return COXINV_VERSION; }

const char* coxinv_last_error(void) { return last_error.c_str(); }

void coxinv_string_free(char* s) { std::free(s); }

coxinv_status coxinv_rootsys_new(const char* type, coxinv_rootsys** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = new coxinv_rootsys{coxinv::RootSystem::build(parse_type(type))};
    return COXINV_OK;
  });
}

void coxinv_rootsys_free(coxinv_rootsys* rs) { delete rs; }

coxinv_status coxinv_rootsys_name(const coxinv_rootsys* rs, char** out) {
  return guard([&] {
    need(rs, "handle");
    need(out, "output pointer");
    *out = dup(coxinv::canonical_name(rs->rs.type()));
    return COXINV_OK;
  });
}

coxinv_status coxinv_rootsys_rank(const coxinv_rootsys* rs, int* out) {
  return guard([&] {
    need(rs, "handle");
    need(out, "output pointer");
    *out = rs->rs.rank();
    return COXINV_OK;
  });
}

coxinv_status coxinv_rootsys_reflections(const coxinv_rootsys* rs, int* out) {
  return guard([&] {
    need(rs, "handle");
    need(out, "output pointer");
    *out = rs->rs.npos();
    return COXINV_OK;
  });
}

coxinv_status coxinv_rootsys_order(const coxinv_rootsys* rs, char** out) {
  return guard([&] {
    need(rs, "handle");
    need(out, "output pointer");
    *out = dup(coxinv::group_order(rs->rs.type()).get_str());
    return COXINV_OK;
  });
}

coxinv_status coxinv_rootsys_maximal_cubes(const coxinv_rootsys* rs, size_t* out) {
  return guard([&] {
    need(rs, "handle");
    need(out, "output pointer");
    *out = coxinv::maximal_cubes(rs->rs).size();
    return COXINV_OK;
  });
}

coxinv_status coxinv_hpoly(const char* type, int enumerated, size_t limit, long long* coeffs, size_t cap,
                           size_t* len) {
  return guard([&] {
    need(len, "length pointer");
    if (cap) need(coeffs, "coefficient buffer");
    const auto t = parse_type(type);
    const coxinv::HPoly h =
        enumerated ? coxinv::enumerated_hpoly(t, effective_limit(limit)).hpoly : coxinv::h_polynomial_formula(t);
    *len = h.size();
    std::copy_n(h.begin(), std::min(cap, h.size()), coeffs);
    return COXINV_OK;
  });
}

coxinv_status coxinv_report(const char* type, coxinv_format format, size_t limit, int timing, char** out) {
  return guard([&] {
    need(out, "output pointer");
    const auto t = parse_type(type);
    coxinv::ReportOptions o;
    o.limit = effective_limit(limit);
    o.timing = timing != 0;
    if (format == COXINV_FORMAT_JSON) *out = dup(coxinv::report_json(t, o));
    else if (format == COXINV_FORMAT_TEXT) *out = dup(coxinv::report_text(t, o));
    else throw std::invalid_argument("unknown format");
    return COXINV_OK;
  });
}

coxinv_status coxinv_table(const char* which, size_t limit, char** out) {
  return guard([&] {
    need(which, "table name");
    need(out, "output pointer");
    *out = dup(coxinv::table_csv(which, effective_limit(limit)));
    return COXINV_OK;
  });
}

coxinv_status coxinv_export(const char* what, const char* type, size_t limit, char** out) {
  return guard([&] {
    need(what, "export name");
    need(out, "output pointer");
    const std::string w = what;
    if (w != "root-system" && w != "class-table" && w != "cube-census")
      throw std::invalid_argument("unknown export '" + w + "' (expected root-system, class-table or cube-census)");
    const auto t = parse_type(type);
    if (w == "root-system") *out = dup(coxinv::export_root_system(t));
    else if (w == "class-table") *out = dup(coxinv::export_class_table(t, effective_limit(limit)));
    else *out = dup(coxinv::export_cube_census(t, effective_limit(limit)));
    return COXINV_OK;
  });
}

coxinv_status coxinv_verify(const char* suite, const char* checks, const char* fault, size_t limit, int timing,
                            char** out) {
  return guard([&] {
    need(suite, "suite name");
    need(out, "output pointer");
    coxinv::VerifyOptions o;
    o.suite = suite;
    o.limit = effective_limit(limit);
    if (fault) o.inject_fault = fault;
    if (checks) {
      std::stringstream ss(checks);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) o.only.push_back(item);
    }
    const auto results = coxinv::run_verify(o);
    *out = dup(coxinv::verify_summary(results, timing != 0));
    const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    if (!ok) last_error = "verification failed";
    return ok ? COXINV_OK : COXINV_ERR_VERIFY;
  });
}

coxinv_status coxinv_check_names(const char* suite, char** out) {
  return guard([&] {
    need(suite, "suite name");
    need(out, "output pointer");
    std::string s;
    for (const auto& n : coxinv::check_names(suite)) s += n + "\n";
    *out = dup(s);
    return COXINV_OK;
  });
}

}  // extern "C"
