// Per-type reports, JSON exports and the CSV tables.
#pragma once

#include <cstddef>
#include <string>

#include "coxinv/coxeter_type.hpp"
#include "coxinv/group.hpp"

namespace coxinv {

struct ReportOptions {
  std::size_t limit = kDefaultLimit;
  bool timing = false;
};

std::string report_json(const CoxeterType& t, const ReportOptions& opts = {});
std::string report_text(const CoxeterType& t, const ReportOptions& opts = {});

/// {type, ambient_dim, simple_roots, roots}; coordinates are quadruples of
/// rationals over 1, sqrt2, sqrt5, sqrt10 (null for I2(m) outside the field).
std::string export_root_system(const CoxeterType& t);
/// Involution classes: {type, classes: [{degree, class_key, size, representative}]}.
/// Throws LimitExceeded when the group is not enumerable.
std::string export_class_table(const CoxeterType& t, std::size_t limit = kDefaultLimit);
/// {type, phi_order, ranks: [{rank, count, per_extremity_class}]}.
std::string export_cube_census(const CoxeterType& t, std::size_t limit = kDefaultLimit);

/// "h-poly", "cube-counts" or "degrees". Throws std::invalid_argument.
std::string table_csv(const std::string& which, std::size_t limit = kDefaultLimit);

}  // namespace coxinv
