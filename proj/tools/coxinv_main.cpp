#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coxinv/coxinv.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int exit_code(coxinv_status s) {
  switch (s) {
    case COXINV_OK: return 0;
    case COXINV_ERR_PARSE:
    case COXINV_ERR_ARG:
    case COXINV_ERR_LIMIT: return kExitUsage;
    default: return kExitFail;
  }
}

// Prints the string result (if any) and the error, and maps the status.
int finish(coxinv_status s, char*& out) {
  if (out) {
    std::fputs(out, stdout);
    coxinv_string_free(out);
    out = nullptr;
  }
  if (s != COXINV_OK && s != COXINV_ERR_VERIFY) std::fprintf(stderr, "coxinv: %s\n", coxinv_last_error());
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Coxeter groups: involutions, cubes and their invariants"};
  app.set_version_flag("--version", std::string(coxinv_version()));
  app.require_subcommand(1);

  std::size_t limit = 1000000;
  bool timing = false;

  auto* report = app.add_subcommand("report", "Order, h-polynomial, involution classes, cubes and Phi of a type");
  std::string report_type;
  bool as_json = false, as_text = false;
  report->add_option("type", report_type, "Type, e.g. E7, B5, I2(7), A2xA2")->required();
  auto* json_flag = report->add_flag("--json", as_json, "JSON output (default)");
  report->add_flag("--text", as_text, "Plain text output")->excludes(json_flag);
  report->add_option("--limit", limit, "Largest group to enumerate")->capture_default_str();
  report->add_flag("--timing", timing, "Include timings");

  auto* table = app.add_subcommand("table", "Tables over the standard list of types");
  std::string table_name;
  bool csv = false;
  table->add_option("name", table_name, "h-poly, cube-counts or degrees")
      ->required()
      ->check(CLI::IsMember({"h-poly", "cube-counts", "degrees"}));
  table->add_flag("--csv", csv, "CSV output (the only format)");
  table->add_option("--limit", limit, "Largest group to enumerate")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "core", fault;
  std::vector<std::string> checks;
  bool list = false;
  verify->add_option("--suite", suite, "core or heavy")->check(CLI::IsMember({"core", "heavy"}))->capture_default_str();
  verify->add_option("--check", checks, "Run only this check (repeatable)");
  verify->add_option("--inject-fault", fault, "Corrupt an input on purpose")->check(CLI::IsMember({"root-table"}));
  verify->add_flag("--list", list, "List the checks of the suite");
  verify->add_option("--limit", limit, "Largest group to enumerate")->capture_default_str();
  verify->add_flag("--timing", timing, "Include timings");

  auto* exp = app.add_subcommand("export", "JSON exports");
  std::string what, export_type;
  exp->add_option("what", what, "root-system, class-table or cube-census")
      ->required()
      ->check(CLI::IsMember({"root-system", "class-table", "cube-census"}));
  exp->add_option("type", export_type, "Type")->required();
  exp->add_option("--limit", limit, "Largest group to enumerate")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (limit == 0) {
    std::fprintf(stderr, "coxinv: --limit must be positive\n");
    return kExitUsage;
  }

  char* out = nullptr;
  if (*report) {
    const auto fmt = as_text ? COXINV_FORMAT_TEXT : COXINV_FORMAT_JSON;
    return finish(coxinv_report(report_type.c_str(), fmt, limit, timing ? 1 : 0, &out), out);
  }
  if (*table) return finish(coxinv_table(table_name.c_str(), limit, &out), out);
  if (*exp) return finish(coxinv_export(what.c_str(), export_type.c_str(), limit, &out), out);

  if (list) return finish(coxinv_check_names(suite.c_str(), &out), out);
  std::string joined;
  for (const auto& c : checks) joined += (joined.empty() ? "" : ",") + c;
  return finish(coxinv_verify(suite.c_str(), checks.empty() ? nullptr : joined.c_str(),
                              fault.empty() ? nullptr : fault.c_str(), limit, timing ? 1 : 0, &out),
                out);
}
