#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "altruns/derivpoly.hpp"
#include "altruns/format.hpp"
#include "altruns/oracle.hpp"
#include "altruns/runs.hpp"
#include "altruns/sequences.hpp"
#include "altruns/verify.hpp"

namespace altruns::cli {
namespace {

constexpr unsigned kMaxTableRows = 400;
constexpr const char* kHardCapEnv = "ALTRUNS_ORACLE_HARD_CAP";

struct UsageError {
  std::string message;
};

unsigned oracle_hard_cap() {
  const char* raw = std::getenv(kHardCapEnv);
  if (raw == nullptr || *raw == '\0') return kDefaultOracleHardCap;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 1 || value > 20)
    throw UsageError{std::string(kHardCapEnv) + " must be an integer in 1..20, got '" + raw + "'"};
  return static_cast<unsigned>(value);
}

/// Enumeration cap in effect for a request of `n` rows.
unsigned oracle_cap_for(unsigned n, bool allow_large) {
  const unsigned hard = oracle_hard_cap();
  const unsigned soft = std::min(kDefaultOracleCap, hard);
  if (n <= soft) return soft;
  if (!allow_large)
    throw UsageError{"oracle size " + std::to_string(n) + " exceeds the default cap " + std::to_string(soft) +
                     "; pass --allow-large-oracle to raise it to " + std::to_string(hard)};
  if (n > hard)
    throw UsageError{"oracle size " + std::to_string(n) + " exceeds the hard cap " + std::to_string(hard) + " (" +
                     kHardCapEnv + ")"};
  return hard;
}

OutputFormat format_or_throw(const std::string& name) {
  const auto f = parse_format(name);
  if (!f) throw UsageError{"unknown format '" + name + "'"};
  return *f;
}

TriangularTable runs_table(unsigned n_max, const std::string& method, bool allow_large) {
  if (method == "recurrence") return r_table_recurrence(n_max).table();
  if (method == "oracle") return runs_triangle_oracle(n_max, oracle_cap_for(n_max, allow_large));

  TriangularTable table(2, 1);
  if (method == "poly-recurrence") {
    for (const auto& rp : r_poly_recurrence_sequence(n_max)) {
      if (rp.n < 2) continue;
      std::vector<BigInt> row;
      for (unsigned k = 1; k <= rp.n - 1; ++k) row.push_back(rp.poly.coeff(k));
      table.push_row(std::move(row));
    }
    return table;
  }
  if (method == "theorem") {
    const DerivPolyFamily family = derivative_polys(n_max);
    for (unsigned n = 2; n <= n_max; ++n) {
      const IntPolynomial p = r_poly_theorem(n, family).poly;
      std::vector<BigInt> row;
      for (unsigned k = 1; k <= n - 1; ++k) row.push_back(p.coeff(k));
      table.push_row(std::move(row));
    }
    return table;
  }
  if (method == "explicit" || method == "stanley") {
    const DerivPolyFamily family = derivative_polys(method == "explicit" ? n_max : 0);
    for (unsigned n = 2; n <= n_max; ++n) {
      std::vector<BigInt> row;
      for (unsigned k = 1; k <= n - 1; ++k) row.push_back(method == "explicit" ? r_explicit(n, k, family) : r_stanley(n, k));
      table.push_row(std::move(row));
    }
    return table;
  }
  throw UsageError{"unknown runs method '" + method +
                   "' (expected recurrence, poly-recurrence, theorem, explicit, stanley or oracle)"};
}

TriangularTable build_table(const std::string& family, unsigned n_max, const std::string& method, bool allow_large) {
  if (n_max > kMaxTableRows) throw UsageError{"--n-max must be at most " + std::to_string(kMaxTableRows)};
  const bool default_method = method.empty();

  if (family == "runs") {
    if (n_max < 2) throw UsageError{"runs table needs --n-max >= 2"};
    return runs_table(n_max, default_method ? "recurrence" : method, allow_large);
  }
  if (family == "eulerian") {
    if (n_max < 1) throw UsageError{"eulerian table needs --n-max >= 1"};
    const std::string m = default_method ? "frobenius" : method;
    if (m == "oracle") return eulerian_triangle_oracle(n_max, oracle_cap_for(n_max, allow_large));
    if (m != "frobenius") throw UsageError{"unknown eulerian method '" + m + "' (expected frobenius or oracle)"};
    TriangularTable table(1, 1);
    for (unsigned n = 1; n <= n_max; ++n) {
      const IntPolynomial a = eulerian_poly_frobenius(n);
      std::vector<BigInt> row;
      for (unsigned k = 1; k <= n; ++k) row.push_back(a.coeff(k));
      table.push_row(std::move(row));
    }
    return table;
  }
  if (!default_method) throw UsageError{"--method is not supported for the " + family + " table"};
  if (family == "stirling") {
    if (n_max < 1) throw UsageError{"stirling table needs --n-max >= 1"};
    TriangularTable table(1, 1);
    for (unsigned n = 1; n <= n_max; ++n) {
      std::vector<BigInt> row;
      for (unsigned k = 1; k <= n; ++k) row.push_back(stirling2(n, k));
      table.push_row(std::move(row));
    }
    return table;
  }
  if (family == "tangent") {
    if (n_max < 1) throw UsageError{"tangent table needs --n-max >= 1"};
    return tangent_numbers(n_max);
  }
  if (family == "derivcoef") return derivative_polys(n_max).p_table;
  throw UsageError{"unknown table family '" + family + "'"};
}

std::string render_poly(const std::string& family, unsigned n, OutputFormat format) {
  if (n < 1) throw UsageError{"--n must be >= 1"};
  if (n > kMaxTableRows) throw UsageError{"--n must be at most " + std::to_string(kMaxTableRows)};
  if (family == "R") return format_poly(r_poly_recurrence(n).poly, family, n, 'x', format);
  if (family == "P") return format_poly(derivative_polys(n).poly(n), family, n, 'x', format);
  if (family == "a") return format_poly(a_poly(n), family, n, 'y', format);
  if (family == "A") return format_poly(eulerian_poly_frobenius(n), family, n, 'x', format);
  throw UsageError{"unknown polynomial family '" + family + "' (expected R, P, a or A)"};
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

Cell parse_cell(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("no comma");
    return {static_cast<unsigned>(std::stoul(text.substr(0, comma))), std::stol(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError{"--inject-fault expects 'n,k', got '" + text + "'"};
  }
}

std::string render_report_pretty(const VerificationReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << " [" << c.range << "]";
    if (c.first_failure) os << " first failure at (" << c.first_failure->n << "," << c.first_failure->k << ")";
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  os << "overall: " << (report.passed() ? "pass" : "fail") << ", exactness tripwires: " << report.tripwires() << '\n';
  return os.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Alternating runs of permutations: exact tables, polynomials and cross-verification.\n"
      "JSON output writes integers beyond the signed 64-bit range as decimal strings."};
  app.name("altruns");
  app.require_subcommand(1);

  std::string family;
  unsigned n_max = 0;
  unsigned n = 0;
  std::string format_name;
  std::string method;
  bool allow_large = false;

  auto* table = app.add_subcommand("table", "Print a number triangle");
  table->add_option("family", family, "runs | eulerian | stirling | tangent | derivcoef")->required();
  table->add_option("--n-max", n_max, "Last row to print")->required();
  table->add_option("--format", format_name, "csv | json | bfile | pretty")->default_str("csv");
  table->add_option("--method", method,
                    "runs: recurrence | poly-recurrence | theorem | explicit | stanley | oracle; "
                    "eulerian: frobenius | oracle");
  table->add_flag("--allow-large-oracle", allow_large, "Permit oracle enumeration above the default cap");

  auto* poly = app.add_subcommand("poly", "Print one polynomial");
  std::string poly_family;
  poly->add_option("family", poly_family, "R | P | a | A")->required();
  poly->add_option("--n", n, "Index of the polynomial")->required();
  std::string poly_format = "pretty";
  poly->add_option("--format", poly_format, "csv | json | bfile | pretty")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Cross-check every method and identity");
  unsigned verify_n_max = 20;
  unsigned oracle_max = 8;
  std::string verify_format = "json";
  std::string checks;
  std::string inject;
  bool verify_allow_large = false;
  verify->add_option("--n-max", verify_n_max, "Largest n for formula checks")->capture_default_str();
  verify->add_option("--oracle-max", oracle_max, "Largest n for brute-force enumeration")->capture_default_str();
  verify->add_option("--format", verify_format, "json | pretty")->capture_default_str();
  verify->add_option("--checks", checks, "Comma-separated check names or prefixes");
  verify->add_flag("--allow-large-oracle", verify_allow_large, "Permit --oracle-max above the default cap");
  verify->add_option("--inject-fault", inject)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'altruns --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (table->parsed()) {
      const OutputFormat f = format_or_throw(format_name.empty() ? "csv" : format_name);
      out << format_table(build_table(family, n_max, method, allow_large), f);
      return kExitOk;
    }
    if (poly->parsed()) {
      out << render_poly(poly_family, n, format_or_throw(poly_format));
      return kExitOk;
    }
    // verify
    if (verify_n_max < 2) throw UsageError{"--n-max must be >= 2"};
    if (verify_n_max > kMaxTableRows) throw UsageError{"--n-max must be at most " + std::to_string(kMaxTableRows)};
    if (verify_format != "json" && verify_format != "pretty") throw UsageError{"verify supports json or pretty output"};
    VerifyOptions options;
    options.oracle_cap = oracle_cap_for(oracle_max, verify_allow_large);
    options.checks = split_list(checks);
    if (!inject.empty()) options.inject_fault = parse_cell(inject);
    const VerificationReport report = verify_all(verify_n_max, oracle_max, options);
    out << (verify_format == "json" ? report.to_json() + "\n" : render_report_pretty(report));
    return report.passed() ? kExitOk : kExitVerificationFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}

}  // namespace altruns::cli
