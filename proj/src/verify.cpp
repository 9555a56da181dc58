#include "altruns/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <sstream>

#include <json.hpp>

#include "altruns/runs.hpp"

namespace altruns {
namespace {

constexpr unsigned kCanfieldWilfN = 40;
const Rational kCanfieldWilfBand(1, 1000);

struct Context {
  unsigned n_max;
  unsigned oracle_max;
  unsigned oracle_cap;
  RunsTriangle reference;
  DerivPolyFamily family;
  TriangularTable tangent{1, 1};
};

std::string span_range(unsigned lo, unsigned hi) {
  if (lo > hi) return "empty";
  return "n=" + std::to_string(lo) + ".." + std::to_string(hi);
}

CheckResult start(std::string name, std::string range) {
  CheckResult r;
  r.name = std::move(name);
  r.range = std::move(range);
  return r;
}

void fail(CheckResult& r, Cell cell, const std::string& detail) {
  if (!r.passed) return;
  r.passed = false;
  r.first_failure = cell;
  r.detail = detail;
}

std::string cell_text(unsigned n, long k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

/// Compares value(n, k) against the reference for every cell 2 <= n <= n_max.
void compare_cells(CheckResult& r, const Context& ctx, const std::function<BigInt(unsigned, unsigned)>& value) {
  for (unsigned n = 2; n <= ctx.n_max && r.passed; ++n)
    for (unsigned k = 1; k <= n - 1; ++k) {
      const BigInt got = value(n, k);
      const BigInt want = ctx.reference.at(n, k);
      if (got != want) {
        fail(r, {n, static_cast<long>(k)},
             "R" + cell_text(n, k) + ": got " + got.get_str() + ", reference " + want.get_str());
        break;
      }
    }
}

/// Compares R_n(x) against the reference row, including the zero constant
/// term and nothing past degree n-1.
void compare_poly(CheckResult& r, unsigned n, const IntPolynomial& poly, const RunsTriangle& reference) {
  for (long k = 0; k <= std::max<long>(poly.degree(), static_cast<long>(n) - 1); ++k) {
    const BigInt got = poly.coeff(static_cast<std::size_t>(k));
    const BigInt want = reference.at(n, k);
    if (got != want) {
      fail(r, {n, k}, "R" + cell_text(n, k) + ": got " + got.get_str() + ", reference " + want.get_str());
      return;
    }
  }
}

void compare_tables(CheckResult& r, const TriangularTable& got, const TriangularTable& want, unsigned lo,
                    unsigned hi, const char* symbol) {
  for (unsigned n = lo; n <= hi && r.passed; ++n) {
    const auto g = got.row(n);
    const auto w = want.row(n);
    for (std::size_t i = 0; i < std::max(g.size(), w.size()); ++i) {
      const long k = static_cast<long>(i + got.col_offset());
      const BigInt gv = got.at(n, k);
      const BigInt wv = want.at(n, k);
      if (gv != wv) {
        fail(r, {n, k}, std::string(symbol) + cell_text(n, k) + ": got " + gv.get_str() + ", expected " + wv.get_str());
        break;
      }
    }
  }
}

CheckResult check_poly_recurrence(const Context& ctx) {
  CheckResult r = start("runs.poly_recurrence", span_range(2, ctx.n_max));
  const auto polys = r_poly_recurrence_sequence(ctx.n_max);
  for (unsigned n = 2; n <= ctx.n_max && r.passed; ++n) compare_poly(r, n, polys[n - 1].poly, ctx.reference);
  return r;
}

CheckResult check_theorem(const Context& ctx) {
  CheckResult r = start("runs.theorem", span_range(2, ctx.n_max));
  for (unsigned n = 2; n <= ctx.n_max && r.passed; ++n)
    compare_poly(r, n, r_poly_theorem(n, ctx.family).poly, ctx.reference);
  return r;
}

CheckResult check_explicit(const Context& ctx) {
  CheckResult r = start("runs.explicit", span_range(2, ctx.n_max));
  compare_cells(r, ctx, [&](unsigned n, unsigned k) { return r_explicit(n, k, ctx.family); });
  return r;
}

CheckResult check_stanley(const Context& ctx) {
  CheckResult r = start("runs.stanley", span_range(2, ctx.n_max));
  compare_cells(r, ctx, [](unsigned n, unsigned k) { return r_stanley(n, k); });
  return r;
}

CheckResult check_runs_oracle(const Context& ctx) {
  CheckResult r = start("runs.oracle", span_range(2, ctx.oracle_max));
  if (ctx.oracle_max < 2) {
    r.detail = "no rows requested";
    return r;
  }
  const TriangularTable oracle = runs_triangle_oracle(ctx.oracle_max, ctx.oracle_cap);
  compare_tables(r, ctx.reference.table(), oracle, 2, std::min(ctx.oracle_max, ctx.n_max), "R");
  if (r.passed && ctx.oracle_max > ctx.n_max) {
    const RunsTriangle extended = r_table_recurrence(ctx.oracle_max);
    compare_tables(r, extended.table(), oracle, ctx.n_max + 1, ctx.oracle_max, "R");
  }
  return r;
}

CheckResult check_row_sums(const Context& ctx) {
  CheckResult r = start("runs.row_sums", span_range(2, ctx.n_max));
  for (unsigned n = 2; n <= ctx.n_max; ++n) {
    BigInt sum = 0;
    for (const auto& v : ctx.reference.row(n)) sum += v;
    if (sum != factorial(n)) {
      fail(r, {n, 0}, "row " + std::to_string(n) + " sums to " + sum.get_str() + ", expected n! = " +
                          factorial(n).get_str());
      break;
    }
  }
  return r;
}

CheckResult check_boundary(const Context& ctx) {
  CheckResult r = start("runs.boundary", span_range(2, ctx.n_max));
  for (unsigned n = 2; n <= ctx.n_max && r.passed; ++n) {
    if (ctx.reference.at(n, 1) != 2) fail(r, {n, 1}, "R(n,1) must be 2");
    if (n >= 3 && ctx.reference.at(n, n - 1) <= 0) fail(r, {n, static_cast<long>(n) - 1}, "R(n,n-1) must be positive");
  }
  return r;
}

CheckResult check_eulerian_oracle(const Context& ctx) {
  CheckResult r = start("eulerian.oracle", span_range(1, ctx.oracle_max));
  if (ctx.oracle_max < 1) {
    r.detail = "no rows requested";
    return r;
  }
  const TriangularTable oracle = eulerian_triangle_oracle(ctx.oracle_max, ctx.oracle_cap);
  TriangularTable frobenius(1, 1);
  for (unsigned n = 1; n <= ctx.oracle_max; ++n) {
    const IntPolynomial a = eulerian_poly_frobenius(n);
    std::vector<BigInt> row;
    for (unsigned k = 1; k <= n; ++k) row.push_back(a.coeff(k));
    if (a.coeff(0) != 0 || a.degree() > static_cast<long>(n)) {
      fail(r, {n, 0}, "A_" + std::to_string(n) + " has terms outside x^1..x^n");
      return r;
    }
    frobenius.push_row(std::move(row));
  }
  compare_tables(r, frobenius, oracle, 1, ctx.oracle_max, "A");
  return r;
}

CheckResult check_eulerian_symmetry(const Context& ctx) {
  CheckResult r = start("eulerian.symmetry", span_range(1, ctx.n_max));
  for (unsigned n = 1; n <= ctx.n_max && r.passed; ++n) {
    const IntPolynomial a = eulerian_poly_frobenius(n);
    BigInt sum = 0;
    for (unsigned k = 1; k <= n; ++k) {
      sum += a.coeff(k);
      if (a.coeff(k) != a.coeff(n + 1 - k)) {
        fail(r, {n, static_cast<long>(k)}, "A(n,k) != A(n,n+1-k)");
        break;
      }
    }
    if (r.passed && sum != factorial(n)) fail(r, {n, 0}, "coefficients do not sum to n!");
  }
  return r;
}

CheckResult check_stirling(const Context& ctx) {
  CheckResult r = start("stirling.recurrence", span_range(1, ctx.n_max));
  for (unsigned n = 1; n <= ctx.n_max && r.passed; ++n)
    for (unsigned k = 1; k <= n; ++k) {
      const BigInt lhs = stirling2(n, k);
      const BigInt rhs = k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
      if (lhs != rhs) {
        fail(r, {n, static_cast<long>(k)}, "S" + cell_text(n, k) + " = " + lhs.get_str() + " but k S(n-1,k) + S(n-1,k-1) = " + rhs.get_str());
        break;
      }
    }
  return r;
}

CheckResult check_tangent_parity(const Context& ctx) {
  CheckResult r = start("tangent.parity", span_range(1, ctx.n_max));
  for (unsigned n = 1; n <= ctx.n_max && r.passed; ++n)
    for (unsigned k = 1; k <= n; ++k) {
      if ((n - k) % 2 == 1 && ctx.tangent.at(n, k) != 0) {
        fail(r, {n, static_cast<long>(k)}, "T(n,k) nonzero with n-k odd");
        break;
      }
      if (k == n && ctx.tangent.at(n, k) != factorial(n)) {
        fail(r, {n, static_cast<long>(k)}, "T(k,k) != k!");
        break;
      }
    }
  return r;
}

CheckResult check_deriv_triple(const Context& ctx) {
  CheckResult r = start("derivpoly.triple", span_range(1, ctx.n_max));
  std::vector<BigInt> row(ctx.family.p_table.row(0).begin(), ctx.family.p_table.row(0).end());
  for (unsigned n = 1; n <= ctx.n_max && r.passed; ++n) {
    row = p_recurrence_step(row, n);
    const IntPolynomial& p = ctx.family.poly(n);
    const IntPolynomial cv = cvijovic_poly(n, ctx.tangent);
    for (long k = 0; k <= static_cast<long>(n) + 1; ++k) {
      const BigInt want = p.coeff(static_cast<std::size_t>(k));
      if (row[static_cast<std::size_t>(k)] != want) {
        fail(r, {n, k}, "p-recurrence gives " + row[static_cast<std::size_t>(k)].get_str() + ", P_n recurrence " + want.get_str());
        break;
      }
      if (cv.coeff(static_cast<std::size_t>(k)) != want) {
        fail(r, {n, k}, "tangent-number route gives " + cv.coeff(static_cast<std::size_t>(k)).get_str() + ", P_n recurrence " + want.get_str());
        break;
      }
    }
    if (r.passed && (p.degree() != static_cast<long>(n) + 1 || cv.degree() != p.degree()))
      fail(r, {n, p.degree()}, "degree of P_n is not n+1");
  }
  return r;
}

CheckResult check_deriv_closed_form(const Context& ctx) {
  CheckResult r = start("derivpoly.closed_form", span_range(1, ctx.n_max));
  for (unsigned n = 1; n <= ctx.n_max && r.passed; ++n)
    for (unsigned k = 0; k <= (n + 1) / 2; ++k) {
      const long j = static_cast<long>(n) - 2 * static_cast<long>(k) + 1;
      const BigInt got = p_coeff_closed_form(n, k);
      if (got != ctx.family.p(n, j)) {
        fail(r, {n, j}, "closed form p" + cell_text(n, j) + " = " + got.get_str() + ", recurrence " + ctx.family.p(n, j).get_str());
        break;
      }
    }
  return r;
}

CheckResult check_deriv_parity(const Context& ctx) {
  CheckResult r = start("derivpoly.parity_reflection", span_range(0, ctx.n_max));
  for (unsigned n = 0; n <= ctx.n_max && r.passed; ++n) {
    const IntPolynomial& p = ctx.family.poly(n);
    for (long j = 0; j <= p.degree(); ++j) {
      const BigInt c = p.coeff(static_cast<std::size_t>(j));
      if ((j - static_cast<long>(n) - 1) % 2 != 0 && c != 0) {
        fail(r, {n, j}, "nonzero coefficient with j != n+1 (mod 2)");
        break;
      }
      if (c < 0) {
        fail(r, {n, j}, "negative coefficient");
        break;
      }
    }
    if (!r.passed) break;
    // P_n(-x) = (-1)^{n+1} P_n(x), coefficientwise.
    std::vector<BigInt> reflected = p.coeffs();
    for (std::size_t j = 1; j < reflected.size(); j += 2) reflected[j] = -reflected[j];
    IntPolynomial lhs(std::move(reflected));
    IntPolynomial rhs = (n % 2 == 0) ? -p : p;
    if (lhs != rhs) fail(r, {n, -1}, "P_n(-x) != (-1)^{n+1} P_n(x)");
  }
  return r;
}

CheckResult check_companion(const Context& ctx) {
  CheckResult r = start("derivpoly.companion", span_range(1, ctx.n_max));
  for (unsigned n = 1; n <= ctx.n_max && r.passed; ++n) {
    const IntPolynomial a = a_poly(n);
    std::vector<BigInt> expected(n + 2);
    for (unsigned k = 0; k <= (n + 1) / 2; ++k) {
      const long j = static_cast<long>(n) - 2 * static_cast<long>(k) + 1;
      const BigInt p = ctx.family.p(n, j);
      expected[static_cast<std::size_t>(j)] = (k % 2 == 1) ? BigInt(-p) : p;
    }
    const IntPolynomial want(std::move(expected));
    if (a != want) {
      for (long j = 0; j <= std::max(a.degree(), want.degree()); ++j)
        if (a.coeff(static_cast<std::size_t>(j)) != want.coeff(static_cast<std::size_t>(j))) {
          fail(r, {n, j}, "a_n coefficient differs from signed p(n,j)");
          break;
        }
    }
  }
  return r;
}

CheckResult check_knuth(const Context& ctx) {
  CheckResult r = start("knuth.identity", span_range(2, ctx.n_max));
  for (unsigned n = 2; n <= ctx.n_max; ++n) {
    const IntPolynomial a = eulerian_poly_frobenius(n);
    std::vector<BigInt> a_row;
    for (unsigned k = 1; k <= n; ++k) a_row.push_back(a.coeff(k));
    const IntPolynomial residual = knuth_identity_residual(n, ctx.reference.row(n), a_row);
    if (!residual.is_zero()) {
      fail(r, {n, -1}, "nonzero residual in w: " + to_string(residual, 'w'));
      break;
    }
  }
  return r;
}

CheckResult check_bona_ehrenborg(const Context& ctx) {
  CheckResult r = start("bona_ehrenborg", span_range(3, ctx.n_max));
  std::vector<unsigned> strict;
  for (unsigned n = 3; n <= ctx.n_max; ++n) {
    const unsigned m = bona_ehrenborg_multiplicity(n, ctx.reference);
    const unsigned bound = n / 2 - 1;
    if (m < bound) {
      fail(r, {n, -1}, "multiplicity " + std::to_string(m) + " below floor(n/2)-1 = " + std::to_string(bound));
      return r;
    }
    if (m > bound) strict.push_back(n);
  }
  if (ctx.n_max < 3) return r;
  if (strict.empty()) {
    r.detail = "multiplicity equals floor(n/2)-1 for every n";
  } else {
    std::ostringstream os;
    os << "multiplicity exceeds floor(n/2)-1 at n =";
    for (unsigned n : strict) os << ' ' << n;
    r.detail = os.str();
  }
  return r;
}

CheckResult check_canfield_wilf_k2(const Context& ctx) {
  CheckResult r = start("canfield_wilf.k2", span_range(3, ctx.n_max));
  for (unsigned n = 3; n <= ctx.n_max; ++n) {
    const BigInt residual = canfield_wilf_k2_residual(n, ctx.reference);
    if (residual != 0) {
      fail(r, {n, 2}, "R(n,2) - (2^n - 4) = " + residual.get_str());
      break;
    }
  }
  return r;
}

CheckResult check_canfield_wilf_ratio(const Context& ctx) {
  CheckResult r = start("canfield_wilf.ratio", "n=" + std::to_string(kCanfieldWilfN) + ", k=3..4");
  const RunsTriangle runs =
      ctx.n_max >= kCanfieldWilfN ? ctx.reference : r_table_recurrence(kCanfieldWilfN);
  std::ostringstream os;
  for (unsigned k = 3; k <= 4; ++k) {
    const Rational ratio = canfield_wilf_ratio(kCanfieldWilfN, k, runs);
    const Rational gap = abs(ratio - 1);
    os << (k == 3 ? "" : "; ") << "k=" << k << ": |ratio-1| ~ " << gap.get_d();
    if (gap > kCanfieldWilfBand) fail(r, {kCanfieldWilfN, static_cast<long>(k)}, "ratio outside [1-1e-3, 1+1e-3]");
  }
  if (r.passed) r.detail = os.str();
  return r;
}

using CheckFn = CheckResult (*)(const Context&);

struct Registered {
  const char* name;
  CheckFn fn;
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> checks = {
      {"runs.poly_recurrence", check_poly_recurrence},
      {"runs.theorem", check_theorem},
      {"runs.explicit", check_explicit},
      {"runs.stanley", check_stanley},
      {"runs.oracle", check_runs_oracle},
      {"runs.row_sums", check_row_sums},
      {"runs.boundary", check_boundary},
      {"eulerian.oracle", check_eulerian_oracle},
      {"eulerian.symmetry", check_eulerian_symmetry},
      {"stirling.recurrence", check_stirling},
      {"tangent.parity", check_tangent_parity},
      {"derivpoly.triple", check_deriv_triple},
      {"derivpoly.closed_form", check_deriv_closed_form},
      {"derivpoly.parity_reflection", check_deriv_parity},
      {"derivpoly.companion", check_companion},
      {"knuth.identity", check_knuth},
      {"bona_ehrenborg", check_bona_ehrenborg},
      {"canfield_wilf.k2", check_canfield_wilf_k2},
      {"canfield_wilf.ratio", check_canfield_wilf_ratio},
  };
  return checks;
}

bool selected(const std::string& name, const std::vector<std::string>& filters) {
  if (filters.empty()) return true;
  return std::any_of(filters.begin(), filters.end(), [&](const std::string& f) {
    return name == f || (name.size() > f.size() && name.compare(0, f.size(), f) == 0 && name[f.size()] == '.');
  });
}

CheckResult run_guarded(const Registered& check, const Context& ctx) {
  try {
    return check.fn(ctx);
  } catch (const ExactnessError& e) {
    CheckResult r = start(check.name, "n/a");
    r.passed = false;
    r.detail = std::string("exactness tripwire: ") + e.what();
    r.tripwires = 1;
    return r;
  } catch (const Error& e) {
    CheckResult r = start(check.name, "n/a");
    r.passed = false;
    r.detail = std::string("error: ") + e.what();
    return r;
  }
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

unsigned VerificationReport::tripwires() const {
  unsigned total = 0;
  for (const auto& c : checks) total += c.tripwires;
  return total;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["overall"] = passed() ? "pass" : "fail";
  doc["n_max"] = n_max;
  doc["oracle_max"] = oracle_max;
  doc["exactness_tripwires"] = tripwires();
  auto& list = doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["range"] = c.range;
    entry["status"] = c.passed ? "pass" : "fail";
    if (c.first_failure)
      entry["first_failure"] = {{"n", c.first_failure->n}, {"k", c.first_failure->k}};
    else
      entry["first_failure"] = nullptr;
    entry["detail"] = c.detail;
    list.push_back(std::move(entry));
  }
  return doc.dump(2);
}

const std::vector<std::string>& available_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& c : registry()) out.emplace_back(c.name);
    return out;
  }();
  return names;
}

VerificationReport verify_all(unsigned n_max, unsigned oracle_max, const VerifyOptions& options) {
  if (n_max < 2) throw DomainError("verify_all: n_max must be >= 2");
  for (const auto& f : options.checks) {
    const bool known = std::any_of(registry().begin(), registry().end(),
                                   [&](const Registered& c) { return selected(c.name, {f}); });
    if (!known) throw DomainError("unknown check '" + f + "'");
  }
  if (oracle_max > options.oracle_cap) throw CapExceeded(oracle_max, options.oracle_cap);

  Context ctx{n_max, oracle_max, options.oracle_cap, r_table_recurrence(n_max), derivative_polys(n_max)};
  ctx.tangent = tangent_numbers(n_max + 1);
  if (options.inject_fault) {
    const Cell c = *options.inject_fault;
    if (c.k < 1) throw DomainError("inject_fault: k must be >= 1");
    ctx.reference.table().cell(c.n, static_cast<unsigned>(c.k)) += 1;
  }

  std::vector<const Registered*> chosen;
  for (const auto& c : registry())
    if (selected(c.name, options.checks)) chosen.push_back(&c);

  // Each check reads the shared context only; results are collected in
  // registration order whatever order the workers finish in.
  std::vector<std::future<CheckResult>> jobs;
  const auto policy = options.parallel ? std::launch::async : std::launch::deferred;
  for (const Registered* c : chosen) jobs.push_back(std::async(policy, run_guarded, std::cref(*c), std::cref(ctx)));

  VerificationReport report;
  report.n_max = n_max;
  report.oracle_max = oracle_max;
  for (auto& job : jobs) report.checks.push_back(job.get());
  return report;
}

}  // namespace altruns
