#include "altruns/runs.hpp"

#include <string>
#include <utility>

namespace altruns {
namespace {

BigInt pow_ui(unsigned long base, unsigned long exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

/// 2^e for any signed e.
Rational pow2(long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

BigInt exact_shift_right(const BigInt& value, unsigned e, std::size_t index) {
  if (!mpz_divisible_2exp_p(value.get_mpz_t(), e)) throw NonDivisible(index);
  BigInt out;
  mpz_tdiv_q_2exp(out.get_mpz_t(), value.get_mpz_t(), e);
  return out;
}

void require_cell(unsigned n, unsigned k, const char* op) {
  if (n < 2 || k < 1 || k > n - 1)
    throw DomainError(std::string(op) + ": need n >= 2 and 1 <= k <= n-1, got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k));
}

}  // namespace

RunsTriangle::RunsTriangle(TriangularTable rows) : rows_(std::move(rows)) {
  if (rows_.row_offset() != 2 || rows_.col_offset() != 1)
    throw DomainError("RunsTriangle: table must start at row 2, column 1");
}

BigInt RunsTriangle::at(unsigned n, long k) const {
  if (n == 1) return k == 0 ? BigInt(1) : BigInt(0);
  return rows_.at(n, k);
}

RunsTriangle r_table_recurrence(unsigned n_max) {
  if (n_max < 1) throw DomainError("r_table_recurrence: n_max must be >= 1");
  RunsTriangle out;
  for (unsigned n = 2; n <= n_max; ++n) {
    std::vector<BigInt> row(n - 1);
    for (unsigned k = 1; k <= n - 1; ++k) {
      const long kk = k;
      row[k - 1] = k * out.at(n - 1, kk) + 2 * out.at(n - 1, kk - 1) + (n - k) * out.at(n - 1, kk - 2);
    }
    out.table().push_row(std::move(row));
  }
  return out;
}

std::vector<RunsPoly> r_poly_recurrence_sequence(unsigned n_max) {
  if (n_max < 1) throw DomainError("r_poly_recurrence: n must be >= 1");
  std::vector<RunsPoly> out;
  out.push_back({1, IntPolynomial{1}});
  if (n_max >= 2) out.push_back({2, IntPolynomial{0, 2}});
  if (n_max >= 3) out.push_back({3, IntPolynomial{0, 2, 4}});
  const IntPolynomial x_one_minus_x2{0, 1, 0, -1};
  for (unsigned n = 4; n <= n_max; ++n) {
    const long m = static_cast<long>(n) - 2;
    const IntPolynomial& prev = out.back().poly;
    const IntPolynomial lead{0, 2, m};  // x(mx + 2)
    out.push_back({n, poly_mul(lead, prev) + poly_mul(x_one_minus_x2, poly_derivative(prev))});
  }
  return out;
}

RunsPoly r_poly_recurrence(unsigned n) { return r_poly_recurrence_sequence(n).back(); }

RunsPoly r_poly_theorem(unsigned n, const DerivPolyFamily& family) {
  if (n < 2) throw DomainError("r_poly_theorem: n must be >= 2");
  if (family.polys.empty() || family.max_n() < n) throw DomainError("r_poly_theorem: family must reach P_n");
  IntPolynomial sum;
  for (unsigned k = 0; k <= (n + 1) / 2; ++k) {
    const BigInt coeff = family.p(n, static_cast<long>(n) - 2 * static_cast<long>(k) + 1);
    if (coeff == 0) continue;
    sum += coeff * poly_mul(shifted_power(+1, n - k - 1), shifted_power(-1, k));
  }
  return {n, exact_div_pow2(sum, n - 1)};
}

RunsPoly r_poly_theorem(unsigned n) { return r_poly_theorem(n, derivative_polys(n)); }

BigInt e_coeff(unsigned n, unsigned k, unsigned s) {
  BigInt sum = 0;
  const long top = static_cast<long>(n) - static_cast<long>(k) - 1;
  for (unsigned j = 0; j <= std::min(k, s); ++j) {
    BigInt term = binomial(top, static_cast<long>(s) - j) * binomial(k, j);
    if ((k - j) % 2 == 1)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

BigInt r_explicit(unsigned n, unsigned s, const DerivPolyFamily& family) {
  require_cell(n, s, "r_explicit");
  if (family.polys.empty() || family.max_n() < n) throw DomainError("r_explicit: family must reach P_n");
  BigInt sum = 0;
  for (unsigned k = 0; k <= (n + 1) / 2; ++k)
    sum += family.p(n, static_cast<long>(n) - 2 * static_cast<long>(k) + 1) * e_coeff(n, k, s);
  return exact_shift_right(sum, n - 1, s);
}

BigInt r_explicit(unsigned n, unsigned s) { return r_explicit(n, s, derivative_polys(n)); }

BigInt r_stanley(unsigned n, unsigned k) {
  require_cell(n, k, "r_stanley");
  Rational total = 0;
  for (unsigned i = 0; i <= k; ++i) {
    BigInt inner = 0;
    // r >= 0, m >= 0, r + 2m <= i, r = i (mod 2). For n >= 1 the r = 0 terms vanish.
    for (unsigned r = i % 2; r <= i; r += 2) {
      if (r == 0) continue;
      const BigInt r_pow = pow_ui(r, n);
      for (unsigned m = 0; r + 2 * m <= i; ++m) {
        BigInt term = binomial(i - m, (i + r) / 2) * binomial(n, m) * r_pow;
        mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), m);
        if (m % 2 == 1) term = -term;
        inner += term;
      }
    }
    if (inner == 0) continue;
    const long z = (k - i == 0) ? 2 : 4;
    Rational term = pow2(1 - static_cast<long>(i)) * Rational(BigInt(z) * inner);
    if ((k - i) % 2 == 1) term = -term;
    total += term;
  }
  if (total.get_den() != 1)
    throw NonInteger("r_stanley(" + std::to_string(n) + "," + std::to_string(k) + ") = " + total.get_str() +
                     " is not an integer");
  return total.get_num();
}

IntPolynomial knuth_identity_residual(unsigned n, std::span<const BigInt> runs_row,
                                      std::span<const BigInt> eulerian_row) {
  if (n < 2) throw DomainError("knuth_identity_residual: n must be >= 2");
  if (runs_row.size() != n - 1 || eulerian_row.size() != n)
    throw DomainError("knuth_identity_residual: expected n-1 runs entries and n Eulerian entries");
  const IntPolynomial one_minus_w2{1, 0, -1};
  const IntPolynomial one_plus_w2{1, 0, 1};
  const IntPolynomial one_minus_w{1, -1};
  const IntPolynomial one_plus_w{1, 1};

  auto power = [](const IntPolynomial& base, unsigned e) {
    IntPolynomial out{1};
    for (unsigned i = 0; i < e; ++i) out = poly_mul(out, base);
    return out;
  };

  IntPolynomial lhs;
  for (unsigned s = 1; s <= n - 1; ++s)
    lhs += runs_row[s - 1] * poly_mul(power(one_minus_w2, s), power(one_plus_w2, n - 1 - s));
  IntPolynomial rhs;
  for (unsigned k = 1; k <= n; ++k)
    rhs += eulerian_row[k - 1] * poly_mul(power(one_minus_w, k), power(one_plus_w, n + 1 - k));
  return lhs - rhs;
}

IntPolynomial knuth_identity_residual(unsigned n) {
  const RunsTriangle runs = r_table_recurrence(n);
  const IntPolynomial eulerian = eulerian_poly_frobenius(n);
  std::vector<BigInt> a_row(n);
  for (unsigned k = 1; k <= n; ++k) a_row[k - 1] = eulerian.coeff(k);
  return knuth_identity_residual(n, runs.row(n), a_row);
}

unsigned bona_ehrenborg_multiplicity(unsigned n, const RunsTriangle& runs) {
  if (n < 3) throw DomainError("bona_ehrenborg_multiplicity: n must be >= 3");
  const auto row = runs.row(n);
  std::vector<BigInt> coeffs(n);
  for (unsigned k = 1; k <= n - 1; ++k) coeffs[k] = row[k - 1];
  return root_multiplicity_at_minus_one(IntPolynomial(std::move(coeffs)));
}

unsigned bona_ehrenborg_multiplicity(unsigned n) { return bona_ehrenborg_multiplicity(n, r_table_recurrence(n)); }

Rational canfield_wilf_check(unsigned n, unsigned k, const RunsTriangle& runs) {
  if (k < 3) throw DomainError("canfield_wilf_check: k must be >= 3 (use canfield_wilf_k2_residual for k = 2)");
  require_cell(n, k, "canfield_wilf_check");
  const long kk = k;
  Rational remainder = Rational(runs.at(n, kk)) - Rational(pow_ui(k, n)) / pow2(kk - 2) +
                       Rational(pow_ui(k - 1, n)) / pow2(kk - 4);
  return remainder / Rational(pow_ui(k - 2, n));
}

Rational canfield_wilf_check(unsigned n, unsigned k) {
  if (k < 3) throw DomainError("canfield_wilf_check: k must be >= 3 (use canfield_wilf_k2_residual for k = 2)");
  require_cell(n, k, "canfield_wilf_check");
  return canfield_wilf_check(n, k, r_table_recurrence(n));
}

Rational canfield_wilf_ratio(unsigned n, unsigned k, const RunsTriangle& runs) {
  if (k < 2) throw DomainError("canfield_wilf_ratio: k must be >= 2");
  require_cell(n, k, "canfield_wilf_ratio");
  return Rational(runs.at(n, k)) * pow2(static_cast<long>(k) - 2) / Rational(pow_ui(k, n));
}

BigInt canfield_wilf_k2_residual(unsigned n, const RunsTriangle& runs) {
  if (n < 3) throw DomainError("canfield_wilf_k2_residual: n must be >= 3");
  BigInt expected = pow_ui(2, n) - 4;
  return runs.at(n, 2) - expected;
}

}  // namespace altruns
