#include "altruns/sequences.hpp"

#include <string>

#include "altruns/derivpoly.hpp"

namespace altruns {

std::span<const BigInt> TriangularTable::row(unsigned n) const {
  if (n < row_offset_ || n - row_offset_ >= rows_.size())
    throw DomainError("row " + std::to_string(n) + " is not stored in this table");
  return rows_[n - row_offset_];
}

BigInt TriangularTable::at(unsigned n, long k) const {
  if (n < row_offset_ || n - row_offset_ >= rows_.size()) return 0;
  const auto& r = rows_[n - row_offset_];
  const long idx = k - static_cast<long>(col_offset_);
  if (idx < 0 || idx >= static_cast<long>(r.size())) return 0;
  return r[static_cast<std::size_t>(idx)];
}

BigInt& TriangularTable::cell(unsigned n, unsigned k) {
  if (n < row_offset_ || n - row_offset_ >= rows_.size() || k < col_offset_ ||
      k - col_offset_ >= rows_[n - row_offset_].size())
    throw DomainError("cell (" + std::to_string(n) + "," + std::to_string(k) + ") is not stored");
  return rows_[n - row_offset_][k - col_offset_];
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt stirling2(unsigned n, unsigned k) {
  BigInt sum = 0;
  for (unsigned r = 0; r <= k; ++r) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), r, n);
    BigInt term = binomial(k, r) * power;
    if ((k - r) % 2 == 1)
      sum -= term;
    else
      sum += term;
  }
  const BigInt kfact = factorial(k);
  if (!mpz_divisible_p(sum.get_mpz_t(), kfact.get_mpz_t()))
    throw InexactDivision("stirling2(" + std::to_string(n) + "," + std::to_string(k) + "): sum not divisible by k!");
  return sum / kfact;
}

IntPolynomial eulerian_poly_frobenius(unsigned n) {
  if (n < 1) throw DomainError("eulerian_poly_frobenius: n must be >= 1");
  const IntPolynomial one_minus_x{1, -1};
  IntPolynomial out;
  // Accumulate from i = n down so (1-x)^(n-i) grows by one factor per step.
  IntPolynomial one_minus_x_pow{1};
  for (unsigned i = n; i >= 1; --i) {
    const BigInt weight = factorial(i) * stirling2(n, i);
    out += weight * poly_mul(IntPolynomial::monomial(1, i), one_minus_x_pow);
    one_minus_x_pow = poly_mul(one_minus_x_pow, one_minus_x);
  }
  return out;
}

EgfSeries tan_series(unsigned order) {
  const DerivPolyFamily family = derivative_polys(order);
  EgfSeries s(order);
  for (unsigned n = 0; n <= order; ++n) s.coeff(n) = family.poly(n).coeff(0);
  return s;
}

TriangularTable tangent_numbers(unsigned n_max) {
  if (n_max < 1) throw DomainError("tangent_numbers: n_max must be >= 1");
  const EgfSeries tan = tan_series(n_max);
  TriangularTable table(1, 1);
  for (unsigned n = 1; n <= n_max; ++n) table.push_row(std::vector<BigInt>(n));

  EgfSeries power = tan;
  for (unsigned k = 1; k <= n_max; ++k) {
    if (k > 1) power = egf_mul(power, tan);
    for (unsigned n = k; n <= n_max; ++n) {
      const Rational& c = power.coeff(n);
      if (c.get_den() != 1) throw NonInteger("tangent number T(" + std::to_string(n) + "," + std::to_string(k) + ") is not integral");
      table.cell(n, k) = c.get_num();
    }
  }
  return table;
}

}  // namespace altruns
