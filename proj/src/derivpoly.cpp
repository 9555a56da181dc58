#include "altruns/derivpoly.hpp"

#include <string>

namespace altruns {

DerivPolyFamily derivative_polys(unsigned n_max) {
  DerivPolyFamily family;
  family.polys.reserve(n_max + 1);
  const IntPolynomial one_plus_x2{1, 0, 1};
  family.polys.push_back(IntPolynomial{0, 1});
  for (unsigned n = 1; n <= n_max; ++n)
    family.polys.push_back(poly_mul(one_plus_x2, poly_derivative(family.polys.back())));

  for (unsigned n = 0; n <= n_max; ++n) {
    std::vector<BigInt> row(n + 2);
    const auto& c = family.polys[n].coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) row[k] = c[k];
    family.p_table.push_row(std::move(row));
  }
  return family;
}

std::vector<BigInt> p_recurrence_step(std::span<const BigInt> prev_row, unsigned n) {
  if (n < 1) throw DomainError("p_recurrence_step: n must be >= 1");
  if (prev_row.size() != n + 1) throw DomainError("p_recurrence_step: previous row must have n+1 entries");
  auto prev = [&](long k) -> BigInt {
    return (k < 0 || k >= static_cast<long>(prev_row.size())) ? BigInt(0) : prev_row[static_cast<std::size_t>(k)];
  };
  std::vector<BigInt> row(n + 2);
  for (long k = 0; k <= static_cast<long>(n) + 1; ++k) row[k] = (k + 1) * prev(k + 1) + (k - 1) * prev(k - 1);
  return row;
}

BigInt p_coeff_closed_form(unsigned n, unsigned k) {
  if (n < 1 || k > (n + 1) / 2)
    throw DomainError("p_coeff_closed_form: need n >= 1 and k <= floor((n+1)/2), got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k));
  const long lower = static_cast<long>(n) - 2 * static_cast<long>(k);
  BigInt sum = 0;
  // S(n,i) = 0 for i > n, so the sum stops at n.
  for (unsigned i = 1; i <= n; ++i) {
    BigInt term = factorial(i) * stirling2(n, i) * (binomial(i, lower) - binomial(i, lower + 1));
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), n - i);
    // (-1)^(i - n + k)
    if ((static_cast<long>(i) - static_cast<long>(n) + static_cast<long>(k)) % 2 != 0) term = -term;
    sum += term;
  }
  return sum;
}

IntPolynomial a_poly(unsigned n) {
  if (n < 1) throw DomainError("a_poly: n must be >= 1");
  IntPolynomial sum;
  IntPolynomial y_minus_1_pow{1};
  const IntPolynomial y_minus_1{-1, 1};
  for (unsigned i = 1; i <= n; ++i) {
    y_minus_1_pow = poly_mul(y_minus_1_pow, y_minus_1);
    BigInt weight = factorial(i) * stirling2(n, i);
    mpz_mul_2exp(weight.get_mpz_t(), weight.get_mpz_t(), n - i);
    sum += weight * y_minus_1_pow;
  }
  return poly_mul(IntPolynomial{1, 1}, sum);
}

IntPolynomial cvijovic_poly(unsigned n, const TriangularTable& tangent) {
  if (n < 1) throw DomainError("cvijovic_poly: n must be >= 1");
  if (tangent.empty() || tangent.last_row() < n + 1)
    throw DomainError("cvijovic_poly: tangent numbers must reach row n+1");
  std::vector<BigInt> coeffs(n + 2);
  coeffs[0] = tangent.at(n, 1);
  for (unsigned k = 1; k <= n + 1; ++k) {
    const BigInt t = tangent.at(n + 1, k);
    if (!mpz_divisible_ui_p(t.get_mpz_t(), k))
      throw InexactDivision("cvijovic_poly: T(" + std::to_string(n + 1) + "," + std::to_string(k) +
                            ") not divisible by " + std::to_string(k));
    coeffs[k] = t / k;
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial cvijovic_poly(unsigned n) { return cvijovic_poly(n, tangent_numbers(n + 1)); }

}  // namespace altruns
