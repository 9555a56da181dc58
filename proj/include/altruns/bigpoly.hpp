#pragma once

// Exact scalar, polynomial and truncated EGF arithmetic.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "altruns/errors.hpp"

namespace altruns {

using BigInt = mpz_class;
/// Always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Dense univariate polynomial over BigInt; coefficient i multiplies x^i.
/// Trailing zeros are trimmed on construction so equality is structural and
/// the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(BigInt c);
  static IntPolynomial monomial(BigInt c, std::size_t power);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of x^i; zero past the degree.
  BigInt coeff(std::size_t i) const;

  BigInt evaluate(const BigInt& at) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& scalar);

  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
  friend IntPolynomial operator*(IntPolynomial lhs, const BigInt& rhs) { return lhs *= rhs; }
  friend IntPolynomial operator*(const BigInt& lhs, IntPolynomial rhs) { return rhs *= lhs; }
  friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_derivative(const IntPolynomial& a);

/// (x + sign)^m by binomial expansion. `sign` must be +1 or -1.
IntPolynomial shifted_power(int sign, unsigned m);

/// Coefficientwise a / 2^e. Throws NonDivisible naming the first coefficient
/// that leaves a remainder.
IntPolynomial exact_div_pow2(const IntPolynomial& a, unsigned e);

/// Largest m with (x+1)^m | a, by repeated synthetic division at -1.
unsigned root_multiplicity_at_minus_one(const IntPolynomial& a);

/// Ascending-power rendering with explicit signs, e.g. "2 - 8y^2 + 6y^4".
std::string to_string(const IntPolynomial& p, char var = 'x');
std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

/// Truncated series in the t^n/n! basis: coeff(n) is n! [t^n] f(t).
class EgfSeries {
 public:
  /// Zero series of the given truncation order.
  explicit EgfSeries(unsigned order);
  /// `coeffs.size()` must equal order + 1.
  EgfSeries(unsigned order, std::vector<Rational> coeffs);

  static EgfSeries one(unsigned order);

  unsigned order() const noexcept { return order_; }
  const Rational& coeff(unsigned n) const { return coeffs_.at(n); }
  Rational& coeff(unsigned n) { return coeffs_.at(n); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const EgfSeries& a, const EgfSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  unsigned order_;
  std::vector<Rational> coeffs_;
};

/// Binomial-convolution product; both operands must share a truncation order.
EgfSeries egf_mul(const EgfSeries& a, const EgfSeries& b);

}  // namespace altruns
