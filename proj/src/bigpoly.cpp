#include "altruns/bigpoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace altruns {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c)}); }

IntPolynomial IntPolynomial::monomial(BigInt c, std::size_t power) {
  std::vector<BigInt> coeffs(power + 1);
  coeffs[power] = std::move(c);
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt IntPolynomial::evaluate(const BigInt& at) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) { return poly_mul(lhs, rhs); }

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<BigInt> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] += ac[i] * bc[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_derivative(const IntPolynomial& a) {
  const auto& c = a.coeffs();
  if (c.size() <= 1) return {};
  std::vector<BigInt> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial shifted_power(int sign, unsigned m) {
  if (sign != 1 && sign != -1) throw DomainError("shifted_power: sign must be +1 or -1");
  // (x + s)^m = sum_i C(m, i) s^(m-i) x^i
  std::vector<BigInt> coeffs(m + 1);
  BigInt binom = 1;
  for (unsigned i = 0; i <= m; ++i) {
    coeffs[i] = (sign < 0 && (m - i) % 2 == 1) ? BigInt(-binom) : binom;
    binom = binom * (m - i) / (i + 1);
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial exact_div_pow2(const IntPolynomial& a, unsigned e) {
  std::vector<BigInt> out = a.coeffs();
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!mpz_divisible_2exp_p(out[i].get_mpz_t(), e)) throw NonDivisible(i);
    mpz_tdiv_q_2exp(out[i].get_mpz_t(), out[i].get_mpz_t(), e);
  }
  return IntPolynomial(std::move(out));
}

unsigned root_multiplicity_at_minus_one(const IntPolynomial& a) {
  if (a.is_zero()) throw ZeroPolynomial();
  std::vector<BigInt> c = a.coeffs();
  unsigned m = 0;
  while (c.size() > 1) {
    // Synthetic division by (x + 1), high degree first.
    std::vector<BigInt> q(c.size() - 1);
    BigInt carry = 0;
    for (std::size_t i = c.size() - 1; i >= 1; --i) {
      carry = c[i] - carry;
      q[i - 1] = carry;
    }
    if (c[0] - carry != 0) break;
    c = std::move(q);
    ++m;
  }
  return m;
}

std::string to_string(const IntPolynomial& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    BigInt mag = abs(c[i]);
    if (first) {
      if (c[i] < 0) os << '-';
    } else {
      os << (c[i] < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << to_string(p); }

EgfSeries::EgfSeries(unsigned order) : order_(order), coeffs_(order + 1) {}

EgfSeries::EgfSeries(unsigned order, std::vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(order) + 1)
    throw DomainError("EgfSeries: coefficient count must be order + 1");
}

EgfSeries EgfSeries::one(unsigned order) {
  EgfSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

EgfSeries egf_mul(const EgfSeries& a, const EgfSeries& b) {
  if (a.order() != b.order()) throw OrderMismatch("egf_mul: truncation orders differ");
  const unsigned order = a.order();
  EgfSeries out(order);
  for (unsigned n = 0; n <= order; ++n) {
    Rational acc = 0;
    BigInt binom = 1;
    for (unsigned j = 0; j <= n; ++j) {
      if (a.coeff(j) != 0 && b.coeff(n - j) != 0) acc += Rational(binom) * a.coeff(j) * b.coeff(n - j);
      binom = binom * (n - j) / (j + 1);
    }
    out.coeff(n) = acc;
  }
  return out;
}

}  // namespace altruns
