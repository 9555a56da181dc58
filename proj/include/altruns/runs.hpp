#pragma once

// R(n,k): permutations of [n] with k alternating runs, by five independent
// routes, plus the identity and divisibility checks built on them.

#include <span>
#include <vector>

#include "altruns/bigpoly.hpp"
#include "altruns/derivpoly.hpp"
#include "altruns/sequences.hpp"

namespace altruns {

/// R(n,k) for 2 <= n <= n_max, 1 <= k <= n-1, plus the seed R(1,0) = 1
/// which is reachable only through at().
class RunsTriangle {
 public:
  RunsTriangle() = default;
  /// `rows` must start at row 2, column 1.
  explicit RunsTriangle(TriangularTable rows);

  /// 1 when only the seed row exists.
  unsigned n_max() const noexcept { return rows_.empty() ? 1 : rows_.last_row(); }
  /// Row n >= 2 as R(n,1) .. R(n,n-1).
  std::span<const BigInt> row(unsigned n) const { return rows_.row(n); }
  BigInt at(unsigned n, long k) const;

  const TriangularTable& table() const noexcept { return rows_; }
  TriangularTable& table() noexcept { return rows_; }

  friend bool operator==(const RunsTriangle&, const RunsTriangle&) = default;

 private:
  TriangularTable rows_{2, 1};
};

struct RunsPoly {
  unsigned n = 0;
  IntPolynomial poly;

  friend bool operator==(const RunsPoly&, const RunsPoly&) = default;
};

/// Method 1: R(n,k) = k R(n-1,k) + 2 R(n-1,k-1) + (n-k) R(n-1,k-2).
RunsTriangle r_table_recurrence(unsigned n_max);

/// Method 2: R_{m+2} = x(mx+2) R_{m+1} + x(1-x^2) R_{m+1}', seeded with
/// R_1 = 1, R_2 = 2x, R_3 = 2x + 4x^2.
RunsPoly r_poly_recurrence(unsigned n);
/// R_1 .. R_{n_max} in one pass.
std::vector<RunsPoly> r_poly_recurrence_sequence(unsigned n_max);

/// Method 3: 2^{-(n-1)} sum_k p(n,n-2k+1) (x+1)^{n-k-1} (x-1)^k.
/// `family` must reach P_n.
RunsPoly r_poly_theorem(unsigned n, const DerivPolyFamily& family);
RunsPoly r_poly_theorem(unsigned n);

/// Coefficient of x^s in (x+1)^{n-k-1} (x-1)^k as a signed binomial sum.
BigInt e_coeff(unsigned n, unsigned k, unsigned s);

/// Method 4: 2^{-(n-1)} sum_k p(n,n-2k+1) E(n,k,s).
BigInt r_explicit(unsigned n, unsigned s, const DerivPolyFamily& family);
BigInt r_explicit(unsigned n, unsigned s);

/// Method 5: the alternating double sum with weights z_0 = 2, z_i = 4,
/// evaluated in exact rationals and required to be integral.
BigInt r_stanley(unsigned n, unsigned k);

/// Denominator-cleared runs/Eulerian identity in the indeterminate w:
///   sum_s R(n,s) (1-w^2)^s (1+w^2)^{n-1-s}
///     - sum_k A(n,k) (1-w)^k (1+w)^{n+1-k}.
/// Substituting x = (1-w^2)/(1+w^2) gives (1+x)/2 = 1/(1+w^2) and
/// (1-x)/(1+x) = w^2, so multiplying R_n(x) = ((1+x)/2)^{n-1} (1+w)^{n+1}
/// A_n((1-w)/(1+w)) through by (1+w^2)^{n-1} yields the form above.
/// The identity holds iff the result is the zero polynomial.
IntPolynomial knuth_identity_residual(unsigned n, std::span<const BigInt> runs_row,
                                      std::span<const BigInt> eulerian_row);
IntPolynomial knuth_identity_residual(unsigned n);

/// Multiplicity of x = -1 as a root of R_n(x); at least floor(n/2) - 1.
unsigned bona_ehrenborg_multiplicity(unsigned n, const RunsTriangle& runs);
unsigned bona_ehrenborg_multiplicity(unsigned n);

/// (R(n,k) - k^n / 2^{k-2} + (k-1)^n / 2^{k-4}) / (k-2)^n for k >= 3.
Rational canfield_wilf_check(unsigned n, unsigned k, const RunsTriangle& runs);
Rational canfield_wilf_check(unsigned n, unsigned k);

/// R(n,k) 2^{k-2} / k^n, which tends to 1 as n grows for fixed k >= 2.
Rational canfield_wilf_ratio(unsigned n, unsigned k, const RunsTriangle& runs);

/// R(n,2) - (2^n - 4). At k = 2 the two leading terms are the whole
/// expansion, so this vanishes for every n >= 3.
BigInt canfield_wilf_k2_residual(unsigned n, const RunsTriangle& runs);

}  // namespace altruns
