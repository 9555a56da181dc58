#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "altruns/bigpoly.hpp"

namespace altruns {

/// Ragged table of BigInt rows. Row n is stored at index n - row_offset and
/// its first entry is column col_offset. Lookups outside the stored cells
/// read as zero.
class TriangularTable {
 public:
  TriangularTable(unsigned row_offset, unsigned col_offset) : row_offset_(row_offset), col_offset_(col_offset) {}

  unsigned row_offset() const noexcept { return row_offset_; }
  unsigned col_offset() const noexcept { return col_offset_; }
  /// Index of the last stored row; meaningless when empty().
  unsigned last_row() const noexcept { return row_offset_ + static_cast<unsigned>(rows_.size()) - 1; }
  bool empty() const noexcept { return rows_.empty(); }
  std::size_t row_count() const noexcept { return rows_.size(); }

  /// Throws DomainError if row n is not stored.
  std::span<const BigInt> row(unsigned n) const;
  BigInt at(unsigned n, long k) const;

  void push_row(std::vector<BigInt> row) { rows_.push_back(std::move(row)); }
  /// Mutable access; used to build tables and to inject faults in tests.
  BigInt& cell(unsigned n, unsigned k);

  friend bool operator==(const TriangularTable&, const TriangularTable&) = default;

 private:
  unsigned row_offset_;
  unsigned col_offset_;
  std::vector<std::vector<BigInt>> rows_;
};

/// C(n, k), zero when k < 0, k > n or n < 0.
BigInt binomial(long n, long k);
BigInt factorial(unsigned n);

/// Second-kind Stirling number by the alternating-sum closed form.
/// Throws InexactDivision if the 1/k! step leaves a remainder.
BigInt stirling2(unsigned n, unsigned k);

/// A_n(x) = sum_i i! S(n,i) x^i (1-x)^(n-i); coefficient of x^k counts
/// permutations with k-1 descents.
IntPolynomial eulerian_poly_frobenius(unsigned n);

/// tan(t) as an EGF truncated at `order`, read off the derivative
/// polynomials: the n-th derivative of tan at 0 is P_n(0).
EgfSeries tan_series(unsigned order);

/// T(n,k) = n! [t^n] tan^k(t) for 1 <= k <= n <= n_max.
/// Row n holds columns 1..n.
TriangularTable tangent_numbers(unsigned n_max);

}  // namespace altruns
