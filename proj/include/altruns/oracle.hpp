#pragma once

// Brute-force ground truth by exhaustive enumeration of S_n.

#include <vector>

#include "altruns/sequences.hpp"

namespace altruns {

/// Default enumeration ceiling: 9! = 362,880 permutations.
inline constexpr unsigned kDefaultOracleCap = 9;
/// Ceiling reachable only with an explicit override.
inline constexpr unsigned kDefaultOracleHardCap = 11;

/// A bijection on {1..n}, n >= 1.
class Permutation {
 public:
  /// Throws DomainError unless `values` is a permutation of 1..size.
  explicit Permutation(std::vector<unsigned> values);

  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<unsigned>& values() const noexcept { return values_; }
  unsigned operator[](std::size_t i) const { return values_[i]; }

  Permutation reversed() const;
  /// i -> n + 1 - i.
  Permutation complemented() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<unsigned> values_;
};

/// 1 + number of interior direction changes. Throws DomainError for n = 1.
unsigned count_runs(const Permutation& p);
unsigned count_descents(const Permutation& p);

/// Row n (2 <= n <= n_max) holds counts for k = 1..n-1 runs.
/// Throws CapExceeded when n_max > cap.
TriangularTable runs_triangle_oracle(unsigned n_max, unsigned cap = kDefaultOracleCap);

/// Row n (1 <= n <= n_max) holds counts for k = 1..n, bucketed by 1 + descents.
TriangularTable eulerian_triangle_oracle(unsigned n_max, unsigned cap = kDefaultOracleCap);

}  // namespace altruns
