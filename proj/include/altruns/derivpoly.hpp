#pragma once

// Derivative polynomials of the tangent: P_n(tan θ) = d^n/dθ^n tan θ.
//
// Four independent routes to the same coefficients live here:
//   derivative_polys    P_{n+1} = (1 + x^2) P_n'
//   p_recurrence_step   p(n,k) = (k+1) p(n-1,k+1) + (k-1) p(n-1,k-1)
//   p_coeff_closed_form alternating Stirling sum
//   cvijovic_poly       rebuilt from order-k tangent numbers
// The companion a_n(y) is expanded directly from its Stirling form; its
// coefficients equal the p(n,·) values with alternating signs.

#include <span>
#include <vector>

#include "altruns/bigpoly.hpp"
#include "altruns/sequences.hpp"

namespace altruns {

struct DerivPolyFamily {
  std::vector<IntPolynomial> polys;  // P_0 .. P_N
  TriangularTable p_table{0, 0};     // row n holds p(n,0) .. p(n,n+1)

  unsigned max_n() const noexcept { return static_cast<unsigned>(polys.size()) - 1; }
  const IntPolynomial& poly(unsigned n) const { return polys.at(n); }
  /// p(n,k); zero for k outside [0, n+1].
  BigInt p(unsigned n, long k) const { return p_table.at(n, k); }
};

DerivPolyFamily derivative_polys(unsigned n_max);

/// Row n of the p-triangle (length n+2) from row n-1 (length n+1).
std::vector<BigInt> p_recurrence_step(std::span<const BigInt> prev_row, unsigned n);

/// p(n, n-2k+1) for n >= 1 and 0 <= k <= floor((n+1)/2).
BigInt p_coeff_closed_form(unsigned n, unsigned k);

/// a_n(y) = (y+1) sum_{i=1}^n i! S(n,i) 2^(n-i) (y-1)^i.
IntPolynomial a_poly(unsigned n);

/// P_n from tangent numbers: T(n,1) + sum_{k=1}^{n+1} T(n+1,k)/k x^k.
/// `tangent` must reach row n+1.
IntPolynomial cvijovic_poly(unsigned n, const TriangularTable& tangent);
IntPolynomial cvijovic_poly(unsigned n);

}  // namespace altruns
