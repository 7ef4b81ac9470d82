#pragma once

#include <vector>

#include "aspen/weight_poly.hpp"

namespace aspen {

// Closed-form counting machinery for (n,l,r)-pentagons. All results follow the
// convention that the coefficient of t^(p-1) counts objects with statistic p.

// Matrix entry used by the determinant sum and the Pfaffian, a polynomial in t:
//   t*C(j-1, e-j) - t*C(j-1, r-e-l+2n-1-j) + C(j-1, e-1-j) - C(j-1, r-e-l+2n-j).
WeightPolynomial formula_entry(int n, int l, int r, int e, int j);

// Sum over 1 <= e_1 < ... < e_(n-1) <= r+1 of det(formula_entry(e_i, j)).
// Valid on the whole margin range 0 <= l <= n-2 < r <= 2n-3.
WeightPolynomial detsum_genpoly(int n, int l, int r);

// One summand of detsum_genpoly: the determinant for a single ascending
// endpoint vector 1 <= e_1 < ... < e_(n-1) <= r+1. For l + r < 2n - 2 and
// r - l > n - 3 it equals the weight sum of the path tuples with exactly
// these endpoints; outside that window only the sum over all vectors is
// meaningful and individual determinants may have negative coefficients.
WeightPolynomial endpoint_det(int n, int l, int r, const std::vector<int>& endpoints);

// Antisymmetrised two-point sum over 1 <= e_1 < e_2 <= r+1.
WeightPolynomial pair_gf(int n, int l, int r, int i, int j);
// One-point sum over 1 <= e <= r+1.
WeightPolynomial single_gf(int n, int l, int r, int j);

// Pfaffian form of the generating function; requires the theorem range
// l+r < 2n-2 and r-l > n-3 on top of the margin range. Odd n uses the
// (n-1)x(n-1) pair matrix, even n appends a final column of one-point sums.
WeightPolynomial pfaffian_genpoly(int n, int l, int r);

// Constant-term evaluation by explicit polynomial expansion; exponential in n,
// supported for n <= 4 as an independent oracle.
WeightPolynomial ct_genpoly(int n, int l, int r);

}  // namespace aspen
