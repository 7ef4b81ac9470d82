#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aspen/weight_poly.hpp"

namespace aspen {

// Binomial coefficient with the convention used throughout the formulas:
// zero whenever b < 0 or b > a. a must be non-negative.
mpz_class binom(long a, long b);

using PolyMatrix = std::vector<std::vector<WeightPolynomial>>;

// Exact determinant over the polynomial ring. Sizes up to 4 expand by
// cofactors; larger sizes run fraction-free (Bareiss) elimination with row
// pivoting, whose divisions are exact by construction. Size 0 yields 1.
WeightPolynomial det(PolyMatrix m);

struct OddSizeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Skew-symmetric matrix storing the strict upper triangle; the diagonal is
// zero and the lower triangle is implied.
class SkewMatrix {
public:
    explicit SkewMatrix(int size);

    int size() const { return size_; }
    // Signed entry (i, j), 0-based.
    WeightPolynomial at(int i, int j) const;
    const WeightPolynomial& upper(int i, int j) const;  // requires i < j
    void set_upper(int i, int j, WeightPolynomial v);   // requires i < j

private:
    int size_;
    std::vector<WeightPolynomial> up_;
    size_t idx(int i, int j) const;
};

// Pfaffian by expansion along the first remaining index, memoized on index
// subsets. Empty matrix yields 1; odd sizes throw OddSizeError.
WeightPolynomial pfaffian(const SkewMatrix& a);

// Prime factorization by trial division, ascending primes with exponents.
// factorize(1) is empty; v must be >= 1.
std::vector<std::pair<mpz_class, int>> factorize(const mpz_class& v);

// "2^2*7" with sep="*", "2^2·7" with sep="·"; "1" for the empty
// factorization and "0" for zero (by convention, zero has no factorization).
std::string format_factorization(const mpz_class& v, const std::string& sep);

}  // namespace aspen
