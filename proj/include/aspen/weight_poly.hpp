#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace aspen {

// Univariate polynomial in the statistic variable t with arbitrary-precision
// integer coefficients. Coefficients are stored in ascending degree order and
// kept normalized: no trailing zero coefficients, so the zero polynomial is
// the empty vector and degree() == -1 for it.
class WeightPolynomial {
public:
    WeightPolynomial() = default;
    WeightPolynomial(long value);  // NOLINT(google-explicit-constructor)
    explicit WeightPolynomial(mpz_class value);

    static WeightPolynomial monomial(int degree, mpz_class coeff = 1);
    static WeightPolynomial from_coeffs(std::vector<mpz_class> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Coefficient of t^d; zero outside the stored range.
    const mpz_class& coeff(int d) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    mpz_class eval(const mpz_class& x) const;

    WeightPolynomial& operator+=(const WeightPolynomial& o);
    WeightPolynomial& operator-=(const WeightPolynomial& o);
    WeightPolynomial& operator*=(const WeightPolynomial& o);
    friend WeightPolynomial operator+(WeightPolynomial a, const WeightPolynomial& b) {
        a += b;
        return a;
    }
    friend WeightPolynomial operator-(WeightPolynomial a, const WeightPolynomial& b) {
        a -= b;
        return a;
    }
    friend WeightPolynomial operator*(const WeightPolynomial& a, const WeightPolynomial& b);
    WeightPolynomial operator-() const;
    bool operator==(const WeightPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const WeightPolynomial& o) const { return !(*this == o); }

    // Multiplies by t^by (by >= 0) or divides by t^-by; division that would
    // truncate a nonzero coefficient throws.
    WeightPolynomial shifted(int by) const;

    // Reverses coefficients within degrees 0..deg, i.e. t^deg * p(1/t).
    // Throws if degree() > deg.
    WeightPolynomial reversed(int deg) const;

    // Exact division: returns q with *this == q * d. Throws if d is zero or
    // the division leaves a remainder. Used by fraction-free elimination,
    // where divisibility is guaranteed.
    WeightPolynomial divided_exact(const WeightPolynomial& d) const;

    // Human-readable rendering, e.g. "1 + 2*t + 2*t^2"; "0" for zero.
    std::string to_string() const;
    // Ascending decimal coefficient strings for JSON output; {"0"} for zero.
    std::vector<std::string> coeff_strings() const;

private:
    std::vector<mpz_class> coeffs_;
    void trim();
};

}  // namespace aspen
