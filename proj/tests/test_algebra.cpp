#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "aspen/algebra.hpp"
#include "aspen/weight_poly.hpp"

using aspen::SkewMatrix;
using aspen::WeightPolynomial;

namespace {

// Leibniz expansion over all permutations, independent of the library's
// cofactor and Bareiss routines.
WeightPolynomial det_leibniz(const aspen::PolyMatrix& m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    WeightPolynomial total;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        WeightPolynomial term(1);
        for (int i = 0; i < n; ++i) term *= m[i][perm[i]];
        if (inversions % 2)
            total -= term;
        else
            total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

WeightPolynomial random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 2);
    std::uniform_int_distribution<int> coeff(-3, 3);
    WeightPolynomial p;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) p += WeightPolynomial::monomial(i, coeff(rng));
    return p;
}

aspen::PolyMatrix random_matrix(int n, std::mt19937& rng) {
    aspen::PolyMatrix m(n, std::vector<WeightPolynomial>(n));
    for (auto& row : m)
        for (auto& cell : row) cell = random_poly(rng);
    return m;
}

SkewMatrix random_skew(int n, std::mt19937& rng) {
    SkewMatrix s(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s.set_upper(i, j, random_poly(rng));
    return s;
}

aspen::PolyMatrix skew_to_matrix(const SkewMatrix& s) {
    const int n = s.size();
    aspen::PolyMatrix m(n, std::vector<WeightPolynomial>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = s.at(i, j);
    return m;
}

}  // namespace

TEST_CASE("polynomial normalization and accessors") {
    WeightPolynomial zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero.coeff(0) == 0);
    CHECK(zero.coeff(5) == 0);
    CHECK(zero.to_string() == "0");

    WeightPolynomial p = WeightPolynomial::from_coeffs({1, 2, 2});
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 2);
    CHECK(p.coeff(2) == 2);
    CHECK(p.coeff(3) == 0);
    CHECK(p.to_string() == "1 + 2*t + 2*t^2");
    CHECK(p.eval(1) == 5);
    CHECK(p.eval(2) == 13);
    CHECK(p.eval(-1) == 1);

    WeightPolynomial trailing = WeightPolynomial::from_coeffs({3, 0, 0});
    CHECK(trailing.degree() == 0);
    CHECK(trailing == WeightPolynomial(3));

    WeightPolynomial cancel = WeightPolynomial::from_coeffs({0, 1});
    cancel -= WeightPolynomial::monomial(1);
    CHECK(cancel.is_zero());
}

TEST_CASE("polynomial arithmetic") {
    WeightPolynomial t = WeightPolynomial::monomial(1);
    WeightPolynomial a = WeightPolynomial(1) + t;           // 1 + t
    WeightPolynomial b = WeightPolynomial(1) - t;           // 1 - t
    CHECK((a * b).to_string() == "1 - t^2");
    CHECK((a + b) == WeightPolynomial(2));
    CHECK((a - a).is_zero());
    CHECK((-a).coeff(0) == -1);
    CHECK((a * WeightPolynomial()).is_zero());

    WeightPolynomial sq = a * a;  // 1 + 2t + t^2
    CHECK(sq.coeff(1) == 2);
    CHECK(sq.shifted(2).degree() == 4);
    CHECK(sq.shifted(2).coeff(3) == 2);
    CHECK(sq.shifted(2).shifted(-2) == sq);
    CHECK_THROWS(t.shifted(-2));

    // reversed(d) maps sum c_i t^i to sum c_i t^(d-i).
    WeightPolynomial r = WeightPolynomial::from_coeffs({1, 2, 3});
    CHECK(r.reversed(2) == WeightPolynomial::from_coeffs({3, 2, 1}));
    CHECK(r.reversed(4) == WeightPolynomial::from_coeffs({0, 0, 3, 2, 1}));
    CHECK_THROWS(r.reversed(1));

    CHECK((sq * WeightPolynomial(2)).divided_exact(WeightPolynomial(2)) == sq);
    CHECK((a * b).divided_exact(a) == b);
    CHECK_THROWS_AS(WeightPolynomial(3).divided_exact(WeightPolynomial(2)), std::domain_error);
    CHECK_THROWS_AS(a.divided_exact(WeightPolynomial()), std::domain_error);
}

TEST_CASE("binomial coefficients") {
    CHECK(aspen::binom(0, 0) == 1);
    CHECK(aspen::binom(5, 2) == 10);
    CHECK(aspen::binom(5, 5) == 1);
    CHECK(aspen::binom(5, 6) == 0);
    CHECK(aspen::binom(5, -1) == 0);
    CHECK(aspen::binom(40, 20) == mpz_class("137846528820"));
    CHECK_THROWS(aspen::binom(-1, 0));

    // Pascal recurrence on a block that includes out-of-range arguments.
    for (long a = 1; a <= 12; ++a)
        for (long b = -2; b <= a + 2; ++b)
            CHECK(aspen::binom(a, b) == aspen::binom(a - 1, b - 1) + aspen::binom(a - 1, b));
}

TEST_CASE("determinant matches Leibniz expansion") {
    CHECK(aspen::det({}) == WeightPolynomial(1));
    CHECK(aspen::det({{WeightPolynomial(7)}}) == WeightPolynomial(7));

    std::mt19937 rng(20260814);
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
            aspen::PolyMatrix m = random_matrix(n, rng);
            CHECK(aspen::det(m) == det_leibniz(m));
        }
    }
}

TEST_CASE("determinant handles zero pivots") {
    WeightPolynomial z;
    WeightPolynomial one(1);
    // First pivot zero forces a row swap inside the fraction-free elimination.
    aspen::PolyMatrix m = {
        {z, one, z, z, z},
        {one, z, z, z, z},
        {z, z, one, z, z},
        {z, z, z, one, z},
        {z, z, z, z, one},
    };
    CHECK(aspen::det(m) == WeightPolynomial(-1));

    aspen::PolyMatrix singular(5, std::vector<WeightPolynomial>(5, one));
    CHECK(aspen::det(singular).is_zero());
}

TEST_CASE("pfaffian base cases") {
    CHECK(aspen::pfaffian(SkewMatrix(0)) == WeightPolynomial(1));

    SkewMatrix two(2);
    WeightPolynomial v = WeightPolynomial::from_coeffs({1, 1});
    two.set_upper(0, 1, v);
    CHECK(aspen::pfaffian(two) == v);
    CHECK(two.at(1, 0) == -v);
    CHECK(two.at(0, 0).is_zero());

    SkewMatrix four(4);
    WeightPolynomial a01(2), a02(3), a03(5), a12(7), a13(11), a23(13);
    four.set_upper(0, 1, a01);
    four.set_upper(0, 2, a02);
    four.set_upper(0, 3, a03);
    four.set_upper(1, 2, a12);
    four.set_upper(1, 3, a13);
    four.set_upper(2, 3, a23);
    CHECK(aspen::pfaffian(four) == a01 * a23 - a02 * a13 + a03 * a12);

    CHECK_THROWS_AS(aspen::pfaffian(SkewMatrix(3)), aspen::OddSizeError);
}

TEST_CASE("pfaffian squared equals determinant") {
    std::mt19937 rng(97);
    for (int n = 2; n <= 8; n += 2) {
        for (int trial = 0; trial < 6; ++trial) {
            SkewMatrix s = random_skew(n, rng);
            WeightPolynomial pf = aspen::pfaffian(s);
            CHECK(pf * pf == aspen::det(skew_to_matrix(s)));
        }
    }
}

TEST_CASE("integer factorization") {
    using aspen::factorize;
    CHECK(factorize(1).empty());
    CHECK(factorize(2) == std::vector<std::pair<mpz_class, int>>{{2, 1}});
    CHECK(factorize(12) == std::vector<std::pair<mpz_class, int>>{{2, 2}, {3, 1}});
    CHECK(factorize(429) == std::vector<std::pair<mpz_class, int>>{{3, 1}, {11, 1}, {13, 1}});
    CHECK(factorize(218348) == std::vector<std::pair<mpz_class, int>>{{2, 2}, {13, 2}, {17, 1}, {19, 1}});

    CHECK(aspen::format_factorization(1, "*") == "1");
    CHECK(aspen::format_factorization(0, "*") == "0");
    CHECK(aspen::format_factorization(28, "*") == "2^2*7");
    CHECK(aspen::format_factorization(28, "\xC2\xB7") == "2^2\xC2\xB7" "7");
    CHECK(aspen::format_factorization(37, "*") == "37");
}
