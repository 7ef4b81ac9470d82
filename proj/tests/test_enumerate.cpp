#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "aspen/enumerate.hpp"
#include "aspen/objects.hpp"
#include "aspen/serialize.hpp"

using namespace aspen;

TEST_CASE("triangle counts match the closed product form") {
    const std::vector<long> expected = {1, 2, 7, 42, 429, 7436, 218348};
    for (int n = 1; n <= 7; ++n) {
        CHECK(ast_count_product_formula(n) == expected[static_cast<size_t>(n - 1)]);
        if (n <= 6) CHECK(ast_count(n) == expected[static_cast<size_t>(n - 1)]);
    }
    CHECK(ast_count(7, 4) == 218348);
    CHECK_THROWS(ast_count(0));
}

TEST_CASE("the seven triangles of order 3") {
    auto all = enumerate_asts(3);
    REQUIRE(all.size() == 7);
    // Lexicographically first and last in entry order -1 < 0 < 1.
    CHECK(all.front() == AstTriangle::from_rows({{0, 0, 0, 0, 1}, {0, 0, 1}, {1}}));
    CHECK(all.back() == AstTriangle::from_rows({{1, 0, 0, 0, 0}, {1, 0, 0}, {1}}));

    std::multiset<std::string> got, want;
    for (const auto& t : all) got.insert(to_text(t));
    for (const auto& rows : std::vector<std::vector<std::vector<int>>>{
             {{1, 0, 0, 0, 0}, {1, 0, 0}, {1}},
             {{1, 0, 0, 0, 0}, {0, 0, 1}, {1}},
             {{0, 0, 0, 0, 1}, {0, 0, 1}, {1}},
             {{0, 0, 0, 0, 1}, {1, 0, 0}, {1}},
             {{0, 0, 0, 1, 0}, {1, 0, 0}, {1}},
             {{0, 1, 0, 0, 0}, {0, 0, 1}, {1}},
             {{0, 0, 1, 0, 0}, {1, -1, 1}, {1}}})
        want.insert(to_text(AstTriangle::from_rows(rows)));
    CHECK(got == want);
}

TEST_CASE("pentagon counts and rho generating functions") {
    CHECK(asp_count(2, 0, 1) == 2);
    CHECK(asp_genpoly(3, 0, 2) == WeightPolynomial::from_coeffs({1, 2, 2}));
    CHECK(asp_genpoly(3, 1, 3) == WeightPolynomial::from_coeffs({2, 2, 1}));
    CHECK(asp_genpoly(3, 1, 2) == WeightPolynomial::from_coeffs({1, 1, 1}));
    CHECK(asp_genpoly(3, 0, 3) == WeightPolynomial::from_coeffs({2, 3, 2}));
    CHECK(asp_count(3, 0, 3) == 7);

    CHECK_THROWS(asp_count(3, -1, 2));
    CHECK_THROWS(asp_count(3, 2, 2));
    CHECK_THROWS(asp_count(3, 0, 1));
    CHECK_THROWS(asp_count(3, 0, 4));
}

TEST_CASE("margin-restricted scan equals filtering the full scan") {
    const int n = 4, l = 1, r = 4;
    std::multiset<std::string> filtered;
    for_each_ast(n, [&](const AstTriangle& t) {
        auto m = zero_margins(t);
        REQUIRE(m.has_value());
        if (m->first >= l && m->second <= r) filtered.insert(to_text(t));
    });
    std::multiset<std::string> direct;
    for_each_asp(n, l, r, [&](const AstTriangle& t) { direct.insert(to_text(t)); });
    CHECK(direct == filtered);
    CHECK(asp_count(n, l, r) == static_cast<long>(filtered.size()));
}

TEST_CASE("catalan corners") {
    const std::vector<long> catalan = {5, 14, 42, 132};
    for (int n = 3; n <= 6; ++n) CHECK(asp_count(n, 0, n - 1) == catalan[static_cast<size_t>(n - 3)]);
}

TEST_CASE("rho distribution is symmetric under reflection") {
    for (int n = 3; n <= 5; ++n) {
        WeightPolynomial full = asp_genpoly(n, 0, 2 * n - 3);
        CHECK(full == full.reversed(n - 1));
    }
    CHECK(asp_genpoly(4, 2, 5) == asp_genpoly(4, 0, 3).reversed(3));
}

TEST_CASE("parallel scans agree with the serial reference") {
    CHECK(ast_count(5, 4) == ast_count(5, 1));
    CHECK(asp_genpoly(5, 1, 6, 4) == asp_genpoly(5, 1, 6, 1));
    CHECK(asp_genpoly(6, 2, 7, 3) == asp_genpoly(6, 2, 7, 1));
    CHECK(magog_genpoly({0, 6, 4, 6}, 4) == magog_genpoly({0, 6, 4, 6}, 1));
    CHECK(gog_count({0, 5, 5, 0}, 4) == gog_count({0, 5, 5, 0}, 1));
    CHECK(gog_count({0, 6, 3, 2}, 3) == gog_count({0, 6, 3, 2}, 1));
}

TEST_CASE("magog pentagons of shape (0,3,1,2)") {
    CHECK(magog_count({0, 3, 1, 2}) == 5);
    CHECK(magog_genpoly({0, 3, 1, 2}) == WeightPolynomial::from_coeffs({1, 2, 2}));

    std::multiset<std::string> got, want;
    for_each_magog({0, 3, 1, 2}, [&](const MagogPentagon& p) { got.insert(to_text(p)); });
    for (const auto& row : std::vector<std::vector<int>>{{1, 1}, {2, 2}, {2, 3}, {1, 2}, {1, 3}})
        want.insert(to_text(MagogPentagon::from_rows({0, 3, 1, 2}, {row})));
    CHECK(got == want);
}

TEST_CASE("magog generating function agrees with the tau statistic") {
    const MagogShape s{0, 4, 2, 2};
    WeightPolynomial direct;
    mpz_class count = 0;
    for_each_magog(s, [&](const MagogPentagon& p) {
        direct += WeightPolynomial::monomial(tau(p) - 1);
        ++count;
    });
    CHECK(count == 9);
    CHECK(direct == WeightPolynomial::from_coeffs({1, 2, 3, 3}));
    CHECK(magog_genpoly(s) == direct);
}

TEST_CASE("full trapezoids are equinumerous with triangles") {
    for (int n = 1; n <= 5; ++n)
        CHECK(magog_count({0, n, n, 2 * n - 1}) == ast_count_product_formula(n));
}

TEST_CASE("gog pentagon counts") {
    CHECK(gog_count({0, 4, 2, 3}) == 9);
    CHECK(gog_count({0, 3, 3, 0}) == 7);
    CHECK(gog_count({0, 4, 4, 0}) == 42);
    CHECK(gog_count({0, 5, 5, 0}) == 429);
    CHECK_THROWS(gog_count({0, 3, 4, 0}));
    CHECK_THROWS(gog_count({-1, 3, 3, 0}));

    mpz_class seen = 0;
    for_each_gog({0, 4, 2, 3}, [&](const GogPentagon& g) {
        CHECK(g.at(1, 1) == 1);
        ++seen;
    });
    CHECK(seen == 9);
}

TEST_CASE("matrix enumeration") {
    CHECK(asm_count(1) == 1);
    CHECK(asm_count(2) == 2);
    CHECK(asm_count(3) == 7);
    CHECK(asm_count(4) == 42);
    CHECK(asm_count(5, 4) == 429);

    std::set<std::string> seen;
    for_each_asm(3, [&](const Asm& a) { seen.insert(to_text(a)); });
    CHECK(seen.size() == 7);
    CHECK(seen.count(to_text(Asm::from_rows({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}}))) == 1);
}

TEST_CASE("zero diagonal runs in the top right corner") {
    CHECK(asm_count_tr_at_least(3, 0) == 7);
    CHECK(asm_count_tr_at_least(3, 1) == 5);
    CHECK(asm_count_tr_at_least(3, 2) == 1);
    CHECK(asm_count_tr_at_least(3, 3) == 0);

    // Cumulative runs match pentagon counts with free left margin.
    for (int n = 3; n <= 5; ++n)
        for (int x = 0; x <= n - 2; ++x)
            CHECK(asm_count_tr_at_least(n, x) == asp_count(n, 0, 2 * n - 3 - x));
}
