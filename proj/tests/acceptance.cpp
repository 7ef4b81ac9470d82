// Acceptance checklist: every release-blocking claim, one pass/fail line each.
#include <gmpxx.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "aspen/algebra.hpp"
#include "aspen/bijections.hpp"
#include "aspen/enumerate.hpp"
#include "aspen/formulas.hpp"
#include "aspen/objects.hpp"
#include "aspen/serialize.hpp"
#include "aspen/verify.hpp"
#include "aspen/weight_poly.hpp"

using namespace aspen;

namespace {

const int jobs = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));

bool window(int n, int l, int r) { return l + r < 2 * n - 2 && r - l > n - 3; }

std::string cells(const VerificationReport& rep) {
    return std::to_string(rep.checked) + " cells";
}

bool totals_match_product_formula(std::string& note) {
    const std::vector<long> expected = {1, 2, 7, 42, 429, 7436};
    bool ok = true;
    for (int n = 1; n <= 6; ++n) {
        const auto& want = expected[static_cast<size_t>(n - 1)];
        ok = ok && ast_count(n, jobs) == want && ast_count_product_formula(n) == want;
    }
    note = "orders 1..6, enumerated and closed-form";
    return ok;
}

bool printed_small_cases(std::string& note) {
    bool ok = true;

    const auto texts = [](auto&& each) {
        std::multiset<std::string> out;
        each([&](const auto& obj) { out.insert(to_text(obj)); });
        return out;
    };

    std::multiset<std::string> want7;
    for (const auto& rows : std::vector<std::vector<std::vector<int>>>{
             {{1, 0, 0, 0, 0}, {1, 0, 0}, {1}},
             {{1, 0, 0, 0, 0}, {0, 0, 1}, {1}},
             {{0, 0, 0, 0, 1}, {0, 0, 1}, {1}},
             {{0, 0, 0, 0, 1}, {1, 0, 0}, {1}},
             {{0, 0, 0, 1, 0}, {1, 0, 0}, {1}},
             {{0, 1, 0, 0, 0}, {0, 0, 1}, {1}},
             {{0, 0, 1, 0, 0}, {1, -1, 1}, {1}}})
        want7.insert(to_text(AstTriangle::from_rows(rows)));
    ok = ok && texts([&](auto&& f) { for_each_ast(3, f); }) == want7;
    ok = ok && asp_genpoly(3, 0, 3) == WeightPolynomial::from_coeffs({2, 3, 2});

    std::multiset<std::string> want5;
    for (const auto& rows : std::vector<std::vector<std::vector<int>>>{
             {{1, 0, 0, 0, 0}, {1, 0, 0}, {1}},
             {{1, 0, 0, 0, 0}, {0, 0, 1}, {1}},
             {{0, 0, 0, 1, 0}, {1, 0, 0}, {1}},
             {{0, 1, 0, 0, 0}, {0, 0, 1}, {1}},
             {{0, 0, 1, 0, 0}, {1, -1, 1}, {1}}})
        want5.insert(to_text(AstTriangle::from_rows(rows)));
    ok = ok && texts([&](auto&& f) { for_each_asp(3, 0, 2, f); }) == want5;

    std::multiset<std::string> want5m;
    for (const auto& row : std::vector<std::vector<int>>{{1, 1}, {2, 2}, {2, 3}, {1, 2}, {1, 3}})
        want5m.insert(to_text(MagogPentagon::from_rows({0, 3, 1, 2}, {row})));
    ok = ok && texts([&](auto&& f) { for_each_magog({0, 3, 1, 2}, f); }) == want5m;

    const WeightPolynomial small = WeightPolynomial::from_coeffs({1, 2, 2});
    ok = ok && asp_genpoly(3, 0, 2) == small && magog_genpoly({0, 3, 1, 2}) == small;
    ok = ok && asp_genpoly(3, 1, 2) == WeightPolynomial::from_coeffs({1, 1, 1});
    ok = ok && asp_count(3, 1, 2) == 3;
    ok = ok && magog_count({0, 4, 2, 2}) == 9 && gog_count({0, 4, 2, 3}) == 9;

    note = "7 triangles, 5 + 5 + 3 pentagons, 9 + 9 pentagons";
    return ok;
}

bool counting_theorem(std::string& note) {
    const auto main_rep = verify_main_theorem(5, jobs);
    const auto pf_rep = verify_pfaffian(5);
    note = cells(main_rep) + " triple-route, " + cells(pf_rep) + " pfaffian, orders 2..5";
    return main_rep.ok() && pf_rep.ok();
}

bool published_tables(std::string& note) {
    bool ok = true;
    long cells_seen = 0, errata_seen = 0;
    for (int n = 4; n <= 7; ++n) {
        for (const auto& c : compute_table(n, n <= 6, jobs)) {
            ++cells_seen;
            ok = ok && !c.printed.empty();
            ok = ok && c.matches_printed == !c.erratum;
            if (n <= 6) ok = ok && c.cross_checked && c.cross_ok;
            if (c.erratum) {
                ++errata_seen;
                if (n == 4) ok = ok && c.r == 5 && c.l == 1 && c.computed == 35;
                if (n == 6) ok = ok && c.r == 8 && c.l == 3 && c.computed == 1375;
            }
        }
    }
    ok = ok && cells_seen == 86 && errata_seen == 2;
    note = "86 cells, 2 errata (35 and 1375), cross-checked through order 6";
    return ok;
}

bool reflection_lemmas(std::string& note) {
    const auto rep = verify_reflection(5);
    note = cells(rep) + ": rho sums and empty narrow margins";
    return rep.ok();
}

bool catalan_corners(std::string& note) {
    const auto rep = verify_catalan(7, jobs);
    const std::vector<long> expected = {5, 14, 42, 132, 429};
    bool ok = rep.ok();
    for (int n = 3; n <= 7; ++n)
        ok = ok && detsum_genpoly(n, 0, n - 1).eval(1) == expected[static_cast<size_t>(n - 3)];
    note = "both corners, orders 3..7";
    return ok;
}

bool path_oracles(std::string& note) {
    const auto rep = verify_lgv(5);
    note = cells(rep) + ": entries to order 5, determinants to order 4";
    return rep.ok();
}

bool bijection_chain(std::string& note) {
    bool ok = verify_bijection(4).ok();

    const PathTuple t = PathTuple::from_steps(
        {"N", "NE", "NEN", "ENNE", "ENNNE", "EENNNE", "EEENNNN", "NEEENNNE", "EEENENNNN"});
    ok = ok && tuple_in_family(t, 1, 12) && t.north_count() == 4;
    const MagogPentagon p = gt_to_magog(kissing_to_gt(shift(t)), 1, 12);
    ok = ok && p.shape() == MagogShape{0, 10, 4, 11};
    ok = ok && p.rows() == std::vector<std::vector<int>>{{1, 2, 2, 4, 5, 6, 7, 7, 8, 9},
                                                         {1, 2, 2, 4, 5, 5, 5, 5, 7},
                                                         {2, 2, 4, 4, 4, 4, 5},
                                                         {2, 2, 2, 2, 3}};
    ok = ok && tau(p) == 5 && gt_to_tuple(magog_to_gt(p)) == t;
    note = "exhaustive to order 4, plus the order-10 worked example";
    return ok;
}

bool constant_term_oracle(std::string& note) {
    bool ok = true;
    long count = 0;
    for (int n = 2; n <= 4; ++n)
        for (int l = 0; l <= n - 2; ++l)
            for (int r = n - 1; r <= 2 * n - 3; ++r) {
                if (!window(n, l, r)) continue;
                ++count;
                ok = ok && ct_genpoly(n, l, r) == detsum_genpoly(n, l, r);
            }
    ok = ok && count == 9;
    note = "9 cells, orders 2..4";
    return ok;
}

bool matrix_corollaries(std::string& note) {
    const auto rep = verify_asm_corollary(5, jobs);
    const bool instance = asm_count_tr_at_least(3, 1) == 5 && asp_count(3, 0, 2) == 5;
    note = cells(rep) + ", instance 5 = 5 at order 3";
    return rep.ok() && instance;
}

bool algebra_kernel(std::string& note) {
    std::mt19937 rng(20260814);
    std::uniform_int_distribution<int> coeff(-3, 3);
    const auto random_entry = [&] {
        return WeightPolynomial::monomial(0, coeff(rng)) + WeightPolynomial::monomial(1, coeff(rng));
    };

    bool ok = true;
    for (int i = 0; i < 200; ++i) {
        const int n = 2 + i % 7;
        SkewMatrix s(n);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) s.set_upper(a, b, random_entry());
        PolyMatrix m(static_cast<size_t>(n), std::vector<WeightPolynomial>(static_cast<size_t>(n)));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) m[static_cast<size_t>(a)][static_cast<size_t>(b)] = s.at(a, b);
        const WeightPolynomial d = det(m);
        if (n % 2 == 1) {
            ok = ok && d.is_zero();  // odd skew-symmetric determinants vanish
        } else {
            const WeightPolynomial pf = pfaffian(s);
            ok = ok && pf * pf == d;
        }
    }

    for (long a = 0; a < 50; ++a)
        for (long b = -25; b < 75; ++b) {
            if (a >= 1) ok = ok && binom(a, b) == binom(a - 1, b - 1) + binom(a - 1, b);
            if (b < 0 || b > a) ok = ok && binom(a, b) == 0;
        }
    note = "200 skew matrices sizes 2..8, 50 x 100 pascal grid";
    return ok;
}

bool conjecture_sweep(std::string& note) {
    const auto rep = conjecture_behrend(6, jobs);
    const bool witness = magog_count({0, 4, 2, 2}) == 9 && gog_count({0, 4, 2, 3}) == 9;
    note = cells(rep) + " all equal, witness 9 = 9";
    return rep.ok() && rep.mismatches == 0 && witness;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria = {
        {"triangle totals match the closed product formula", totals_match_product_formula},
        {"printed small cases reproduce exactly", printed_small_cases},
        {"pentagon, magog, and determinant-sum polynomials agree", counting_theorem},
        {"published tables match up to two documented errata", published_tables},
        {"reflection complements rho; narrow margins are empty", reflection_lemmas},
        {"catalan numbers appear at both table corners", catalan_corners},
        {"path formula and endpoint determinants match brute counts", path_oracles},
        {"the path-to-pentagon chain preserves weights bijectively", bijection_chain},
        {"constant-term expansion equals the determinant sum", constant_term_oracle},
        {"matrix corner runs match pentagon counts; gog round trip", matrix_corollaries},
        {"pfaffians square to determinants; binomials obey pascal", algebra_kernel},
        {"magog and gog pentagon counts agree across the sweep", conjecture_sweep},
    };

    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string note;
        bool ok = false;
        try {
            ok = criteria[i].second(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!ok) ++failed;
        std::printf("[%s] %2zu %s (%.1fs) [%s]\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), secs, note.c_str());
        std::fflush(stdout);
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
