#include "aspen/formulas.hpp"

#include <array>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "aspen/algebra.hpp"

namespace aspen {
namespace {

void check_margins(int n, int l, int r) {
    if (n < 2 || l < 0 || l > n - 2 || r <= n - 2 || r > 2 * n - 3)
        throw std::invalid_argument("margins require 0 <= l <= n-2 < r <= 2n-3");
}

void check_theorem_range(int n, int l, int r) {
    check_margins(n, l, r);
    if (l + r >= 2 * n - 2 || r - l <= n - 3)
        throw std::invalid_argument("pfaffian form requires l+r < 2n-2 and r-l > n-3");
}

// Visits all k-subsets lo <= e_1 < ... < e_k <= hi.
void for_each_combination(int lo, int hi, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> e(static_cast<size_t>(k));
    std::function<void(int, int)> rec = [&](int idx, int next) {
        if (idx == k) {
            fn(e);
            return;
        }
        for (int v = next; v <= hi - (k - idx - 1); ++v) {
            e[static_cast<size_t>(idx)] = v;
            rec(idx + 1, v + 1);
        }
    };
    if (k >= 0 && hi - lo + 1 >= k) rec(0, lo);
}

WeightPolynomial entry_poly(int n, int l, int r, int e, int j) {
    WeightPolynomial p = WeightPolynomial::monomial(1, binom(j - 1, e - j));
    p -= WeightPolynomial::monomial(1, binom(j - 1, r - e - l + 2 * n - 1 - j));
    p += WeightPolynomial(binom(j - 1, e - 1 - j));
    p -= WeightPolynomial(binom(j - 1, r - e - l + 2 * n - j));
    return p;
}

// Entry table indexed by [e-1][j-1] for e in [1, r+1], j in [1, n-1].
std::vector<std::vector<WeightPolynomial>> entry_table(int n, int l, int r) {
    std::vector<std::vector<WeightPolynomial>> table;
    table.reserve(static_cast<size_t>(r + 1));
    for (int e = 1; e <= r + 1; ++e) {
        std::vector<WeightPolynomial> row;
        row.reserve(static_cast<size_t>(n - 1));
        for (int j = 1; j <= n - 1; ++j) row.push_back(entry_poly(n, l, r, e, j));
        table.push_back(std::move(row));
    }
    return table;
}

// ---------------------------------------------------------------------------
// Constant-term oracle: polynomials in X_1..X_K with t-polynomial coefficients.

constexpr int kMaxCtVars = 3;
using Expo = std::array<int, kMaxCtVars>;
using MPoly = std::map<Expo, WeightPolynomial>;

MPoly mul(const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Expo e{};
            for (int v = 0; v < kMaxCtVars; ++v) e[static_cast<size_t>(v)] = ea[static_cast<size_t>(v)] + eb[static_cast<size_t>(v)];
            auto [it, inserted] = out.try_emplace(e, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    return out;
}

Expo unit(int var) {
    Expo e{};
    e[static_cast<size_t>(var)] = 1;
    return e;
}

}  // namespace

WeightPolynomial formula_entry(int n, int l, int r, int e, int j) {
    check_margins(n, l, r);
    if (e < 1 || e > r + 1 || j < 1 || j > n - 1) throw std::invalid_argument("formula_entry: e in [1,r+1], j in [1,n-1]");
    return entry_poly(n, l, r, e, j);
}

WeightPolynomial detsum_genpoly(int n, int l, int r) {
    check_margins(n, l, r);
    const auto table = entry_table(n, l, r);
    const int k = n - 1;
    WeightPolynomial total;
    for_each_combination(1, r + 1, k, [&](const std::vector<int>& e) {
        PolyMatrix m(static_cast<size_t>(k), std::vector<WeightPolynomial>(static_cast<size_t>(k)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = table[static_cast<size_t>(e[static_cast<size_t>(i)] - 1)][static_cast<size_t>(j)];
        total += det(std::move(m));
    });
    return total;
}

WeightPolynomial endpoint_det(int n, int l, int r, const std::vector<int>& endpoints) {
    check_margins(n, l, r);
    const int k = n - 1;
    if (static_cast<int>(endpoints.size()) != k)
        throw std::invalid_argument("endpoint_det: expected n-1 endpoints");
    for (int i = 0; i < k; ++i) {
        if (endpoints[static_cast<size_t>(i)] < 1 || endpoints[static_cast<size_t>(i)] > r + 1)
            throw std::invalid_argument("endpoint_det: endpoints lie in [1, r+1]");
        if (i > 0 && endpoints[static_cast<size_t>(i)] <= endpoints[static_cast<size_t>(i - 1)])
            throw std::invalid_argument("endpoint_det: endpoints must ascend strictly");
    }
    PolyMatrix m(static_cast<size_t>(k), std::vector<WeightPolynomial>(static_cast<size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 1; j <= k; ++j)
            m[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] = entry_poly(n, l, r, endpoints[static_cast<size_t>(i)], j);
    return det(std::move(m));
}

WeightPolynomial pair_gf(int n, int l, int r, int i, int j) {
    check_margins(n, l, r);
    const auto table = entry_table(n, l, r);
    WeightPolynomial total;
    for (int e1 = 1; e1 <= r + 1; ++e1)
        for (int e2 = e1 + 1; e2 <= r + 1; ++e2) {
            total += table[static_cast<size_t>(e1 - 1)][static_cast<size_t>(i - 1)] * table[static_cast<size_t>(e2 - 1)][static_cast<size_t>(j - 1)];
            total -= table[static_cast<size_t>(e1 - 1)][static_cast<size_t>(j - 1)] * table[static_cast<size_t>(e2 - 1)][static_cast<size_t>(i - 1)];
        }
    return total;
}

WeightPolynomial single_gf(int n, int l, int r, int j) {
    check_margins(n, l, r);
    WeightPolynomial total;
    for (int e = 1; e <= r + 1; ++e) total += entry_poly(n, l, r, e, j);
    return total;
}

WeightPolynomial pfaffian_genpoly(int n, int l, int r) {
    check_theorem_range(n, l, r);
    const int size = n % 2 == 1 ? n - 1 : n;
    SkewMatrix b(size);
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 1; j <= n - 1; ++j) b.set_upper(i - 1, j - 1, pair_gf(n, l, r, i, j));
    if (n % 2 == 0)
        for (int i = 1; i <= n - 1; ++i) b.set_upper(i - 1, n - 1, single_gf(n, l, r, i));
    return pfaffian(b);
}

WeightPolynomial ct_genpoly(int n, int l, int r) {
    check_margins(n, l, r);
    if (n > kMaxCtVars + 1) throw std::invalid_argument("constant-term oracle supports n <= 4");
    const int k = n - 1;

    MPoly q;
    q.emplace(Expo{}, WeightPolynomial(1));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            MPoly f1;
            f1.emplace(Expo{}, WeightPolynomial(1));
            f1.emplace(unit(i), WeightPolynomial(1));
            Expo both = unit(i);
            both[static_cast<size_t>(j)] += 1;
            f1.emplace(both, WeightPolynomial(1));
            MPoly f2;
            f2.emplace(unit(j), WeightPolynomial(1));
            f2.emplace(unit(i), WeightPolynomial(-1));
            q = mul(q, mul(f1, f2));
        }
    for (int i = 0; i < k; ++i) {
        MPoly f;
        f.emplace(Expo{}, WeightPolynomial::monomial(1));
        f.emplace(unit(i), WeightPolynomial(1));
        q = mul(q, f);
    }

    WeightPolynomial total;
    for_each_combination(l, r, k, [&](const std::vector<int>& tuple) {
        Expo e{};
        for (int i = 0; i < k; ++i) e[static_cast<size_t>(i)] = tuple[static_cast<size_t>(i)];
        auto it = q.find(e);
        if (it != q.end()) total += it->second;
    });
    return total;
}

}  // namespace aspen
