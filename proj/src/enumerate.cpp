#include "aspen/enumerate.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>
#include <string>

namespace aspen {
namespace {

using Buffer = std::vector<std::vector<int>>;
using Sink = std::function<void(const Buffer&)>;

void check_order(int n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
}

void check_margins(int n, int l, int r) {
    if (n < 2 || l < 0 || l > n - 2 || r <= n - 2 || r > 2 * n - 3)
        throw std::invalid_argument("margins require 0 <= l <= n-2 < r <= 2n-3");
}

void check_magog_shape(const MagogShape& s) {
    if (s.m < 0 || s.n < 1 || s.k < 1 || s.k > s.n || s.lambda < 1)
        throw std::invalid_argument("magog shape requires m >= 0, 1 <= k <= n, lambda >= 1");
}

void check_gog_shape(const GogShape& s) {
    if (s.m < 0 || s.n < 1 || s.k < 1 || s.k > s.n || s.l < 0)
        throw std::invalid_argument("gog shape requires m >= 0, 1 <= k <= n, l >= 0");
}

// ---------------------------------------------------------------------------
// Triangle scan
//
// Cells are filled row by row, left to right, trying -1 < 0 < 1. The column
// state holds the sign of the last non-zero entry placed in that column, so
// the alternation and topmost-entry conditions reduce to sign checks. Entries
// outside the absolute column window [cl, cr] stay zero, which restricts the
// scan to the pentagons with 1-columns inside the window.

class AstScan {
public:
    AstScan(int n, int cl, int cr) : n_(n), cl_(cl), cr_(cr), col_(static_cast<size_t>(2 * n), 0) {
        rows_.reserve(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) rows_.emplace_back(static_cast<size_t>(2 * (n - i) + 1), 0);
    }

    // Sinks every buffer whose first `depth` rows are filled; depth = n scans
    // complete objects.
    void expand(int depth, const Sink& sink) {
        sink_ = &sink;
        stop_after_ = depth;
        row(1);
    }

    // Continues a partial buffer below its first `depth` rows.
    void resume(const Buffer& partial, int depth, const Sink& sink) {
        for (int i = 1; i <= depth; ++i) rows_[static_cast<size_t>(i - 1)] = partial[static_cast<size_t>(i - 1)];
        std::fill(col_.begin(), col_.end(), 0);
        for (int i = 1; i <= depth; ++i)
            for (int c = i; c <= 2 * n_ - i; ++c)
                if (int v = cell(i, c); v != 0) col_[static_cast<size_t>(c)] = v;
        sink_ = &sink;
        stop_after_ = n_;
        row(depth + 1);
    }

private:
    int& cell(int i, int c) { return rows_[static_cast<size_t>(i - 1)][static_cast<size_t>(c - i)]; }

    void row(int i) {
        if (i > stop_after_) {
            (*sink_)(rows_);
            return;
        }
        fill(i, i, 0);
    }

    void fill(int i, int c, int rowstate) {
        if (c > 2 * n_ - i) {
            if (rowstate == 1) row(i + 1);
            return;
        }
        if (c > cr_ && rowstate != 1) return;  // remaining cells are forced zero
        const bool windowed = c >= cl_ && c <= cr_;
        int& cs = col_[static_cast<size_t>(c)];
        if (windowed && rowstate == 1 && cs == 1) {
            cell(i, c) = -1;
            cs = -1;
            fill(i, c + 1, -1);
            cs = 1;
        }
        cell(i, c) = 0;
        fill(i, c + 1, rowstate);
        if (windowed && rowstate != 1 && cs != 1) {
            const int saved = cs;
            cell(i, c) = 1;
            cs = 1;
            fill(i, c + 1, 1);
            cs = saved;
            cell(i, c) = 0;
        }
    }

    int n_, cl_, cr_;
    int stop_after_ = 0;
    Buffer rows_;
    std::vector<int> col_;
    const Sink* sink_ = nullptr;
};

int rho_of(const Buffer& rows, int n) {
    int count = 0;
    for (int c = 1; c <= 2 * n - 1; ++c) {
        if (c == n) continue;
        const int close = std::min(c, 2 * n - c);
        const int bottom_cell = rows[static_cast<size_t>(close - 1)][static_cast<size_t>(c - close)];
        int last_sign = 0;
        for (int i = close; i >= 1 && last_sign == 0; --i)
            last_sign = rows[static_cast<size_t>(i - 1)][static_cast<size_t>(c - i)];
        if (last_sign != 1) continue;  // all-zero or zero-sum column
        const bool eleven = bottom_cell == 1;
        if ((c < n && eleven) || (c > n && !eleven)) ++count;
    }
    return count + 1;
}

// Splits the scan into row-prefix seeds until the branch list is wide enough
// for the requested thread count, then counts by rho under OpenMP. Exact
// integer accumulation makes the result independent of the partition.
std::vector<mpz_class> rho_histogram(int n, int cl, int cr, int threads) {
    std::vector<mpz_class> hist(static_cast<size_t>(n), 0);
    if (threads <= 1) {
        AstScan scan(n, cl, cr);
        scan.expand(n, [&](const Buffer& rows) { ++hist[static_cast<size_t>(rho_of(rows, n) - 1)]; });
        return hist;
    }
    std::vector<Buffer> seeds;
    int depth = 0;
    do {
        ++depth;
        seeds.clear();
        AstScan seeder(n, cl, cr);
        seeder.expand(depth, [&](const Buffer& rows) { seeds.push_back(rows); });
    } while (depth < n && static_cast<int>(seeds.size()) < 8 * threads);

    std::vector<std::vector<mpz_class>> part(seeds.size(), std::vector<mpz_class>(static_cast<size_t>(n), 0));
#pragma omp parallel for num_threads(threads) schedule(dynamic)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(seeds.size()); ++b) {
        AstScan scan(n, cl, cr);
        scan.resume(seeds[static_cast<size_t>(b)], depth, [&](const Buffer& rows) {
            ++part[static_cast<size_t>(b)][static_cast<size_t>(rho_of(rows, n) - 1)];
        });
    }
    for (const auto& p : part)
        for (int d = 0; d < n; ++d) hist[static_cast<size_t>(d)] += p[static_cast<size_t>(d)];
    return hist;
}

// Window of absolute columns allowed to hold non-zero entries for margins
// [l, r]: labels map to absolute columns as l -> l+1 (left of centre) and
// r -> r+2 (right of centre).
std::pair<int, int> margin_window(int l, int r) { return {l + 1, r + 2}; }

WeightPolynomial poly_from_hist(const std::vector<mpz_class>& hist) {
    return WeightPolynomial::from_coeffs(hist);
}

// ---------------------------------------------------------------------------
// Magog scan
//
// The buffer holds the completed trapezoid rows with cut cells pinned to 1.
// Kept cells are filled row by row, left to right; the value interval is
// [a(p-1,q), a(p-1,q-1)] intersected with the first-row bound m+p, which is
// exactly the weak row increase, the weak display-column decrease, and the
// row-one bound.

class MagogScan {
public:
    explicit MagogScan(const MagogShape& s) : s_(s) {
        for (int q = 1; q <= s.k; ++q) full_.emplace_back(static_cast<size_t>(s.n - q + 1), 1);
    }

    void expand(int depth, const Sink& sink) {
        sink_ = &sink;
        stop_after_ = depth;
        row(1);
    }

    void resume(const Buffer& partial, int depth, const Sink& sink) {
        for (int q = 1; q <= depth; ++q) full_[static_cast<size_t>(q - 1)] = partial[static_cast<size_t>(q - 1)];
        sink_ = &sink;
        stop_after_ = s_.k;
        row(depth + 1);
    }

private:
    int& at(int p, int q) { return full_[static_cast<size_t>(q - 1)][static_cast<size_t>(p - q)]; }

    void row(int q) {
        if (q > stop_after_) {
            (*sink_)(full_);
            return;
        }
        fill(std::max(s_.p_min(q), q), q);
    }

    void fill(int p, int q) {
        if (p > s_.n) {
            row(q + 1);
            return;
        }
        int lo = 1;
        if (p - 1 >= s_.p_min(q)) lo = at(p - 1, q);
        const int hi = q == 1 ? s_.m + p : at(p - 1, q - 1);
        for (int v = lo; v <= hi; ++v) {
            at(p, q) = v;
            fill(p + 1, q);
        }
    }

    MagogShape s_;
    int stop_after_ = 0;
    Buffer full_;
    const Sink* sink_ = nullptr;
};

int tau_of(const Buffer& full, const MagogShape& s) {
    int value = s.n;
    for (int i = 1; i <= std::min(s.k, s.n - 1); ++i) {
        value += full[static_cast<size_t>(i - 1)][static_cast<size_t>(s.n - 1 - i)];
        value -= full[static_cast<size_t>(i - 1)][static_cast<size_t>(s.n - i)];
    }
    return value;
}

std::map<int, mpz_class> tau_histogram(const MagogShape& s, int threads) {
    std::map<int, mpz_class> hist;
    if (threads <= 1) {
        MagogScan scan(s);
        scan.expand(s.k, [&](const Buffer& full) { ++hist[tau_of(full, s)]; });
        return hist;
    }
    std::vector<Buffer> seeds;
    int depth = 0;
    do {
        ++depth;
        seeds.clear();
        MagogScan seeder(s);
        seeder.expand(depth, [&](const Buffer& full) { seeds.push_back(full); });
    } while (depth < s.k && static_cast<int>(seeds.size()) < 8 * threads);

    std::vector<std::map<int, mpz_class>> part(seeds.size());
#pragma omp parallel for num_threads(threads) schedule(dynamic)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(seeds.size()); ++b) {
        MagogScan scan(s);
        scan.resume(seeds[static_cast<size_t>(b)], depth, [&](const Buffer& full) {
            ++part[static_cast<size_t>(b)][tau_of(full, s)];
        });
    }
    for (const auto& p : part)
        for (const auto& [tau_value, c] : p) hist[tau_value] += c;
    return hist;
}

// ---------------------------------------------------------------------------
// Gog scan
//
// The buffer holds all cells with the forced staircase prefilled. Free cells
// are filled row by row; lower bounds come from strict row increase and weak
// column increase, upper caps propagate right to left from the diagonal
// condition and the explicit column-k bound.

class GogScan {
public:
    explicit GogScan(const GogShape& s) : s_(s) {
        for (int i = 1; i <= s.n; ++i) {
            std::vector<int> r(static_cast<size_t>(s.j_max(i)), 0);
            for (int j = 1; j <= s.j_max(i); ++j)
                if (s.forced(i, j)) r[static_cast<size_t>(j - 1)] = j;
            a_.push_back(std::move(r));
        }
    }

    void expand(int depth, const Sink& sink) {
        sink_ = &sink;
        stop_after_ = depth;
        row(1);
    }

    void resume(const Buffer& partial, int depth, const Sink& sink) {
        for (int i = 1; i <= depth; ++i) a_[static_cast<size_t>(i - 1)] = partial[static_cast<size_t>(i - 1)];
        sink_ = &sink;
        stop_after_ = s_.n;
        row(depth + 1);
    }

private:
    int at(int i, int j) const { return a_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; }

    void row(int i) {
        if (i > stop_after_) {
            (*sink_)(a_);
            return;
        }
        const int first = s_.j_free_min(i);
        const int last = s_.j_max(i);
        if (first > last) {
            row(i + 1);
            return;
        }
        std::vector<int> cap(static_cast<size_t>(last + 2), INT_MAX);
        for (int j = last; j >= first; --j) {
            int c = INT_MAX;
            if (j == s_.k && i <= s_.n + 1 - s_.k) c = s_.m + s_.k + i - 1;
            if (i >= 2 && j + 1 <= s_.j_max(i - 1)) c = std::min(c, at(i - 1, j + 1));
            if (j + 1 <= last && cap[static_cast<size_t>(j + 1)] != INT_MAX)
                c = std::min(c, cap[static_cast<size_t>(j + 1)] - 1);
            cap[static_cast<size_t>(j)] = c;
        }
        // The last cell of every row carries the explicit bound or a diagonal
        // neighbour, so the right-to-left chain caps the whole row.
        if (cap[static_cast<size_t>(last)] == INT_MAX)
            throw std::logic_error("gog scan: unbounded cell");
        fill(i, first, cap);
    }

    void fill(int i, int j, const std::vector<int>& cap) {
        if (j > s_.j_max(i)) {
            row(i + 1);
            return;
        }
        int lo = 1;
        if (j >= 2) lo = std::max(lo, at(i, j - 1) + 1);
        if (i >= 2 && j <= s_.j_max(i - 1)) lo = std::max(lo, at(i - 1, j));
        for (int v = lo; v <= cap[static_cast<size_t>(j)]; ++v) {
            a_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = v;
            fill(i, j + 1, cap);
        }
    }

    GogShape s_;
    int stop_after_ = 0;
    Buffer a_;
    const Sink* sink_ = nullptr;
};

mpz_class gog_scan_count(const GogShape& s, int threads) {
    mpz_class total = 0;
    if (threads <= 1) {
        GogScan scan(s);
        scan.expand(s.n, [&](const Buffer&) { ++total; });
        return total;
    }
    std::vector<Buffer> seeds;
    int depth = 0;
    do {
        ++depth;
        seeds.clear();
        GogScan seeder(s);
        seeder.expand(depth, [&](const Buffer& a) { seeds.push_back(a); });
    } while (depth < s.n && static_cast<int>(seeds.size()) < 8 * threads);

    std::vector<mpz_class> part(seeds.size(), 0);
#pragma omp parallel for num_threads(threads) schedule(dynamic)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(seeds.size()); ++b) {
        GogScan scan(s);
        scan.resume(seeds[static_cast<size_t>(b)], depth, [&](const Buffer&) { ++part[static_cast<size_t>(b)]; });
    }
    for (const auto& p : part) total += p;
    return total;
}

std::vector<std::vector<int>> kept_magog_rows(const Buffer& full, const MagogShape& s) {
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<size_t>(s.k));
    for (int q = 1; q <= s.k; ++q) {
        std::vector<int> row;
        for (int p = s.p_min(q); p <= s.n; ++p)
            row.push_back(full[static_cast<size_t>(q - 1)][static_cast<size_t>(p - q)]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<int>> free_gog_rows(const Buffer& a, const GogShape& s) {
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<size_t>(s.n));
    for (int i = 1; i <= s.n; ++i) {
        std::vector<int> row;
        for (int j = s.j_free_min(i); j <= s.j_max(i); ++j)
            row.push_back(a[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

void for_each_ast(int n, const std::function<void(const AstTriangle&)>& fn) {
    check_order(n);
    AstScan scan(n, 1, 2 * n - 1);
    scan.expand(n, [&](const Buffer& rows) { fn(AstTriangle::from_rows(rows)); });
}

void for_each_asp(int n, int l, int r, const std::function<void(const AstTriangle&)>& fn) {
    check_margins(n, l, r);
    const auto [cl, cr] = margin_window(l, r);
    AstScan scan(n, cl, cr);
    scan.expand(n, [&](const Buffer& rows) { fn(AstTriangle::from_rows(rows)); });
}

std::vector<AstTriangle> enumerate_asts(int n) {
    std::vector<AstTriangle> out;
    for_each_ast(n, [&](const AstTriangle& t) { out.push_back(t); });
    return out;
}

mpz_class ast_count(int n, int threads) {
    check_order(n);
    mpz_class total = 0;
    for (const mpz_class& c : rho_histogram(n, 1, 2 * n - 1, threads)) total += c;
    return total;
}

mpz_class asp_count(int n, int l, int r, int threads) {
    check_margins(n, l, r);
    const auto [cl, cr] = margin_window(l, r);
    mpz_class total = 0;
    for (const mpz_class& c : rho_histogram(n, cl, cr, threads)) total += c;
    return total;
}

WeightPolynomial asp_genpoly(int n, int l, int r, int threads) {
    check_margins(n, l, r);
    const auto [cl, cr] = margin_window(l, r);
    return poly_from_hist(rho_histogram(n, cl, cr, threads));
}

mpz_class ast_count_product_formula(int n) {
    check_order(n);
    mpz_class num = 1, den = 1;
    for (int i = 0; i < n; ++i) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(3 * i + 1));
        num *= f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n + i));
        den *= f;
    }
    if (num % den != 0) throw std::logic_error("product formula must divide exactly");
    return num / den;
}

void for_each_magog(const MagogShape& s, const std::function<void(const MagogPentagon&)>& fn) {
    check_magog_shape(s);
    MagogScan scan(s);
    scan.expand(s.k, [&](const Buffer& full) { fn(MagogPentagon::from_rows(s, kept_magog_rows(full, s))); });
}

mpz_class magog_count(const MagogShape& s, int threads) {
    check_magog_shape(s);
    mpz_class total = 0;
    for (const auto& [tau_value, c] : tau_histogram(s, threads)) total += c;
    return total;
}

WeightPolynomial magog_genpoly(const MagogShape& s, int threads) {
    check_magog_shape(s);
    const auto hist = tau_histogram(s, threads);
    WeightPolynomial poly;
    for (const auto& [tau_value, c] : hist) {
        if (tau_value < 1) throw std::domain_error("tau below 1 has no monomial");
        poly += WeightPolynomial::monomial(tau_value - 1, c);
    }
    return poly;
}

void for_each_gog(const GogShape& s, const std::function<void(const GogPentagon&)>& fn) {
    check_gog_shape(s);
    GogScan scan(s);
    scan.expand(s.n, [&](const Buffer& a) { fn(GogPentagon::from_rows(s, free_gog_rows(a, s))); });
}

mpz_class gog_count(const GogShape& s, int threads) {
    check_gog_shape(s);
    return gog_scan_count(s, threads);
}

void for_each_asm(int n, const std::function<void(const Asm&)>& fn) {
    check_order(n);
    for_each_gog(GogShape{0, n, n, 0}, [&](const GogPentagon& g) { fn(gog_to_asm(g)); });
}

mpz_class asm_count(int n, int threads) {
    check_order(n);
    return gog_count(GogShape{0, n, n, 0}, threads);
}

mpz_class asm_count_tr_at_least(int n, int x) {
    check_order(n);
    mpz_class total = 0;
    for_each_asm(n, [&](const Asm& a) {
        if (t_r(a) >= x) ++total;
    });
    return total;
}

}  // namespace aspen
