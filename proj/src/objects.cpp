#include "aspen/objects.hpp"

#include <sstream>

namespace aspen {

namespace {

std::string loc(int i, int j, const char* a = "row", const char* b = "column") {
    std::ostringstream os;
    os << a << " " << i << ", " << b << " " << j;
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// AstTriangle

AstTriangle AstTriangle::from_rows(std::vector<std::vector<int>> rows) {
    const int n = static_cast<int>(rows.size());
    if (n < 1) throw ValidationError("AST: shape: no rows");
    for (int i = 1; i <= n; ++i) {
        const auto& row = rows[static_cast<size_t>(i - 1)];
        const int want = 2 * (n - i) + 1;
        if (static_cast<int>(row.size()) != want)
            throw ValidationError("AST: shape: row " + std::to_string(i) + " has " +
                                  std::to_string(row.size()) + " entries, expected " + std::to_string(want));
        for (size_t j = 0; j < row.size(); ++j)
            if (row[j] < -1 || row[j] > 1)
                throw ValidationError("AST: shape: entry outside {-1,0,1} at " +
                                      loc(i, static_cast<int>(j) + i));
    }
    // Alternation along rows.
    for (int i = 1; i <= n; ++i) {
        int last = 0;
        for (int c = i; c <= 2 * n - i; ++c) {
            int v = rows[static_cast<size_t>(i - 1)][static_cast<size_t>(c - i)];
            if (v == 0) continue;
            if (v == last) throw ValidationError("AST: alternation violated along " + loc(i, c));
            last = v;
        }
    }
    // Alternation along columns.
    for (int c = 1; c <= 2 * n - 1; ++c) {
        int last = 0;
        for (int i = 1; i <= std::min(c, 2 * n - c); ++i) {
            int v = rows[static_cast<size_t>(i - 1)][static_cast<size_t>(c - i)];
            if (v == 0) continue;
            if (v == last) throw ValidationError("AST: alternation violated along column " +
                                                 std::to_string(c) + " at row " + std::to_string(i));
            last = v;
        }
    }
    // Row sums.
    for (int i = 1; i <= n; ++i) {
        int sum = 0;
        for (int v : rows[static_cast<size_t>(i - 1)]) sum += v;
        if (sum != 1)
            throw ValidationError("AST: row-sum: row " + std::to_string(i) + " sums to " + std::to_string(sum));
    }
    // Topmost non-zero of each column is 1.
    for (int c = 1; c <= 2 * n - 1; ++c) {
        for (int i = 1; i <= std::min(c, 2 * n - c); ++i) {
            int v = rows[static_cast<size_t>(i - 1)][static_cast<size_t>(c - i)];
            if (v == 0) continue;
            if (v != 1)
                throw ValidationError("AST: topmost-nonzero: column " + std::to_string(c) +
                                      " starts with -1 at row " + std::to_string(i));
            break;
        }
    }
    AstTriangle t;
    t.rows_.reserve(rows.size());
    for (const auto& row : rows) t.rows_.emplace_back(row.begin(), row.end());
    return t;
}

std::vector<ColumnInfo> column_profile(const AstTriangle& t) {
    const int n = t.order();
    std::vector<ColumnInfo> out;
    out.reserve(static_cast<size_t>(2 * n - 1));
    for (int c = 1; c <= 2 * n - 1; ++c) {
        ColumnInfo info;
        info.abs_col = c;
        info.side = c < n ? ColumnSide::Left : c > n ? ColumnSide::Right : ColumnSide::Central;
        info.label = c < n ? c - 1 : c > n ? c - 2 : -1;
        const int bottom = std::min(c, 2 * n - c);
        int sum = 0;
        bool any = false;
        for (int i = 1; i <= bottom; ++i) {
            int v = t.entry(i, c);
            sum += v;
            any = any || v != 0;
        }
        if (!any)
            info.cls = ColumnClass::AllZero;
        else if (sum == 0)
            info.cls = ColumnClass::ZeroSum;
        else
            info.cls = t.entry(bottom, c) == 1 ? ColumnClass::One11 : ColumnClass::One10;
        out.push_back(info);
    }
    return out;
}

int rho(const AstTriangle& t) {
    int count = 1;
    for (const ColumnInfo& col : column_profile(t)) {
        if (col.side == ColumnSide::Left && col.cls == ColumnClass::One11) ++count;
        if (col.side == ColumnSide::Right && col.cls == ColumnClass::One10) ++count;
    }
    return count;
}

std::optional<std::pair<int, int>> zero_margins(const AstTriangle& t) {
    if (t.order() == 1) return std::nullopt;
    int lo = -1, hi = -1;
    for (const ColumnInfo& col : column_profile(t)) {
        if (col.side == ColumnSide::Central || col.cls == ColumnClass::AllZero) continue;
        if (lo < 0) lo = col.label;
        hi = col.label;
    }
    return std::make_pair(lo, hi);
}

AstTriangle reflect(const AstTriangle& t) {
    std::vector<std::vector<int>> rows;
    rows.reserve(t.rows().size());
    for (const auto& row : t.rows()) rows.emplace_back(row.rbegin(), row.rend());
    return AstTriangle::from_rows(std::move(rows));
}

// ---------------------------------------------------------------------------
// MagogPentagon

MagogPentagon MagogPentagon::from_rows(MagogShape shape, std::vector<std::vector<int>> rows) {
    if (shape.m < 0 || shape.n < 1 || shape.k < 1 || shape.k > shape.n || shape.lambda < 1)
        throw ValidationError("Magog: shape: invalid parameters");
    if (static_cast<int>(rows.size()) != shape.k)
        throw ValidationError("Magog: shape: expected " + std::to_string(shape.k) + " rows");
    for (int q = 1; q <= shape.k; ++q) {
        const int want = std::max(0, shape.n - shape.p_min(q) + 1);
        if (static_cast<int>(rows[static_cast<size_t>(q - 1)].size()) != want)
            throw ValidationError("Magog: shape: row " + std::to_string(q) + " has " +
                                  std::to_string(rows[static_cast<size_t>(q - 1)].size()) +
                                  " entries, expected " + std::to_string(want));
    }
    MagogPentagon p;
    p.shape_ = shape;
    p.rows_ = std::move(rows);
    const auto full = complete_magog(p);
    auto at_full = [&](int pp, int qq) { return full[static_cast<size_t>(qq - 1)][static_cast<size_t>(pp - qq)]; };
    for (int q = 1; q <= shape.k; ++q)
        for (int pp = shape.p_min(q); pp <= shape.n; ++pp)
            if (p.at(pp, q) < 1)
                throw ValidationError("Magog: entries must be positive at " + loc(pp, q, "p", "q"));
    for (int q = 1; q <= shape.k; ++q)
        for (int pp = q; pp < shape.n; ++pp)
            if (at_full(pp, q) > at_full(pp + 1, q))
                throw ValidationError("Magog: row not weakly increasing at " + loc(pp, q, "p", "q"));
    for (int q = 1; q < shape.k; ++q)
        for (int pp = q; pp < shape.n; ++pp)
            if (at_full(pp, q) < at_full(pp + 1, q + 1))
                throw ValidationError("Magog: display column increases at " + loc(pp, q, "p", "q"));
    for (int pp = 1; pp <= shape.n; ++pp)
        if (at_full(pp, 1) > shape.m + pp)
            throw ValidationError("Magog: bound a(p,1) <= m+p violated at p=" + std::to_string(pp));
    return p;
}

int MagogPentagon::at(int p, int q) const {
    if (!shape_.kept(p, q)) throw std::out_of_range("Magog: cell not kept");
    return rows_[static_cast<size_t>(q - 1)][static_cast<size_t>(p - shape_.p_min(q))];
}

std::vector<std::vector<int>> complete_magog(const MagogPentagon& p) {
    const MagogShape& s = p.shape();
    std::vector<std::vector<int>> full;
    full.reserve(static_cast<size_t>(s.k));
    for (int q = 1; q <= s.k; ++q) {
        std::vector<int> row(static_cast<size_t>(s.n - q + 1), 1);
        for (int pp = s.p_min(q); pp <= s.n; ++pp) row[static_cast<size_t>(pp - q)] = p.at(pp, q);
        full.push_back(std::move(row));
    }
    return full;
}

int tau(const MagogPentagon& p) {
    const MagogShape& s = p.shape();
    const auto full = complete_magog(p);
    int value = s.n;
    for (int i = 1; i <= std::min(s.k, s.n - 1); ++i) {
        value += full[static_cast<size_t>(i - 1)][static_cast<size_t>(s.n - 1 - i)];
        value -= full[static_cast<size_t>(i - 1)][static_cast<size_t>(s.n - i)];
    }
    return value;
}

// ---------------------------------------------------------------------------
// GogPentagon

GogPentagon GogPentagon::from_rows(GogShape shape, std::vector<std::vector<int>> rows) {
    if (shape.m < 0 || shape.n < 1 || shape.k < 1 || shape.k > shape.n || shape.l < 0)
        throw ValidationError("Gog: shape: invalid parameters");
    if (static_cast<int>(rows.size()) != shape.n)
        throw ValidationError("Gog: shape: expected " + std::to_string(shape.n) + " rows");
    for (int i = 1; i <= shape.n; ++i) {
        const int want = std::max(0, shape.j_max(i) - shape.j_free_min(i) + 1);
        if (static_cast<int>(rows[static_cast<size_t>(i - 1)].size()) != want)
            throw ValidationError("Gog: shape: row " + std::to_string(i) + " has " +
                                  std::to_string(rows[static_cast<size_t>(i - 1)].size()) +
                                  " entries, expected " + std::to_string(want));
    }
    GogPentagon g;
    g.shape_ = shape;
    g.rows_ = std::move(rows);
    const auto full = complete_gog(g);
    auto at_full = [&](int i, int j) { return full[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; };
    for (int i = 1; i <= shape.n; ++i)
        for (int j = 1; j <= shape.j_max(i); ++j)
            if (at_full(i, j) < 1) throw ValidationError("Gog: entries must be positive at " + loc(i, j));
    for (int i = 1; i <= shape.n; ++i)
        for (int j = 1; j < shape.j_max(i); ++j)
            if (at_full(i, j) >= at_full(i, j + 1))
                throw ValidationError("Gog: row not strictly increasing at " + loc(i, j));
    for (int i = 1; i < shape.n; ++i)
        for (int j = 1; j <= std::min(shape.j_max(i), shape.j_max(i + 1)); ++j)
            if (at_full(i, j) > at_full(i + 1, j))
                throw ValidationError("Gog: column decreases at " + loc(i, j));
    for (int i = 1; i < shape.n; ++i)
        for (int j = 1; j + 1 <= shape.j_max(i) && j <= shape.j_max(i + 1); ++j)
            if (at_full(i + 1, j) > at_full(i, j + 1))
                throw ValidationError("Gog: diagonal decreases at " + loc(i, j));
    for (int i = 1; i <= shape.n + 1 - shape.k; ++i)
        if (at_full(i, shape.k) > shape.m + shape.k + i - 1)
            throw ValidationError("Gog: bound a(i,k) <= m+k+i-1 violated at i=" + std::to_string(i));
    return g;
}

int GogPentagon::at(int i, int j) const {
    if (i < 1 || i > shape_.n || j < 1 || j > shape_.j_max(i)) throw std::out_of_range("Gog: bad cell");
    if (shape_.forced(i, j)) return j;
    return rows_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - shape_.j_free_min(i))];
}

std::vector<std::vector<int>> complete_gog(const GogPentagon& g) {
    const GogShape& s = g.shape();
    std::vector<std::vector<int>> full;
    full.reserve(static_cast<size_t>(s.n));
    for (int i = 1; i <= s.n; ++i) {
        std::vector<int> row(static_cast<size_t>(std::max(0, s.j_max(i))));
        for (int j = 1; j <= s.j_max(i); ++j) row[static_cast<size_t>(j - 1)] = g.at(i, j);
        full.push_back(std::move(row));
    }
    return full;
}

// ---------------------------------------------------------------------------
// GtPattern

GtPattern GtPattern::from_rows(std::vector<std::vector<int>> rows) {
    const int n = static_cast<int>(rows.size());
    if (n < 1) throw ValidationError("GT: shape: no rows");
    for (int k = 1; k <= n; ++k)
        if (static_cast<int>(rows[static_cast<size_t>(k - 1)].size()) != k)
            throw ValidationError("GT: shape: row " + std::to_string(k) + " must have " +
                                  std::to_string(k) + " entries");
    GtPattern g;
    g.rows_ = std::move(rows);
    for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= k; ++j)
            if (g.at(k, j) < 1) throw ValidationError("GT: entries must be positive at " + loc(k, j, "row", "j"));
    for (int k = 1; k < n; ++k)
        for (int j = 1; j <= k; ++j) {
            if (g.at(k, j) > g.at(k + 1, j))
                throw ValidationError("GT: south-east diagonal decreases at " + loc(k, j, "row", "j"));
            if (g.at(k + 1, j + 1) > g.at(k, j))
                throw ValidationError("GT: north-east diagonal decreases at " + loc(k, j, "row", "j"));
        }
    for (int k = 1; k <= n; ++k)
        if (g.at(k, 1) > k)
            throw ValidationError("GT: bound a(k,1) <= k violated at row " + std::to_string(k));
    return g;
}

// ---------------------------------------------------------------------------
// Asm

Asm Asm::from_rows(std::vector<std::vector<int>> rows) {
    const int n = static_cast<int>(rows.size());
    if (n < 1) throw ValidationError("ASM: shape: no rows");
    for (int i = 1; i <= n; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i - 1)].size()) != n)
            throw ValidationError("ASM: shape: row " + std::to_string(i) + " is not length " + std::to_string(n));
        for (int v : rows[static_cast<size_t>(i - 1)])
            if (v < -1 || v > 1) throw ValidationError("ASM: shape: entry outside {-1,0,1} in row " + std::to_string(i));
    }
    auto check_line = [](const std::vector<int>& vals, const std::string& what) {
        int last = 0, sum = 0;
        for (int v : vals) {
            if (v == 0) continue;
            if (v == last) throw ValidationError("ASM: alternation violated along " + what);
            if (last == 0 && v == -1) throw ValidationError("ASM: alternation violated along " + what);
            last = v;
            sum += v;
        }
        if (sum != 1) throw ValidationError("ASM: " + what + " sums to " + std::to_string(sum));
    };
    for (int i = 1; i <= n; ++i) check_line(rows[static_cast<size_t>(i - 1)], "row " + std::to_string(i));
    for (int j = 1; j <= n; ++j) {
        std::vector<int> col(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) col[static_cast<size_t>(i - 1)] = rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
        check_line(col, "column " + std::to_string(j));
    }
    Asm a;
    a.rows_.reserve(rows.size());
    for (const auto& row : rows) a.rows_.emplace_back(row.begin(), row.end());
    return a;
}

int t_r(const Asm& a) {
    const int n = a.order();
    for (int m = 1; m <= n; ++m)
        for (int i = 1; i <= m; ++i)
            if (a.entry(i, n - m + i) != 0) return m - 1;
    return n;  // unreachable for valid matrices
}

int t_l(const Asm& a) {
    const int n = a.order();
    for (int m = 1; m <= n; ++m)
        for (int i = 1; i <= m; ++i)
            if (a.entry(i, m + 1 - i) != 0) return m - 1;
    return n;
}

int rho_asm(const Asm& a) {
    for (int j = 1; j <= a.order(); ++j)
        if (a.entry(1, j) == 1) return j;
    throw ValidationError("ASM: no 1 in top row");
}

GogPentagon asm_to_gog(const Asm& a) {
    const int n = a.order();
    std::vector<int> sums(static_cast<size_t>(n), 0);
    std::vector<std::vector<int>> tri(static_cast<size_t>(n));
    for (int i = n; i >= 1; --i) {
        std::vector<int> positions;
        for (int j = 1; j <= n; ++j) {
            sums[static_cast<size_t>(j - 1)] += a.entry(i, j);
            int s = sums[static_cast<size_t>(j - 1)];
            if (s != 0 && s != 1)
                throw ValidationError("ASM: partial sum outside {0,1} at " + loc(i, j));
            if (s == 1) positions.push_back(j);
        }
        tri[static_cast<size_t>(i - 1)] = std::move(positions);
    }
    return GogPentagon::from_rows(GogShape{0, n, n, 0}, std::move(tri));
}

Asm gog_to_asm(const GogPentagon& g) {
    const GogShape& s = g.shape();
    if (s.m != 0 || s.k != s.n || s.l != 0)
        throw std::invalid_argument("gog_to_asm: requires a (0,n,n,0)-Gog pentagon");
    const int n = s.n;
    std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    std::vector<int> below(static_cast<size_t>(n), 0);
    for (int i = n; i >= 1; --i) {
        std::vector<int> here(static_cast<size_t>(n), 0);
        for (int j = 1; j <= s.j_max(i); ++j) here[static_cast<size_t>(g.at(i, j) - 1)] = 1;
        for (int j = 0; j < n; ++j) rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] = here[static_cast<size_t>(j)] - below[static_cast<size_t>(j)];
        below = std::move(here);
    }
    return Asm::from_rows(std::move(rows));
}

}  // namespace aspen
