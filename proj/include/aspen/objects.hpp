#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aspen {

// Raised when a candidate object violates one of its defining conditions.
// The message names the first violated condition and its location.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// ---------------------------------------------------------------------------
// Alternating sign triangles / pentagons

// Order-n triangular array over {-1,0,1}. Row i (1-based) spans absolute
// columns i..2n-i of a (2n-1)-wide grid, so it has 2(n-i)+1 entries and the
// bottom row is the single central cell (n, n). Defining conditions:
// non-zero entries alternate along rows and columns, every row sums to 1,
// and the topmost non-zero entry of every column is 1.
class AstTriangle {
public:
    // Validates; throws ValidationError naming the first violated condition.
    static AstTriangle from_rows(std::vector<std::vector<int>> rows);

    int order() const { return static_cast<int>(rows_.size()); }
    // 1-based row i in [1, n], absolute column c in [i, 2n-i].
    int entry(int i, int c) const {
        if (i < 1 || i > order() || c < i || c > 2 * order() - i) throw std::out_of_range("AST entry");
        return rows_[static_cast<size_t>(i - 1)][static_cast<size_t>(c - i)];
    }
    const std::vector<std::vector<std::int8_t>>& rows() const { return rows_; }

    bool operator==(const AstTriangle& o) const { return rows_ == o.rows_; }

private:
    std::vector<std::vector<std::int8_t>> rows_;
    friend struct AstBuilder;
};

enum class ColumnClass { AllZero, ZeroSum, One10, One11 };
enum class ColumnSide { Left, Central, Right };

struct ColumnInfo {
    int abs_col = 0;   // absolute column c in [1, 2n-1]
    ColumnSide side = ColumnSide::Central;
    int label = -1;    // c-1 left of center, c-2 right of center, -1 central
    ColumnClass cls = ColumnClass::AllZero;
};

std::vector<ColumnInfo> column_profile(const AstTriangle& t);

// 1 + number of 11-columns left of center + number of 10-columns right of it.
int rho(const AstTriangle& t);

// (l*, r*) = smallest and largest label of a non-all-zero non-central column;
// the triangle is an (n,l,r)-ASP exactly when l <= l* and r* <= r.
// Undefined (nullopt) for order 1, which has no non-central column.
std::optional<std::pair<int, int>> zero_margins(const AstTriangle& t);

// Mirror image in the central column; maps (n,l,r)-ASPs to
// (n, 2n-3-r, 2n-3-l)-ASPs and rho to n+1-rho.
AstTriangle reflect(const AstTriangle& t);

// ---------------------------------------------------------------------------
// Magog trapezoids and pentagons

// Shape of an (m,n,k,lambda)-Magog pentagon: the cells (p,q) of the
// (m,n,k)-Magog trapezoid (q in [1,k], q <= p <= n) that lie on the first
// lambda south-east diagonals counted from the top right, i.e. with
// d(p,q) = n + 2q - 1 - p <= lambda.
struct MagogShape {
    int m = 0, n = 0, k = 0, lambda = 0;

    bool operator==(const MagogShape&) const = default;
    // Smallest p for which (p,q) is kept.
    int p_min(int q) const { return std::max(q, n + 2 * q - 1 - lambda); }
    bool kept(int p, int q) const { return q >= 1 && q <= k && p <= n && p >= p_min(q); }
};

// Kept cells store positive integers; cut cells read as 1 (ones-completion).
// Conditions, checked on the completion: rows weakly increase in p, display
// columns weakly decrease (a(p,q) >= a(p+1,q+1)), and a(p,1) <= m + p.
class MagogPentagon {
public:
    // rows[q-1] lists the kept values of row q for p = p_min(q)..n.
    static MagogPentagon from_rows(MagogShape shape, std::vector<std::vector<int>> rows);

    const MagogShape& shape() const { return shape_; }
    int at(int p, int q) const;  // kept cell value
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    bool operator==(const MagogPentagon& o) const = default;

private:
    MagogShape shape_;
    std::vector<std::vector<int>> rows_;
};

// Full (m,n,k)-trapezoid of the pentagon with every cut cell set to 1;
// result[q-1][p-q] = a(p,q) for q in [1,k], p in [q,n].
std::vector<std::vector<int>> complete_magog(const MagogPentagon& p);

// tau = n + sum over i of (a(n-1,i) - a(n,i)) on the ones-completion, the sum
// running over i in [1, min(k, n-1)]. Satisfies 1 <= tau <= n.
int tau(const MagogPentagon& p);

// ---------------------------------------------------------------------------
// Gog trapezoids and pentagons

// Shape of an (m,n,k,l)-Gog pentagon: the first k columns of a triangular
// array with rows a(i,1..n+1-i), where the top-left staircase a(i,j) = j for
// i + j <= l + 1 is fixed. Conditions: rows strictly increase, columns weakly
// increase downward, a(i+1,j) <= a(i,j+1), and a(i,k) <= m + k + i - 1 for
// i in [1, n+1-k].
struct GogShape {
    int m = 0, n = 0, k = 0, l = 0;

    bool operator==(const GogShape&) const = default;
    int j_max(int i) const { return std::min(k, n + 1 - i); }
    // First non-forced column of row i.
    int j_free_min(int i) const { return std::max(1, l + 2 - i); }
    bool forced(int i, int j) const { return i + j <= l + 1; }
};

class GogPentagon {
public:
    // rows[i-1] lists the free values of row i for j = j_free_min(i)..j_max(i).
    static GogPentagon from_rows(GogShape shape, std::vector<std::vector<int>> rows);

    const GogShape& shape() const { return shape_; }
    int at(int i, int j) const;  // any trapezoid cell: forced or free
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    bool operator==(const GogPentagon& o) const = default;

private:
    GogShape shape_;
    std::vector<std::vector<int>> rows_;
};

// Full trapezoid including forced cells; result[i-1][j-1] = a(i,j).
std::vector<std::vector<int>> complete_gog(const GogPentagon& g);

// ---------------------------------------------------------------------------
// Gelfand-Tsetlin patterns

// Order-n triangular pattern, row k holding k entries indexed j = 1..k from
// the right. Entries are positive, weakly increase along south-east diagonals
// (a(k,j) <= a(k+1,j)) and along north-east diagonals (a(k+1,j+1) <= a(k,j)),
// and the rightmost entry of each row satisfies a(k,1) <= k.
class GtPattern {
public:
    // rows[k-1] lists row k left to right, i.e. a(k,k), ..., a(k,1).
    static GtPattern from_rows(std::vector<std::vector<int>> rows);

    int order() const { return static_cast<int>(rows_.size()); }
    int at(int k, int j) const {
        if (k < 1 || k > order() || j < 1 || j > k) throw std::out_of_range("GT entry");
        return rows_[static_cast<size_t>(k - 1)][static_cast<size_t>(k - j)];
    }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    bool operator==(const GtPattern& o) const { return rows_ == o.rows_; }

private:
    std::vector<std::vector<int>> rows_;
};

// ---------------------------------------------------------------------------
// Alternating sign matrices

class Asm {
public:
    static Asm from_rows(std::vector<std::vector<int>> rows);

    int order() const { return static_cast<int>(rows_.size()); }
    int entry(int i, int j) const {  // 1-based
        if (i < 1 || i > order() || j < 1 || j > order()) throw std::out_of_range("ASM entry");
        return rows_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
    }
    const std::vector<std::vector<std::int8_t>>& rows() const { return rows_; }

    bool operator==(const Asm& o) const { return rows_ == o.rows_; }

private:
    std::vector<std::vector<std::int8_t>> rows_;
    friend struct AsmBuilder;
};

// Number of leading all-zero south-east diagonals at the top-right corner,
// diagonal m being the cells (i, n-m+i), i in [1,m].
int t_r(const Asm& a);
// Mirrored statistic at the top-left corner, diagonal m = cells (i, m+1-i).
int t_l(const Asm& a);
// Column of the unique 1 in the top row (1-based).
int rho_asm(const Asm& a);

// Monotone-triangle correspondence: row i of the triangle lists the positions
// of the 1s in the sum of matrix rows i..n. The result is a (0,n,n,0)-Gog
// pentagon. Throws if some partial sum falls outside {0,1}.
GogPentagon asm_to_gog(const Asm& a);
// Inverse; requires shape (0,n,n,0).
Asm gog_to_asm(const GogPentagon& g);

}  // namespace aspen
