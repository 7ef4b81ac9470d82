#include "aspen/bijections.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "aspen/formulas.hpp"

namespace aspen {
namespace {

void check_margins(int n, int l, int r) {
    if (n < 2 || l < 0 || l > n - 2 || r <= n - 2 || r > 2 * n - 3)
        throw std::invalid_argument("margins require 0 <= l <= n-2 < r <= 2n-3");
}

// Path j sits weakly above y = x + l - r - 2n + 1 iff after s steps with
// east(s) east steps (point (j+east, -2j+s-east)) it satisfies
// 2*east(s) <= s + slack with slack = r - l + 2n - 1 - 3j, which is
// r - l - n + 2 for the last path.
bool prefix_above_line(int east, int s, int slack) { return 2 * east <= s + slack; }

// Depth-first scan over family members; paths are built step by step with
// every visited point held in `used`, so vertex-disjointness prunes early.
struct TupleScan {
    int n, r, slack;
    const std::function<void(const PathTuple&)>& fn;
    std::vector<std::string> steps;
    std::set<std::pair<int, int>> used;

    void next_path(int j) {
        if (j > n - 1) {
            fn(PathTuple::from_steps(steps));
            return;
        }
        const std::pair<int, int> start{j, -2 * j};
        if (used.count(start)) return;
        if (j == n - 1 && !prefix_above_line(0, 0, slack)) return;
        used.insert(start);
        steps.emplace_back();
        extend(j, j, -2 * j, 0, 0);
        steps.pop_back();
        used.erase(start);
    }

    void extend(int j, int x, int y, int taken, int east) {
        if (taken == j) {
            next_path(j + 1);
            return;
        }
        // 'E' before 'N' keeps the visit order lexicographic.
        if (x + 1 <= r + 1) try_step(j, x + 1, y, taken, east + 1, 'E');
        try_step(j, x, y + 1, taken, east, 'N');
    }

    void try_step(int j, int x, int y, int taken, int east, char c) {
        if (j == n - 1 && !prefix_above_line(east, taken + 1, slack)) return;
        const std::pair<int, int> pt{x, y};
        if (used.count(pt)) return;
        used.insert(pt);
        steps[static_cast<size_t>(j - 1)].push_back(c);
        extend(j, x, y, taken + 1, east);
        steps[static_cast<size_t>(j - 1)].pop_back();
        used.erase(pt);
    }
};

// Inserts every point of every path into out; false if two paths collide.
bool collect_points(const PathTuple& t, std::set<std::pair<int, int>>& out) {
    for (int j = 1; j <= t.order() - 1; ++j)
        for (const auto& pt : path_points(t, j))
            if (!out.insert(pt).second) return false;
    return true;
}

}  // namespace

PathTuple PathTuple::from_steps(std::vector<std::string> steps) {
    for (size_t j = 0; j < steps.size(); ++j) {
        if (steps[j].size() != j + 1)
            throw std::invalid_argument("path " + std::to_string(j + 1) + " must have " +
                                        std::to_string(j + 1) + " steps");
        for (char c : steps[j])
            if (c != 'N' && c != 'E') throw std::invalid_argument("steps are 'N' or 'E'");
    }
    PathTuple t;
    t.steps = std::move(steps);
    return t;
}

int PathTuple::endpoint(int j) const {
    const std::string& s = steps.at(static_cast<size_t>(j - 1));
    return j + static_cast<int>(std::count(s.begin(), s.end(), 'E'));
}

bool PathTuple::ends_north(int j) const { return steps.at(static_cast<size_t>(j - 1)).back() == 'N'; }

int PathTuple::north_count() const {
    int c = 0;
    for (int j = 1; j <= order() - 1; ++j) c += ends_north(j);
    return c;
}

std::vector<std::pair<int, int>> path_points(const PathTuple& t, int j) {
    const std::string& s = t.steps.at(static_cast<size_t>(j - 1));
    std::vector<std::pair<int, int>> pts;
    pts.reserve(s.size() + 1);
    int x = j, y = -2 * j;
    pts.emplace_back(x, y);
    for (char c : s) {
        if (c == 'E')
            ++x;
        else if (c == 'N')
            ++y;
        else
            throw std::invalid_argument("steps are 'N' or 'E'");
        pts.emplace_back(x, y);
    }
    return pts;
}

bool tuple_in_family(const PathTuple& t, int l, int r) {
    const int n = t.order();
    check_margins(n, l, r);
    std::set<std::pair<int, int>> used;
    if (!collect_points(t, used)) return false;
    for (int j = 1; j <= n - 1; ++j)
        if (t.endpoint(j) > r + 1) return false;
    const int slack = r - l - n + 2;
    int east = 0, s = 0;
    if (!prefix_above_line(east, s, slack)) return false;
    for (char c : t.steps.back()) {
        ++s;
        if (c == 'E') ++east;
        if (!prefix_above_line(east, s, slack)) return false;
    }
    return true;
}

void for_each_tuple(int n, int l, int r, const std::function<void(const PathTuple&)>& fn) {
    check_margins(n, l, r);
    TupleScan scan{n, r, r - l - n + 2, fn, {}, {}};
    scan.next_path(1);
}

WeightPolynomial tuple_genpoly(int n, int l, int r) {
    WeightPolynomial total;
    for_each_tuple(n, l, r, [&](const PathTuple& t) { total += WeightPolynomial::monomial(t.north_count()); });
    return total;
}

std::map<std::vector<int>, WeightPolynomial> tuples_by_endpoint(int n, int l, int r) {
    std::map<std::vector<int>, WeightPolynomial> out;
    for_each_tuple(n, l, r, [&](const PathTuple& t) {
        std::vector<int> e;
        e.reserve(static_cast<size_t>(n - 1));
        for (int j = 1; j <= n - 1; ++j) e.push_back(t.endpoint(j));
        out[e] += WeightPolynomial::monomial(t.north_count());
    });
    return out;
}

WeightPolynomial brute_path_gf(int n, int l, int r, int j, int e) {
    check_margins(n, l, r);
    if (j < 1 || j > n - 1) throw std::invalid_argument("brute_path_gf: j lies in [1, n-1]");
    if (e < 1 || e > r + 1) throw std::invalid_argument("brute_path_gf: e lies in [1, r+1]");
    const int easts = e - j;
    if (easts < 0 || easts > j) return {};
    const int slack = r - l + 2 * n - 1 - 3 * j;
    if (!prefix_above_line(0, 0, slack)) return {};
    WeightPolynomial total;
    // Walks all step prefixes; s steps taken, east of them east steps.
    auto walk = [&](auto&& self, int s, int east, char last) -> void {
        if (s == j) {
            if (east == easts) total += WeightPolynomial::monomial(last == 'N' ? 1 : 0);
            return;
        }
        if (east < easts && prefix_above_line(east + 1, s + 1, slack)) self(self, s + 1, east + 1, 'E');
        if (s - east < j - easts) self(self, s + 1, east, 'N');
    };
    walk(walk, 0, 0, 'E');
    return total;
}

int KissingTuple::endpoint(int j) const {
    const std::string& s = steps.at(static_cast<size_t>(j - 1));
    return static_cast<int>(std::count(s.begin(), s.end(), 'E'));
}

KissingTuple shift(const PathTuple& t) { return KissingTuple{t.steps}; }

PathTuple unshift(const KissingTuple& k) { return PathTuple::from_steps(k.steps); }

bool is_kissing(const KissingTuple& k) {
    unshift(k);  // validates step lengths and alphabet
    const int n = k.order();
    // spans[x] is the (low, high) y-interval path j occupies at column x.
    auto column_spans = [](const std::string& s, int j) {
        std::vector<std::pair<int, int>> spans;
        int y = -j;
        spans.emplace_back(y, y);
        for (char c : s) {
            if (c == 'N')
                spans.back().second = ++y;
            else
                spans.emplace_back(y, y);
        }
        return spans;
    };
    std::vector<std::pair<int, int>> above;
    for (int j = 1; j <= n - 1; ++j) {
        auto cur = column_spans(k.steps[static_cast<size_t>(j - 1)], j);
        if (j > 1)
            for (size_t x = 0; x < cur.size() && x < above.size(); ++x)
                if (cur[x].first > above[x].first || cur[x].second > above[x].second) return false;
        above = std::move(cur);
    }
    return true;
}

LgvReport lgv_check(int n, int l, int r, const std::vector<int>& endpoints) {
    LgvReport rep;
    rep.determinant = endpoint_det(n, l, r, endpoints);
    auto groups = tuples_by_endpoint(n, l, r);
    if (auto it = groups.find(endpoints); it != groups.end()) rep.brute = it->second;
    rep.pass = rep.determinant == rep.brute;
    return rep;
}

GtPattern tuple_to_gt(const PathTuple& t) {
    const int n = t.order();
    std::set<std::pair<int, int>> used;
    if (!collect_points(t, used)) throw std::invalid_argument("paths must be vertex-disjoint");
    // east[i][s]: east steps among the first s steps of path i.
    std::vector<std::vector<int>> east(static_cast<size_t>(n));
    for (int i = 1; i <= n - 1; ++i) {
        auto& e = east[static_cast<size_t>(i)];
        e.assign(static_cast<size_t>(i + 1), 0);
        for (int s = 1; s <= i; ++s)
            e[static_cast<size_t>(s)] =
                e[static_cast<size_t>(s - 1)] + (t.steps[static_cast<size_t>(i - 1)][static_cast<size_t>(s - 1)] == 'E');
    }
    std::vector<std::vector<int>> rows(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        rows[static_cast<size_t>(k - 1)].resize(static_cast<size_t>(k));
        for (int j = 1; j <= k; ++j) {
            int value = n;
            for (int i = n - 1; i >= std::max(1, n - k); --i)
                if (east[static_cast<size_t>(i)][static_cast<size_t>(k - n + i)] < j) {
                    value = n - i;
                    break;
                }
            rows[static_cast<size_t>(k - 1)][static_cast<size_t>(k - j)] = value;
        }
    }
    return GtPattern::from_rows(std::move(rows));
}

GtPattern kissing_to_gt(const KissingTuple& k) { return tuple_to_gt(unshift(k)); }

KissingTuple gt_to_kissing(const GtPattern& g) { return shift(gt_to_tuple(g)); }

PathTuple gt_to_tuple(const GtPattern& g) {
    const int n = g.order();
    std::vector<std::string> steps(static_cast<size_t>(n - 1));
    for (int i = 1; i <= n - 1; ++i) {
        std::string s;
        s.reserve(static_cast<size_t>(i));
        int prev = 0;
        for (int taken = 1; taken <= i; ++taken) {
            const int k = n - i + taken;
            int below = 0;
            for (int j = 1; j <= k; ++j) below += g.at(k, j) <= n - i;
            const int cur = k - below;
            if (cur == prev)
                s.push_back('N');
            else if (cur == prev + 1)
                s.push_back('E');
            else
                throw ValidationError("row " + std::to_string(k) + " does not continue path " + std::to_string(i));
            prev = cur;
        }
        steps[static_cast<size_t>(i - 1)] = std::move(s);
    }
    return PathTuple::from_steps(std::move(steps));
}

MagogPentagon gt_to_magog(const GtPattern& g, int l, int r) {
    const int n = g.order();
    check_margins(n, l, r);
    const MagogShape shape{0, n, r + 2 - n, r - l};
    for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= k; ++j)
            if (!shape.kept(k, j) && g.at(k, j) != 1)
                throw ValidationError("entry (" + std::to_string(k) + "," + std::to_string(j) +
                                      ") lies outside the pentagon but is not 1");
    std::vector<std::vector<int>> rows(static_cast<size_t>(shape.k));
    for (int q = 1; q <= shape.k; ++q)
        for (int p = shape.p_min(q); p <= n; ++p) rows[static_cast<size_t>(q - 1)].push_back(g.at(p, q));
    return MagogPentagon::from_rows(shape, std::move(rows));
}

GtPattern magog_to_gt(const MagogPentagon& m) {
    const MagogShape& s = m.shape();
    if (s.m != 0) throw std::invalid_argument("pentagon must have m = 0");
    std::vector<std::vector<int>> rows(static_cast<size_t>(s.n));
    for (int k = 1; k <= s.n; ++k) rows[static_cast<size_t>(k - 1)].assign(static_cast<size_t>(k), 1);
    for (int q = 1; q <= s.k; ++q)
        for (int p = s.p_min(q); p <= s.n; ++p) rows[static_cast<size_t>(p - 1)][static_cast<size_t>(p - q)] = m.at(p, q);
    return GtPattern::from_rows(std::move(rows));
}

}  // namespace aspen
