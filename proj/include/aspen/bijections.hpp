#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "aspen/objects.hpp"
#include "aspen/weight_poly.hpp"

namespace aspen {

// (n-1)-tuple of lattice paths made of unit north and east steps. Path j
// (1-based) takes exactly j steps from S_j = (j, -2j), so it ends on the
// antidiagonal at E_e = (e, -e) with e = j + #east(j). Margins (l, r) select
// the family of tuples that are pairwise vertex-disjoint, end at points with
// e <= r + 1, and whose last path stays weakly above y = x + l - r - 2n + 1.
// A member carries weight t^(number of paths ending with a north step); for
// l + r < 2n - 2 and r - l > n - 3 the family weight sum equals the
// (n,l,r)-pentagon generating polynomial.
struct PathTuple {
    std::vector<std::string> steps;  // steps[j-1]: path j, chars 'N' and 'E'

    // Validates that path j has exactly j steps over the alphabet {N, E}.
    static PathTuple from_steps(std::vector<std::string> steps);

    int order() const { return static_cast<int>(steps.size()) + 1; }
    int endpoint(int j) const;  // e with E_e = (e, -e)
    bool ends_north(int j) const;
    int north_count() const;  // weight exponent

    bool operator==(const PathTuple&) const = default;
};

// Lattice points visited by path j, start included, in step order.
std::vector<std::pair<int, int>> path_points(const PathTuple& t, int j);

// Family membership for margins (l, r); requires 0 <= l <= n-2 < r <= 2n-3.
bool tuple_in_family(const PathTuple& t, int l, int r);

// Family members of order n in lexicographic step order ('E' < 'N').
void for_each_tuple(int n, int l, int r, const std::function<void(const PathTuple&)>& fn);

// Sum of t^north_count over the whole family.
WeightPolynomial tuple_genpoly(int n, int l, int r);

// Family members grouped by ascending endpoint vector (e_1, ..., e_{n-1});
// vectors reached by no member are absent. On the window l + r < 2n - 2,
// r - l > n - 3 each group's weight sum equals endpoint_det for its vector.
std::map<std::vector<int>, WeightPolynomial> tuples_by_endpoint(int n, int l, int r);

// Pattern recording, slot by slot, which path separates the slot from the
// right edge. Shifting path i by (-i, i) lines all starts up on x = 0 and
// lets east-step prefix counts E_i(s) compare against slot positions: entry
// (k, j) is n - i for the largest i >= n - k with E_i(k - n + i) < j, and n
// when no path passes left of the slot. Requires vertex-disjoint paths.
GtPattern tuple_to_gt(const PathTuple& t);

// Inverse: row k of the pattern gives the east-step count of shifted path i
// after k - n + i steps as k minus the number of entries <= n - i. Throws
// ValidationError if consecutive rows move a count by more than one step.
PathTuple gt_to_tuple(const GtPattern& g);

// Generating function of the single monotone paths from S_j = (j, -2j) to
// E_e = (e, -e) staying weakly above y = x + l - r - 2n + 1, counted with
// weight t when the final step is north. Equals formula_entry(n, l, r, e, j)
// on the window l + r < 2n - 2, r - l > n - 3. Empty set gives zero.
WeightPolynomial brute_path_gf(int n, int l, int r, int j, int e);

// A family tuple after translating path j by (-j, +j): every path starts at
// (0, -j) and ends on y = -x. Step sequences are unchanged by the shift.
struct KissingTuple {
    std::vector<std::string> steps;  // steps[j-1]: shifted path j, chars 'N' and 'E'

    int order() const { return static_cast<int>(steps.size()) + 1; }
    // a with end point (a, -a); equals the unshifted endpoint minus j.
    int endpoint(int j) const;

    bool operator==(const KissingTuple&) const = default;
};

KissingTuple shift(const PathTuple& t);
PathTuple unshift(const KissingTuple& k);

// Paths may touch but not cross: wherever two consecutive shifted paths share
// a column, the later path occupies weakly lower y values. Holds for every
// shift of a vertex-disjoint tuple.
bool is_kissing(const KissingTuple& k);

// Same maps stated on the shifted tuples; the step sequences carry over, so
// these are shift-conjugates of tuple_to_gt and gt_to_tuple.
GtPattern kissing_to_gt(const KissingTuple& k);
KissingTuple gt_to_kissing(const GtPattern& g);

// Compares the single-endpoint determinant against the brute weight sum of
// the family members pinned to exactly these endpoints.
struct LgvReport {
    WeightPolynomial determinant;
    WeightPolynomial brute;
    bool pass = false;
};
LgvReport lgv_check(int n, int l, int r, const std::vector<int>& endpoints);

// Cuts the pattern down to the (0, n, r+2-n, r-l)-pentagon formed by its
// unforced cells: pentagon entry (p, q) is pattern entry (p, q), indexed from
// the right. Cells outside the pentagon shape, i.e. with q > r+2-n or
// n + 2q - 1 - p > r - l, must equal 1; throws ValidationError otherwise.
MagogPentagon gt_to_magog(const GtPattern& g, int l, int r);

// Inverse ones-padding of a pentagon with m = 0 back to the order-n pattern.
GtPattern magog_to_gt(const MagogPentagon& m);

}  // namespace aspen
