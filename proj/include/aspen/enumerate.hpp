#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

#include "aspen/objects.hpp"
#include "aspen/weight_poly.hpp"

namespace aspen {

// Exhaustive depth-first generators. The for_each_* functions run serially and
// visit objects in lexicographic row order (entry order -1 < 0 < 1). Counting
// and generating-function variants take a thread count: 1 selects the serial
// reference scan, larger values split the search at the first rows and run the
// branches under OpenMP. Results are identical for every thread count.

void for_each_ast(int n, const std::function<void(const AstTriangle&)>& fn);
// Pentagons of order n whose 1-column labels lie in [l, r]; requires
// 0 <= l <= n-2 < r <= 2n-3.
void for_each_asp(int n, int l, int r, const std::function<void(const AstTriangle&)>& fn);
std::vector<AstTriangle> enumerate_asts(int n);

mpz_class ast_count(int n, int threads = 1);
mpz_class asp_count(int n, int l, int r, int threads = 1);
// Coefficient of t^(p-1) counts the (n,l,r)-pentagons with rho = p.
WeightPolynomial asp_genpoly(int n, int l, int r, int threads = 1);

// Closed product form for the number of triangles of order n.
mpz_class ast_count_product_formula(int n);

void for_each_magog(const MagogShape& s, const std::function<void(const MagogPentagon&)>& fn);
mpz_class magog_count(const MagogShape& s, int threads = 1);
// Coefficient of t^(p-1) counts the pentagons with tau = p.
WeightPolynomial magog_genpoly(const MagogShape& s, int threads = 1);

void for_each_gog(const GogShape& s, const std::function<void(const GogPentagon&)>& fn);
mpz_class gog_count(const GogShape& s, int threads = 1);

void for_each_asm(int n, const std::function<void(const Asm&)>& fn);
mpz_class asm_count(int n, int threads = 1);
// Number of order-n matrices whose top-right corner has at least x all-zero
// antidiagonals.
mpz_class asm_count_tr_at_least(int n, int x);

}  // namespace aspen
