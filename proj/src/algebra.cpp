#include "aspen/algebra.hpp"

#include <cstdint>
#include <sstream>
#include <unordered_map>

namespace aspen {

mpz_class binom(long a, long b) {
    if (a < 0) throw std::invalid_argument("binom: negative upper index");
    if (b < 0 || b > a) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

namespace {

WeightPolynomial det_cofactor(const PolyMatrix& m, std::vector<int>& cols, int row) {
    const int n = static_cast<int>(m.size());
    if (row == n) return WeightPolynomial(1);
    WeightPolynomial acc;
    for (size_t k = 0; k < cols.size(); ++k) {
        int c = cols[k];
        if (m[static_cast<size_t>(row)][static_cast<size_t>(c)].is_zero()) continue;
        cols.erase(cols.begin() + static_cast<long>(k));
        WeightPolynomial sub = det_cofactor(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<long>(k), c);
        WeightPolynomial term = m[static_cast<size_t>(row)][static_cast<size_t>(c)] * sub;
        if (k % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

WeightPolynomial det_bareiss(PolyMatrix m) {
    const int n = static_cast<int>(m.size());
    int sign = 1;
    WeightPolynomial prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i) {
            if (!m[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return {};
        if (pivot != k) {
            std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(k)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                WeightPolynomial num =
                    m[static_cast<size_t>(i)][static_cast<size_t>(j)] * m[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                    m[static_cast<size_t>(i)][static_cast<size_t>(k)] * m[static_cast<size_t>(k)][static_cast<size_t>(j)];
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = num.divided_exact(prev);
            }
            m[static_cast<size_t>(i)][static_cast<size_t>(k)] = {};
        }
        prev = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    WeightPolynomial d = m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    return sign < 0 ? -d : d;
}

}  // namespace

WeightPolynomial det(PolyMatrix m) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("det: matrix not square");
    if (n == 0) return WeightPolynomial(1);
    if (n <= 4) {
        std::vector<int> cols(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) cols[static_cast<size_t>(j)] = j;
        return det_cofactor(m, cols, 0);
    }
    return det_bareiss(std::move(m));
}

SkewMatrix::SkewMatrix(int size) : size_(size) {
    if (size < 0) throw std::invalid_argument("SkewMatrix: negative size");
    up_.resize(static_cast<size_t>(size) * (static_cast<size_t>(size) > 0 ? static_cast<size_t>(size - 1) : 0) / 2);
}

size_t SkewMatrix::idx(int i, int j) const {
    if (!(0 <= i && i < j && j < size_)) throw std::out_of_range("SkewMatrix: bad upper index");
    // Row-major strict upper triangle.
    return static_cast<size_t>(i) * static_cast<size_t>(size_) - static_cast<size_t>(i) * (static_cast<size_t>(i) + 1) / 2 +
           static_cast<size_t>(j - i - 1);
}

const WeightPolynomial& SkewMatrix::upper(int i, int j) const { return up_[idx(i, j)]; }

void SkewMatrix::set_upper(int i, int j, WeightPolynomial v) { up_[idx(i, j)] = std::move(v); }

WeightPolynomial SkewMatrix::at(int i, int j) const {
    if (i < 0 || j < 0 || i >= size_ || j >= size_) throw std::out_of_range("SkewMatrix: bad index");
    if (i == j) return {};
    if (i < j) return up_[idx(i, j)];
    return -up_[idx(j, i)];
}

namespace {

WeightPolynomial pf_expand(const SkewMatrix& a, std::uint32_t mask,
                           std::unordered_map<std::uint32_t, WeightPolynomial>& memo) {
    if (mask == 0) return WeightPolynomial(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int first = __builtin_ctz(mask);
    WeightPolynomial acc;
    int pos = 1;  // position of j among remaining indices; first is position 1
    for (int j = first + 1; j < 32; ++j) {
        if (!(mask & (1u << j))) continue;
        ++pos;
        const WeightPolynomial& e = a.upper(first, j);
        if (!e.is_zero()) {
            std::uint32_t sub = mask & ~(1u << first) & ~(1u << j);
            WeightPolynomial term = e * pf_expand(a, sub, memo);
            if (pos % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
    }
    memo.emplace(mask, acc);
    return acc;
}

}  // namespace

WeightPolynomial pfaffian(const SkewMatrix& a) {
    const int n = a.size();
    if (n % 2 != 0) throw OddSizeError("pfaffian: matrix size must be even");
    if (n == 0) return WeightPolynomial(1);
    if (n > 31) throw std::invalid_argument("pfaffian: size too large");
    std::unordered_map<std::uint32_t, WeightPolynomial> memo;
    std::uint32_t mask = (n == 32) ? 0xffffffffu : ((1u << n) - 1u);
    return pf_expand(a, mask, memo);
}

std::vector<std::pair<mpz_class, int>> factorize(const mpz_class& v) {
    if (v < 1) throw std::invalid_argument("factorize: value must be >= 1");
    std::vector<std::pair<mpz_class, int>> out;
    mpz_class rest = v;
    auto pull = [&](const mpz_class& p) {
        int e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    pull(2);
    mpz_class p = 3;
    while (p * p <= rest) {
        pull(p);
        p += 2;
    }
    if (rest > 1) out.emplace_back(rest, 1);
    return out;
}

std::string format_factorization(const mpz_class& v, const std::string& sep) {
    if (v == 0) return "0";
    if (v == 1) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : factorize(v)) {
        if (!first) os << sep;
        first = false;
        os << p.get_str();
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

}  // namespace aspen
