#include "aspen/weight_poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace aspen {

namespace {
const mpz_class kZero = 0;
}

WeightPolynomial::WeightPolynomial(long value) {
    if (value != 0) coeffs_.emplace_back(value);
}

WeightPolynomial::WeightPolynomial(mpz_class value) {
    if (value != 0) coeffs_.push_back(std::move(value));
}

WeightPolynomial WeightPolynomial::monomial(int degree, mpz_class coeff) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    WeightPolynomial p;
    if (coeff != 0) {
        p.coeffs_.assign(static_cast<size_t>(degree) + 1, kZero);
        p.coeffs_.back() = std::move(coeff);
    }
    return p;
}

WeightPolynomial WeightPolynomial::from_coeffs(std::vector<mpz_class> coeffs) {
    WeightPolynomial p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

void WeightPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& WeightPolynomial::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(d)];
}

mpz_class WeightPolynomial::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

WeightPolynomial& WeightPolynomial::operator+=(const WeightPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

WeightPolynomial& WeightPolynomial::operator-=(const WeightPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

WeightPolynomial operator*(const WeightPolynomial& a, const WeightPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    WeightPolynomial r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
}

WeightPolynomial& WeightPolynomial::operator*=(const WeightPolynomial& o) {
    *this = *this * o;
    return *this;
}

WeightPolynomial WeightPolynomial::operator-() const {
    WeightPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

WeightPolynomial WeightPolynomial::shifted(int by) const {
    if (is_zero()) return {};
    WeightPolynomial r;
    if (by >= 0) {
        r.coeffs_.assign(static_cast<size_t>(by), kZero);
        r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
        return r;
    }
    size_t drop = static_cast<size_t>(-by);
    if (coeffs_.size() <= drop) throw std::domain_error("shifted: negative shift truncates");
    for (size_t i = 0; i < drop; ++i)
        if (coeffs_[i] != 0) throw std::domain_error("shifted: negative shift truncates");
    r.coeffs_.assign(coeffs_.begin() + static_cast<long>(drop), coeffs_.end());
    return r;
}

WeightPolynomial WeightPolynomial::reversed(int deg) const {
    if (degree() > deg) throw std::invalid_argument("reversed: degree exceeds window");
    std::vector<mpz_class> out(static_cast<size_t>(deg) + 1, kZero);
    for (int d = 0; d <= deg; ++d) out[static_cast<size_t>(deg - d)] = coeff(d);
    return from_coeffs(std::move(out));
}

WeightPolynomial WeightPolynomial::divided_exact(const WeightPolynomial& d) const {
    if (d.is_zero()) throw std::domain_error("divided_exact: division by zero");
    if (is_zero()) return {};
    if (degree() < d.degree()) throw std::domain_error("divided_exact: not divisible");
    std::vector<mpz_class> rem = coeffs_;
    std::vector<mpz_class> quo(coeffs_.size() - d.coeffs_.size() + 1, kZero);
    const mpz_class& lead = d.coeffs_.back();
    for (int qd = static_cast<int>(quo.size()) - 1; qd >= 0; --qd) {
        mpz_class& top = rem[static_cast<size_t>(qd) + d.coeffs_.size() - 1];
        if (top == 0) continue;
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) throw std::domain_error("divided_exact: not divisible");
        quo[static_cast<size_t>(qd)] = q;
        for (size_t i = 0; i < d.coeffs_.size(); ++i)
            rem[static_cast<size_t>(qd) + i] -= q * d.coeffs_[i];
    }
    for (const auto& c : rem)
        if (c != 0) throw std::domain_error("divided_exact: not divisible");
    return from_coeffs(std::move(quo));
}

std::string WeightPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t d = 0; d < coeffs_.size(); ++d) {
        const mpz_class& c = coeffs_[d];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (d == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << "t";
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

std::vector<std::string> WeightPolynomial::coeff_strings() const {
    if (is_zero()) return {"0"};
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.get_str());
    return out;
}

}  // namespace aspen
