#include "valspec/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace valspec {

IntPoly::IntPoly(Integer constant) {
    coeffs_.push_back(std::move(constant));
    normalize();
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

IntPoly IntPoly::monomial(Integer c, std::size_t e) {
    if (c == 0) return IntPoly();
    std::vector<Integer> cs(e + 1);
    cs[e] = std::move(c);
    return IntPoly(std::move(cs));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

const Integer& IntPoly::coeff(std::size_t i) const {
    static const Integer zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Integer IntPoly::eval(const Integer& x) const {
    Integer acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    r += b;
    return r;
}

IntPoly operator-(const IntPoly& a) {
    IntPoly r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    return a + (-b);
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return IntPoly(std::move(out));
}

IntPoly operator*(const Integer& c, const IntPoly& a) {
    if (c == 0) return IntPoly();
    IntPoly r = a;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
    os << '[';
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) os << ' ';
        os << p.coeffs()[i];
    }
    return os << ']';
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    normalize();
}

RatPoly RatPoly::scaled(const IntPoly& p, const Integer& denom) {
    if (denom == 0) throw std::invalid_argument("RatPoly::scaled: zero denominator");
    std::vector<Rational> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        Rational q(c, denom);
        q.canonicalize();
        out.push_back(std::move(q));
    }
    return RatPoly(std::move(out));
}

void RatPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> RatPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

const Rational& RatPoly::coeff(std::size_t i) const {
    static const Rational zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

Rational RatPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const RatPoly& p) {
    os << '[';
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) os << ' ';
        os << p.coeffs()[i];
    }
    return os << ']';
}

} // namespace valspec
