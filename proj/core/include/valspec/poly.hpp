#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "valspec/integer.hpp"

namespace valspec {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored by ascending degree. Canonical form: the last
/// stored coefficient is nonzero, or the vector is empty (zero polynomial).
/// The degree of the zero polynomial is not a number; degree() is empty.
/// Values are immutable after construction apart from compound assignment,
/// which replaces the whole value.
class IntPoly {
public:
    IntPoly() = default; // zero polynomial
    explicit IntPoly(Integer constant);
    explicit IntPoly(std::vector<Integer> coeffs);

    static IntPoly one() { return IntPoly(Integer(1)); }

    /// c * x^e
    static IntPoly monomial(Integer c, std::size_t e);

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const;

    /// Coefficient of x^i; zero beyond the stored degree.
    const Integer& coeff(std::size_t i) const;
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    /// Exact Horner evaluation.
    Rational eval(const Rational& x) const;
    Integer eval(const Integer& x) const;

    IntPoly& operator+=(const IntPoly& rhs);
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const Integer& c, const IntPoly& a);

    bool operator==(const IntPoly&) const = default;

private:
    void normalize();

    std::vector<Integer> coeffs_;
};

/// Ascending-coefficient debug rendering, e.g. "[2 1 2 4]".
std::ostream& operator<<(std::ostream& os, const IntPoly& p);

/// Univariate polynomial with exact rational coefficients, canonical form as
/// IntPoly. Every coefficient is a reduced fraction with positive denominator.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);

    /// p with every coefficient divided exactly by denom. denom must be nonzero.
    static RatPoly scaled(const IntPoly& p, const Integer& denom);

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const;
    const Rational& coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const;

    bool operator==(const RatPoly&) const = default;

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RatPoly& p);

} // namespace valspec
