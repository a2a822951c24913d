#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "valspec/poly.hpp"
#include "valspec/poly_matrix.hpp"
#include "valspec/query.hpp"

namespace valspec {

/// F_p(n): number of binomial coefficients in row n not divisible by p,
/// as the digit product (n_0 + 1)(n_1 + 1)...(n_l + 1). F_p(0) = 1.
Integer fine_count(const Integer& n, unsigned long p);

/// Number of multinomial coefficients with total n not divisible by p:
/// the digit product of binomial(n_i + k - 1, k - 1). Equals the constant
/// term of spectrum(p, k, n).
Integer multinomial_fine_count(const Integer& n, unsigned long p, unsigned int k);

/// Table of c_{p,k}(n) for 0 <= n <= (p-1)k, built by the row recurrence
/// c_{p,k}(n) = sum_{d<p} c_{p,k-1}(n-d). Out-of-range reads are 0.
class CpkTable {
public:
    CpkTable(unsigned long p, unsigned int k);

    unsigned long p() const { return p_; }
    unsigned int k() const { return k_; }
    std::size_t support() const { return values_.size(); } // (p-1)k + 1

    const Integer& operator()(const Integer& n) const;

    const std::vector<Integer>& values() const { return values_; }

private:
    unsigned long p_;
    unsigned int k_;
    std::vector<Integer> values_;
};

/// c_{p,k}(n): number of k-tuples of base-p digits with total n; zero for
/// n outside [0, (p-1)k].
Integer cpk(unsigned long p, unsigned int k, const Integer& n);

/// The k x k digit matrix whose 0-indexed (i, j) entry is
/// c_{p,k}(p*j + d - i) * x^i. For k = 2 this is
/// [[d+1, p-d-1], [d x, (p-d) x]].
PolyMatrix transition_matrix(unsigned long p, unsigned int k, unsigned long d);

/// T_{p,k}(n, x): the polynomial whose coefficient of x^a counts k-tuples m
/// with total n and nu_p(mult m) = a. Computed as
/// e * M(n_0) * M(n_1) * ... * M(n_l) * e^T, threading the row vector
/// e = [1, 0, ..., 0] through the digit matrices least-significant digit
/// first. That digit order is the single most error-prone convention in the
/// library; the golden-matrix and golden-table tests pin it.
IntPoly spectrum(const SpectrumQuery& q);

/// Digit product over an explicit digit sequence (little-endian, entries in
/// [0, p-1], leading zeros permitted). spectrum() is this applied to the
/// canonical digits of n; trailing zero digits never change the result.
IntPoly spectrum_over_digits(unsigned long p, unsigned int k,
                             std::span<const unsigned long> digits);

/// Full k-component state after consuming all digits of n: component i is
/// T_{p,k,i}(n, x), which is zero for n < i and
/// x^{nu_p(n!/(n-i)!) + i} * T_{p,k}(n - i, x) otherwise. Component 0 is
/// spectrum(q); for k = 2 component 1 is T'_p(n, x).
std::vector<IntPoly> spectrum_state(const SpectrumQuery& q);

/// T_p(n, x) by memoized descent on the scalar recurrence
/// T_p(pn + d) = (d+1) T_p(n) + (p-d-1) x^{nu_p(n)+1} T_p(n-1) (n >= 1),
/// an independent code path from the matrix product. Only the binomial case
/// has a scalar recurrence; k != 2 throws unsupported_query.
IntPoly spectrum_by_recurrence(const SpectrumQuery& q);

/// Normalized spectrum: spectrum(q) with every coefficient divided exactly
/// by fine_count(n, p), so the value at x = 0 is 1. Binomial case only.
RatPoly spectrum_normalized(const SpectrumQuery& q);

/// Coefficient of x^alpha; zero beyond the degree.
Integer coefficient(const IntPoly& poly, std::size_t alpha);

} // namespace valspec
