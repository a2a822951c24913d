#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "valspec/errors.hpp"
#include "valspec/integer.hpp"

namespace valspec {

/// Deterministic trial-division primality test.
bool is_prime(unsigned long p);

/// Throws invalid_modulus unless p is a prime >= 2. Called once at every
/// API boundary that takes a base; composite bases are rejected outright.
void require_prime(unsigned long p);

/// Little-endian base-p digit sequence of a non-negative integer.
///
/// Canonical: no trailing (most-significant) zero digit; the integer 0 is the
/// empty sequence, so a product indexed over its digits is the empty product.
/// Little-endian storage matches the digit order the matrix products consume
/// (least-significant digit first); rendering for humans reverses.
class DigitString {
public:
    DigitString(unsigned long p, std::vector<unsigned long> digits);

    unsigned long base() const { return p_; }
    const std::vector<unsigned long>& digits() const { return digits_; }
    std::size_t size() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }

    /// Reconstructs the integer the digits represent.
    Integer value() const;

    bool operator==(const DigitString&) const = default;

private:
    unsigned long p_;
    std::vector<unsigned long> digits_;
};

DigitString to_digits(const Integer& n, unsigned long p);

/// k-tuple of non-negative integers (k >= 0).
class Tuple {
public:
    Tuple() = default;
    explicit Tuple(std::vector<Integer> entries);

    std::size_t k() const { return entries_.size(); }
    const Integer& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Integer>& entries() const { return entries_; }

    Integer total() const;
    Tuple div(unsigned long q) const; // termwise floor division
    Tuple mod(unsigned long q) const; // termwise remainder

    bool operator==(const Tuple&) const = default;

private:
    std::vector<Integer> entries_;
};

/// nu_p(n): exponent of the highest power of p dividing n. Requires n >= 1;
/// no formula in this library evaluates nu_p(0) on valid inputs, so asking
/// for it is an error rather than a sentinel.
unsigned long nu(const Integer& n, unsigned long p);

/// Sum of the base-p digits of n.
Integer sigma(const Integer& n, unsigned long p);

/// Number of (possibly overlapping) occurrences of the word w in the standard
/// most-significant-first base-p representation of n. The representation of 0
/// is the single digit "0", so that subword products give F_p(0) = 1.
std::size_t subword_count(const Integer& n, unsigned long p, std::span<const unsigned long> w);

/// nu_p(m!) = (m - sigma_p(m)) / (p - 1).
Integer legendre(const Integer& m, unsigned long p);

/// nu_p(binomial(n, m)) for 0 <= m <= n, computed both as the number of
/// carries when adding m to n - m in base p and as
/// (sigma_p(m) + sigma_p(n-m) - sigma_p(n)) / (p - 1); the two routes must
/// agree or a logic_error is thrown.
Integer kummer_binomial(const Integer& n, const Integer& m, unsigned long p);

/// nu_p(mult m) via the digit-sum formula
/// (total sigma_p(m) - sigma_p(total m)) / (p - 1). The empty tuple has
/// mult () = 1 and valuation 0.
Integer kummer_multinomial(const Tuple& m, unsigned long p);

/// Outcome of checking the valuation relation lemma on one admissible input.
struct ValuationRelationReport {
    Integer j;                 // n - total(floor(m / p))
    bool total_mod_matches;    // total(m mod p) == p*j + d - i
    bool j_in_range;           // 0 <= j <= k - 1
    bool valuation_identity;   // lhs == rhs below
    Integer lhs;               // nu_p((pn+d)!/(pn+d-i)!) + nu_p(mult m)
    Integer rhs;               // nu_p(n!/(n-j)!) + nu_p(mult floor(m/p)) + j

    bool passed() const { return total_mod_matches && j_in_range && valuation_identity; }
};

/// Checks all three conclusions of the valuation relation for a tuple m with
/// total(m) = p*n + d - i, digit d, and 0 <= i <= k-1. Factorial-quotient
/// valuations are computed as legendre differences.
ValuationRelationReport check_valuation_relation(const Tuple& m, unsigned long p,
                                                 const Integer& n, unsigned long d,
                                                 std::size_t i);

} // namespace valspec
