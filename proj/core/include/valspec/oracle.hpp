#pragma once

#include <cstdint>
#include <vector>

#include "valspec/padic.hpp"
#include "valspec/poly.hpp"
#include "valspec/query.hpp"

// Independent brute-force ground truth for the fast paths. Nothing in this
// namespace may call into the padic valuation formulas or the spectra
// module: values come from exact integer arithmetic and trial division only,
// so agreement with the fast paths is evidence, not circularity.
namespace valspec::oracle {

/// mult m = (total m)! / (m_1! m_2! ... m_k!), as a product of binomials of
/// prefix sums computed by iterated exact division. Divisibility is checked
/// at every step.
Integer multinomial_exact(const Tuple& m);

/// Number of times p divides v, by repeated division. Requires v >= 1 and
/// p >= 2 (p need not be prime here).
unsigned long valuation_trial_division(const Integer& v, unsigned long p);

/// Enumerates the binomial(total + k - 1, k - 1) weak compositions of
/// `total` into k parts, colexicographically on the suffix, starting from
/// (total, 0, ..., 0). Carries the exact multinomial coefficient of the
/// current tuple, updated by one exact multiplication and one checked exact
/// division per step.
class CompositionCursor {
public:
    CompositionCursor(std::size_t k, Integer total);

    const std::vector<Integer>& current() const { return entries_; }
    Tuple current_tuple() const { return Tuple(entries_); }
    const Integer& multinomial() const { return mult_; }

    /// Advances to the next composition; false once all have been visited.
    bool advance();

    /// binomial(total + k - 1, k - 1), the exact number of compositions.
    Integer count() const;

private:
    Integer total_;
    std::vector<Integer> entries_;
    Integer mult_;
};

inline constexpr std::uint64_t default_enumeration_budget = 10'000'000;

/// T_{p,k}(n, x) by full enumeration: histogram of
/// valuation_trial_division(mult m, p) over all compositions m of n into k
/// parts, packaged as a polynomial. Throws enumeration_too_large if the
/// composition count exceeds the budget.
IntPoly oracle_spectrum(const SpectrumQuery& q,
                        std::uint64_t budget = default_enumeration_budget);

} // namespace valspec::oracle
