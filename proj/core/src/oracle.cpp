#include "valspec/oracle.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace valspec::oracle {

namespace {

void multiply_then_divide(Integer& acc, const Integer& factor, const Integer& divisor) {
    acc *= factor;
    if (!mpz_divisible_p(acc.get_mpz_t(), divisor.get_mpz_t())) {
        throw std::logic_error("oracle: exact division failed");
    }
    mpz_divexact(acc.get_mpz_t(), acc.get_mpz_t(), divisor.get_mpz_t());
}

/// binomial(n, r) by iterated exact division; each partial product is an
/// exact binomial, so every division is checked.
Integer exact_binomial(const Integer& n, const Integer& r) {
    if (r < 0 || r > n) return Integer(0);
    Integer acc(1);
    for (Integer j(1); j <= r; ++j) {
        multiply_then_divide(acc, n - r + j, j);
    }
    return acc;
}

} // namespace

Integer multinomial_exact(const Tuple& m) {
    Integer acc(1);
    Integer prefix(0);
    for (const auto& entry : m.entries()) {
        prefix += entry;
        acc *= exact_binomial(prefix, entry);
    }
    return acc;
}

unsigned long valuation_trial_division(const Integer& v, unsigned long p) {
    if (v < 1) throw std::invalid_argument("valuation_trial_division: value must be >= 1");
    if (p < 2) throw std::invalid_argument("valuation_trial_division: divisor must be >= 2");
    unsigned long count = 0;
    Integer rest = v;
    Integer quotient;
    while (mpz_fdiv_q_ui(quotient.get_mpz_t(), rest.get_mpz_t(), p) == 0) {
        std::swap(rest, quotient);
        ++count;
    }
    return count;
}

CompositionCursor::CompositionCursor(std::size_t k, Integer total)
    : total_(std::move(total)), entries_(k), mult_(1) {
    if (k < 1) throw std::invalid_argument("CompositionCursor: k must be >= 1");
    if (total_ < 0) throw std::invalid_argument("CompositionCursor: total must be >= 0");
    entries_[0] = total_;
}

bool CompositionCursor::advance() {
    if (entries_.back() == total_) return false; // (0, ..., 0, total) is last
    // Move one unit from the leftmost nonzero entry rightward, dumping the
    // remainder of that entry back into position 0.
    std::size_t t = 0;
    while (entries_[t] == 0) ++t;
    const Integer a = entries_[t];
    const Integer b = entries_[t + 1];
    entries_[t] = 0;
    entries_[t + 1] = b + 1;
    entries_[0] = a - 1;
    // mult scales by a / (b + 1): one entry's factorial loses its top factor,
    // its neighbor's gains one.
    multiply_then_divide(mult_, a, b + 1);
    return true;
}

Integer CompositionCursor::count() const {
    return exact_binomial(total_ + Integer(static_cast<unsigned long>(entries_.size())) - 1,
                          Integer(static_cast<unsigned long>(entries_.size())) - 1);
}

IntPoly oracle_spectrum(const SpectrumQuery& q, std::uint64_t budget) {
    CompositionCursor cursor(q.k, q.n);
    const Integer tuples = cursor.count();
    if (tuples > Integer(static_cast<unsigned long>(budget))) {
        throw enumeration_too_large("oracle_spectrum: enumeration needs " + tuples.get_str() +
                                    " tuples, budget is " + std::to_string(budget));
    }
    std::vector<Integer> histogram;
    do {
        const unsigned long v = valuation_trial_division(cursor.multinomial(), q.p);
        if (v >= histogram.size()) histogram.resize(v + 1);
        histogram[v] += 1;
    } while (cursor.advance());
    return IntPoly(std::move(histogram));
}

} // namespace valspec::oracle
