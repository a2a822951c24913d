#include "valspec/padic.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace valspec {

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (unsigned long d = 3; d <= p / d; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

void require_prime(unsigned long p) {
    if (!is_prime(p)) {
        throw invalid_modulus("base " + std::to_string(p) + " is not a prime >= 2");
    }
}

DigitString::DigitString(unsigned long p, std::vector<unsigned long> digits)
    : p_(p), digits_(std::move(digits)) {
    require_prime(p_);
    for (unsigned long d : digits_) {
        if (d >= p_) {
            throw std::invalid_argument("digit " + std::to_string(d) + " out of range for base " +
                                        std::to_string(p_));
        }
    }
    if (!digits_.empty() && digits_.back() == 0) {
        throw std::invalid_argument("digit string has a most-significant zero digit");
    }
}

Integer DigitString::value() const {
    Integer n(0);
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
        n = n * static_cast<unsigned long>(p_) + *it;
    }
    return n;
}

DigitString to_digits(const Integer& n, unsigned long p) {
    require_prime(p);
    if (n < 0) throw std::invalid_argument("to_digits: n must be >= 0");
    std::vector<unsigned long> digits;
    Integer rest = n;
    while (rest != 0) {
        digits.push_back(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), p));
    }
    return DigitString(p, std::move(digits));
}

Tuple::Tuple(std::vector<Integer> entries) : entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        if (e < 0) throw std::invalid_argument("Tuple: entries must be >= 0");
    }
}

Integer Tuple::total() const {
    Integer s(0);
    for (const auto& e : entries_) s += e;
    return s;
}

Tuple Tuple::div(unsigned long q) const {
    std::vector<Integer> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) {
        Integer v;
        mpz_fdiv_q_ui(v.get_mpz_t(), e.get_mpz_t(), q);
        out.push_back(std::move(v));
    }
    return Tuple(std::move(out));
}

Tuple Tuple::mod(unsigned long q) const {
    std::vector<Integer> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) {
        out.emplace_back(mpz_fdiv_ui(e.get_mpz_t(), q));
    }
    return Tuple(std::move(out));
}

unsigned long nu(const Integer& n, unsigned long p) {
    require_prime(p);
    if (n <= 0) throw undefined_valuation("nu: argument must be >= 1");
    Integer reduced;
    const Integer base(p);
    return static_cast<unsigned long>(
        mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), base.get_mpz_t()));
}

Integer sigma(const Integer& n, unsigned long p) {
    require_prime(p);
    if (n < 0) throw std::invalid_argument("sigma: n must be >= 0");
    Integer sum(0);
    Integer rest = n;
    while (rest != 0) {
        sum += mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    }
    return sum;
}

std::size_t subword_count(const Integer& n, unsigned long p, std::span<const unsigned long> w) {
    if (w.empty()) throw std::invalid_argument("subword_count: empty word");
    for (unsigned long d : w) {
        if (d >= p) {
            throw std::invalid_argument("subword_count: word digit " + std::to_string(d) +
                                        " out of range for base " + std::to_string(p));
        }
    }
    // Most-significant-first representation; 0 is the single digit "0".
    std::vector<unsigned long> rep = to_digits(n, p).digits();
    if (rep.empty()) rep.push_back(0);
    std::reverse(rep.begin(), rep.end());

    if (w.size() > rep.size()) return 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i + w.size() <= rep.size(); ++i) {
        if (std::equal(w.begin(), w.end(), rep.begin() + static_cast<std::ptrdiff_t>(i))) ++count;
    }
    return count;
}

namespace {

Integer exact_quotient(const Integer& num, const Integer& den, const char* what) {
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw std::logic_error(std::string(what) + ": quotient is not an integer");
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

/// Carries involved in adding a to b in base p.
Integer carry_count(const Integer& a, const Integer& b, unsigned long p) {
    const auto da = to_digits(a, p).digits();
    const auto db = to_digits(b, p).digits();
    const std::size_t len = std::max(da.size(), db.size());
    Integer carries(0);
    unsigned long carry = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const unsigned long x = i < da.size() ? da[i] : 0;
        const unsigned long y = i < db.size() ? db[i] : 0;
        if (x + y + carry >= p) {
            carry = 1;
            ++carries;
        } else {
            carry = 0;
        }
    }
    return carries;
}

} // namespace

Integer legendre(const Integer& m, unsigned long p) {
    require_prime(p);
    if (m < 0) throw std::invalid_argument("legendre: m must be >= 0");
    return exact_quotient(m - sigma(m, p), Integer(p - 1), "legendre");
}

Integer kummer_binomial(const Integer& n, const Integer& m, unsigned long p) {
    require_prime(p);
    if (m < 0 || m > n) throw std::invalid_argument("kummer_binomial: need 0 <= m <= n");
    const Integer carries = carry_count(m, n - m, p);
    const Integer by_digit_sums =
        exact_quotient(sigma(m, p) + sigma(n - m, p) - sigma(n, p), Integer(p - 1),
                       "kummer_binomial");
    if (carries != by_digit_sums) {
        throw std::logic_error("kummer_binomial: carry count and digit-sum formula disagree");
    }
    return carries;
}

Integer kummer_multinomial(const Tuple& m, unsigned long p) {
    require_prime(p);
    Integer digit_sums(0);
    for (const auto& e : m.entries()) digit_sums += sigma(e, p);
    return exact_quotient(digit_sums - sigma(m.total(), p), Integer(p - 1), "kummer_multinomial");
}

ValuationRelationReport check_valuation_relation(const Tuple& m, unsigned long p, const Integer& n,
                                                 unsigned long d, std::size_t i) {
    require_prime(p);
    if (n < 0) throw std::invalid_argument("check_valuation_relation: n must be >= 0");
    if (d >= p) throw std::invalid_argument("check_valuation_relation: d out of range");
    if (m.k() == 0 || i >= m.k()) {
        throw std::invalid_argument("check_valuation_relation: need 0 <= i <= k-1");
    }
    const Integer pn_d = Integer(p) * n + static_cast<unsigned long>(d);
    const Integer total_m = pn_d - static_cast<unsigned long>(i);
    if (total_m < 0 || m.total() != total_m) {
        throw std::invalid_argument("check_valuation_relation: total(m) must equal p*n + d - i >= 0");
    }

    const Tuple quotients = m.div(p);
    const Tuple remainders = m.mod(p);
    ValuationRelationReport report;
    report.j = n - quotients.total();

    report.total_mod_matches =
        remainders.total() == Integer(p) * report.j + Integer(d) - Integer(static_cast<unsigned long>(i));
    report.j_in_range = report.j >= 0 && report.j <= Integer(static_cast<unsigned long>(m.k() - 1));

    report.lhs = legendre(pn_d, p) - legendre(total_m, p) + kummer_multinomial(m, p);
    // n - j = total(quotients) >= 0, so the right side is defined even when
    // a conclusion fails.
    report.rhs =
        legendre(n, p) - legendre(n - report.j, p) + kummer_multinomial(quotients, p) + report.j;
    report.valuation_identity = report.lhs == report.rhs;
    return report;
}

} // namespace valspec
