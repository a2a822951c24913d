#include "valspec/spectra.hpp"

#include <map>
#include <string>
#include <utility>

namespace valspec {

Integer fine_count(const Integer& n, unsigned long p) {
    const DigitString ds = to_digits(n, p);
    Integer product(1);
    for (unsigned long d : ds.digits()) product *= d + 1;
    return product;
}

Integer multinomial_fine_count(const Integer& n, unsigned long p, unsigned int k) {
    if (k < 1) throw std::invalid_argument("multinomial_fine_count: k must be >= 1");
    const DigitString ds = to_digits(n, p);
    Integer product(1);
    Integer factor;
    for (unsigned long d : ds.digits()) {
        mpz_bin_uiui(factor.get_mpz_t(), d + k - 1, k - 1);
        product *= factor;
    }
    return product;
}

CpkTable::CpkTable(unsigned long p, unsigned int k) : p_(p), k_(k) {
    require_prime(p);
    // Row 0 is the empty tuple; each later row sums a window of p entries
    // of the previous one.
    std::vector<Integer> row{Integer(1)};
    for (unsigned int level = 1; level <= k; ++level) {
        std::vector<Integer> next((p - 1) * level + 1);
        for (std::size_t m = 0; m < next.size(); ++m) {
            Integer acc(0);
            for (unsigned long d = 0; d < p; ++d) {
                if (m >= d && m - d < row.size()) acc += row[m - d];
            }
            next[m] = std::move(acc);
        }
        row = std::move(next);
    }
    values_ = std::move(row);
}

const Integer& CpkTable::operator()(const Integer& n) const {
    static const Integer zero(0);
    if (n < 0 || n >= Integer(static_cast<unsigned long>(values_.size()))) return zero;
    return values_[n.get_ui()];
}

Integer cpk(unsigned long p, unsigned int k, const Integer& n) {
    return CpkTable(p, k)(n);
}

namespace {

PolyMatrix matrix_from_table(const CpkTable& table, unsigned long d) {
    const unsigned int k = table.k();
    const unsigned long p = table.p();
    PolyMatrix m(k);
    for (unsigned int i = 0; i < k; ++i) {
        for (unsigned int j = 0; j < k; ++j) {
            // 0-indexed form of the 1-indexed entry c_{p,k}(p(j-1)+d-(i-1)) x^{i-1}.
            const Integer index = Integer(p) * j + Integer(d) - Integer(i);
            const Integer& c = table(index);
            if (c != 0) m.set(i, j, IntPoly::monomial(c, i));
        }
    }
    return m;
}

/// m * v for a column vector; used by the state evaluation, which consumes
/// digits most-significant first.
std::vector<IntPoly> mat_col_vec(const PolyMatrix& m, std::span<const IntPoly> v) {
    std::vector<IntPoly> out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (v[j].is_zero()) continue;
            out[i] += m.at(i, j) * v[j];
        }
    }
    return out;
}

/// Digit matrices are built lazily, one per distinct digit seen.
class MatrixCache {
public:
    MatrixCache(unsigned long p, unsigned int k) : table_(p, k) {}

    const PolyMatrix& operator()(unsigned long d) {
        auto it = cache_.find(d);
        if (it == cache_.end()) {
            it = cache_.emplace(d, matrix_from_table(table_, d)).first;
        }
        return it->second;
    }

private:
    CpkTable table_;
    std::map<unsigned long, PolyMatrix> cache_;
};

std::vector<IntPoly> unit_row(unsigned int k) {
    std::vector<IntPoly> e(k);
    e[0] = IntPoly::one();
    return e;
}

} // namespace

PolyMatrix transition_matrix(unsigned long p, unsigned int k, unsigned long d) {
    if (k < 1) throw std::invalid_argument("transition_matrix: k must be >= 1");
    if (d >= p) {
        throw std::invalid_argument("transition_matrix: digit " + std::to_string(d) +
                                    " out of range for base " + std::to_string(p));
    }
    return matrix_from_table(CpkTable(p, k), d);
}

IntPoly spectrum_over_digits(unsigned long p, unsigned int k,
                             std::span<const unsigned long> digits) {
    if (k < 1) throw std::invalid_argument("spectrum_over_digits: k must be >= 1");
    MatrixCache matrices(p, k);
    std::vector<IntPoly> v = unit_row(k);
    for (unsigned long d : digits) {
        if (d >= p) {
            throw std::invalid_argument("spectrum_over_digits: digit out of range");
        }
        v = row_vec_mat(v, matrices(d));
    }
    return v[0];
}

IntPoly spectrum(const SpectrumQuery& q) {
    const DigitString ds = to_digits(q.n, q.p);
    return spectrum_over_digits(q.p, q.k, ds.digits());
}

std::vector<IntPoly> spectrum_state(const SpectrumQuery& q) {
    const DigitString ds = to_digits(q.n, q.p);
    MatrixCache matrices(q.p, q.k);
    std::vector<IntPoly> state = unit_row(q.k);
    for (auto it = ds.digits().rbegin(); it != ds.digits().rend(); ++it) {
        state = mat_col_vec(matrices(*it), state);
    }
    return state;
}

namespace {

const IntPoly& recurrence_descend(const Integer& n, unsigned long p,
                                  std::map<Integer, IntPoly>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;

    Integer rest;
    const unsigned long d = mpz_fdiv_q_ui(rest.get_mpz_t(), n.get_mpz_t(), p);
    // T_p(pn + d) = (d+1) T_p(n) + (p-d-1) x^{nu_p(n)+1} T_p(n-1), the second
    // branch vanishing for n = 0.
    IntPoly value = Integer(d + 1) * recurrence_descend(rest, p, memo);
    if (rest >= 1 && d + 1 < p) {
        const IntPoly shift = IntPoly::monomial(Integer(p - d - 1), nu(rest, p) + 1);
        value += shift * recurrence_descend(rest - 1, p, memo);
    }
    return memo.emplace(n, std::move(value)).first->second;
}

} // namespace

IntPoly spectrum_by_recurrence(const SpectrumQuery& q) {
    if (q.k != 2) {
        throw unsupported_query("spectrum_by_recurrence: scalar recurrence exists only for k = 2");
    }
    std::map<Integer, IntPoly> memo;
    memo.emplace(Integer(0), IntPoly::one());
    return recurrence_descend(q.n, q.p, memo);
}

RatPoly spectrum_normalized(const SpectrumQuery& q) {
    if (q.k != 2) {
        throw unsupported_query("spectrum_normalized: defined for the binomial case k = 2");
    }
    return RatPoly::scaled(spectrum(q), fine_count(q.n, q.p));
}

Integer coefficient(const IntPoly& poly, std::size_t alpha) {
    return poly.coeff(alpha);
}

} // namespace valspec
