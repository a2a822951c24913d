#include "valspec/sequences.hpp"

#include <stdexcept>

#include "valspec/padic.hpp"
#include "valspec/poly_matrix.hpp"
#include "valspec/spectra.hpp"

namespace valspec {

int thue_morse(const Integer& n) {
    if (n < 0) throw std::invalid_argument("thue_morse: n must be >= 0");
    return static_cast<int>(mpz_popcount(n.get_mpz_t()) & 1);
}

namespace {

PolyMatrix stern_matrix(unsigned long digit) {
    PolyMatrix a(2);
    if (digit == 0) {
        // [[x, 0], [1, 1]]
        a.set(0, 0, IntPoly::monomial(Integer(1), 1));
        a.set(1, 0, IntPoly::one());
        a.set(1, 1, IntPoly::one());
    } else {
        // [[1, 1], [0, x]]
        a.set(0, 0, IntPoly::one());
        a.set(0, 1, IntPoly::one());
        a.set(1, 1, IntPoly::monomial(Integer(1), 1));
    }
    return a;
}

} // namespace

IntPoly stern_poly(const Integer& n) {
    static const PolyMatrix a0 = stern_matrix(0);
    static const PolyMatrix a1 = stern_matrix(1);
    const DigitString bits = to_digits(n, 2);
    std::vector<IntPoly> v(2);
    v[0] = IntPoly::one();
    for (unsigned long bit : bits.digits()) {
        v = row_vec_mat(v, bit ? a1 : a0);
    }
    // The selector [0 1]^T picks the second component.
    return v[1];
}

SternIdentityReport check_stern_identity(const Integer& n) {
    SternIdentityReport report;
    report.lhs = spectrum(SpectrumQuery(2, 2, n)).eval(Integer(-1));
    const Integer stern_value = stern_poly(n + 1).eval(Integer(-2));
    report.rhs = thue_morse(n) ? -stern_value : stern_value;
    return report;
}

} // namespace valspec
