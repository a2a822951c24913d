#pragma once

#include "valspec/poly.hpp"

namespace valspec {

/// Thue-Morse sequence t(n): parity of the number of ones in the binary
/// representation of n.
int thue_morse(const Integer& n);

/// nth Stern polynomial S(n, x) = [1 0] A(n_0) A(n_1) ... A(n_l) [0 1]^T
/// over the base-2 digits of n, least-significant first, with
/// A(0) = [[x, 0], [1, 1]] and A(1) = [[1, 1], [0, x]]. S(0, x) is the
/// empty product picked off the off-diagonal, i.e. 0, consistent with the
/// classical diatomic value s(0) = 0.
IntPoly stern_poly(const Integer& n);

/// Both sides of T_2(n, -1) = (-1)^{t(n)} S(n+1, -2), evaluated exactly.
struct SternIdentityReport {
    Integer lhs; // T_2(n, -1)
    Integer rhs; // (-1)^{t(n)} S(n+1, -2)

    bool holds() const { return lhs == rhs; }
};

SternIdentityReport check_stern_identity(const Integer& n);

} // namespace valspec
