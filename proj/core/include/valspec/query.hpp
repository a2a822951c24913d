#pragma once

#include "valspec/integer.hpp"
#include "valspec/padic.hpp"

namespace valspec {

/// Parameters of one spectrum computation: prime base p, tuple length k
/// (k = 2 is the binomial case), and the row index n. Validated on
/// construction so downstream code can assume p prime, k >= 1, n >= 0.
struct SpectrumQuery {
    unsigned long p;
    unsigned int k;
    Integer n;

    SpectrumQuery(unsigned long p_, unsigned int k_, Integer n_) : p(p_), k(k_), n(std::move(n_)) {
        require_prime(p);
        if (k < 1) throw std::invalid_argument("SpectrumQuery: k must be >= 1");
        if (n < 0) throw std::invalid_argument("SpectrumQuery: n must be >= 0");
    }
};

} // namespace valspec
