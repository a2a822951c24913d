#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "valspec/poly.hpp"

namespace valspec {

/// Square matrix of IntPoly entries, row-major, dim >= 1.
class PolyMatrix {
public:
    explicit PolyMatrix(std::size_t dim); // zero matrix
    static PolyMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    const IntPoly& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
    void set(std::size_t i, std::size_t j, IntPoly value) { entries_[i * dim_ + j] = std::move(value); }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    bool operator==(const PolyMatrix&) const = default;

private:
    std::size_t dim_;
    std::vector<IntPoly> entries_;
};

/// Left action v * m of a row vector on a matrix. Costs dim^2 polynomial
/// multiplications, which is why the digit products thread a vector instead
/// of multiplying matrices.
std::vector<IntPoly> row_vec_mat(std::span<const IntPoly> v, const PolyMatrix& m);

} // namespace valspec
