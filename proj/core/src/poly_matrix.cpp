#include "valspec/poly_matrix.hpp"

#include <stdexcept>
#include <string>

#include "valspec/errors.hpp"

namespace valspec {

PolyMatrix::PolyMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim < 1) throw std::invalid_argument("PolyMatrix: dim must be >= 1");
}

PolyMatrix PolyMatrix::identity(std::size_t dim) {
    PolyMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.set(i, i, IntPoly::one());
    return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.dim() != b.dim()) {
        throw dimension_mismatch("matrix product: " + std::to_string(a.dim()) + "x" +
                                 std::to_string(a.dim()) + " times " + std::to_string(b.dim()) +
                                 "x" + std::to_string(b.dim()));
    }
    const std::size_t n = a.dim();
    PolyMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            IntPoly acc;
            for (std::size_t t = 0; t < n; ++t) acc += a.at(i, t) * b.at(t, j);
            c.set(i, j, std::move(acc));
        }
    }
    return c;
}

std::vector<IntPoly> row_vec_mat(std::span<const IntPoly> v, const PolyMatrix& m) {
    if (v.size() != m.dim()) {
        throw dimension_mismatch("row-vector product: length " + std::to_string(v.size()) +
                                 " against " + std::to_string(m.dim()) + "x" +
                                 std::to_string(m.dim()));
    }
    std::vector<IntPoly> out(m.dim());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.dim(); ++j) {
            out[j] += v[i] * m.at(i, j);
        }
    }
    return out;
}

} // namespace valspec
