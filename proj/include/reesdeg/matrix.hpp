#pragma once

#include <vector>

#include "reesdeg/rational.hpp"

namespace reesdeg {

/// Dense exact rational matrix, row-major.
class RationalMatrix {
public:
    RationalMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

private:
    size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Solve A x = c for square nonsingular A by fraction-free (Bareiss)
/// elimination; throws SingularMatrixError otherwise.
std::vector<Rational> solve_linear(const RationalMatrix& A,
                                   const std::vector<Rational>& c);

/// Determinant by Bareiss elimination on the integer-cleared matrix.
Rational determinant(const RationalMatrix& A);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(RationalMatrix& A);

/// Basis of the right kernel of A (vectors of length A.cols()).
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& A);

}  // namespace reesdeg
