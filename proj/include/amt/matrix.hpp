#pragma once

#include <cstddef>
#include <vector>

#include "amt/ring.hpp"

namespace amt {

// Dense row-major matrix of exact scalars. Blocks stored in complexes and
// block maps are small (typically 1x1); everything here is exact arithmetic.
class Matrix {
public:
    Matrix() = default;  // 0x0
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const Matrix&) const = default;

    static Matrix identity(const Ring& ring, std::size_t n);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> entries_;
};

Matrix add(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix sub(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix negate(const Ring& ring, const Matrix& a);
Matrix multiply(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix scale(const Ring& ring, const Scalar& c, const Matrix& a);

// Rank by Gaussian elimination over the fraction field (for Z this is the
// rank over Q, which is what field homology needs).
std::size_t rank(const Ring& ring, const Matrix& a);

// Exact invertibility over the ring itself: over Z an integer matrix is
// invertible iff its determinant is a unit, over a field iff it is nonzero.
bool is_invertible(const Ring& ring, const Matrix& a);

// Exact inverse; throws ValidationError when not invertible over the ring.
// Fields use Gauss-Jordan elimination; Z uses the adjugate after checking
// the determinant is +-1.
Matrix inverse(const Ring& ring, const Matrix& a);

// Fraction-free determinant (Bareiss) of a square integer matrix.
Int determinant_int(const Matrix& a);

}  // namespace amt
