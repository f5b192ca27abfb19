#include "amt/matrix.hpp"

namespace amt {

bool Matrix::is_zero() const {
    for (const Scalar& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring.one();
    return m;
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InputError("matrix shape mismatch: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
}

}  // namespace

Matrix add(const Ring& ring, const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = ring.add(a.at(i, j), b.at(i, j));
    return r;
}

Matrix sub(const Ring& ring, const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = ring.sub(a.at(i, j), b.at(i, j));
    return r;
}

Matrix negate(const Ring& ring, const Matrix& a) {
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = ring.neg(a.at(i, j));
    return r;
}

Matrix scale(const Ring& ring, const Scalar& c, const Matrix& a) {
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = ring.mul(c, a.at(i, j));
    return r;
}

Matrix multiply(const Ring& ring, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw InputError("matrix product dimension mismatch: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
    Matrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r.at(i, j) = ring.add(r.at(i, j), ring.mul(a.at(i, k), b.at(k, j)));
        }
    return r;
}

std::size_t rank(const Ring& ring, const Matrix& a) {
    // Eliminate over the fraction field; exact arithmetic, no pivot concerns.
    Ring field(ring.spec().kind == RingSpec::Kind::Integers ? RingSpec::rationals() : ring.spec());
    Matrix m = a;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pivot, j));
        Scalar inv = field.invert(m.at(r, col));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m.at(i, col).is_zero()) continue;
            Scalar factor = field.mul(m.at(i, col), inv);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = field.sub(m.at(i, j), field.mul(factor, m.at(r, j)));
        }
        ++r;
    }
    return r;
}

Int determinant_int(const Matrix& a) {
    if (a.rows() != a.cols()) throw InputError("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return Int(1);
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& v = a.at(i, j).value();
            if (denominator(v) != 1) throw InputError("integer determinant of non-integer matrix");
            m[i][j] = numerator(v);
        }
    // Bareiss fraction-free elimination; every division is exact.
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return Int(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

bool is_invertible(const Ring& ring, const Matrix& a) {
    if (a.rows() != a.cols()) return false;
    if (a.rows() == 1) return ring.is_unit(a.at(0, 0));
    if (ring.spec().kind == RingSpec::Kind::Integers) {
        Int det = determinant_int(a);
        return det == 1 || det == -1;
    }
    return rank(ring, a) == a.rows();
}

namespace {

Matrix minor_matrix(const Matrix& a, std::size_t drop_row, std::size_t drop_col) {
    Matrix m(a.rows() - 1, a.cols() - 1);
    for (std::size_t i = 0, mi = 0; i < a.rows(); ++i) {
        if (i == drop_row) continue;
        for (std::size_t j = 0, mj = 0; j < a.cols(); ++j) {
            if (j == drop_col) continue;
            m.at(mi, mj) = a.at(i, j);
            ++mj;
        }
        ++mi;
    }
    return m;
}

Matrix inverse_integer(const Ring& ring, const Matrix& a) {
    Int det = determinant_int(a);
    if (det != 1 && det != -1)
        throw ValidationError("integer matrix is not invertible over Z (det = " + det.str() + ")");
    const std::size_t n = a.rows();
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // adjugate entry (j, i) = cofactor (i, j); dividing by det = +-1
            Int cof = determinant_int(minor_matrix(a, i, j));
            if ((i + j) % 2 == 1) cof = -cof;
            inv.at(j, i) = ring.from_rat(Rat(det == 1 ? cof : -cof));
        }
    return inv;
}

Matrix inverse_field(const Ring& ring, const Matrix& a) {
    const std::size_t n = a.rows();
    Matrix m = a;
    Matrix inv = Matrix::identity(ring, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw ValidationError("matrix is singular over " + ring.spec().token());
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(m.at(col, j), m.at(pivot, j));
            std::swap(inv.at(col, j), inv.at(pivot, j));
        }
        Scalar pinv = ring.invert(m.at(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            m.at(col, j) = ring.mul(pinv, m.at(col, j));
            inv.at(col, j) = ring.mul(pinv, inv.at(col, j));
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            Scalar factor = m.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) = ring.sub(m.at(i, j), ring.mul(factor, m.at(col, j)));
                inv.at(i, j) = ring.sub(inv.at(i, j), ring.mul(factor, inv.at(col, j)));
            }
        }
    }
    return inv;
}

}  // namespace

Matrix inverse(const Ring& ring, const Matrix& a) {
    if (a.rows() != a.cols())
        throw ValidationError("cannot invert non-square " + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + " matrix");
    if (ring.spec().kind == RingSpec::Kind::Integers) return inverse_integer(ring, a);
    return inverse_field(ring, a);
}

}  // namespace amt
