#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace cpo {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense matrix over exact rationals. Zero-dimension matrices are allowed
/// and behave as maps between zero spaces.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-() const;
    bool operator==(const Matrix& rhs) const = default;

    Matrix transpose() const;
    bool is_zero() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> a_;
};

/// Horizontal / vertical concatenation of compatible blocks.
Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows);
Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols);

/// Reduced row echelon form; pivot column indices are appended to *pivots
/// when given. Pivoting is deterministic: first nonzero entry in each column
/// scan order.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const Matrix& m);

/// Basis of the right null space in the standard normal form derived from
/// the RREF: one vector per free column, with entry 1 at that column.
std::vector<std::vector<Rat>> kernel_basis(const Matrix& m);

/// Matrix of the canonical surjection k^rows -> k^rows / Im(A). The
/// complement is spanned by the non-pivot coordinates of the column space
/// in RREF, so the result is deterministic. Satisfies result * A = 0 and
/// rank(result) = rows(A) - rank(A).
Matrix cokernel_projection(const Matrix& a);

/// Inverse of a square invertible matrix; throws std::invalid_argument
/// otherwise.
Matrix inverse(const Matrix& a);

/// Polynomial with exact integer coefficients, ascending degree order.
using IntPoly = std::vector<Int>;

/// Characteristic polynomial det(lambda*I - A) of a square matrix with
/// integer entries, via the Faddeev-LeVerrier recurrence. Throws
/// std::invalid_argument on non-square or non-integer input.
IntPoly char_poly(const Matrix& a);

std::string poly_to_string(const IntPoly& p);

} // namespace cpo
