#ifndef GVX_MATRIX_HPP
#define GVX_MATRIX_HPP

#include "gvx/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace gvx::exactlin {

using Vector = std::vector<Scalar>;

/// Dense matrix over Q(i). Desk-scale: a few hundred rows/columns at most.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

std::size_t rank(const Matrix& m);

/// Basis of { v : M v = 0 }. Size is cols - rank (rank-nullity).
std::vector<Vector> kernel_basis(const Matrix& m);

/// Any exact solution of M x = b, or nullopt when the system is infeasible.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);

Vector mat_vec(const Matrix& m, std::span<const Scalar> v);

/// Incremental row-echelon accumulator: feed rows, read off the rank.
/// Used where equation systems are produced row by row (cochain complexes).
class RowEchelon {
public:
    explicit RowEchelon(std::size_t cols) : cols_(cols) {}

    /// Reduces the row against the pivots seen so far; keeps it if independent.
    /// Returns true when the row enlarged the span.
    bool add_row(Vector row);

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    /// Reduce a row without inserting it; result's nonzero <=> independent.
    Vector residual(Vector row) const;

private:
    std::size_t cols_;
    std::vector<Vector> rows_;       // echelon rows, pivot normalized to 1
    std::vector<std::size_t> lead_;  // pivot column per row
};

} // namespace gvx::exactlin

#endif
