#include "gvx/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace gvx::exactlin {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
// Partial pivoting on the first nonzero entry: magnitude is irrelevant in exact arithmetic.
std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && m.at(pr, c).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
        Scalar inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank(const Matrix& m) {
    Matrix w = m;
    return rref(w).size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
    Matrix w = m;
    auto pivots = rref(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w.at(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // 0 = 1 row
    Vector x(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols());
    return x;
}

Vector mat_vec(const Matrix& m, std::span<const Scalar> v) {
    if (v.size() != m.cols()) throw std::invalid_argument("mat_vec: length mismatch");
    Vector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Scalar s;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero() && !v[j].is_zero()) s += m.at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

bool RowEchelon::add_row(Vector row) {
    if (row.size() != cols_) throw std::invalid_argument("RowEchelon: width mismatch");
    row = residual(std::move(row));
    std::size_t lead = cols_;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!row[j].is_zero()) { lead = j; break; }
    if (lead == cols_) return false;
    Scalar inv = row[lead].inverse();
    for (std::size_t j = lead; j < cols_; ++j) row[j] *= inv;
    // keep existing rows reduced against the new pivot
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar f = rows_[r][lead];
        if (f.is_zero()) continue;
        for (std::size_t j = lead; j < cols_; ++j) rows_[r][j] -= f * row[j];
    }
    rows_.push_back(std::move(row));
    lead_.push_back(lead);
    return true;
}

Vector RowEchelon::residual(Vector row) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar f = row[lead_[r]];
        if (f.is_zero()) continue;
        for (std::size_t j = lead_[r]; j < cols_; ++j) row[j] -= f * rows_[r][j];
    }
    return row;
}

} // namespace gvx::exactlin
