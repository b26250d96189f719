#include "sullivan/linalg.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace sullivan {

Matrix::Matrix(std::size_t cols, const std::vector<Vector>& rows) : Matrix(rows.size(), cols) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("matrix row " + std::to_string(r) + " has length " +
                                        std::to_string(rows[r].size()) + ", expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) (*this)(r, c) = rows[r][c];
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vector Matrix::row_vector(std::size_t r) const {
    auto view = row(r);
    return {view.begin(), view.end()};
}

Vector Matrix::operator*(std::span<const Rational> v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("matrix-vector size mismatch: " + std::to_string(cols_) + " vs " +
                                    std::to_string(v.size()));
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
}

RowEchelon rref(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        std::size_t p = lead;
        while (p < a.rows() && a(p, col).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != lead)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(lead, c));

        const Rational inv = a(lead, col).inverse();
        for (std::size_t c = col; c < a.cols(); ++c) a(lead, c) *= inv;

        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead || a(r, col).is_zero()) continue;
            const Rational factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                if (!a(lead, c).is_zero()) a(r, c) -= factor * a(lead, c);
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

bool is_zero(std::span<const Rational> v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Subspace::Subspace(std::size_t ambient_dim, RowEchelon echelon) : ambient_dim_(ambient_dim) {
    const std::size_t r = echelon.rank();
    basis_ = Matrix(r, ambient_dim);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < ambient_dim; ++c) basis_(i, c) = echelon.reduced(i, c);
    pivots_ = std::move(echelon.pivots);
}

Subspace Subspace::zero(std::size_t ambient_dim) { return {ambient_dim, RowEchelon{Matrix(0, ambient_dim), {}}}; }

Subspace Subspace::full(std::size_t ambient_dim) { return {ambient_dim, rref(Matrix::identity(ambient_dim))}; }

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    return {ambient_dim, rref(Matrix(ambient_dim, vectors))};
}

Subspace Subspace::column_space(const Matrix& m) {
    std::vector<Vector> columns(m.cols(), Vector(m.rows()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) columns[c][r] = m(r, c);
    return span(m.rows(), columns);
}

std::optional<Vector> Subspace::coordinates(std::span<const Rational> v) const {
    if (v.size() != ambient_dim_)
        throw std::invalid_argument("vector of length " + std::to_string(v.size()) + " in ambient dimension " +
                                    std::to_string(ambient_dim_));
    // RREF basis: the coefficient of basis_i is v at pivot i.
    Vector coeffs(dim());
    Vector residual(v.begin(), v.end());
    for (std::size_t i = 0; i < dim(); ++i) {
        coeffs[i] = v[pivots_[i]];
        if (coeffs[i].is_zero()) continue;
        for (std::size_t c = 0; c < ambient_dim_; ++c)
            if (!basis_(i, c).is_zero()) residual[c] -= coeffs[i] * basis_(i, c);
    }
    if (!is_zero(residual)) return std::nullopt;
    return coeffs;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_) return false;
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace kernel(const Matrix& m) {
    const RowEchelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;

    std::vector<Vector> vectors;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
        vectors.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), vectors);
}

std::optional<Vector> solve(const Matrix& m, std::span<const Rational> rhs) {
    if (rhs.size() != m.rows())
        throw std::invalid_argument("solve: rhs length " + std::to_string(rhs.size()) + " but matrix has " +
                                    std::to_string(m.rows()) + " rows");
    Matrix augmented(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) augmented(r, c) = m(r, c);
        augmented(r, m.cols()) = rhs[r];
    }
    const RowEchelon e = rref(augmented);
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;

    Vector x(m.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
    return x;
}

QuotientSpace::QuotientSpace(std::size_t ambient_dim, Subspace sub) : ambient_dim_(ambient_dim), sub_(std::move(sub)) {
    if (sub_.ambient_dim() != ambient_dim)
        throw std::invalid_argument("quotient: subspace lives in dimension " + std::to_string(sub_.ambient_dim()) +
                                    ", not " + std::to_string(ambient_dim));
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto p : sub_.pivots()) is_pivot[p] = true;
    for (std::size_t c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) complement_columns_.push_back(c);

    complement_basis_ = Matrix(complement_columns_.size(), ambient_dim);
    for (std::size_t i = 0; i < complement_columns_.size(); ++i) complement_basis_(i, complement_columns_[i]) = 1;
}

Vector QuotientSpace::project(std::span<const Rational> v) const {
    if (v.size() != ambient_dim_)
        throw std::invalid_argument("project: vector of length " + std::to_string(v.size()) +
                                    " in ambient dimension " + std::to_string(ambient_dim_));
    // Clear the pivot entries with the subspace basis; the remaining entries
    // at non-pivot columns are the coordinates.
    Vector residual(v.begin(), v.end());
    const Matrix& basis = sub_.basis();
    for (std::size_t i = 0; i < sub_.dim(); ++i) {
        const Rational factor = residual[sub_.pivots()[i]];
        if (factor.is_zero()) continue;
        for (std::size_t c = 0; c < ambient_dim_; ++c)
            if (!basis(i, c).is_zero()) residual[c] -= factor * basis(i, c);
    }
    Vector coords;
    coords.reserve(complement_columns_.size());
    for (auto c : complement_columns_) coords.push_back(residual[c]);
    return coords;
}

QuotientSpace quotient(std::size_t ambient_dim, const Subspace& sub) { return {ambient_dim, sub}; }

}  // namespace sullivan
