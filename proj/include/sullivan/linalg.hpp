#pragma once

// Exact rational linear algebra: reduced row-echelon forms, kernels,
// pivot solves, subspaces and quotient-space coordinates.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sullivan/rational.hpp"

namespace sullivan {

using Vector = std::vector<Rational>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    /// Throws std::invalid_argument on ragged input.
    Matrix(std::size_t cols, const std::vector<Vector>& rows);

    static Matrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    [[nodiscard]] std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    [[nodiscard]] Vector row_vector(std::size_t r) const;

    /// Throws std::invalid_argument if v.size() != cols().
    [[nodiscard]] Vector operator*(std::span<const Rational> v) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;  ///< strictly increasing

    [[nodiscard]] std::size_t rank() const { return pivots.size(); }
};

/// Unique reduced row-echelon form of `m` (Gauss-Jordan).
RowEchelon rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// A linear subspace of Q^n, stored as its RREF basis (no zero rows).
class Subspace {
public:
    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    /// Span of the given vectors; each must have length ambient_dim.
    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
    /// Column space of m, as a subspace of Q^{m.rows()}.
    static Subspace column_space(const Matrix& m);

    [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
    [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
    [[nodiscard]] const Matrix& basis() const { return basis_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Coefficients c with v = sum c_i basis_i, or nullopt when v is not in the subspace.
    [[nodiscard]] std::optional<Vector> coordinates(std::span<const Rational> v) const;
    [[nodiscard]] bool contains(std::span<const Rational> v) const { return coordinates(v).has_value(); }
    [[nodiscard]] bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    Subspace(std::size_t ambient_dim, RowEchelon echelon);

    std::size_t ambient_dim_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}.
Subspace kernel(const Matrix& m);

/// Particular solution of m x = rhs with every free variable set to zero,
/// or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Rational> rhs);

/// Q^n / sub, with coset representatives the standard basis vectors at the
/// non-pivot columns of sub's RREF basis.
class QuotientSpace {
public:
    QuotientSpace(std::size_t ambient_dim, Subspace sub);

    [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
    [[nodiscard]] std::size_t dim() const { return complement_columns_.size(); }
    [[nodiscard]] const Subspace& subspace() const { return sub_; }
    [[nodiscard]] const Matrix& complement_basis() const { return complement_basis_; }
    /// Column index of the standard vector representing coordinate i.
    [[nodiscard]] const std::vector<std::size_t>& complement_columns() const { return complement_columns_; }

    /// Unique c with v - sum c_i complement_i in the subspace.
    [[nodiscard]] Vector project(std::span<const Rational> v) const;

private:
    std::size_t ambient_dim_;
    Subspace sub_;
    Matrix complement_basis_;
    std::vector<std::size_t> complement_columns_;
};

/// Throws std::invalid_argument if sub.ambient_dim() != ambient_dim.
QuotientSpace quotient(std::size_t ambient_dim, const Subspace& sub);

inline Vector project(const QuotientSpace& q, std::span<const Rational> v) { return q.project(v); }

bool is_zero(std::span<const Rational> v);

}  // namespace sullivan
