#pragma once

#include "toric/arith.hpp"

#include <optional>
#include <vector>

namespace toric {

/// Dense row-major integer matrix. Rows may be empty only when cols == 0.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector col(std::size_t j) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
    /// col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
    void negate_row(std::size_t i);

    bool operator==(const IntMatrix& o) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant of a square matrix (Bareiss).
Integer determinant(const IntMatrix& a);

struct SmithDecomposition {
    IntMatrix left;      // U, unimodular, rows x rows
    IntMatrix diagonal;  // D = U * A * V
    IntMatrix right;     // V, unimodular, cols x cols
};

/// Smith normal form by elementary row/column moves with smallest-pivot
/// selection. D has d1 | d2 | ... on its diagonal, all non-negative, zeros last.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& a);

// Exact rational elimination.

/// Basis of {x : A x = 0} over Q, returned as primitive integer vectors in
/// reduced-echelon order (deterministic for a given A).
std::vector<IntVector> integer_kernel(const std::vector<IntVector>& rows, std::size_t cols);

std::size_t rank_of(const std::vector<IntVector>& rows, std::size_t cols);

/// Some rational x with A x = b, free variables set to zero; nullopt if the
/// system is inconsistent.
std::optional<RatVector> solve_rational(const std::vector<IntVector>& rows, const RatVector& rhs,
                                        std::size_t cols);

/// Some integer x with A x = b (via Smith form); nullopt if none exists.
std::optional<IntVector> solve_integer(const std::vector<IntVector>& rows, const IntVector& rhs, std::size_t cols);

}  // namespace toric
