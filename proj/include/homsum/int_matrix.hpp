#ifndef HOMSUM_INT_MATRIX_HPP
#define HOMSUM_INT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "homsum/integer.hpp"

namespace homsum {

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Matrices with zero rows or zero columns are first-class values: they are
/// the maps to and from the trivial group and show up constantly at the ends
/// of chain complexes.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols);
    static IntMatrix diagonal(const std::vector<Int>& diag);
    /// Row-by-row construction, mostly for tests and fixtures.
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Int>& entries() const { return entries_; }

    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    /// All entries on the main diagonal (length min(rows, cols)).
    std::vector<Int> diagonal_entries() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const Int& scalar, const IntMatrix& a);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

/// Result of a Smith decomposition d = u * a * v with u, v unimodular and d
/// diagonal, nonnegative, each entry dividing the next (zeros trailing).
struct SmithNormalForm {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
};

/// Smith normal form over the integers. Total on all shapes, including empty
/// matrices. Pivoting is deterministic (smallest absolute value, row-major
/// tie break), so u and v are reproducible.
SmithNormalForm smith_normal_form(const IntMatrix& a);

/// Diagonal of the Smith normal form, including trailing zeros.
std::vector<Int> smith_diagonal(const IntMatrix& a);

/// Rank of the matrix over the rationals (count of nonzero Smith diagonal
/// entries).
std::size_t rank(const IntMatrix& a);

/// Exact determinant of a square matrix (Bareiss fraction-free elimination).
/// Throws std::invalid_argument on non-square input.
Int determinant(const IntMatrix& a);

}  // namespace homsum

#endif
