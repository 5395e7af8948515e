#include "homsum/int_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace homsum {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols)
{
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("IntMatrix: entry count does not match rows*cols");
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::zero(std::size_t rows, std::size_t cols)
{
    return IntMatrix(rows, cols);
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& diag)
{
    IntMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i)
        m(i, i) = diag[i];
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c)
            throw std::invalid_argument("IntMatrix: ragged row list");
        std::size_t j = 0;
        for (long long v : row)
            m(i, j++) = v;
        ++i;
    }
    return m;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Int& v) { return v == 0; });
}

std::vector<Int> IntMatrix::diagonal_entries() const
{
    std::vector<Int> d;
    const std::size_t n = std::min(rows_, cols_);
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        d.push_back((*this)(i, i));
    return d;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("IntMatrix: shape mismatch in product");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Int& bkj = b(k, j);
                if (bkj != 0)
                    out(i, j) += aik * bkj;
            }
        }
    return out;
}

IntMatrix operator*(const Int& scalar, const IntMatrix& a)
{
    IntMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i)
        out.entries_[i] *= scalar;
    return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

namespace {

// Elementary operations applied to the work matrix and mirrored into the
// unimodular accumulators. All keep |det| = 1.

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < m.rows(); ++i)
        std::swap(m(i, a), m(i, b));
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& factor)
{
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(dst, j) += factor * m(src, j);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& factor)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        m(i, dst) += factor * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t r)
{
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(r, j) = -m(r, j);
}

// Smallest nonzero |entry| in the submatrix at (t.., t..), first hit in
// row-major order. Returns false when the submatrix is zero.
bool locate_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj)
{
    bool found = false;
    Int best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0)
                continue;
            Int a = abs_int(d(i, j));
            if (!found || a < best) {
                best = std::move(a);
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();

    SmithNormalForm out{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& d = out.d;
    IntMatrix& u = out.u;
    IntMatrix& v = out.v;

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi = t, pj = t;
        if (!locate_pivot(d, t, pi, pj))
            break;  // rest of the matrix is zero; zeros trail

        for (;;) {
            swap_rows(d, t, pi);
            swap_rows(u, t, pi);
            swap_cols(d, t, pj);
            swap_cols(v, t, pj);

            // Clear below and to the right of the pivot. Truncated division
            // leaves remainders smaller than the pivot; if any survive, pick
            // a smaller pivot and repeat.
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0)
                    continue;
                Int q = d(i, t) / d(t, t);
                if (q != 0) {
                    add_row_multiple(d, i, t, -q);
                    add_row_multiple(u, i, t, -q);
                }
                if (d(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0)
                    continue;
                Int q = d(t, j) / d(t, t);
                if (q != 0) {
                    add_col_multiple(d, j, t, -q);
                    add_col_multiple(v, j, t, -q);
                }
                if (d(t, j) != 0)
                    clean = false;
            }
            if (!clean) {
                locate_pivot(d, t, pi, pj);
                continue;
            }

            // Divisibility fix-up: the pivot must divide every remaining
            // entry, so that the diagonal forms an invariant-factor chain.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < m && divides_all; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        add_row_multiple(d, t, i, 1);
                        add_row_multiple(u, t, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all)
                break;
            locate_pivot(d, t, pi, pj);
        }

        if (d(t, t) < 0) {
            negate_row(d, t);
            negate_row(u, t);
        }
    }

    return out;
}

std::vector<Int> smith_diagonal(const IntMatrix& a)
{
    return smith_normal_form(a).d.diagonal_entries();
}

std::size_t rank(const IntMatrix& a)
{
    std::size_t r = 0;
    for (const Int& d : smith_diagonal(a))
        if (d != 0)
            ++r;
    return r;
}

Int determinant(const IntMatrix& a)
{
    if (!a.is_square())
        throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;

    IntMatrix w = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t swap_i = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (w(i, k) != 0) {
                    swap_i = i;
                    break;
                }
            if (swap_i == k)
                return 0;
            swap_rows(w, k, swap_i);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
        prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : Int(-w(n - 1, n - 1));
}

}  // namespace homsum
