#include "homsum/chain_complex.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace homsum {

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries))
{
    if (ranks_.empty())
        throw std::invalid_argument("ChainComplex: ranks must cover degree 0");
    if (boundaries_.size() + 1 != ranks_.size())
        throw std::invalid_argument("ChainComplex: need exactly one boundary map per degree 1..top");
}

ChainComplex ChainComplex::zero_boundaries(std::vector<std::size_t> ranks)
{
    std::vector<IntMatrix> boundaries;
    for (std::size_t q = 1; q < ranks.size(); ++q)
        boundaries.push_back(IntMatrix::zero(ranks[q - 1], ranks[q]));
    return ChainComplex(std::move(ranks), std::move(boundaries));
}

std::size_t ChainComplex::rank(int q) const
{
    if (q < 0 || q > top())
        return 0;
    return ranks_[static_cast<std::size_t>(q)];
}

IntMatrix ChainComplex::boundary(int q) const
{
    if (q < 1 || q > top() + 1)
        return IntMatrix::zero(0, rank(q));
    if (q == top() + 1)
        return IntMatrix::zero(rank(top()), 0);
    return boundaries_[static_cast<std::size_t>(q - 1)];
}

bool validate(const ChainComplex& c)
{
    for (int q = 1; q <= c.top(); ++q) {
        const IntMatrix b = c.boundary(q);
        if (b.rows() != c.rank(q - 1) || b.cols() != c.rank(q))
            return false;
    }
    for (int q = 1; q < c.top(); ++q)
        if (!(c.boundary(q) * c.boundary(q + 1)).is_zero())
            return false;
    return true;
}

GradedGroup homology(const ChainComplex& c)
{
    if (!validate(c))
        throw std::invalid_argument("homology: complex fails validation");

    // Smith diagonal of every boundary map; index q holds d_q.
    std::vector<std::vector<Int>> diag(static_cast<std::size_t>(c.top()) + 2);
    for (int q = 1; q <= c.top(); ++q)
        diag[static_cast<std::size_t>(q)] = smith_diagonal(c.boundary(q));

    auto rank_of = [&](int q) {
        std::size_t r = 0;
        if (q >= 1 && q <= c.top())
            for (const Int& d : diag[static_cast<std::size_t>(q)])
                if (d != 0)
                    ++r;
        return r;
    };

    GradedGroup out;
    for (int q = 0; q <= c.top(); ++q) {
        const std::size_t r_q = rank_of(q);
        const std::size_t r_above = rank_of(q + 1);
        if (c.rank(q) < r_q + r_above)
            throw std::logic_error("homology: rank bookkeeping underflow");
        std::vector<Int> factors;
        if (q + 1 <= c.top())
            for (const Int& d : diag[static_cast<std::size_t>(q + 1)])
                if (d > 1)
                    factors.push_back(d);
        out.set(q, FgAbGroup(c.rank(q) - r_q - r_above, std::move(factors)));
    }
    return out;
}

namespace {

// Offsets of the (i, n-i) blocks inside degree n of a tensor product,
// ordered by ascending left-factor degree.
std::map<int, std::size_t> block_offsets(const ChainComplex& c, const ChainComplex& d, int n)
{
    std::map<int, std::size_t> offsets;
    std::size_t off = 0;
    for (int i = 0; i <= n; ++i) {
        offsets[i] = off;
        off += c.rank(i) * d.rank(n - i);
    }
    return offsets;
}

}  // namespace

ChainComplex tensor(const ChainComplex& c, const ChainComplex& d)
{
    if (!validate(c) || !validate(d))
        throw std::invalid_argument("tensor: operands must be valid complexes");

    const int top = c.top() + d.top();
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 1, 0);
    for (int n = 0; n <= top; ++n)
        for (int i = 0; i <= n; ++i)
            ranks[static_cast<std::size_t>(n)] += c.rank(i) * d.rank(n - i);

    std::vector<IntMatrix> boundaries;
    std::vector<IntMatrix> left;  // d_i of c, cached
    for (int i = 0; i <= c.top() + 1; ++i)
        left.push_back(c.boundary(i));
    std::vector<IntMatrix> right;
    for (int j = 0; j <= d.top() + 1; ++j)
        right.push_back(d.boundary(j));

    for (int n = 1; n <= top; ++n) {
        IntMatrix b(ranks[static_cast<std::size_t>(n - 1)], ranks[static_cast<std::size_t>(n)]);
        const auto src_off = block_offsets(c, d, n);
        const auto dst_off = block_offsets(c, d, n - 1);
        for (int i = 0; i <= n; ++i) {
            const int j = n - i;
            const std::size_t rc = c.rank(i);
            const std::size_t rd = d.rank(j);
            if (rc == 0 || rd == 0)
                continue;
            const std::size_t src = src_off.at(i);
            for (std::size_t a = 0; a < rc; ++a)
                for (std::size_t bb = 0; bb < rd; ++bb) {
                    const std::size_t col = src + a * rd + bb;
                    if (i >= 1) {
                        const IntMatrix& dc = left[static_cast<std::size_t>(i)];
                        const std::size_t dst = dst_off.at(i - 1);
                        for (std::size_t ap = 0; ap < dc.rows(); ++ap) {
                            const Int& v = dc(ap, a);
                            if (v != 0)
                                b(dst + ap * rd + bb, col) += v;
                        }
                    }
                    if (j >= 1) {
                        const IntMatrix& dd = right[static_cast<std::size_t>(j)];
                        const std::size_t dst = dst_off.at(i);
                        const bool flip = (i % 2) != 0;
                        for (std::size_t bp = 0; bp < dd.rows(); ++bp) {
                            const Int& v = dd(bp, bb);
                            if (v != 0)
                                b(dst + a * dd.rows() + bp, col) += flip ? Int(-v) : v;
                        }
                    }
                }
        }
        boundaries.push_back(std::move(b));
    }
    return ChainComplex(std::move(ranks), std::move(boundaries));
}

ChainComplex strip_basepoint(const ChainComplex& c)
{
    if (c.rank(0) == 0)
        throw std::invalid_argument("strip_basepoint: no degree-0 generator");
    std::vector<std::size_t> ranks = c.ranks();
    ranks[0] -= 1;
    std::vector<IntMatrix> boundaries;
    for (int q = 1; q <= c.top(); ++q)
        boundaries.push_back(c.boundary(q));
    if (c.top() >= 1) {
        const IntMatrix& d1 = boundaries[0];
        for (std::size_t j = 0; j < d1.cols(); ++j)
            if (d1(0, j) != 0)
                throw std::invalid_argument("strip_basepoint: boundary hits the basepoint generator");
        IntMatrix reduced(ranks[0], d1.cols());
        for (std::size_t i = 0; i + 1 < d1.rows(); ++i)
            for (std::size_t j = 0; j < d1.cols(); ++j)
                reduced(i, j) = d1(i + 1, j);
        boundaries[0] = std::move(reduced);
    }
    return ChainComplex(std::move(ranks), std::move(boundaries));
}

ChainComplex add_basepoint(const ChainComplex& c)
{
    std::vector<std::size_t> ranks = c.ranks();
    ranks[0] += 1;
    std::vector<IntMatrix> boundaries;
    for (int q = 1; q <= c.top(); ++q)
        boundaries.push_back(c.boundary(q));
    if (c.top() >= 1) {
        const IntMatrix& d1 = boundaries[0];
        IntMatrix widened(ranks[0], d1.cols());
        for (std::size_t i = 0; i < d1.rows(); ++i)
            for (std::size_t j = 0; j < d1.cols(); ++j)
                widened(i + 1, j) = d1(i, j);
        boundaries[0] = std::move(widened);
    }
    return ChainComplex(std::move(ranks), std::move(boundaries));
}

ChainComplex shift(const ChainComplex& c, int s)
{
    if (s < 0)
        throw std::invalid_argument("shift: negative shift");
    if (s == 0)
        return c;

    const ChainComplex reduced = strip_basepoint(c);
    const int top = reduced.top() + s;
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 1, 0);
    for (int q = 0; q <= reduced.top(); ++q)
        ranks[static_cast<std::size_t>(q + s)] = reduced.rank(q);
    std::vector<IntMatrix> boundaries;
    for (int q = 1; q <= top; ++q) {
        if (q > s)
            boundaries.push_back(reduced.boundary(q - s));
        else
            boundaries.push_back(IntMatrix::zero(ranks[static_cast<std::size_t>(q - 1)],
                                                 ranks[static_cast<std::size_t>(q)]));
    }
    return add_basepoint(ChainComplex(std::move(ranks), std::move(boundaries)));
}

}  // namespace homsum
