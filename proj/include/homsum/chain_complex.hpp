#ifndef HOMSUM_CHAIN_COMPLEX_HPP
#define HOMSUM_CHAIN_COMPLEX_HPP

#include <cstddef>
#include <vector>

#include "homsum/graded_group.hpp"
#include "homsum/int_matrix.hpp"

namespace homsum {

/// Cellular chain complex over the integers: per-degree free ranks and
/// boundary matrices d_q : C_q -> C_{q-1} for q = 1..top.
///
/// Construction checks only that the boundary list has the right length;
/// shape constraints and d o d = 0 are reported by validate(), so complexes
/// loaded from files can be rejected with a verdict instead of a crash.
class ChainComplex {
public:
    /// ranks[q] is the rank of C_q (ranks is nonempty); boundaries[q-1] is
    /// d_q, so boundaries.size() == ranks.size() - 1.
    ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries);

    /// Complex with the given ranks and all-zero boundary maps.
    static ChainComplex zero_boundaries(std::vector<std::size_t> ranks);

    int top() const { return static_cast<int>(ranks_.size()) - 1; }
    std::size_t rank(int q) const;
    const std::vector<std::size_t>& ranks() const { return ranks_; }

    /// d_q for 1 <= q <= top; zero-shaped maps at q == 0 and q == top+1.
    IntMatrix boundary(int q) const;

    friend bool operator==(const ChainComplex& a, const ChainComplex& b)
    {
        return a.ranks_ == b.ranks_ && a.boundaries_ == b.boundaries_;
    }

private:
    std::vector<std::size_t> ranks_;
    std::vector<IntMatrix> boundaries_;
};

/// True iff all boundary shapes match the adjacent ranks and every composite
/// d_q o d_{q+1} is the zero matrix.
bool validate(const ChainComplex& c);

/// H_q = ker d_q / im d_{q+1} for 0 <= q <= top, via Smith normal form.
/// Throws std::invalid_argument on complexes failing validate().
GradedGroup homology(const ChainComplex& c);

/// Tensor product of complexes, d(c (x) e) = dc (x) e + (-1)^|c| c (x) de.
/// Bases within a degree are ordered by left-factor degree, then
/// left-factor-major within each block.
ChainComplex tensor(const ChainComplex& c, const ChainComplex& d);

/// Degree shift of the reduced complex: the single degree-0 basepoint
/// generator stays at 0, everything else moves up by s. Requires the
/// basepoint convention (see below). shift(c, 0) == c.
ChainComplex shift(const ChainComplex& c, int s);

// Reduced-complex convention: every space model carries exactly one degree-0
// basepoint generator (generator 0), which no boundary hits. Reduced
// operations strip it, work, and restore it.

/// Removes the basepoint generator; requires rank(C_0) >= 1 and a zero
/// basepoint row in d_1.
ChainComplex strip_basepoint(const ChainComplex& c);

/// Re-inserts a basepoint generator at degree 0.
ChainComplex add_basepoint(const ChainComplex& c);

}  // namespace homsum

#endif
