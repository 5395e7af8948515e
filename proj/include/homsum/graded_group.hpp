#ifndef HOMSUM_GRADED_GROUP_HPP
#define HOMSUM_GRADED_GROUP_HPP

#include <map>

#include "homsum/abelian_group.hpp"

namespace homsum {

/// Degree-indexed family of finitely generated abelian groups, sparse:
/// only nontrivial degrees are stored, so equality is degreewise isomorphism.
class GradedGroup {
public:
    GradedGroup() = default;

    /// Group in the given degree; the trivial group when absent or negative.
    const FgAbGroup& at(int degree) const;

    /// Stores g in the given degree, erasing the entry when g is trivial.
    void set(int degree, FgAbGroup g);

    /// Degreewise direct sum into this.
    void add(int degree, const FgAbGroup& g);

    bool is_trivial() const { return groups_.empty(); }
    /// Largest nontrivial degree, -1 when trivial.
    int top_degree() const;
    const std::map<int, FgAbGroup>& groups() const { return groups_; }

    /// Drops degree 0 (reduced homology of a connected space).
    GradedGroup reduced() const;
    /// All degrees moved up by s >= 0.
    GradedGroup shifted(int s) const;
    /// Keeps only degrees strictly below the cutoff.
    GradedGroup truncated_below(int cutoff) const;

    /// Alternating sum of free ranks (torsion does not contribute).
    Int euler_characteristic() const;
    std::size_t total_rank() const;

    friend bool operator==(const GradedGroup& a, const GradedGroup& b)
    {
        return a.groups_ == b.groups_;
    }
    friend bool operator!=(const GradedGroup& a, const GradedGroup& b) { return !(a == b); }

private:
    std::map<int, FgAbGroup> groups_;
};

GradedGroup direct_sum(const GradedGroup& a, const GradedGroup& b);

}  // namespace homsum

#endif
