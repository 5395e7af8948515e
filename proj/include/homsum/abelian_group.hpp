#ifndef HOMSUM_ABELIAN_GROUP_HPP
#define HOMSUM_ABELIAN_GROUP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "homsum/int_matrix.hpp"

namespace homsum {

/// A finitely generated abelian group in invariant-factor canonical form:
/// free rank plus a torsion chain d_1 | d_2 | ... with every d_i >= 2.
///
/// Canonical form makes isomorphism a field-wise comparison, which is what
/// every verdict in this project ultimately reduces to.
class FgAbGroup {
public:
    /// The trivial group.
    FgAbGroup() = default;

    /// Requires torsion already in canonical form; throws std::invalid_argument
    /// if any d_i < 2 or the divisibility chain fails.
    explicit FgAbGroup(std::size_t rank, std::vector<Int> torsion = {});

    /// Renormalizes an arbitrary list of factors: signs are dropped, unit
    /// factors vanish, zero factors become free summands, and the rest are
    /// rewritten as an invariant-factor chain (Smith form of the diagonal).
    static FgAbGroup canonical(std::size_t rank, const std::vector<Int>& factors);

    static FgAbGroup free(std::size_t rank) { return FgAbGroup(rank); }
    static FgAbGroup cyclic(const Int& order);

    std::size_t rank() const { return rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }
    bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }

    /// Human notation: "0", "Z", "Z^2 (+) Z/6", ...
    std::string to_string() const;

    friend bool operator==(const FgAbGroup& a, const FgAbGroup& b)
    {
        return a.rank_ == b.rank_ && a.torsion_ == b.torsion_;
    }
    friend bool operator!=(const FgAbGroup& a, const FgAbGroup& b) { return !(a == b); }

private:
    std::size_t rank_ = 0;
    std::vector<Int> torsion_;
};

/// Z^rows / im(a), in canonical form.
FgAbGroup cokernel(const IntMatrix& a);

FgAbGroup direct_sum(const FgAbGroup& g, const FgAbGroup& h);

/// Canonical forms are unique, so this is field-wise equality.
bool is_isomorphic(const FgAbGroup& g, const FgAbGroup& h);

/// G (x) H for finitely generated abelian groups.
FgAbGroup tensor_product(const FgAbGroup& g, const FgAbGroup& h);

/// Tor(G, H); only torsion parts contribute (Z/a, Z/b give Z/gcd(a,b)).
FgAbGroup torsion_product(const FgAbGroup& g, const FgAbGroup& h);

}  // namespace homsum

#endif
