#ifndef HOMSUM_SEQUENCES_HPP
#define HOMSUM_SEQUENCES_HPP

#include <map>
#include <optional>
#include <vector>

#include "homsum/space_expr.hpp"

namespace homsum {

/// A fibre bundle over one connected-sum summand: the fibre, the summand C,
/// and the homology of the total space over C. An absent total homology
/// marks the trivial bundle, whose total space C x F is computed on demand.
class BundleData {
public:
    /// Trivial bundle over the summand.
    static BundleData trivial(SpaceExpr base_summand, SpaceExpr fiber);
    /// Bundle with caller-supplied total-space homology.
    static BundleData with_total(SpaceExpr base_summand, SpaceExpr fiber,
                                 GradedGroup total_homology);

    const SpaceExpr& base_summand() const { return base_summand_; }
    const SpaceExpr& fiber() const { return fiber_; }
    bool is_trivial_bundle() const { return !total_homology_.has_value(); }

    /// Total space dimension: dim(C) + dim(F).
    int total_dim() const;
    /// H_* of the total space over C; for the trivial tag this is the
    /// homology of C x F.
    GradedGroup total_homology() const;

private:
    BundleData(SpaceExpr base_summand, SpaceExpr fiber, std::optional<GradedGroup> total);

    SpaceExpr base_summand_;
    SpaceExpr fiber_;
    std::optional<GradedGroup> total_homology_;
};

/// H_*(M) for the pullback of the bundle to B # C: Z at the ends, and in
/// between the half-smash part (B punctured, smashed against the fibre)
/// plus the original total space, degree by degree.
GradedGroup pullback_homology(const SpaceExpr& b, const BundleData& bundle);

/// One row of a decomposition check: the three groups and the verdict.
struct DecompositionRow {
    int degree = 0;
    FgAbGroup total;      // H_q(M)
    FgAbGroup half_smash; // H_q(X')
    FgAbGroup summand;    // H_q(L)
    bool ok = false;
};

struct DecompositionReport {
    std::vector<DecompositionRow> rows;
    bool overall = false;
};

/// Checks H_q(M) = H_q(X') (+) H_q(L) for 0 < q < m and Z at the ends.
DecompositionReport verify_split(const GradedGroup& h_total, const GradedGroup& h_half_smash,
                                 const GradedGroup& h_summand, int m);

/// Cup-with-Euler-class action on a torsion-free cohomology ring: one matrix
/// per degree q for H^q -> H^{q+2}. Absent degrees are zero maps.
class EulerAction {
public:
    EulerAction() = default;

    void set_map(int degree, IntMatrix m);
    const std::map<int, IntMatrix>& maps() const { return maps_; }

    /// Map at the given degree, materialized at the requested shape. Throws
    /// on a stored matrix with the wrong shape.
    IntMatrix map_at(int degree, std::size_t rank_from, std::size_t rank_to) const;

private:
    std::map<int, IntMatrix> maps_;
};

/// H^*(total space) of the circle bundle with the given Euler action, from
/// the two-step exact sequence: H^q = coker(x: H^{q-2} -> H^q) (+)
/// ker(x: H^{q-1} -> H^{q+1}). Requires torsion-free base cohomology (the
/// kernel term is then free and the sequence splits outright) and n >= 2.
GradedGroup gysin_circle_bundle(const GradedGroup& base_cohomology, int n,
                                const EulerAction& euler);

/// Cohomology ring data for the circle bundle over (S^3 x S^3)^{#r} # C
/// with x^2 = k y and x y = V: base ranks 1, 0, 1, 2r, 1, 0, 1 in degrees
/// 0..6 and the cup-with-x matrices [1], [k], [1].
struct WallRingData {
    GradedGroup base_cohomology;
    EulerAction euler;
};
WallRingData wall_ring_data(std::size_t r, const Int& k);

/// H^* of the circle bundle in the Wall setting, computed by running the
/// solver on wall_ring_data (never by a closed-form shortcut). k >= 1.
GradedGroup wall_bundle_cohomology(std::size_t r, const Int& k);

}  // namespace homsum

#endif
