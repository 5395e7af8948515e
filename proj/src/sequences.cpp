#include "homsum/sequences.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace homsum {

BundleData::BundleData(SpaceExpr base_summand, SpaceExpr fiber, std::optional<GradedGroup> total)
    : base_summand_(std::move(base_summand)),
      fiber_(std::move(fiber)),
      total_homology_(std::move(total))
{
    if (!base_summand_.is_closed_manifold())
        throw std::invalid_argument("BundleData: base summand must be a closed manifold");
    if (!fiber_.is_closed_manifold())
        throw std::invalid_argument("BundleData: fiber must be a closed manifold");
}

BundleData BundleData::trivial(SpaceExpr base_summand, SpaceExpr fiber)
{
    return BundleData(std::move(base_summand), std::move(fiber), std::nullopt);
}

BundleData BundleData::with_total(SpaceExpr base_summand, SpaceExpr fiber,
                                  GradedGroup total_homology)
{
    return BundleData(std::move(base_summand), std::move(fiber), std::move(total_homology));
}

int BundleData::total_dim() const
{
    return base_summand_.manifold_info()->dimension + fiber_.manifold_info()->dimension;
}

GradedGroup BundleData::total_homology() const
{
    if (total_homology_)
        return *total_homology_;
    return evaluate(SpaceExpr::product(base_summand_, fiber_));
}

GradedGroup pullback_homology(const SpaceExpr& b, const BundleData& bundle)
{
    if (!b.is_simply_connected_manifold())
        throw std::invalid_argument("pullback: B must be a closed simply connected manifold");
    if (!bundle.base_summand().is_simply_connected_manifold())
        throw std::invalid_argument("pullback: C must be a closed simply connected manifold");
    const int n = b.manifold_info()->dimension;
    if (n != bundle.base_summand().manifold_info()->dimension)
        throw std::invalid_argument("pullback: summand dimensions differ");

    const int m = bundle.total_dim();
    const GradedGroup h_summand = bundle.total_homology();
    const GradedGroup h_half_smash =
        evaluate(SpaceExpr::half_smash(SpaceExpr::punctured(b), bundle.fiber()));

    GradedGroup out;
    for (int q = 1; q < m; ++q)
        out.set(q, direct_sum(h_half_smash.at(q), h_summand.at(q)));
    out.set(0, FgAbGroup::free(1));
    out.set(m, FgAbGroup::free(1));
    return out;
}

DecompositionReport verify_split(const GradedGroup& h_total, const GradedGroup& h_half_smash,
                                 const GradedGroup& h_summand, int m)
{
    DecompositionReport report;
    const int top = std::max({m, h_total.top_degree(), h_half_smash.top_degree(),
                              h_summand.top_degree()});
    report.overall = true;
    for (int q = 0; q <= top; ++q) {
        DecompositionRow row;
        row.degree = q;
        row.total = h_total.at(q);
        row.half_smash = h_half_smash.at(q);
        row.summand = h_summand.at(q);
        if (q == 0 || q == m)
            row.ok = row.total == FgAbGroup::free(1);
        else if (q < m)
            row.ok = is_isomorphic(row.total, direct_sum(row.half_smash, row.summand));
        else
            row.ok = row.total.is_trivial();  // nothing may survive above m
        report.overall = report.overall && row.ok;
        report.rows.push_back(std::move(row));
    }
    return report;
}

void EulerAction::set_map(int degree, IntMatrix m)
{
    maps_[degree] = std::move(m);
}

IntMatrix EulerAction::map_at(int degree, std::size_t rank_from, std::size_t rank_to) const
{
    auto it = maps_.find(degree);
    if (it == maps_.end())
        return IntMatrix::zero(rank_to, rank_from);
    if (it->second.rows() != rank_to || it->second.cols() != rank_from)
        throw std::invalid_argument("EulerAction: matrix shape does not match the given ranks");
    return it->second;
}

GradedGroup gysin_circle_bundle(const GradedGroup& base_cohomology, int n,
                                const EulerAction& euler)
{
    if (n < 2)
        throw std::invalid_argument("gysin: base dimension must be >= 2");
    if (base_cohomology.top_degree() > n)
        throw std::invalid_argument("gysin: base cohomology above its dimension");
    for (const auto& [q, g] : base_cohomology.groups())
        if (!g.torsion().empty())
            throw std::invalid_argument("gysin: torsion in the base is not supported");

    auto rank_at = [&](int q) { return base_cohomology.at(q).rank(); };
    auto action = [&](int q) { return euler.map_at(q, rank_at(q), rank_at(q + 2)); };

    GradedGroup out;
    for (int q = 0; q <= n + 1; ++q) {
        const FgAbGroup cok = cokernel(action(q - 2));
        const std::size_t ker = rank_at(q - 1) - rank(action(q - 1));
        out.set(q, direct_sum(cok, FgAbGroup::free(ker)));
    }
    return out;
}

WallRingData wall_ring_data(std::size_t r, const Int& k)
{
    if (k < 1)
        throw std::invalid_argument("wall: Euler cube coefficient k must be >= 1");

    WallRingData data;
    data.base_cohomology.set(0, FgAbGroup::free(1));
    data.base_cohomology.set(2, FgAbGroup::free(1));
    data.base_cohomology.set(3, FgAbGroup::free(2 * r));
    data.base_cohomology.set(4, FgAbGroup::free(1));
    data.base_cohomology.set(6, FgAbGroup::free(1));

    data.euler.set_map(0, IntMatrix(1, 1, {Int(1)}));  // 1 -> x
    data.euler.set_map(2, IntMatrix(1, 1, {k}));       // x -> x^2 = k y
    data.euler.set_map(4, IntMatrix(1, 1, {Int(1)}));  // y -> x y = V
    return data;
}

GradedGroup wall_bundle_cohomology(std::size_t r, const Int& k)
{
    const WallRingData data = wall_ring_data(r, k);
    return gysin_circle_bundle(data.base_cohomology, 6, data.euler);
}

}  // namespace homsum
