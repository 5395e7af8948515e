#include "homsum/duality.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "homsum/sequences.hpp"

namespace homsum {

GradedGroup cohomology_profile(const GradedGroup& homology)
{
    GradedGroup out;
    for (const auto& [q, g] : homology.groups()) {
        out.add(q, FgAbGroup::free(g.rank()));
        if (!g.torsion().empty())
            out.add(q + 1, FgAbGroup(0, g.torsion()));
    }
    return out;
}

bool check_poincare(const GradedGroup& homology, int dimension)
{
    if (dimension < 0)
        return homology.is_trivial();
    const GradedGroup profile = cohomology_profile(homology);
    const int top = std::max({dimension, homology.top_degree(), profile.top_degree()});
    for (int q = 0; q <= top; ++q)
        if (!is_isomorphic(profile.at(q), homology.at(dimension - q)))
            return false;
    return true;
}

bool check_degree_relation(const DualityMapSet& maps)
{
    std::set<int> degrees;
    for (const auto& [k, m] : maps.f_upper)
        degrees.insert(k);
    for (const auto& [k, m] : maps.d_x)
        degrees.insert(k);
    for (const auto& [k, m] : maps.d_y)
        degrees.insert(k);
    for (const auto& [j, m] : maps.f_star)
        degrees.insert(maps.total_dim - j);

    auto lookup = [](const std::map<int, IntMatrix>& maps_by_degree, int degree,
                     std::size_t rows, std::size_t cols) {
        auto it = maps_by_degree.find(degree);
        return it == maps_by_degree.end() ? IntMatrix::zero(rows, cols) : it->second;
    };

    for (int k : degrees) {
        const IntMatrix fu = lookup(maps.f_upper, k, 0, 0);
        const IntMatrix dx = lookup(maps.d_x, k, 0, fu.rows());
        const IntMatrix fs = lookup(maps.f_star, maps.total_dim - k, 0, dx.rows());
        const IntMatrix dy = lookup(maps.d_y, k, fs.rows(), fu.cols());
        if (dx.cols() != fu.rows() || fs.cols() != dx.rows())
            throw std::invalid_argument("check_degree_relation: map shapes do not compose");
        const IntMatrix lhs = fs * (dx * fu);
        if (lhs.rows() != dy.rows() || lhs.cols() != dy.cols())
            throw std::invalid_argument("check_degree_relation: composite and D_Y shapes differ");
        if (lhs != maps.lambda * dy)
            return false;
    }
    return true;
}

WallDescriptor wall_descriptor(std::size_t r, const Int& k)
{
    if (k < 1)
        throw std::invalid_argument("wall: Euler cube coefficient k must be >= 1");

    WallDescriptor d;
    d.r = r;
    d.k = k;
    d.summand_count = 2 * r;
    if (r == 0)
        d.text = "L_" + k.str();
    else
        d.text = "#^{" + std::to_string(2 * r) + "}(S³×S⁴) # L_" + k.str();

    d.summand_cohomology.set(0, FgAbGroup::free(1));
    d.summand_cohomology.set(4, FgAbGroup::cyclic(k));
    d.summand_cohomology.set(7, FgAbGroup::free(1));

    d.total_cohomology = wall_bundle_cohomology(r, k);
    return d;
}

}  // namespace homsum
