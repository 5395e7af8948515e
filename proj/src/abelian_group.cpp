#include "homsum/abelian_group.hpp"

#include <stdexcept>
#include <utility>

namespace homsum {

FgAbGroup::FgAbGroup(std::size_t rank, std::vector<Int> torsion)
    : rank_(rank), torsion_(std::move(torsion))
{
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        if (torsion_[i] < 2)
            throw std::invalid_argument("FgAbGroup: torsion coefficients must be >= 2");
        if (i + 1 < torsion_.size() && torsion_[i + 1] % torsion_[i] != 0)
            throw std::invalid_argument("FgAbGroup: torsion must form a divisibility chain");
    }
}

FgAbGroup FgAbGroup::canonical(std::size_t rank, const std::vector<Int>& factors)
{
    std::vector<Int> nontrivial;
    for (const Int& f : factors) {
        Int a = abs_int(f);
        if (a == 0)
            ++rank;  // Z/0 is a free summand
        else if (a > 1)
            nontrivial.push_back(std::move(a));
    }
    if (nontrivial.size() > 1) {
        std::vector<Int> chain;
        for (const Int& d : smith_diagonal(IntMatrix::diagonal(nontrivial)))
            if (d > 1)
                chain.push_back(d);
        nontrivial = std::move(chain);
    }
    return FgAbGroup(rank, std::move(nontrivial));
}

FgAbGroup FgAbGroup::cyclic(const Int& order)
{
    return canonical(0, {order});
}

std::string FgAbGroup::to_string() const
{
    if (is_trivial())
        return "0";
    std::string s;
    if (rank_ == 1)
        s = "Z";
    else if (rank_ > 1)
        s = "Z^" + std::to_string(rank_);
    for (const Int& d : torsion_) {
        if (!s.empty())
            s += " (+) ";
        s += "Z/" + d.str();
    }
    return s;
}

FgAbGroup cokernel(const IntMatrix& a)
{
    std::vector<Int> diag = smith_diagonal(a);
    std::size_t nonzero = 0;
    std::vector<Int> factors;
    for (const Int& d : diag) {
        if (d == 0)
            continue;
        ++nonzero;
        if (d > 1)
            factors.push_back(d);
    }
    // Smith diagonal is already an invariant-factor chain.
    return FgAbGroup(a.rows() - nonzero, std::move(factors));
}

FgAbGroup direct_sum(const FgAbGroup& g, const FgAbGroup& h)
{
    std::vector<Int> merged = g.torsion();
    merged.insert(merged.end(), h.torsion().begin(), h.torsion().end());
    return FgAbGroup::canonical(g.rank() + h.rank(), merged);
}

bool is_isomorphic(const FgAbGroup& g, const FgAbGroup& h)
{
    return g == h;
}

FgAbGroup tensor_product(const FgAbGroup& g, const FgAbGroup& h)
{
    std::vector<Int> factors;
    for (const Int& t : g.torsion())
        for (std::size_t i = 0; i < h.rank(); ++i)
            factors.push_back(t);
    for (const Int& s : h.torsion())
        for (std::size_t i = 0; i < g.rank(); ++i)
            factors.push_back(s);
    for (const Int& t : g.torsion())
        for (const Int& s : h.torsion())
            factors.push_back(gcd_int(t, s));
    return FgAbGroup::canonical(g.rank() * h.rank(), factors);
}

FgAbGroup torsion_product(const FgAbGroup& g, const FgAbGroup& h)
{
    std::vector<Int> factors;
    for (const Int& t : g.torsion())
        for (const Int& s : h.torsion())
            factors.push_back(gcd_int(t, s));
    return FgAbGroup::canonical(0, factors);
}

}  // namespace homsum
