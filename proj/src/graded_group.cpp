#include "homsum/graded_group.hpp"

#include <stdexcept>
#include <utility>

namespace homsum {

namespace {
const FgAbGroup kTrivial{};
}

const FgAbGroup& GradedGroup::at(int degree) const
{
    auto it = groups_.find(degree);
    return it == groups_.end() ? kTrivial : it->second;
}

void GradedGroup::set(int degree, FgAbGroup g)
{
    if (degree < 0)
        throw std::invalid_argument("GradedGroup: negative degree");
    if (g.is_trivial())
        groups_.erase(degree);
    else
        groups_[degree] = std::move(g);
}

void GradedGroup::add(int degree, const FgAbGroup& g)
{
    if (g.is_trivial())
        return;
    set(degree, direct_sum(at(degree), g));
}

int GradedGroup::top_degree() const
{
    return groups_.empty() ? -1 : groups_.rbegin()->first;
}

GradedGroup GradedGroup::reduced() const
{
    GradedGroup out = *this;
    out.groups_.erase(0);
    return out;
}

GradedGroup GradedGroup::shifted(int s) const
{
    if (s < 0)
        throw std::invalid_argument("GradedGroup: negative shift");
    GradedGroup out;
    for (const auto& [q, g] : groups_)
        out.groups_[q + s] = g;
    return out;
}

GradedGroup GradedGroup::truncated_below(int cutoff) const
{
    GradedGroup out;
    for (const auto& [q, g] : groups_)
        if (q < cutoff)
            out.groups_[q] = g;
    return out;
}

Int GradedGroup::euler_characteristic() const
{
    Int chi = 0;
    for (const auto& [q, g] : groups_) {
        Int r(static_cast<unsigned>(g.rank()));
        chi += (q % 2 == 0) ? r : -r;
    }
    return chi;
}

std::size_t GradedGroup::total_rank() const
{
    std::size_t r = 0;
    for (const auto& [q, g] : groups_)
        r += g.rank();
    return r;
}

GradedGroup direct_sum(const GradedGroup& a, const GradedGroup& b)
{
    GradedGroup out = a;
    for (const auto& [q, g] : b.groups())
        out.add(q, g);
    return out;
}

}  // namespace homsum
