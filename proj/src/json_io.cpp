#include "homsum/json_io.hpp"

#include <stdexcept>
#include <string>

namespace homsum {

using nlohmann::json;

namespace {

Int int_from_json(const json& j)
{
    if (j.is_number_integer())
        return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer string '" + j.get<std::string>() + "'");
        }
    }
    throw std::invalid_argument("expected an integer or a decimal string");
}

std::size_t count_from_json(const json& j, const char* what)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw std::invalid_argument(std::string(what) + " must be a nonnegative integer");
    return static_cast<std::size_t>(j.get<long long>());
}

}  // namespace

json to_json(const IntMatrix& m)
{
    json entries = json::array();
    for (const Int& v : m.entries())
        entries.push_back(v.str());
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

json to_json(const FgAbGroup& g)
{
    json torsion = json::array();
    for (const Int& d : g.torsion())
        torsion.push_back(d.str());
    return json{{"rank", g.rank()}, {"torsion", std::move(torsion)}};
}

json to_json(const GradedGroup& g)
{
    json out = json::object();
    for (const auto& [q, group] : g.groups())
        out[std::to_string(q)] = to_json(group);
    return out;
}

json to_json(const ChainComplex& c)
{
    json groups = json::array();
    for (std::size_t r : c.ranks())
        groups.push_back(r);
    json boundaries = json::array();
    for (int q = 1; q <= c.top(); ++q)
        boundaries.push_back(to_json(c.boundary(q)));
    return json{{"top", c.top()}, {"groups", std::move(groups)},
                {"boundaries", std::move(boundaries)}};
}

IntMatrix int_matrix_from_json(const json& j)
{
    const std::size_t rows = count_from_json(j.at("rows"), "rows");
    const std::size_t cols = count_from_json(j.at("cols"), "cols");
    const json& entries = j.at("entries");
    if (!entries.is_array())
        throw std::invalid_argument("matrix entries must be an array");
    std::vector<Int> values;
    values.reserve(entries.size());
    for (const json& e : entries)
        values.push_back(int_from_json(e));
    return IntMatrix(rows, cols, std::move(values));
}

FgAbGroup fg_ab_group_from_json(const json& j)
{
    const std::size_t rank = count_from_json(j.at("rank"), "rank");
    std::vector<Int> torsion;
    if (j.contains("torsion")) {
        if (!j.at("torsion").is_array())
            throw std::invalid_argument("torsion must be an array");
        for (const json& d : j.at("torsion"))
            torsion.push_back(int_from_json(d));
    }
    return FgAbGroup(rank, std::move(torsion));
}

GradedGroup graded_group_from_json(const json& j)
{
    if (!j.is_object())
        throw std::invalid_argument("graded group must be an object keyed by degree");
    GradedGroup out;
    for (const auto& [key, value] : j.items()) {
        int degree;
        try {
            std::size_t used = 0;
            degree = std::stoi(key, &used);
            if (used != key.size())
                throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad degree key '" + key + "'");
        }
        if (degree < 0)
            throw std::invalid_argument("degree keys must be nonnegative");
        out.set(degree, fg_ab_group_from_json(value));
    }
    return out;
}

ChainComplex chain_complex_from_json(const json& j)
{
    const json& groups = j.at("groups");
    if (!groups.is_array() || groups.empty())
        throw std::invalid_argument("groups must be a nonempty array of ranks");
    std::vector<std::size_t> ranks;
    for (const json& g : groups)
        ranks.push_back(count_from_json(g, "group rank"));
    if (j.contains("top") && count_from_json(j.at("top"), "top") + 1 != ranks.size())
        throw std::invalid_argument("top does not match the number of groups");

    const json& bnd = j.at("boundaries");
    if (!bnd.is_array() || bnd.size() + 1 != ranks.size())
        throw std::invalid_argument("need exactly one boundary map per degree 1..top");
    std::vector<IntMatrix> boundaries;
    for (const json& b : bnd)
        boundaries.push_back(int_matrix_from_json(b));
    return ChainComplex(std::move(ranks), std::move(boundaries));
}

}  // namespace homsum
