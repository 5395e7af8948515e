#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <utility>
#include <vector>

#include "homsum/dsl.hpp"
#include "homsum/duality.hpp"
#include "homsum/sequences.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// homsum::Int <-> python int, bridged through decimal strings so values of
// any size survive the crossing exactly.
template <>
struct type_caster<homsum::Int> {
    PYBIND11_TYPE_CASTER(homsum::Int, const_name("int"));

    bool load(handle src, bool)
    {
        if (!PyLong_Check(src.ptr()))
            return false;
        value = homsum::Int(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const homsum::Int& src, return_value_policy, handle)
    {
        return PyLong_FromString(src.str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

using homsum::FgAbGroup;
using homsum::GradedGroup;
using homsum::Int;
using homsum::IntMatrix;
using homsum::SpaceExpr;

using PyGroup = std::pair<std::size_t, std::vector<Int>>;
using PyGraded = std::map<int, PyGroup>;
using PyMatrix = std::vector<std::vector<Int>>;

PyGroup group_to_py(const FgAbGroup& g)
{
    return {g.rank(), g.torsion()};
}

PyGraded graded_to_py(const GradedGroup& g)
{
    PyGraded out;
    for (const auto& [q, group] : g.groups())
        out[q] = group_to_py(group);
    return out;
}

GradedGroup graded_from_py(const PyGraded& g)
{
    GradedGroup out;
    for (const auto& [q, group] : g)
        out.set(q, FgAbGroup::canonical(group.first, group.second));
    return out;
}

IntMatrix matrix_from_py(const PyMatrix& rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("matrix rows have unequal lengths");
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

PyMatrix matrix_to_py(const IntMatrix& m)
{
    PyMatrix out(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = m(i, j);
    return out;
}

IntMatrix boundary_from_py(const PyMatrix& rows, std::size_t want_rows, std::size_t want_cols)
{
    // [] is accepted for any matrix without entries (zero rows or columns).
    if (rows.empty() && (want_rows == 0 || want_cols == 0))
        return IntMatrix(want_rows, want_cols);
    if (rows.size() != want_rows)
        throw std::invalid_argument("boundary row count does not match the chain ranks");
    IntMatrix m(want_rows, want_cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != want_cols)
            throw std::invalid_argument("boundary column count does not match the chain ranks");
        for (std::size_t j = 0; j < want_cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact (co)homology calculator for bundles pulled back over connected sums.\n"
              "Groups are (rank, [torsion...]) tuples; graded groups are {degree: group} dicts;\n"
              "matrices are lists of rows of ints.";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const homsum::dsl::ParseError& e) {
            const std::string msg = std::string(e.what()) + " (bytes " +
                                    std::to_string(e.span().start) + ".." +
                                    std::to_string(e.span().end) + ")";
            PyErr_SetString(PyExc_ValueError, msg.c_str());
        }
    });

    m.def(
        "homology",
        [](const std::string& expr) { return graded_to_py(evaluate(homsum::dsl::parse(expr))); },
        py::arg("expr"), "Unreduced integral homology of a space expression.");

    m.def(
        "cohomology",
        [](const std::string& expr) {
            return graded_to_py(cohomology_profile(evaluate(homsum::dsl::parse(expr))));
        },
        py::arg("expr"), "Integral cohomology of a space expression (universal coefficients).");

    m.def(
        "canonical_form",
        [](const std::string& expr) { return homsum::dsl::print(homsum::dsl::parse(expr)); },
        py::arg("expr"), "Round-trips an expression through the parser and printer.");

    m.def(
        "smith_normal_form",
        [](const PyMatrix& a) {
            const homsum::SmithNormalForm snf = homsum::smith_normal_form(matrix_from_py(a));
            return py::make_tuple(matrix_to_py(snf.u), matrix_to_py(snf.d), matrix_to_py(snf.v));
        },
        py::arg("matrix"), "Returns (U, D, V) with D = U * A * V, U and V unimodular.");

    m.def(
        "cokernel",
        [](const PyMatrix& a) { return group_to_py(homsum::cokernel(matrix_from_py(a))); },
        py::arg("matrix"), "Z^rows / im(A) in invariant-factor form.");

    m.def(
        "chain_homology",
        [](const std::vector<std::size_t>& ranks, const std::vector<PyMatrix>& boundaries) {
            if (ranks.empty())
                throw std::invalid_argument("ranks must cover degree 0");
            if (boundaries.size() + 1 != ranks.size())
                throw std::invalid_argument("need one boundary per degree 1..top");
            std::vector<IntMatrix> maps;
            for (std::size_t q = 1; q < ranks.size(); ++q)
                maps.push_back(boundary_from_py(boundaries[q - 1], ranks[q - 1], ranks[q]));
            return graded_to_py(homology(homsum::ChainComplex(ranks, std::move(maps))));
        },
        py::arg("ranks"), py::arg("boundaries"),
        "Homology of the cellular chain complex with the given per-degree ranks\n"
        "and boundary matrices (boundaries[q-1] maps degree q to q-1).");

    m.def(
        "pullback",
        [](const std::string& b, const std::string& c, const std::string& f,
           const std::optional<PyGraded>& l) {
            const SpaceExpr be = homsum::dsl::parse(b);
            const SpaceExpr ce = homsum::dsl::parse(c);
            const SpaceExpr fe = homsum::dsl::parse(f);
            const homsum::BundleData bundle =
                l ? homsum::BundleData::with_total(ce, fe, graded_from_py(*l))
                  : homsum::BundleData::trivial(ce, fe);
            py::dict out;
            out["m"] = bundle.total_dim();
            out["M"] = graded_to_py(pullback_homology(be, bundle));
            out["Xp"] = graded_to_py(
                evaluate(SpaceExpr::half_smash(SpaceExpr::punctured(be), fe)));
            out["L"] = graded_to_py(bundle.total_homology());
            return out;
        },
        py::arg("b"), py::arg("c"), py::arg("f"), py::arg("l") = py::none(),
        "Homology of the pullback of a bundle over C (fiber F, total homology l,\n"
        "trivial when omitted) to the connected sum B # C.");

    m.def(
        "verify_split",
        [](const PyGraded& total, const PyGraded& half_smash, const PyGraded& summand, int m) {
            const homsum::DecompositionReport report = homsum::verify_split(
                graded_from_py(total), graded_from_py(half_smash), graded_from_py(summand), m);
            std::vector<int> failing;
            for (const homsum::DecompositionRow& row : report.rows)
                if (!row.ok)
                    failing.push_back(row.degree);
            return py::make_tuple(report.overall, failing);
        },
        py::arg("total"), py::arg("half_smash"), py::arg("summand"), py::arg("m"),
        "Checks H_q(M) = H_q(X') (+) H_q(L); returns (overall, failing_degrees).");

    m.def(
        "gysin",
        [](std::size_t r, const Int& k) { return graded_to_py(homsum::wall_bundle_cohomology(r, k)); },
        py::arg("r"), py::arg("k"),
        "H^* of the circle bundle over (S^3 x S^3)^{#r} # C with x^3 = k V.");

    m.def(
        "wall",
        [](std::size_t r, const Int& k) {
            const homsum::WallDescriptor d = homsum::wall_descriptor(r, k);
            py::dict out;
            out["r"] = d.r;
            out["k"] = d.k;
            out["summand_count"] = d.summand_count;
            out["text"] = d.text;
            out["H_M"] = graded_to_py(d.total_cohomology);
            out["H_L"] = graded_to_py(d.summand_cohomology);
            return out;
        },
        py::arg("r"), py::arg("k"),
        "Connected-sum descriptor of the circle bundle total space.");

    m.def(
        "check_poincare",
        [](const PyGraded& h, int n) { return homsum::check_poincare(graded_from_py(h), n); },
        py::arg("homology"), py::arg("n"),
        "Poincare duality check of a homology profile at dimension n.");

#ifdef HOMSUM_VERSION
    m.attr("__version__") = HOMSUM_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
