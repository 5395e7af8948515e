// Acceptance suite: end-to-end checks of the calculator against its
// published fixtures and properties. Each criterion prints one line.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "homsum/cli.hpp"
#include "homsum/dsl.hpp"
#include "homsum/duality.hpp"
#include "homsum/json_io.hpp"
#include "homsum/sequences.hpp"
#include "support/test_support.hpp"

using namespace homsum;
using nlohmann::json;

namespace {

GradedGroup graded_of(std::initializer_list<std::pair<int, FgAbGroup>> items)
{
    GradedGroup g;
    for (const auto& [q, group] : items)
        g.set(q, group);
    return g;
}

// Homology of a closed oriented manifold from its cohomology, by universal
// coefficients: rank H_q = rank H^q, torsion H_q = torsion H^{q+1}.
GradedGroup homology_from_cohomology(const GradedGroup& coh)
{
    GradedGroup h;
    const int top = coh.top_degree();
    for (int q = 0; q <= top; ++q)
        h.set(q, direct_sum(FgAbGroup::free(coh.at(q).rank()),
                            FgAbGroup::canonical(0, coh.at(q + 1).torsion())));
    return h;
}

bool criterion_counterexample(std::string& detail)
{
    const cli::CommandResult res = cli::run(
        {"pullback", "--B", "CP(2)", "--C", "S(4)", "--F", "S(7)", "--json"});
    if (res.exit_code != 0) {
        detail = "pullback CLI exited " + std::to_string(res.exit_code);
        return false;
    }
    const json payload = json::parse(res.output);
    const GradedGroup h_m = graded_group_from_json(payload.at("M"));
    const GradedGroup h_xp = graded_group_from_json(payload.at("Xp"));
    const GradedGroup h_l = graded_group_from_json(payload.at("L"));

    GradedGroup expected;
    for (int q : {0, 2, 4, 7, 9, 11})
        expected.set(q, FgAbGroup::free(1));
    if (h_m != expected) {
        detail = "H_*(M) is not Z in exactly degrees {0,2,4,7,9,11}";
        return false;
    }

    const GradedGroup oracle = homology(chain_model(dsl::parse("CP(2) * S(7)")));
    if (h_m != oracle) {
        detail = "disagrees with the Kunneth oracle for CP(2) * S(7)";
        return false;
    }

    const DecompositionReport report = verify_split(h_m, h_xp, h_l, 11);
    if (!report.overall) {
        detail = "split verification report is not all-true";
        return false;
    }
    return true;
}

bool criterion_wall_table(std::string& detail)
{
    for (std::size_t r = 0; r <= 4; ++r)
        for (long long k = 1; k <= 6; ++k) {
            const WallRingData data = wall_ring_data(r, k);
            const GradedGroup h = gysin_circle_bundle(data.base_cohomology, 6, data.euler);
            const GradedGroup expected =
                graded_of({{0, FgAbGroup::free(1)},
                           {3, FgAbGroup::free(2 * r)},
                           {4, direct_sum(FgAbGroup::free(2 * r), FgAbGroup::cyclic(k))},
                           {7, FgAbGroup::free(1)}});
            if (h != expected) {
                detail = "mismatch at r=" + std::to_string(r) + " k=" + std::to_string(k);
                return false;
            }
        }
    return true;
}

bool criterion_l_fixture(std::string& detail)
{
    for (long long k : {2, 3, 5, 12}) {
        const WallDescriptor d = wall_descriptor(0, k);
        const GradedGroup expected = graded_of(
            {{0, FgAbGroup::free(1)}, {4, FgAbGroup::cyclic(k)}, {7, FgAbGroup::free(1)}});
        if (d.summand_cohomology != expected || d.total_cohomology != expected) {
            detail = "mismatch at k=" + std::to_string(k);
            return false;
        }
    }
    return true;
}

bool criterion_decomposition_vs_oracle(std::string& detail)
{
    test::Rng rng(0x5eed5eedULL);
    for (int t = 0; t < 100; ++t) {
        const int dim = test::rand_int(rng, 2, 8);
        const SpaceExpr b = test::random_manifold(rng, dim, /*allow_sum=*/false);
        const SpaceExpr c = test::random_manifold(rng, dim, /*allow_sum=*/false);
        const int fdim = std::vector<int>{1, 3, 7}[static_cast<std::size_t>(
            test::rand_int(rng, 0, 2))];
        const SpaceExpr f = SpaceExpr::sphere(fdim);

        const GradedGroup computed = pullback_homology(b, BundleData::trivial(c, f));
        const GradedGroup oracle = homology(
            chain_model(SpaceExpr::product(SpaceExpr::connected_sum(b, c), f)));
        if (computed != oracle) {
            detail = "instance " + std::to_string(t) + ": B=" + dsl::print(b) +
                     "  C=" + dsl::print(c) + "  F=" + dsl::print(f);
            return false;
        }
    }
    return true;
}

bool criterion_snf(std::string& detail)
{
    test::Rng rng(0xabcdef01ULL);
    for (int t = 0; t < 1000; ++t) {
        const IntMatrix a = test::random_matrix(rng, 8, -10, 10);
        const SmithNormalForm snf = smith_normal_form(a);
        if (snf.u * a * snf.v != snf.d) {
            detail = "U*A*V != D at trial " + std::to_string(t);
            return false;
        }
        if (abs_int(determinant(snf.u)) != 1 || abs_int(determinant(snf.v)) != 1) {
            detail = "U or V not unimodular at trial " + std::to_string(t);
            return false;
        }
        const std::vector<Int> diag = snf.d.diagonal_entries();
        bool seen_zero = false;
        for (std::size_t i = 0; i < diag.size(); ++i) {
            if (diag[i] < 0 || (seen_zero && diag[i] != 0) ||
                (i + 1 < diag.size() && diag[i] != 0 && diag[i + 1] % diag[i] != 0)) {
                detail = "divisibility chain broken at trial " + std::to_string(t);
                return false;
            }
            seen_zero = seen_zero || diag[i] == 0;
        }
    }
    return true;
}

bool criterion_poincare(std::string& detail)
{
    std::vector<std::pair<SpaceExpr, int>> catalog;
    for (int n = 1; n <= 8; ++n)
        catalog.emplace_back(SpaceExpr::sphere(n), n);
    for (int n = 1; n <= 4; ++n)
        catalog.emplace_back(SpaceExpr::cp(n), 2 * n);
    for (int r = 0; r <= 4; ++r)
        catalog.emplace_back(SpaceExpr::sigma_sigma(r), 6);
    for (int a = 1; a <= 5; ++a)
        for (int b = a; b <= 5; ++b)
            catalog.emplace_back(
                SpaceExpr::product(SpaceExpr::sphere(a), SpaceExpr::sphere(b)), a + b);
    for (int a = 2; a <= 3; ++a)
        for (int b = 2; b <= 3; ++b)
            catalog.emplace_back(
                SpaceExpr::product(SpaceExpr::product(SpaceExpr::sphere(a), SpaceExpr::sphere(b)),
                                   SpaceExpr::sphere(2)),
                a + b + 2);

    const std::size_t base_count = catalog.size();
    for (std::size_t i = 0; i < base_count; ++i)
        for (std::size_t j = i; j < base_count; ++j) {
            const auto& [x, nx] = catalog[i];
            const auto& [y, ny] = catalog[j];
            if (nx == ny && x.is_simply_connected_manifold() &&
                y.is_simply_connected_manifold())
                catalog.emplace_back(SpaceExpr::connected_sum(x, y), nx);
        }

    for (const auto& [e, n] : catalog)
        if (!check_poincare(evaluate(e), n)) {
            detail = "fails for " + dsl::print(e);
            return false;
        }

    for (std::size_t r = 0; r <= 4; ++r)
        for (long long k = 1; k <= 6; ++k)
            if (!check_poincare(homology_from_cohomology(wall_bundle_cohomology(r, k)), 7)) {
                detail = "fails for the Wall output r=" + std::to_string(r) +
                         " k=" + std::to_string(k);
                return false;
            }
    return true;
}

DualityMapSet sphere_self_map(int n, long long d, long long lambda)
{
    DualityMapSet maps;
    maps.total_dim = n;
    maps.lambda = lambda;
    maps.f_upper[0] = IntMatrix::identity(1);
    maps.f_upper[n] = IntMatrix(1, 1, {Int(d)});
    maps.f_star[0] = IntMatrix::identity(1);
    maps.f_star[n] = IntMatrix(1, 1, {Int(d)});
    for (int q : {0, n}) {
        maps.d_x[q] = IntMatrix::identity(1);
        maps.d_y[q] = IntMatrix::identity(1);
    }
    return maps;
}

bool criterion_degree_relation(std::string& detail)
{
    DualityMapSet identity;
    identity.total_dim = 4;
    identity.lambda = 1;
    for (int q : {0, 2, 4}) {
        identity.f_upper[q] = IntMatrix::identity(1);
        identity.f_star[q] = IntMatrix::identity(1);
        identity.d_x[q] = IntMatrix::identity(1);
        identity.d_y[q] = IntMatrix::identity(1);
    }
    if (!check_degree_relation(identity)) {
        detail = "identity data with lambda=1 rejected";
        return false;
    }
    identity.lambda = 2;
    if (check_degree_relation(identity)) {
        detail = "perturbed lambda accepted on identity data";
        return false;
    }

    for (long long d = -3; d <= 3; ++d) {
        if (!check_degree_relation(sphere_self_map(7, d, d))) {
            detail = "degree-" + std::to_string(d) + " sphere data rejected";
            return false;
        }
        if (check_degree_relation(sphere_self_map(7, d, d + 1))) {
            detail = "lambda=" + std::to_string(d + 1) + " accepted for degree " +
                     std::to_string(d);
            return false;
        }
    }
    return true;
}

bool criterion_euler_characteristic(std::string& detail)
{
    for (std::size_t r = 0; r <= 4; ++r)
        for (long long k = 1; k <= 6; ++k)
            if (wall_bundle_cohomology(r, k).euler_characteristic() != 0) {
                detail = "nonzero chi at r=" + std::to_string(r) + " k=" + std::to_string(k);
                return false;
            }
    return true;
}

bool criterion_dsl_round_trip(std::string& detail)
{
    test::Rng rng(0x0dd5eedULL);
    for (int t = 0; t < 1000; ++t) {
        const SpaceExpr e = test::random_expr(rng, 6);
        const std::string text = dsl::print(e);
        SpaceExpr back = dsl::parse(text);
        if (back != e) {
            detail = "parse(print(e)) != e for: " + text;
            return false;
        }
        if (dsl::print(back) != text) {
            detail = "print is not idempotent for: " + text;
            return false;
        }
    }
    return true;
}

}  // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"counterexample fixture: pullback over CP(2) # S(4) with fiber S(7)",
         criterion_counterexample},
        {"Wall table: gysin over the (r,k) grid {0..4}x{1..6}", criterion_wall_table},
        {"H^*(L) fixture: wall_descriptor(0,k) for k in {2,3,5,12}", criterion_l_fixture},
        {"decomposition vs Kunneth oracle on 100 random trivial bundles",
         criterion_decomposition_vs_oracle},
        {"Smith normal form properties on 1000 random matrices", criterion_snf},
        {"Poincare duality across the closed-manifold catalog and Wall outputs",
         criterion_poincare},
        {"degree-lambda relation for identity and sphere self-map data",
         criterion_degree_relation},
        {"Euler characteristic of every gysin output is zero", criterion_euler_characteristic},
        {"DSL round-trip on 1000 generated trees", criterion_dsl_round_trip},
    };

    bool all_ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        all_ok = all_ok && ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": "
                  << criteria[i].name;
        if (!ok && !detail.empty())
            std::cout << "  [" << detail << "]";
        std::cout << "\n";
    }
    return all_ok ? 0 : 1;
}
