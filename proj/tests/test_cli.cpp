#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "homsum/cli.hpp"
#include "homsum/dsl.hpp"
#include "homsum/json_io.hpp"
#include "homsum/sequences.hpp"
#include "support/test_support.hpp"

using namespace homsum;
using nlohmann::json;

namespace {

std::filesystem::path write_temp(const std::string& name, const json& content)
{
    const std::filesystem::path path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content.dump();
    return path;
}

cli::CommandResult run(std::initializer_list<std::string> args)
{
    return cli::run(std::vector<std::string>(args));
}

}  // namespace

TEST_CASE("homology subcommand")
{
    const cli::CommandResult table = run({"homology", "CP(2) # S(4)"});
    CHECK(table.exit_code == 0);
    CHECK(table.output.find("0\tZ") != std::string::npos);
    CHECK(table.output.find("2\tZ") != std::string::npos);
    CHECK(table.output.find("4\tZ") != std::string::npos);

    const cli::CommandResult js = run({"homology", "CP(2) # S(4)", "--json"});
    CHECK(js.exit_code == 0);
    const GradedGroup parsed = graded_group_from_json(json::parse(js.output));
    CHECK(parsed == evaluate(dsl::parse("CP(2) # S(4)")));
}

TEST_CASE("homology from a chain complex file")
{
    const ChainComplex moore({1, 0, 0, 1, 1}, {IntMatrix::zero(1, 0), IntMatrix::zero(0, 0),
                                               IntMatrix::zero(0, 1),
                                               IntMatrix(1, 1, {Int(5)})});
    const auto path = write_temp("homsum_cli_chain.json", to_json(moore));
    const cli::CommandResult res = run({"homology", "--chain", path.string(), "--json"});
    CHECK(res.exit_code == 0);
    CHECK(graded_group_from_json(json::parse(res.output)) == homology(moore));

    // Invalid complexes are an input error.
    const ChainComplex bad({1, 1, 1}, {IntMatrix::identity(1), IntMatrix::identity(1)});
    const auto bad_path = write_temp("homsum_cli_bad_chain.json", to_json(bad));
    CHECK(run({"homology", "--chain", bad_path.string()}).exit_code == 2);
}

TEST_CASE("cohomology subcommand")
{
    const cli::CommandResult res = run({"cohomology", "M(4,2)", "--json"});
    CHECK(res.exit_code == 0);
    CHECK(graded_group_from_json(json::parse(res.output)) ==
          test::make_graded({{0, FgAbGroup::free(1)}, {4, FgAbGroup::cyclic(2)}}));
}

TEST_CASE("parse errors exit 2 with a spanned message")
{
    const cli::CommandResult res = run({"homology", "S("});
    CHECK(res.exit_code == 2);
    CHECK(res.output.empty());
    CHECK(res.diagnostics.find("parse error") != std::string::npos);
    CHECK(res.diagnostics.find("bytes") != std::string::npos);
}

TEST_CASE("usage errors exit 2 and mention help")
{
    CHECK(run({"gysin", "--r", "2"}).exit_code == 2);          // missing --k
    CHECK(run({"frobnicate"}).exit_code == 2);                 // unknown subcommand
    CHECK(run({}).exit_code == 2);                             // subcommand required
    CHECK(run({"homology"}).exit_code == 2);                   // no expression
    const cli::CommandResult help = run({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.output.find("homology") != std::string::npos);
}

TEST_CASE("pullback subcommand")
{
    const cli::CommandResult res =
        run({"pullback", "--B", "CP(2)", "--C", "S(4)", "--F", "S(7)", "--json"});
    REQUIRE(res.exit_code == 0);
    const json payload = json::parse(res.output);
    CHECK(payload.at("m") == 11);
    const GradedGroup m = graded_group_from_json(payload.at("M"));
    GradedGroup expected;
    for (int q : {0, 2, 4, 7, 9, 11})
        expected.set(q, FgAbGroup::free(1));
    CHECK(m == expected);

    // Supplying H_*(L) by file reproduces the trivial-bundle answer.
    const auto l_path = write_temp(
        "homsum_cli_l.json",
        to_json(evaluate(SpaceExpr::product(SpaceExpr::sphere(4), SpaceExpr::sphere(7)))));
    const cli::CommandResult with_l = run({"pullback", "--B", "CP(2)", "--C", "S(4)", "--F",
                                           "S(7)", "--L", l_path.string(), "--json"});
    REQUIRE(with_l.exit_code == 0);
    CHECK(graded_group_from_json(json::parse(with_l.output).at("M")) == m);

    CHECK(run({"pullback", "--B", "CP(3)", "--C", "S(4)", "--F", "S(7)"}).exit_code == 2);
}

TEST_CASE("gysin and wall subcommands")
{
    const cli::CommandResult gysin = run({"gysin", "--r", "2", "--k", "3", "--json"});
    REQUIRE(gysin.exit_code == 0);
    CHECK(graded_group_from_json(json::parse(gysin.output)) == wall_bundle_cohomology(2, 3));

    const cli::CommandResult wall = run({"wall", "--r", "2", "--k", "3", "--json"});
    REQUIRE(wall.exit_code == 0);
    const json payload = json::parse(wall.output);
    CHECK(payload.at("text") == "#^{4}(S³×S⁴) # L_3");
    CHECK(payload.at("summand_count") == 4);
    CHECK(graded_group_from_json(payload.at("H_M")) == wall_bundle_cohomology(2, 3));
    CHECK(graded_group_from_json(payload.at("H_L")) ==
          test::make_graded({{0, FgAbGroup::free(1)},
                             {4, FgAbGroup::cyclic(3)},
                             {7, FgAbGroup::free(1)}}));

    const cli::CommandResult human = run({"wall", "--r", "2", "--k", "3"});
    CHECK(human.output.find("#^{4}(S³×S⁴) # L_3") != std::string::npos);

    CHECK(run({"gysin", "--r", "2", "--k", "0"}).exit_code == 2);
    CHECK(run({"gysin", "--r", "2", "--k", "xyz"}).exit_code == 2);
}

TEST_CASE("verify-split subcommand and exit-code contract")
{
    const SpaceExpr b = SpaceExpr::cp(2);
    const BundleData bundle = BundleData::trivial(SpaceExpr::sphere(4), SpaceExpr::sphere(7));
    const GradedGroup h_m = pullback_homology(b, bundle);
    const GradedGroup h_xp =
        evaluate(SpaceExpr::half_smash(SpaceExpr::punctured(b), SpaceExpr::sphere(7)));
    const GradedGroup h_l = bundle.total_homology();

    const auto m_path = write_temp("homsum_cli_m.json", to_json(h_m));
    const auto xp_path = write_temp("homsum_cli_xp.json", to_json(h_xp));
    const auto l_path = write_temp("homsum_cli_l2.json", to_json(h_l));

    const cli::CommandResult ok = run({"verify-split", "--M", m_path.string(), "--Xp",
                                       xp_path.string(), "--L", l_path.string(), "--m", "11",
                                       "--json"});
    CHECK(ok.exit_code == 0);
    CHECK(json::parse(ok.output).at("overall") == true);

    GradedGroup broken = h_m;
    broken.set(4, FgAbGroup::free(5));
    const auto broken_path = write_temp("homsum_cli_broken.json", to_json(broken));
    const cli::CommandResult fail = run({"verify-split", "--M", broken_path.string(), "--Xp",
                                         xp_path.string(), "--L", l_path.string(), "--m", "11"});
    CHECK(fail.exit_code == 1);  // verification failures never exit 0
    CHECK(fail.output.find("FAIL") != std::string::npos);

    CHECK(run({"verify-split", "--M", "/no/such/file.json", "--Xp", xp_path.string(), "--L",
               l_path.string(), "--m", "11"})
              .exit_code == 2);
}

TEST_CASE("check-duality subcommand")
{
    const auto good = write_temp("homsum_cli_h.json", to_json(evaluate(SpaceExpr::cp(2))));
    CHECK(run({"check-duality", "--H", good.string(), "--n", "4"}).exit_code == 0);
    CHECK(run({"check-duality", "--H", good.string(), "--n", "5"}).exit_code == 1);
    const cli::CommandResult js = run({"check-duality", "--H", good.string(), "--n", "4",
                                       "--json"});
    CHECK(json::parse(js.output).at("holds") == true);
}

TEST_CASE("snf subcommand")
{
    const IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 8}});
    const auto path = write_temp("homsum_cli_snf.json", to_json(a));
    const cli::CommandResult res = run({"snf", path.string(), "--json"});
    REQUIRE(res.exit_code == 0);
    const json payload = json::parse(res.output);
    const IntMatrix u = int_matrix_from_json(payload.at("U"));
    const IntMatrix d = int_matrix_from_json(payload.at("D"));
    const IntMatrix v = int_matrix_from_json(payload.at("V"));
    CHECK(u * a * v == d);
    CHECK(d == IntMatrix::from_rows({{2, 0}, {0, 4}}));

    // Arbitrary-precision entries survive the decimal-string encoding.
    IntMatrix big(1, 1, {Int("123456789012345678901234567890")});
    const auto big_path = write_temp("homsum_cli_big.json", to_json(big));
    const cli::CommandResult big_res = run({"snf", big_path.string(), "--json"});
    REQUIRE(big_res.exit_code == 0);
    CHECK(int_matrix_from_json(json::parse(big_res.output).at("D"))(0, 0) ==
          Int("123456789012345678901234567890"));

    CHECK(run({"snf", "/no/such/matrix.json"}).exit_code == 2);
}

TEST_CASE("HOMSUM_JSON environment default")
{
    setenv("HOMSUM_JSON", "1", 1);
    const cli::CommandResult res = run({"homology", "S(3)"});
    unsetenv("HOMSUM_JSON");
    CHECK(res.exit_code == 0);
    CHECK_NOTHROW(json::parse(res.output));
}
