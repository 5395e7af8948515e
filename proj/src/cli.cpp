#include "homsum/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "homsum/dsl.hpp"
#include "homsum/duality.hpp"
#include "homsum/json_io.hpp"
#include "homsum/sequences.hpp"

namespace homsum::cli {

namespace {

using nlohmann::json;

json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot read file '" + path + "'");
    return json::parse(in);
}

std::string render_graded_table(const GradedGroup& g, const std::string& label, int min_top = -1)
{
    const int top = std::max(g.top_degree(), min_top);
    std::ostringstream out;
    out << "q\t" << label << "\n";
    for (int q = 0; q <= top; ++q) {
        out << q << "\t";
        const FgAbGroup& group = g.at(q);
        if (!group.is_trivial())
            out << group.to_string();
        out << "\n";
    }
    return out.str();
}

std::string render_matrix(const IntMatrix& m, const std::string& name)
{
    std::ostringstream out;
    out << name << " (" << m.rows() << "x" << m.cols() << "):\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << " ";
        for (std::size_t j = 0; j < m.cols(); ++j)
            out << " " << m(i, j);
        out << "\n";
    }
    return out.str();
}

// One parsed invocation; CLI11 fills this in, the dispatcher runs it.
struct Invocation {
    std::string command;
    bool json_output = false;

    std::string expr;        // homology, cohomology
    std::string chain_file;  // homology --chain

    std::string b_expr, c_expr, f_expr, l_file;  // pullback

    long long r = 0;      // gysin, wall
    std::string k = "1";  // decimal, arbitrary precision

    std::string m_file, xp_file;  // verify-split (l_file shared)
    long long m_degree = 0;

    std::string h_file;  // check-duality
    long long n_dim = 0;

    std::string matrix_file;  // snf
};

Int parse_int_option(const std::string& text, const char* what)
{
    try {
        return Int(text);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad ") + what + " '" + text + "'");
    }
}

SpaceExpr parse_expr_option(const std::string& text)
{
    return homsum::dsl::parse(text);
}

CommandResult run_homology(const Invocation& inv)
{
    GradedGroup h;
    if (!inv.chain_file.empty()) {
        if (!inv.expr.empty())
            throw std::invalid_argument("give either an expression or --chain, not both");
        h = homology(chain_complex_from_json(load_json_file(inv.chain_file)));
    } else if (!inv.expr.empty()) {
        h = evaluate(parse_expr_option(inv.expr));
    } else {
        throw std::invalid_argument("need an expression or --chain FILE");
    }
    CommandResult res;
    res.output = inv.json_output ? to_json(h).dump() + "\n" : render_graded_table(h, "H_q");
    return res;
}

CommandResult run_cohomology(const Invocation& inv)
{
    const GradedGroup h = cohomology_profile(evaluate(parse_expr_option(inv.expr)));
    CommandResult res;
    res.output = inv.json_output ? to_json(h).dump() + "\n" : render_graded_table(h, "H^q");
    return res;
}

CommandResult run_pullback(const Invocation& inv)
{
    const SpaceExpr b = parse_expr_option(inv.b_expr);
    const SpaceExpr c = parse_expr_option(inv.c_expr);
    const SpaceExpr f = parse_expr_option(inv.f_expr);

    BundleData bundle = inv.l_file.empty()
                            ? BundleData::trivial(c, f)
                            : BundleData::with_total(
                                  c, f, graded_group_from_json(load_json_file(inv.l_file)));

    const GradedGroup h_total = pullback_homology(b, bundle);
    const GradedGroup h_half_smash =
        evaluate(SpaceExpr::half_smash(SpaceExpr::punctured(b), f));
    const GradedGroup h_summand = bundle.total_homology();
    const int m = bundle.total_dim();

    CommandResult res;
    if (inv.json_output) {
        res.output = json{{"m", m},
                          {"M", to_json(h_total)},
                          {"Xp", to_json(h_half_smash)},
                          {"L", to_json(h_summand)}}
                         .dump() +
                     "\n";
    } else {
        std::ostringstream out;
        out << "total space dimension m = " << m << "\n";
        out << render_graded_table(h_total, "H_q(M)", m);
        res.output = out.str();
    }
    return res;
}

CommandResult run_gysin(const Invocation& inv)
{
    const Int k = parse_int_option(inv.k, "k");
    if (inv.r < 0)
        throw std::invalid_argument("r must be >= 0");
    const GradedGroup h = wall_bundle_cohomology(static_cast<std::size_t>(inv.r), k);
    CommandResult res;
    res.output = inv.json_output ? to_json(h).dump() + "\n" : render_graded_table(h, "H^q", 7);
    return res;
}

CommandResult run_wall(const Invocation& inv)
{
    const Int k = parse_int_option(inv.k, "k");
    if (inv.r < 0)
        throw std::invalid_argument("r must be >= 0");
    const WallDescriptor d = wall_descriptor(static_cast<std::size_t>(inv.r), k);
    CommandResult res;
    if (inv.json_output) {
        res.output = json{{"r", d.r},
                          {"k", d.k.str()},
                          {"summand_count", d.summand_count},
                          {"text", d.text},
                          {"H_M", to_json(d.total_cohomology)},
                          {"H_L", to_json(d.summand_cohomology)}}
                         .dump() +
                     "\n";
    } else {
        std::ostringstream out;
        out << d.text << "\n\nH^*(M):\n"
            << render_graded_table(d.total_cohomology, "H^q", 7) << "\nH^*(L):\n"
            << render_graded_table(d.summand_cohomology, "H^q", 7);
        res.output = out.str();
    }
    return res;
}

CommandResult run_verify_split(const Invocation& inv)
{
    const GradedGroup h_total = graded_group_from_json(load_json_file(inv.m_file));
    const GradedGroup h_half_smash = graded_group_from_json(load_json_file(inv.xp_file));
    const GradedGroup h_summand = graded_group_from_json(load_json_file(inv.l_file));
    if (inv.m_degree < 0)
        throw std::invalid_argument("m must be >= 0");
    const DecompositionReport report =
        verify_split(h_total, h_half_smash, h_summand, static_cast<int>(inv.m_degree));

    CommandResult res;
    res.exit_code = report.overall ? 0 : 1;
    if (inv.json_output) {
        json rows = json::array();
        for (const DecompositionRow& row : report.rows)
            rows.push_back(json{{"degree", row.degree},
                                {"M", to_json(row.total)},
                                {"Xp", to_json(row.half_smash)},
                                {"L", to_json(row.summand)},
                                {"ok", row.ok}});
        res.output = json{{"m", inv.m_degree}, {"overall", report.overall},
                          {"rows", std::move(rows)}}
                         .dump() +
                     "\n";
    } else {
        std::ostringstream out;
        out << "q\tH_q(M)\tH_q(X')\tH_q(L)\tverdict\n";
        for (const DecompositionRow& row : report.rows)
            out << row.degree << "\t" << row.total.to_string() << "\t"
                << row.half_smash.to_string() << "\t" << row.summand.to_string() << "\t"
                << (row.ok ? "ok" : "FAIL") << "\n";
        out << "overall: " << (report.overall ? "ok" : "FAIL") << "\n";
        res.output = out.str();
    }
    return res;
}

CommandResult run_check_duality(const Invocation& inv)
{
    const GradedGroup h = graded_group_from_json(load_json_file(inv.h_file));
    if (inv.n_dim < 0)
        throw std::invalid_argument("n must be >= 0");
    const bool holds = check_poincare(h, static_cast<int>(inv.n_dim));
    CommandResult res;
    res.exit_code = holds ? 0 : 1;
    if (inv.json_output)
        res.output = json{{"n", inv.n_dim}, {"holds", holds}}.dump() + "\n";
    else
        res.output = "Poincare duality at n=" + std::to_string(inv.n_dim) + ": " +
                     (holds ? "holds" : "FAILS") + "\n";
    return res;
}

CommandResult run_snf(const Invocation& inv)
{
    const IntMatrix a = int_matrix_from_json(load_json_file(inv.matrix_file));
    const SmithNormalForm snf = smith_normal_form(a);
    CommandResult res;
    if (inv.json_output) {
        res.output = json{{"U", to_json(snf.u)}, {"D", to_json(snf.d)}, {"V", to_json(snf.v)}}
                         .dump() +
                     "\n";
    } else {
        res.output = render_matrix(snf.u, "U") + render_matrix(snf.d, "D") +
                     render_matrix(snf.v, "V");
    }
    return res;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args)
{
    Invocation inv;
    const char* env_json = std::getenv("HOMSUM_JSON");
    inv.json_output = env_json != nullptr && std::string(env_json) == "1";

    CLI::App app{"Exact (co)homology calculator for bundles pulled back over connected sums"};
    app.name("homsum");
    app.require_subcommand(1);
    app.fallthrough(false);

    auto add_json_flag = [&](CLI::App* cmd) {
        cmd->add_flag("--json", inv.json_output, "emit JSON instead of a table");
    };

    CLI::App* homology_cmd =
        app.add_subcommand("homology", "homology of a space expression or a chain complex file");
    homology_cmd->add_option("expr", inv.expr, "space expression, e.g. \"CP(2) # S(4)\"");
    homology_cmd->add_option("--chain", inv.chain_file, "chain complex JSON file");
    add_json_flag(homology_cmd);

    CLI::App* cohomology_cmd =
        app.add_subcommand("cohomology", "integral cohomology of a space expression");
    cohomology_cmd->add_option("expr", inv.expr, "space expression")->required();
    add_json_flag(cohomology_cmd);

    CLI::App* pullback_cmd = app.add_subcommand(
        "pullback", "homology of the pullback of a bundle over C to the connected sum B # C");
    pullback_cmd->add_option("--B", inv.b_expr, "summand carrying no bundle")->required();
    pullback_cmd->add_option("--C", inv.c_expr, "summand carrying the bundle")->required();
    pullback_cmd->add_option("--F", inv.f_expr, "fiber")->required();
    pullback_cmd->add_option("--L", inv.l_file,
                             "homology of the total space over C (JSON); omit for the trivial bundle");
    add_json_flag(pullback_cmd);

    CLI::App* gysin_cmd = app.add_subcommand(
        "gysin", "cohomology of the circle bundle over (S^3 x S^3)^{#r} # C with x^3 = k V");
    gysin_cmd->add_option("--r", inv.r, "number of S^3 x S^3 summand pairs")->required();
    gysin_cmd->add_option("--k", inv.k, "Euler cube coefficient")->required();
    add_json_flag(gysin_cmd);

    CLI::App* wall_cmd =
        app.add_subcommand("wall", "connected-sum descriptor of the circle bundle total space");
    wall_cmd->add_option("--r", inv.r, "number of S^3 x S^3 summand pairs")->required();
    wall_cmd->add_option("--k", inv.k, "Euler cube coefficient")->required();
    add_json_flag(wall_cmd);

    CLI::App* verify_cmd = app.add_subcommand(
        "verify-split", "check H_q(M) = H_q(X') (+) H_q(L) degree by degree");
    verify_cmd->add_option("--M", inv.m_file, "H_*(M) JSON file")->required();
    verify_cmd->add_option("--Xp", inv.xp_file, "H_*(X') JSON file")->required();
    verify_cmd->add_option("--L", inv.l_file, "H_*(L) JSON file")->required();
    verify_cmd->add_option("--m", inv.m_degree, "total space dimension")->required();
    add_json_flag(verify_cmd);

    CLI::App* duality_cmd =
        app.add_subcommand("check-duality", "Poincare duality check of a homology profile");
    duality_cmd->add_option("--H", inv.h_file, "H_* JSON file")->required();
    duality_cmd->add_option("--n", inv.n_dim, "manifold dimension")->required();
    add_json_flag(duality_cmd);

    CLI::App* snf_cmd = app.add_subcommand("snf", "Smith normal form D = U A V of a matrix file");
    snf_cmd->add_option("file", inv.matrix_file, "IntMatrix JSON file")->required();
    add_json_flag(snf_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        CommandResult res;
        res.output = app.help();
        return res;
    } catch (const CLI::ParseError& e) {
        CommandResult res;
        res.exit_code = 2;
        res.diagnostics = std::string("error: ") + e.what() + "\n\n" + app.help();
        return res;
    }

    for (CLI::App* cmd : {homology_cmd, cohomology_cmd, pullback_cmd, gysin_cmd, wall_cmd,
                          verify_cmd, duality_cmd, snf_cmd})
        if (cmd->parsed())
            inv.command = cmd->get_name();

    try {
        if (inv.command == "homology")
            return run_homology(inv);
        if (inv.command == "cohomology")
            return run_cohomology(inv);
        if (inv.command == "pullback")
            return run_pullback(inv);
        if (inv.command == "gysin")
            return run_gysin(inv);
        if (inv.command == "wall")
            return run_wall(inv);
        if (inv.command == "verify-split")
            return run_verify_split(inv);
        if (inv.command == "check-duality")
            return run_check_duality(inv);
        if (inv.command == "snf")
            return run_snf(inv);
        throw std::logic_error("unreachable subcommand dispatch");
    } catch (const homsum::dsl::ParseError& e) {
        CommandResult res;
        res.exit_code = 2;
        res.diagnostics = "parse error: " + std::string(e.what()) + " (bytes " +
                          std::to_string(e.span().start) + ".." + std::to_string(e.span().end) +
                          ")\n";
        return res;
    } catch (const json::exception& e) {
        CommandResult res;
        res.exit_code = 2;
        res.diagnostics = std::string("error: malformed JSON: ") + e.what() + "\n";
        return res;
    } catch (const std::invalid_argument& e) {
        CommandResult res;
        res.exit_code = 2;
        res.diagnostics = std::string("error: ") + e.what() + "\n";
        return res;
    } catch (const std::exception& e) {
        CommandResult res;
        res.exit_code = 3;
        res.diagnostics = std::string("internal error: ") + e.what() + "\n";
        return res;
    }
}

}  // namespace homsum::cli
