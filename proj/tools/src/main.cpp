#include <functional>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include <trigonal/errors.hpp>

#include "commands.hpp"

namespace
{

enum exit_code { ok = 0, verification_failed = 1, usage = 2, internal = 3 };

} // namespace

int main(int argc, char **argv)
{
    using namespace trigonal::cli;

    options o;
    CLI::App app{"Exact Abelian-function toolkit for cyclic trigonal curves"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--data-dir", o.data_dir, "Formula data directory (default: $TRIGONAL_DATA_DIR or the built-in path)");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", o.seed, "Seed for sample points");
    app.add_option("--precision", o.precision, "Working precision in decimal digits");

    const auto curve_opts = [&](CLI::App *sub) {
        sub->add_option("--curve", o.curve, "Curve as n,s");
        sub->add_option("--n", o.n, "n of the (n,s) curve");
        sub->add_option("--s", o.s, "s of the (n,s) curve");
    };

    std::map<std::string, std::function<outcome(const options &)>> handlers;
    const auto sub = [&](const char *name, const char *help, outcome (*fn)(const options &)) {
        auto *s = app.add_subcommand(name, help);
        curve_opts(s);
        handlers[name] = fn;
        return s;
    };

    sub("gaps", "Weierstrass gap sequence", run_gaps);
    sub("weights", "Sato weights of u, lam, x, y and sigma", run_weights);
    sub("sw", "Schur-Weierstrass polynomial", run_sw);
    sub("expansions", "Local expansions of x, y and u_i at infinity", run_expansions)
        ->add_option("--terms", o.terms, "Terms kept beyond each leading term");
    sub("rho", "Coefficients rho_k of the Kleinian formula", run_rho)
        ->add_option("--count", o.count, "Number of rho polynomials");
    {
        auto *s = sub("resultant", "Resultant rho_{i,j} in w", run_resultant);
        s->add_option("--i", o.i);
        s->add_option("--j", o.j);
        s->add_flag("--table", o.table, "All rho_{i,j} with i <= 5, j <= 9");
        s->add_flag("--print", o.print, "Print the polynomials");
    }
    app.get_subcommand("rho")->add_flag("--print", o.print, "Print the polynomials");
    {
        auto *s = sub("reduce", "Degree reduction of a resultant into p-relations", run_reduce);
        s->add_option("--target", o.target, "i,j of the resultant to reduce");
        s->add_option("--pivot", o.pivot, "i,j of the degree-g resultant used for z^g");
        s->add_option("--points", o.points, "Sample points per relation");
    }
    {
        auto *s = sub("invert", "Numerical Jacobi inversion with on-curve certification", run_invert);
        s->add_option("--points", o.points, "Number of u points");
        s->add_option("--tolerance", o.tolerance, "Residual bound 10^-k")->check(CLI::Range(1, 100000));
        s->add_option("--source", o.source, "rho data: auto, generated or data");
    }
    {
        auto *s = sub("verify", "Exact verification of a relation suite at lam = 0", run_verify);
        s->add_option("--suite", o.suite,
                      "q-family, all, q4, q6, bous, quadratic, bilinear, hirota or boussinesq");
        s->add_option("--points", o.points, "Sample points");
    }
    sub("addition", "Two-term addition formula at lam = 0", run_addition)
        ->add_option("--points", o.points, "Number of (u, v) pairs");
    sub("candidates", "u-monomials of a given weight with the parity of sigma", run_candidates)
        ->add_option("--weight", o.weight, "Sato weight k");
    sub("rank", "Rank of the listed basis functions at lam = 0", run_rank)
        ->add_option("--points", o.points, "Sample points");
    sub("validate-data", "Parse, weight and checksum checks over the data directory", run_validate_data)
        ->add_flag("--write-manifest", o.write_manifest, "Regenerate MANIFEST first");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        std::cerr << app.help();
        return usage;
    }

    const auto *chosen = app.get_subcommands().front();
    try {
        const auto out = handlers.at(chosen->get_name())(o);
        if (o.format == "json") {
            std::cout << out.json.dump(2) << "\n";
        } else {
            std::cout << out.text;
        }
        return out.passed ? ok : verification_failed;
    } catch (const trigonal::usage_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return internal;
    }
}
