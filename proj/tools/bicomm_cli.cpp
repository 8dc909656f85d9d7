#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include <bicomm/cli.hpp>

using bicomm::cli::CommandRequest;
using bicomm::cli::OutputFormat;
using bicomm::cli::Subcommand;

int main(int argc, char** argv)
{
    CLI::App app{"Invariants of finite groups acting on free bicommutative algebras"};
    app.require_subcommand(1);

    CommandRequest req;
    std::string format = "plain";
    const std::map<std::string, OutputFormat> formats{{"plain", OutputFormat::plain},
                                                      {"structured", OutputFormat::structured}};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--order,-N", req.order, "expansion order / largest degree (default 10)");
        sub->add_option("--cap", req.cap, "closure cap on the group order (default 100000)");
        sub->add_option("--format", format, "plain or structured")->check(CLI::IsMember({"plain", "structured"}));
    };
    auto add_group = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--group,-g", req.group_file, "group file (JSON: d, generators)");
        if (required) opt->required();
    };

    auto* hilbert = app.add_subcommand("hilbert", "Molien-type Hilbert series and their expansions");
    add_group(hilbert, true);
    add_common(hilbert);

    auto* invariants = app.add_subcommand("invariants", "invariant bases in degrees 1..N");
    add_group(invariants, true);
    add_common(invariants);

    auto* nonfg = app.add_subcommand("nonfg", "dimension gaps between invariants and low-degree subalgebras");
    add_group(nonfg, true);
    add_common(nonfg);
    nonfg->add_option("--cutoff,-D", req.cutoff, "largest generator degree (default 3)");

    auto* symmetric = app.add_subcommand("symmetric", "module generators of the S_d-invariants");
    add_common(symmetric);
    symmetric->add_option("--d", req.rank, "rank d (default 2)");

    auto* verify = app.add_subcommand("verify", "closed formulas versus brute-force linear algebra");
    add_group(verify, false);
    add_common(verify);
    verify->add_option("--d", req.rank, "rank d when no group file is given (default 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return bicomm::cli::bad_arguments;
    }

    if (*hilbert) req.subcommand = Subcommand::hilbert;
    else if (*invariants) req.subcommand = Subcommand::invariants;
    else if (*nonfg) req.subcommand = Subcommand::nonfg;
    else if (*symmetric) req.subcommand = Subcommand::symmetric;
    else req.subcommand = Subcommand::verify;
    req.format = formats.at(format);

    return bicomm::cli::run(req, std::cout, std::cerr);
}
