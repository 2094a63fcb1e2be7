// fibsums: tables of iterated Fibonacci partial sums and Schreier-set counts,
// identity sweeps, and OEIS b-file export.
//
// With no subcommand, prints the a-table for k <= 5, n <= 12 as tsv.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fibsums/cli.hpp"

int main(int argc, char** argv) {
    using namespace fibsums;

    CLI::App app{"Iterated partial sums of the Fibonacci sequence and Schreier-set counts"};
    app.require_subcommand(0, 1);

    std::string family = "a";
    std::string format = "tsv";
    Order k_max = 5;
    Index n_max = 12;

    auto* table_cmd = app.add_subcommand("table", "Render the a- or s-table");
    table_cmd->add_option("--family", family, "Sequence family")->check(CLI::IsMember({"a", "s"}));
    table_cmd->add_option("--kmax", k_max, "Largest k")->check(CLI::NonNegativeNumber);
    table_cmd->add_option("--nmax", n_max, "Largest n")->check(CLI::PositiveNumber);
    table_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "csv", "md", "markdown"}));

    std::string identity;
    auto* verify_cmd = app.add_subcommand("verify", "Check an identity over k <= kmax, n <= nmax");
    std::vector<std::string> identities(cli::kIdentities.begin(), cli::kIdentities.end());
    verify_cmd->add_option("identity", identity, "Identity to check")->required()->check(CLI::IsMember(identities));
    verify_cmd->add_option("--kmax", k_max, "Largest k (or l)")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--nmax", n_max, "Largest n")->check(CLI::PositiveNumber);

    Order k = 0;
    auto* bfile_cmd = app.add_subcommand("bfile", "Export row k as an OEIS b-file");
    bfile_cmd->add_option("--family", family, "Sequence family")->check(CLI::IsMember({"a", "s"}));
    bfile_cmd->add_option("--k", k, "Row")->check(CLI::NonNegativeNumber);
    bfile_cmd->add_option("--nmax", n_max, "Last index")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::kExitError;
    }

    if (*verify_cmd) return cli::cmd_verify(identity, k_max, n_max, std::cout, std::cerr);
    if (*bfile_cmd) return cli::cmd_bfile(*parse_family(family), k, n_max, std::cout, std::cerr);

    RenderSpec spec{*parse_family(family), k_max, n_max, *parse_format(format)};
    return cli::cmd_table(spec, std::cout, std::cerr);
}
