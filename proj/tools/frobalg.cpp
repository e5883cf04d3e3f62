// frobalg: check, convert and analyze Frobenius structures stored as
// structure-constant files.

#include "frobalg/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using frobalg::cli::CommandResult;

struct Globals {
    std::uint64_t seed = frobalg::default_seed;
    std::optional<std::string> out;
    std::string format = "json";
};

int emit(const CommandResult& r, const Globals& g, bool out_is_report) {
    if (r.output_text && r.output_path) {
        try {
            frobalg::write_text_file(*r.output_path, *r.output_text);
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return frobalg::cli::exit_bad_input;
        }
    }
    const std::string body = g.format == "text" ? frobalg::cli::report_as_text(r.report) : r.report.dump(2) + "\n";
    if (out_is_report && g.out) {
        try {
            frobalg::write_text_file(*g.out, body);
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return frobalg::cli::exit_bad_input;
        }
    } else {
        std::cout << body;
    }
    if (g.format == "json") std::cerr << r.summary;
    return r.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks and conversions for Frobenius algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "Seed for randomized property checks")->capture_default_str();
    app.add_option("--out", g.out, "Output file (algebra file for convert/generate, report otherwise)");
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

    std::string input;
    std::size_t samples = 0;

    auto* check = app.add_subcommand("check", "Validate every block of an algebra file");
    check->add_option("file", input, "Algebra file")->required();
    std::size_t check_samples = 5;
    check->add_option("--samples", check_samples, "Seeded twist samples")->capture_default_str();

    auto* convert = app.add_subcommand("convert", "Convert between (delta,eps), kappa and phi");
    std::string from, to;
    convert->add_option("file", input, "Algebra file")->required();
    const auto kinds = CLI::IsMember({"deltaeps", "kappa", "phi"});
    convert->add_option("--from", from, "Source block")->required()->check(kinds);
    convert->add_option("--to", to, "Target block")->required()->check(kinds);

    auto* naka = app.add_subcommand("nakayama", "Nakayama automorphism and innerness");
    naka->add_option("file", input, "Algebra file")->required();
    samples = 20;
    naka->add_option("--samples", samples, "Seeded twist-rule samples")->capture_default_str();
    bool symmetrize = false;
    naka->add_flag("--symmetrize", symmetrize, "Also emit a symmetric pairing when the automorphism is inner");

    auto* gen = app.add_subcommand("generate", "Write an example algebra file");
    frobalg::cli::GenerateParams params;
    gen->add_option("kind", params.kind, "unit | matrix | group | quantum_plane | canonical_dual")
        ->required()
        ->check(CLI::IsMember({"unit", "matrix", "group", "quantum_plane", "canonical_dual"}));
    gen->add_option("--n", params.n, "Matrix size")->capture_default_str();
    gen->add_option("--twist-diag", params.twist_diag, "Matrix: pairing tr(u a b) with u = diag(...)")->delimiter(',');
    gen->add_option("--cyclic", params.cyclic, "Group: cyclic group of this order");
    gen->add_option("--symmetric", params.symmetric, "Group: symmetric group of this degree");
    gen->add_option("--table", params.table_path, "Group: JSON Cayley table");
    gen->add_option("--q", params.q, "Quantum plane parameter (p/q)")->capture_default_str();
    gen->add_option("--dim", params.dim, "Canonical dual: dim X")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        const auto r = frobalg::cli::usage_error(e.what());
        std::cout << r.report.dump(2) << "\n";
        std::cerr << r.summary << "Run with --help for more information.\n";
        return r.exit_code;
    }

    if (*check) return emit(frobalg::cli::run_check(input, {g.seed, check_samples}), g, true);
    if (*convert) {
        auto r = frobalg::cli::run_convert(input, *frobalg::cli::parse_presentation(from),
                                           *frobalg::cli::parse_presentation(to), g.out);
        return emit(r, g, false);
    }
    if (*naka) return emit(frobalg::cli::run_nakayama(input, {g.seed, samples, symmetrize}), g, true);
    return emit(frobalg::cli::run_generate(params, g.out), g, false);
}
