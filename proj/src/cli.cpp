#include "shimura/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "shimura/errors.hpp"
#include "shimura/families.hpp"
#include "shimura/hypergeometric.hpp"
#include "shimura/suites.hpp"
#include "shimura/triangle.hpp"

namespace shimura {
namespace {

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw DomainError("cannot write '" + path + "'");
    f << text;
}

std::string family_text(const std::string& which) {
    if (which == "c7") {
        const MultiPoly f = c7_family().f;
        return "# vars: x t\n# y^2 = f(x, t)\n" + f.to_string() + "\n";
    }
    const MultiPoly F = c9_family().F;
    return "# vars: Y W t\n# F(Y, W, t) = 0\n" + F.to_string() + "\n";
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of the (2,3,7) and (2,3,9) Shimura-curve computations", "shimura"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);

    SuiteOptions opt;
    std::string suite;
    std::string json_path;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "all, disc7, reductions7, reductions9, arakelov, quaternion, triangle, "
                                       "hypergeometric or cm-tables")
        ->required();
    verify->add_option("--json", json_path, "write the JSON report to this path");
    verify->add_option("--data-dir", opt.data_dir, "directory with table_x7.tsv and table_x9.tsv");
    verify->add_option("--depth", opt.depth, "tessellation word length")->check(CLI::Range(0, kMaxTessellationDepth));
    verify->add_option("--precision", opt.precision, "decimal digits for matrix embeddings")
        ->check(CLI::Range(1u, 1000u));
    verify->add_option("--svg", opt.svg, "write the (2,3,7) tessellation SVG here");

    auto* exp = app.add_subcommand("export", "write family polynomials, eigenspace tables or tessellations");
    exp->require_subcommand(1);
    std::string out_path;
    std::string family;
    auto* exp_family = exp->add_subcommand("family", "one canonical polynomial with a variable header");
    exp_family->add_option("name", family, "c7 or c9")->required()->check(CLI::IsMember({"c7", "c9"}));
    exp_family->add_option("--out", out_path, "output file (default: stdout)");
    int table_n = 7;
    auto* exp_table = exp->add_subcommand("eigenspaces", "TSV of i and d_i");
    exp_table->add_option("n", table_n, "7 or 9")->required()->check(CLI::IsMember({7, 9}));
    exp_table->add_option("--out", out_path, "output file (default: stdout)");
    std::array<int, 3> pqr{2, 3, 7};
    int depth = 4;
    auto* exp_svg = exp->add_subcommand("tessellation", "SVG of a hyperbolic triangle tessellation");
    exp_svg->add_option("--pqr", pqr, "triangle exponents");
    exp_svg->add_option("--depth", depth, "word length")->check(CLI::Range(0, kMaxTessellationDepth));
    exp_svg->add_option("--out", out_path, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*verify) {
            if (!is_suite_name(suite)) {
                err << "error: unknown suite '" << suite << "'\n";
                return kExitUsage;
            }
            if (!opt.data_dir.empty() && !std::filesystem::is_directory(opt.data_dir)) {
                err << "error: data directory '" << opt.data_dir << "' does not exist\n";
                return kExitUsage;
            }
            const VerificationReport rep = run_suite(suite, opt);
            out << rep.summary();
            if (!json_path.empty()) write_text(json_path, rep.to_json(), out);
            return rep.failed() ? kExitVerificationFailure : kExitPass;
        }
        if (*exp_family) write_text(out_path, family_text(family), out);
        if (*exp_table) {
            const MuTriple mu = table_n == 7 ? mu_parameters(2, 3, 7) : mu_parameters(2, 3, 9);
            write_text(out_path, eigenspace_dimensions(superelliptic_curve(mu, BranchOrdering::swapped)).to_tsv(),
                       out);
        }
        if (*exp_svg) write_text(out_path, tessellate(pqr[0], pqr[1], pqr[2], depth).svg, out);
        return kExitPass;
    } catch (const VerificationFailure& e) {
        err << "verification failure: " << e.what() << "\n  expected: " << e.expected() << "\n  actual:   "
            << e.actual() << "\n";
        return kExitVerificationFailure;
    } catch (const DomainError& e) {
        // Bad inputs to an export are usage errors; inside verify they are findings.
        err << "error: " << e.what() << "\n";
        return *verify ? kExitVerificationFailure : kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

} // namespace shimura
