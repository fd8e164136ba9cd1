#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "nbcss/error.hpp"

namespace {

std::uint32_t parse_poly(const std::string& s) {
    if (s.empty()) return 0;
    try {
        std::size_t pos = 0;
        const unsigned long v = std::stoul(s, &pos, 16);
        if (pos != s.size() || v == 0 || v > 0xFFFFFFFFul) {
            nbcss::fail(nbcss::Errc::parse_error, "bad polynomial bitmask: " + s);
        }
        return static_cast<std::uint32_t>(v);
    } catch (const nbcss::Error&) {
        throw;
    } catch (const std::exception&) {
        nbcss::fail(nbcss::Errc::parse_error, "bad polynomial bitmask: " + s);
    }
}

} // namespace

int main(int argc, char** argv) {
    namespace cli = nbcss::cli;

    CLI::App app{"non-binary extension toolkit for orthogonal parity-check pairs"};
    app.require_subcommand(1);

    const std::map<std::string, nbcss::SolverKind> solver_map{
        {"eliminate", nbcss::SolverKind::eliminate},
        {"snf", nbcss::SolverKind::snf},
        {"heuristic", nbcss::SolverKind::heuristic},
        {"prime-field", nbcss::SolverKind::prime_field},
    };

    cli::CheckOptions check_opt;
    CLI::App* check = app.add_subcommand("check", "F_2 orthogonality and overlap report for a pair");
    check->add_option("hc", check_opt.hc_path, "H_C matrix file")->required();
    check->add_option("hd", check_opt.hd_path, "H_D matrix file")->required();

    cli::HgpOptions hgp_opt;
    CLI::App* hgp = app.add_subcommand("hgp", "hypergraph product of two classical seeds");
    hgp->add_option("h1", hgp_opt.h1_path, "first seed matrix file")->required();
    hgp->add_option("h2", hgp_opt.h2_path, "second seed matrix file")->required();
    hgp->add_option("--out-x", hgp_opt.out_x, "output path for H_X")->required();
    hgp->add_option("--out-z", hgp_opt.out_z, "output path for H_Z")->required();
    hgp->add_option("--manifest", hgp_opt.manifest, "manifest path (default <out-x>.manifest.json)");

    cli::ExtendOptions ext_opt;
    std::string ext_poly;
    CLI::App* extend =
        app.add_subcommand("extend", "solve the exponent congruences and emit field matrices");
    extend->add_option("hc", ext_opt.hc_path, "H_C matrix file")->required();
    extend->add_option("hd", ext_opt.hd_path, "H_D matrix file")->required();
    extend->add_option("--field-degree", ext_opt.field_degree, "m for GF(2^m)")
        ->required()
        ->check(CLI::Range(2, 16));
    extend->add_option("--poly", ext_poly, "defining polynomial bitmask in hex (default per degree)");
    extend->add_option("--solver", ext_opt.solver, "eliminate | snf | heuristic | prime-field")
        ->transform(CLI::CheckedTransformer(solver_map, CLI::ignore_case));
    extend->add_option("--seed", ext_opt.seed, "RNG seed (default 0)");
    extend->add_option("--out-gamma", ext_opt.out_gamma, "output path for H_gamma")->required();
    extend->add_option("--out-delta", ext_opt.out_delta, "output path for H_delta")->required();
    extend->add_option("--manifest", ext_opt.manifest, "manifest path (default <out-gamma>.manifest.json)");
    extend->add_option("--dump-congruences", ext_opt.dump_path,
                       "congruence dump path (default <out-gamma>.congruences.txt)");
    extend->add_flag("--trace-elimination", ext_opt.trace_elimination, "print the row-operation log");
    extend->add_flag("--snf-fallback,!--no-snf-fallback", ext_opt.snf_fallback,
                     "fall back to invariant factors when no unit pivot exists (default on)");
    extend->add_option("--max-sweeps", ext_opt.max_sweeps, "heuristic repair budget (default 1000)");

    cli::CsaOptions csa_opt;
    std::string csa_poly;
    CLI::App* csa = app.add_subcommand("csa", "separable offset assignment (any even overlaps)");
    csa->add_option("hc", csa_opt.hc_path, "H_C matrix file")->required();
    csa->add_option("hd", csa_opt.hd_path, "H_D matrix file")->required();
    csa->add_option("--field-degree", csa_opt.field_degree, "m for GF(2^m)")
        ->required()
        ->check(CLI::Range(2, 16));
    csa->add_option("--poly", csa_poly, "defining polynomial bitmask in hex (default per degree)");
    csa->add_option("--seed", csa_opt.seed, "RNG seed (default 0)");
    csa->add_option("--out-gamma", csa_opt.out_gamma, "output path for H_gamma")->required();
    csa->add_option("--out-delta", csa_opt.out_delta, "output path for H_delta")->required();
    csa->add_option("--manifest", csa_opt.manifest, "manifest path (default <out-gamma>.manifest.json)");

    cli::VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "support and orthogonality check of field matrices");
    verify->add_option("gamma", verify_opt.gamma_path, "H_gamma matrix file")->required();
    verify->add_option("delta", verify_opt.delta_path, "H_delta matrix file")->required();
    verify->add_option("hc", verify_opt.hc_path, "H_C matrix file")->required();
    verify->add_option("hd", verify_opt.hd_path, "H_D matrix file")->required();
    verify->add_flag("--paper-hex", verify_opt.paper_hex,
                     "inputs use the exponent-offset byte grid (nonzero byte h means alpha^(h-1))");
    verify->add_option("--field-degree", verify_opt.field_degree,
                       "m for the offset decoding modulus 2^m-1 (default 8)")
        ->check(CLI::Range(2, 16));

    cli::KernelOptions kernel_opt;
    CLI::App* kernel = app.add_subcommand("kernel", "F_2 right kernel basis of a binary matrix");
    kernel->add_option("matrix", kernel_opt.mat_path, "binary matrix file")->required();
    kernel->add_option("--out", kernel_opt.out, "output path (default: rows to stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return cli::cmd_check(check_opt);
        if (hgp->parsed()) return cli::cmd_hgp(hgp_opt);
        if (extend->parsed()) {
            ext_opt.poly = parse_poly(ext_poly);
            return cli::cmd_extend(ext_opt);
        }
        if (csa->parsed()) {
            csa_opt.poly = parse_poly(csa_poly);
            return cli::cmd_csa(csa_opt);
        }
        if (verify->parsed()) return cli::cmd_verify(verify_opt);
        if (kernel->parsed()) return cli::cmd_kernel(kernel_opt);
    } catch (const nbcss::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
