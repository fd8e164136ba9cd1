#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "nbcss/binmat.hpp"
#include "nbcss/congruence.hpp"
#include "nbcss/extend.hpp"
#include "nbcss/field.hpp"
#include "nbcss/hgp.hpp"

#include "formats.hpp"
#include "manifest.hpp"
#include "offset_hex.hpp"

namespace nbcss::cli {

int exit_code_for(Errc code) {
    switch (code) {
    case Errc::odd_overlap:
    case Errc::not_a_codeword:
        return 1;
    case Errc::overlap_too_large:
    case Errc::no_unit_pivot:
    case Errc::timeout:
        return 3;
    default:
        return 2;
    }
}

const char* solver_name(SolverKind kind) {
    switch (kind) {
    case SolverKind::eliminate:
        return "eliminate";
    case SolverKind::snf:
        return "snf";
    case SolverKind::heuristic:
        return "heuristic";
    case SolverKind::prime_field:
        return "prime-field";
    }
    return "?";
}

namespace {

std::string shape_str(const BinaryMatrix& m) {
    return std::to_string(m.rows) + "x" + std::to_string(m.cols) + ", " + std::to_string(m.nnz()) +
           " nonzero";
}

CssPair read_pair(const std::string& hc_path, const std::string& hd_path) {
    CssPair pair{read_binary_matrix(hc_path), read_binary_matrix(hd_path)};
    pair.hc.validate();
    pair.hd.validate();
    return pair;
}

Field make_field(int degree, std::uint32_t poly) {
    return poly == 0 ? Field(degree) : Field(degree, poly);
}

void print_support_line(const char* label, const SupportReport& rep) {
    std::cout << label;
    if (rep.ok()) {
        std::cout << "yes\n";
        return;
    }
    std::cout << "no (" << rep.missing.size() << " missing, " << rep.extra.size() << " extra)\n";
    for (const auto& [r, c] : rep.missing) {
        std::cout << "  missing entry at (" << r << "," << c << ")\n";
    }
    for (const auto& [r, c] : rep.extra) {
        std::cout << "  extra entry at (" << r << "," << c << ")\n";
    }
}

bool print_fq_line(const Field& field, const FqReport& rep) {
    std::cout << "orthogonal over GF(2^" << field.degree() << "): ";
    if (rep.ok()) {
        std::cout << "yes\n";
        return true;
    }
    std::cout << "no\n";
    for (const auto& v : rep.violations) {
        std::cout << "  rows (" << v.hgamma_row << "," << v.hdelta_row << "): inner product "
                  << v.value << "\n";
    }
    return false;
}

std::string default_path(const std::string& given, const std::string& base, const char* suffix) {
    return given.empty() ? base + suffix : given;
}

// Emits the two field matrices plus congruence dump and manifest; shared
// tail of the extend and csa commands.
int emit_extended(const CssPair& pair, const ExtendedPair& ext, const RunManifest& manifest_base,
                  const std::vector<std::string>& comments, const std::string& out_gamma,
                  const std::string& out_delta, const std::string& dump_path,
                  const std::string& manifest_path, std::int64_t modulus) {
    const SupportReport sg = verify_support(ext.hgamma, pair.hc);
    const SupportReport sd = verify_support(ext.hdelta, pair.hd);
    const FqReport fq = verify_orthogonal_fq(ext.hgamma, ext.hdelta);
    if (!sg.ok() || !sd.ok() || !fq.ok()) {
        std::cout << "internal verification failed before writing outputs\n";
        print_support_line("support(H_gamma) matches H_C: ", sg);
        print_support_line("support(H_delta) matches H_D: ", sd);
        print_fq_line(ext.hgamma.field, fq);
        return 1;
    }

    write_field_matrix(ext.hgamma, out_gamma, comments);
    write_field_matrix(ext.hdelta, out_delta, comments);

    const OverlapTable table = overlap_sets(pair);
    bool dumpable = true;
    for (const auto& [key, cols] : table) {
        if (cols.size() != 2) dumpable = false;
    }
    std::ostringstream dump;
    if (dumpable) {
        dump_congruences(build_system(pair, table, modulus), dump);
    } else {
        dump << "# overlaps beyond size 2; no congruence rows\n";
    }
    write_text_file(dump_path, dump.str());

    RunManifest manifest = manifest_base;
    manifest.outputs = {out_gamma, out_delta, dump_path};
    write_manifest(manifest, manifest_path);

    std::cout << "H_gamma: " << shape_str(pair.hc) << "\n";
    std::cout << "H_delta: " << shape_str(pair.hd) << "\n";
    print_fq_line(ext.hgamma.field, fq);
    std::cout << "wrote " << out_gamma << ", " << out_delta << ", " << dump_path << ", "
              << manifest_path << "\n";
    return 0;
}

} // namespace

int cmd_check(const CheckOptions& opt) {
    const CssPair pair = read_pair(opt.hc_path, opt.hd_path);
    std::cout << "H_C: " << shape_str(pair.hc) << "\n";
    std::cout << "H_D: " << shape_str(pair.hd) << "\n";

    const OrthogonalityReport report = check_orthogonal_f2(pair);
    const OverlapTable table = overlap_sets(pair);
    const auto hist = overlap_histogram(table);

    std::cout << "overlap histogram:";
    if (hist.empty()) std::cout << " none";
    for (const auto& [size, count] : hist) std::cout << " " << size << ":" << count;
    std::cout << "\n";

    if (!report.ok()) {
        std::cout << "orthogonal over F_2: no\n";
        for (const auto& v : report.violations) {
            std::cout << "  rows (" << v.hc_row << "," << v.hd_row << "): overlap size "
                      << v.overlap_size << "\n";
        }
        return 1;
    }
    std::cout << "orthogonal over F_2: yes\n";

    bool applicable = true;
    for (const auto& [size, count] : hist) {
        if (size != 2) applicable = false;
    }
    std::cout << "all overlaps of size 0 or 2: " << (applicable ? "yes" : "no (use the csa subcommand)")
              << "\n";
    return 0;
}

int cmd_hgp(const HgpOptions& opt) {
    const BinaryMatrix h1 = read_binary_matrix(opt.h1_path);
    const BinaryMatrix h2 = read_binary_matrix(opt.h2_path);
    const CssPair pair = hgp(h1, h2);

    write_binary_matrix(pair.hc, opt.out_x);
    write_binary_matrix(pair.hd, opt.out_z);

    RunManifest manifest;
    manifest.command = "hgp";
    manifest.inputs = {opt.h1_path, opt.h2_path};
    manifest.outputs = {opt.out_x, opt.out_z};
    const std::string manifest_path = default_path(opt.manifest, opt.out_x, ".manifest.json");
    write_manifest(manifest, manifest_path);

    std::cout << "H_X: " << shape_str(pair.hc) << "\n";
    std::cout << "H_Z: " << shape_str(pair.hd) << "\n";
    std::cout << "wrote " << opt.out_x << ", " << opt.out_z << ", " << manifest_path << "\n";
    return 0;
}

int cmd_extend(const ExtendOptions& opt) {
    const CssPair pair = read_pair(opt.hc_path, opt.hd_path);

    const OrthogonalityReport f2 = check_orthogonal_f2(pair);
    if (!f2.ok()) {
        const auto& v = f2.violations.front();
        fail(Errc::odd_overlap, "pair is not orthogonal over F_2; overlap of rows (" +
                                    std::to_string(v.hc_row) + "," + std::to_string(v.hd_row) +
                                    ") has odd size " + std::to_string(v.overlap_size));
    }

    const Field field = make_field(opt.field_degree, opt.poly);
    const std::int64_t modulus = field.group_order();
    const OverlapTable table = overlap_sets(pair);
    const VarIndex index = build_var_index(pair);
    const CongruenceSystem sys = build_system(pair, table, modulus);

    SolveOptions sopts;
    sopts.snf_fallback = opt.snf_fallback;
    sopts.max_sweeps = opt.max_sweeps;
    if (opt.trace_elimination) sopts.trace = &std::cout;

    const std::vector<std::int64_t> v = solve_system(sys, opt.solver, opt.seed, sopts);
    const ExponentAssignment assign = ExponentAssignment::from_vector(index, v);
    const ExtendedPair ext = assemble_pair(pair, assign, field);

    std::cout << "variables: " << sys.n_vars << ", congruence rows: " << sys.rows.size()
              << ", modulus: " << modulus << "\n";
    std::cout << "solver: " << solver_name(opt.solver) << ", seed: " << opt.seed << "\n";

    RunManifest manifest;
    manifest.command = "extend";
    manifest.inputs = {opt.hc_path, opt.hd_path};
    manifest.field_degree = field.degree();
    manifest.poly = field.poly();
    manifest.solver = solver_name(opt.solver);
    manifest.seed = opt.seed;

    const std::vector<std::string> comments = {"seed " + std::to_string(opt.seed),
                                               "solver " + std::string(solver_name(opt.solver))};
    return emit_extended(pair, ext, manifest, comments, opt.out_gamma, opt.out_delta,
                         default_path(opt.dump_path, opt.out_gamma, ".congruences.txt"),
                         default_path(opt.manifest, opt.out_gamma, ".manifest.json"), modulus);
}

int cmd_csa(const CsaOptions& opt) {
    const CssPair pair = read_pair(opt.hc_path, opt.hd_path);
    const Field field = make_field(opt.field_degree, opt.poly);

    const CsaParams params = CsaParams::random(pair.hc.rows, pair.hd.rows, pair.hc.cols,
                                               field.group_order(), opt.seed);
    const ExtendedPair ext = csa(pair, params, field);

    std::cout << "separable assignment over GF(2^" << field.degree() << "), seed: " << opt.seed
              << "\n";

    RunManifest manifest;
    manifest.command = "csa";
    manifest.inputs = {opt.hc_path, opt.hd_path};
    manifest.field_degree = field.degree();
    manifest.poly = field.poly();
    manifest.seed = opt.seed;

    const std::vector<std::string> comments = {"seed " + std::to_string(opt.seed), "generator csa"};
    return emit_extended(pair, ext, manifest, comments, opt.out_gamma, opt.out_delta,
                         default_path("", opt.out_gamma, ".congruences.txt"),
                         default_path(opt.manifest, opt.out_gamma, ".manifest.json"),
                         field.group_order());
}

namespace {

int verify_offset_hex(const VerifyOptions& opt, const CssPair& pair) {
    if (opt.field_degree < Field::min_degree || opt.field_degree > Field::max_degree) {
        fail(Errc::bad_degree, "field degree must be in 2..16");
    }
    const std::int64_t modulus = (std::int64_t{1} << opt.field_degree) - 1;

    std::ifstream gin(opt.gamma_path);
    if (!gin) fail(Errc::parse_error, "cannot open " + opt.gamma_path);
    std::ifstream din(opt.delta_path);
    if (!din) fail(Errc::parse_error, "cannot open " + opt.delta_path);
    const OffsetHexMatrix g = parse_offset_hex(gin, modulus);
    const OffsetHexMatrix d = parse_offset_hex(din, modulus);

    const bool gs = g.support == pair.hc;
    const bool ds = d.support == pair.hd;
    std::cout << "support(H_gamma) matches H_C: " << (gs ? "yes" : "no") << "\n";
    std::cout << "support(H_delta) matches H_D: " << (ds ? "yes" : "no") << "\n";
    if (!gs || !ds) return 1;

    const OverlapTable table = overlap_sets(pair);
    const CongruenceSystem sys = build_system(pair, table, modulus);
    const VarIndex index = build_var_index(pair);

    ExponentAssignment assign;
    assign.gamma_exp = g.exponents;
    assign.delta_exp = d.exponents;
    const std::vector<std::int64_t> v = assign.to_vector(index);

    std::size_t satisfied = 0;
    for (const auto& row : sys.rows) {
        if (sys.row_residual(row, v) == 0) {
            ++satisfied;
        } else {
            std::cout << "  unsatisfied: (" << row.i << "," << row.ip << "," << row.j << ","
                      << row.jp << ")\n";
        }
    }
    std::cout << "congruences mod " << modulus << ": " << satisfied << "/" << sys.rows.size()
              << " satisfied\n";
    return satisfied == sys.rows.size() ? 0 : 1;
}

} // namespace

int cmd_verify(const VerifyOptions& opt) {
    const CssPair pair = read_pair(opt.hc_path, opt.hd_path);
    if (opt.paper_hex) return verify_offset_hex(opt, pair);

    const FieldMatrix g = read_field_matrix(opt.gamma_path);
    const FieldMatrix d = read_field_matrix(opt.delta_path);

    const SupportReport sg = verify_support(g, pair.hc);
    const SupportReport sd = verify_support(d, pair.hd);
    print_support_line("support(H_gamma) matches H_C: ", sg);
    print_support_line("support(H_delta) matches H_D: ", sd);

    const FqReport fq = verify_orthogonal_fq(g, d);
    const bool fq_ok = print_fq_line(g.field, fq);
    return sg.ok() && sd.ok() && fq_ok ? 0 : 1;
}

int cmd_kernel(const KernelOptions& opt) {
    const BinaryMatrix mat = read_binary_matrix(opt.mat_path);
    const auto basis = nullspace_f2(mat);

    BinaryMatrix out(static_cast<int>(basis.size()), mat.cols);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        for (int c = 0; c < mat.cols; ++c) {
            if (basis[k][static_cast<std::size_t>(c)]) {
                out.row_support[k].push_back(c);
            }
        }
    }

    if (opt.out.empty()) {
        std::ostringstream os;
        emit_dense(out, os);
        std::cout << os.str();
        return 0;
    }
    write_binary_matrix(out, opt.out);
    std::cout << "kernel dimension: " << basis.size() << "\n";
    std::cout << "wrote " << opt.out << "\n";
    return 0;
}

} // namespace nbcss::cli
