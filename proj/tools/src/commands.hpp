#pragma once

#include <cstdint>
#include <string>

#include "nbcss/error.hpp"
#include "nbcss/modsolve.hpp"

namespace nbcss::cli {

// 0 ok, 1 verification failure, 2 parse/usage, 3 infeasibility.
int exit_code_for(Errc code);

const char* solver_name(SolverKind kind);

struct CheckOptions {
    std::string hc_path;
    std::string hd_path;
};
int cmd_check(const CheckOptions& opt);

struct HgpOptions {
    std::string h1_path;
    std::string h2_path;
    std::string out_x;
    std::string out_z;
    std::string manifest; // empty: <out_x>.manifest.json
};
int cmd_hgp(const HgpOptions& opt);

struct ExtendOptions {
    std::string hc_path;
    std::string hd_path;
    std::string out_gamma;
    std::string out_delta;
    std::string manifest;  // empty: <out_gamma>.manifest.json
    std::string dump_path; // empty: <out_gamma>.congruences.txt
    int field_degree = 0;
    std::uint32_t poly = 0; // 0: default polynomial for the degree
    SolverKind solver = SolverKind::eliminate;
    std::uint64_t seed = 0;
    bool snf_fallback = true;
    bool trace_elimination = false;
    int max_sweeps = 1000;
};
int cmd_extend(const ExtendOptions& opt);

struct CsaOptions {
    std::string hc_path;
    std::string hd_path;
    std::string out_gamma;
    std::string out_delta;
    std::string manifest;
    int field_degree = 0;
    std::uint32_t poly = 0;
    std::uint64_t seed = 0;
};
int cmd_csa(const CsaOptions& opt);

struct VerifyOptions {
    std::string gamma_path;
    std::string delta_path;
    std::string hc_path;
    std::string hd_path;
    bool paper_hex = false; // exponent-offset byte grid instead of the native format
    int field_degree = 8;   // modulus source in offset mode
};
int cmd_verify(const VerifyOptions& opt);

struct KernelOptions {
    std::string mat_path;
    std::string out; // empty: basis rows to stdout
};
int cmd_kernel(const KernelOptions& opt);

} // namespace nbcss::cli
