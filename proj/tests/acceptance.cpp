// Release gate: one self-timed check per shipping criterion, one PASS or
// FAIL line each, nonzero exit if anything fails or overruns its budget.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nbcss/extend.hpp"
#include "nbcss/hgp.hpp"
#include "nbcss/modsolve.hpp"

#include "offset_hex.hpp"

#include "reference_instance.hpp"
#include "test_util.hpp"

using namespace nbcss;
using nbcss::testing::brute_force_solutions;
using nbcss::testing::random_02_pair;
using nbcss::testing::random_binary_matrix;
using nbcss::testing::to_set;

// Records the failing expression and bails out of the criterion.
#define EXPECT(cond)                         \
    do {                                     \
        if (!(cond)) {                       \
            note = "failed: " #cond;         \
            return false;                    \
        }                                    \
    } while (0)

namespace {

std::string note;

bool reference_reconstruction() {
    const CssPair pair = hgp(nbcss::testing::seed_h1(), nbcss::testing::seed_h2());
    EXPECT(pair.hc.rows == 6);
    EXPECT(pair.hc.cols == 13);
    EXPECT(pair.hd.rows == 6);
    EXPECT(pair.hd.cols == 13);
    EXPECT(check_orthogonal_f2(pair).ok());

    const CongruenceSystem sys = build_system(pair, overlap_sets(pair), 255);
    EXPECT(sys.rows.size() == nbcss::testing::expected_quadruples.size());
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        const auto& row = sys.rows[r];
        const auto& q = nbcss::testing::expected_quadruples[r];
        EXPECT(row.i == q[0]);
        EXPECT(row.ip == q[1]);
        EXPECT(row.j == q[2]);
        EXPECT(row.jp == q[3]);
    }
    return true;
}

bool offset_hex_verification() {
    std::istringstream gs(nbcss::testing::offset_hex_gamma);
    std::istringstream ds(nbcss::testing::offset_hex_delta);
    const cli::OffsetHexMatrix gamma = cli::parse_offset_hex(gs, 255);
    const cli::OffsetHexMatrix delta = cli::parse_offset_hex(ds, 255);

    const CssPair pair = nbcss::testing::reference_pair();
    EXPECT(gamma.support == pair.hc);
    EXPECT(delta.support == pair.hd);

    // desk anchors, decoded byte -> exponent
    EXPECT(gamma.exponents.at({0, 0}) == 232);
    EXPECT(gamma.exponents.at({0, 9}) == 80);
    EXPECT(delta.exponents.at({0, 0}) == 225);
    EXPECT(delta.exponents.at({0, 9}) == 122);
    EXPECT((232 - 80 + 225 - 122) % 255 == 0);
    EXPECT(gamma.exponents.at({0, 10}) == 189);
    EXPECT(delta.exponents.at({1, 0}) == 164);
    EXPECT(delta.exponents.at({1, 10}) == 207);
    EXPECT(232 - 189 + 164 - 207 == 0);

    const VarIndex idx = build_var_index(pair);
    const CongruenceSystem sys = build_system(pair, overlap_sets(pair), 255);
    ExponentAssignment assign;
    assign.gamma_exp = gamma.exponents;
    assign.delta_exp = delta.exponents;
    const auto v = assign.to_vector(idx);
    for (const auto& row : sys.rows) EXPECT(sys.row_residual(row, v) == 0);
    return true;
}

bool pipeline_all_solvers() {
    const CssPair pair = nbcss::testing::reference_pair();
    const VarIndex idx = build_var_index(pair);
    const CongruenceSystem sys = build_system(pair, overlap_sets(pair), 255);
    const Field gf256(8);

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        for (const SolverKind kind :
             {SolverKind::eliminate, SolverKind::snf, SolverKind::heuristic}) {
            const auto v = solve_system(sys, kind, seed);
            const ExtendedPair ext =
                assemble_pair(pair, ExponentAssignment::from_vector(idx, v), gf256);
            EXPECT(verify_support(ext.hgamma, pair.hc).ok());
            EXPECT(verify_support(ext.hdelta, pair.hd).ok());
            EXPECT(verify_orthogonal_fq(ext.hgamma, ext.hdelta).ok());
        }
    }
    return true;
}

bool solver_oracle_equivalence() {
    std::mt19937_64 rng(40);
    for (int t = 0; t < 20; ++t) {
        const CssPair pair = random_02_pair(rng, 8);
        const CongruenceSystem sys = build_system(pair, overlap_sets(pair), 3);
        const nbcss::testing::SolutionSet truth = brute_force_solutions(sys);

        const SolutionSampler via_snf = snf_nullspace_mod(snf(system_matrix(sys)), 3);
        EXPECT(to_set(via_snf.enumerate()) == truth);
        EXPECT(via_snf.count() == BigInt(truth.size()));

        try {
            const SolutionSampler via_elim =
                SolutionSampler::from_reduced(unit_pivot_eliminate(sys));
            for (std::uint64_t seed = 0; seed < 10; ++seed) {
                EXPECT(truth.count(via_elim.sample(seed)) == 1);
            }
        } catch (const Error& e) {
            EXPECT(e.code() == Errc::no_unit_pivot);
        }
    }
    return true;
}

bool smith_form_validity() {
    const IntMatrix worked = [] {
        IntMatrix m(2, 2);
        m.at(0, 0) = 2;
        m.at(0, 1) = 4;
        m.at(1, 0) = 6;
        m.at(1, 1) = 8;
        return m;
    }();
    const SnfResult wres = snf(worked);
    EXPECT(wres.diag == std::vector<BigInt>({2, 4}));

    std::mt19937_64 rng(50);
    for (int t = 0; t < 12; ++t) {
        const int rows = t == 0 ? 20 : 1 + static_cast<int>(rng() % 20);
        const int cols = t == 0 ? 30 : 1 + static_cast<int>(rng() % 30);
        IntMatrix a(rows, cols);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) a.at(i, j) = static_cast<std::int64_t>(rng() % 3) - 1;
        }
        const SnfResult res = snf(a);

        IntMatrix d(rows, cols);
        for (int i = 0; i < res.rank; ++i) d.at(i, i) = res.diag[static_cast<std::size_t>(i)];
        EXPECT(res.u * a * res.v == d);
        EXPECT(abs(det(res.u)) == 1);
        EXPECT(abs(det(res.v)) == 1);
        for (int i = 0; i + 1 < res.rank; ++i) {
            EXPECT(res.diag[static_cast<std::size_t>(i) + 1] % res.diag[static_cast<std::size_t>(i)] == 0);
        }
    }
    return true;
}

bool mersenne_prime_cross_check() {
    std::mt19937_64 rng(60);
    for (int t = 0; t < 20; ++t) {
        const CssPair pair = random_02_pair(rng, 12);
        const CongruenceSystem sys = build_system(pair, overlap_sets(pair), 7);

        const int k = prime_field_nullspace(sys).dimension();
        BigInt expected = 1;
        for (int i = 0; i < k; ++i) expected *= 7;
        EXPECT(snf_nullspace_mod(snf(system_matrix(sys)), 7).count() == expected);
    }
    return true;
}

// H_C rows own disjoint blocks of 6 columns; each H_D row meets the four
// blocks with overlap sizes 0, 2, 4 and 6 in some shuffled order.
bool csa_universality() {
    std::mt19937_64 rng(70);
    for (int t = 0; t < 50; ++t) {
        CssPair pair;
        pair.hc = BinaryMatrix(4, 24);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 6; ++j) {
                pair.hc.row_support[static_cast<std::size_t>(i)].push_back(6 * i + j);
            }
        }
        pair.hd = BinaryMatrix(2, 24);
        for (int r = 0; r < 2; ++r) {
            std::vector<int> sizes = {0, 2, 4, 6};
            std::shuffle(sizes.begin(), sizes.end(), rng);
            for (int i = 0; i < 4; ++i) {
                std::vector<int> block(6);
                for (int j = 0; j < 6; ++j) block[static_cast<std::size_t>(j)] = 6 * i + j;
                std::shuffle(block.begin(), block.end(), rng);
                block.resize(static_cast<std::size_t>(sizes[static_cast<std::size_t>(i)]));
                std::sort(block.begin(), block.end());
                auto& row = pair.hd.row_support[static_cast<std::size_t>(r)];
                row.insert(row.end(), block.begin(), block.end());
            }
        }
        pair.hd.validate();
        EXPECT(check_orthogonal_f2(pair).ok());

        for (const int degree : {2, 4, 8}) {
            const Field field(degree);
            const CsaParams params = CsaParams::random(
                4, 2, 24, field.group_order(), static_cast<std::uint64_t>(t * 8 + degree));
            const ExtendedPair ext = csa(pair, params, field);
            EXPECT(verify_support(ext.hgamma, pair.hc).ok());
            EXPECT(verify_support(ext.hdelta, pair.hd).ok());
            EXPECT(verify_orthogonal_fq(ext.hgamma, ext.hdelta).ok());
        }
    }
    return true;
}

bool csa_codeword_preservation() {
    const CssPair pair = nbcss::testing::reference_pair();
    const Field gf256(8);
    const std::vector<std::vector<std::uint8_t>> kernel = nullspace_f2(pair.hc);
    EXPECT(!kernel.empty());

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const CsaParams params = CsaParams::random(6, 6, 13, 255, seed);
        const ExtendedPair ext = csa(pair, params, gf256);
        for (const auto& x : kernel) {
            const std::vector<FieldElem> xi = csa_lift(pair.hc, x, params, gf256);
            for (const FieldElem y : mat_vec(ext.hgamma, xi)) EXPECT(y == 0);
        }
    }
    return true;
}

bool product_property_suite() {
    std::mt19937_64 rng(90);
    for (int t = 0; t < 100; ++t) {
        const BinaryMatrix h1 = random_binary_matrix(rng, 1 + static_cast<int>(rng() % 6),
                                                     1 + static_cast<int>(rng() % 10), 0.5);
        const BinaryMatrix h2 = random_binary_matrix(rng, 1 + static_cast<int>(rng() % 6),
                                                     1 + static_cast<int>(rng() % 10), 0.5);
        EXPECT(check_orthogonal_f2(hgp(h1, h2)).ok());
    }
    return true;
}

int run(int number, const char* label, double budget_ms, bool (*criterion)()) {
    note.clear();
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = criterion();
    } catch (const std::exception& e) {
        note = std::string("threw: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = ms < budget_ms;
    const bool pass = ok && in_budget;
    std::printf("[%s] %d. %s (%.0f ms, budget %.0f ms)%s%s\n", pass ? "PASS" : "FAIL", number,
                label, ms, budget_ms, note.empty() ? "" : (" " + note).c_str(),
                ok && !in_budget ? " over budget" : "");
    return pass ? 0 : 1;
}

} // namespace

int main() {
    int failures = 0;
    failures += run(1, "reference product reconstruction", 1000, reference_reconstruction);
    failures += run(2, "offset-hex grids satisfy the congruences", 1000, offset_hex_verification);
    failures += run(3, "100 seeds x 3 solvers verify over GF(256)", 10000, pipeline_all_solvers);
    failures += run(4, "solution sets match brute force mod 3", 30000, solver_oracle_equivalence);
    failures += run(5, "smith form contract on random matrices", 10000, smith_form_validity);
    failures += run(6, "prime-field dimension matches invariant-factor count", 5000,
                    mersenne_prime_cross_check);
    failures += run(7, "separable assignment covers overlap sizes 0/2/4/6", 10000,
                    csa_universality);
    failures += run(8, "separable lift preserves kernel vectors", 5000, csa_codeword_preservation);
    failures += run(9, "random products stay orthogonal", 10000, product_property_suite);

    if (failures > 0) {
        std::printf("%d of 9 criteria failing\n", failures);
        return 1;
    }
    std::printf("all 9 criteria passing\n");
    return 0;
}
