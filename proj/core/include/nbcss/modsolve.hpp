#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nbcss/congruence.hpp"

namespace nbcss {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer matrix with arbitrary-precision entries; used for the
// Smith normal form path where transform accumulation can outgrow
// fixed-width integers.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<BigInt> data; // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}

    BigInt& at(int r, int c) { return data[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
    const BigInt& at(int r, int c) const { return data[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }

    static IntMatrix identity(int n);
    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix&) const = default;
};

// Coefficient matrix A of a congruence system as a dense integer matrix.
IntMatrix system_matrix(const CongruenceSystem& sys);

// Exact determinant (fraction-free Bareiss elimination).
BigInt det(const IntMatrix& a);

// Row operations used by the unit-pivot elimination. There is no scaling
// op: the reduction uses only swaps and repeated +/- additions mod n,
// which is what makes it valid over Z/nZ without division.
struct RowOp {
    enum class Kind : std::uint8_t { swap, add_multiple } kind;
    int target = 0;
    int source = 0;
    std::int64_t multiplier = 0; // add_multiple: row[target] += multiplier * row[source] (mod n)
};

// Fully reduced form: each stored row has a +1 or -1 pivot and zeros in
// every other pivot column; non-pivot columns are free.
struct ReducedSystem {
    std::int64_t modulus = 0;
    int n_vars = 0;
    std::vector<std::vector<std::int64_t>> rows; // pivot rows, entries in [0, n)
    std::vector<int> pivot_cols;                 // pivot_cols[k] = pivot column of rows[k]
    std::vector<int> free_cols;
    std::vector<RowOp> ops; // complete operation log, replayable
};

// Row reduction using only row swaps and +/- row additions mod n; pivots
// are entries congruent to +/-1. Throws Errc::no_unit_pivot when the
// remaining submatrix still has nonzero entries but none is a unit
// (callers typically fall back to snf()).
ReducedSystem unit_pivot_eliminate(const CongruenceSystem& sys);

void emit_elimination_trace(const ReducedSystem& red, std::ostream& out);

// Smith normal form U*A*V = D with U, V unimodular and the invariant
// factors satisfying d_1 | d_2 | ... | d_r.
struct SnfResult {
    IntMatrix u; // rows x rows
    IntMatrix v; // cols x cols
    std::vector<BigInt> diag;
    int rank = 0;
    int rows = 0;
    int cols = 0;
};

SnfResult snf(const IntMatrix& a);

// Parameterization of {v : A v = 0 (mod n)} plus reproducible sampling.
// Immutable once built; sample() is a pure function of the seed.
class SolutionSampler {
public:
    static SolutionSampler from_reduced(ReducedSystem red);
    static SolutionSampler from_snf(const SnfResult& res, std::int64_t n);
    static SolutionSampler from_basis(std::vector<std::vector<std::int64_t>> basis, int n_vars,
                                      std::int64_t prime);

    std::vector<std::int64_t> sample(std::uint64_t seed) const;
    BigInt count() const;

    // Every solution, in no particular order. Throws if count() > limit.
    std::vector<std::vector<std::int64_t>> enumerate(std::uint64_t limit = 1u << 20) const;

    // Number of free parameters. For the prime-field basis form this is
    // the nullspace dimension.
    int dimension() const;

    int n_vars() const { return n_vars_; }
    std::int64_t modulus() const { return modulus_; }

private:
    SolutionSampler() = default;

    enum class Form : std::uint8_t { reduced, snf, basis } form_ = Form::basis;
    std::int64_t modulus_ = 0;
    int n_vars_ = 0;

    ReducedSystem red_;

    // snf form: v = V w (mod n), with w_i restricted to multiples of
    // step_[i] (step_[i] = n / gcd(d_i, n); free coordinates have step 1).
    std::vector<std::vector<std::int64_t>> v_mod_;
    std::vector<std::int64_t> step_;

    std::vector<std::vector<std::int64_t>> basis_;

    std::vector<std::int64_t> assemble_reduced(std::span<const std::int64_t> free_vals) const;
    std::vector<std::int64_t> assemble_snf(std::span<const std::int64_t> w) const;
};

SolutionSampler snf_nullspace_mod(const SnfResult& res, std::int64_t n);

// Nullspace over Z/nZ for prime n by ordinary Gaussian elimination.
// Throws Errc::not_prime otherwise.
SolutionSampler prime_field_nullspace(const CongruenceSystem& sys);

// Single-variable repair iteration from a random start: pick an
// unsatisfied row, reassign one of its four variables to the unique value
// satisfying that row, repeat. One sweep = max(1, #rows) repairs. Throws
// Errc::timeout after max_sweeps sweeps (which proves nothing about
// feasibility).
std::vector<std::int64_t> heuristic_solve(const CongruenceSystem& sys, std::uint64_t seed,
                                          int max_sweeps = 1000);

std::vector<std::int64_t> sample_solution(const SolutionSampler& sampler, std::uint64_t seed);

enum class SolverKind { eliminate, snf, heuristic, prime_field };

struct SolveOptions {
    bool snf_fallback = true; // eliminate path falls back to snf on no_unit_pivot
    int max_sweeps = 1000;    // heuristic budget
    std::ostream* trace = nullptr;
};

// One-call driver: builds the solver-specific parameterization and draws
// a single solution under the seed.
std::vector<std::int64_t> solve_system(const CongruenceSystem& sys, SolverKind kind,
                                       std::uint64_t seed, const SolveOptions& opts = {});

} // namespace nbcss
