#include "nbcss/modsolve.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <utility>

#include "nbcss/error.hpp"

namespace nbcss {

namespace {

std::int64_t mod_norm(std::int64_t x, std::int64_t n) {
    std::int64_t r = x % n;
    return r < 0 ? r + n : r;
}

// Smallest-magnitude representative; keeps logged multipliers readable.
std::int64_t mod_sym(std::int64_t x, std::int64_t n) {
    std::int64_t r = mod_norm(x, n);
    return r > n / 2 ? r - n : r;
}

// Rejection sampling so draws do not depend on the standard library's
// distribution internals.
std::int64_t uniform_below(std::mt19937_64& rng, std::int64_t k) {
    if (k <= 1) return 0;
    const std::uint64_t bound = static_cast<std::uint64_t>(k);
    const std::uint64_t zone = std::numeric_limits<std::uint64_t>::max() / bound * bound;
    for (;;) {
        std::uint64_t u = rng();
        if (u < zone) return static_cast<std::int64_t>(u % bound);
    }
}

std::int64_t egcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    std::int64_t x1 = 0;
    std::int64_t y1 = 0;
    std::int64_t g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t x = 0;
    std::int64_t y = 0;
    egcd(mod_norm(a, p), p, x, y);
    return mod_norm(x, p);
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

} // namespace

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols != rhs.rows) fail(Errc::dimension_mismatch, "matrix product shape mismatch");
    IntMatrix out(rows, rhs.cols);
    for (int i = 0; i < rows; ++i) {
        for (int k = 0; k < cols; ++k) {
            const BigInt& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    }
    return out;
}

IntMatrix system_matrix(const CongruenceSystem& sys) {
    IntMatrix a(static_cast<int>(sys.rows.size()), sys.n_vars);
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        for (int t = 0; t < 4; ++t) a.at(static_cast<int>(r), sys.rows[r].var[t]) += sys.rows[r].coeff[t];
    }
    return a;
}

BigInt det(const IntMatrix& a) {
    if (a.rows != a.cols) fail(Errc::dimension_mismatch, "determinant of a non-square matrix");
    const int n = a.rows;
    if (n == 0) return 1;
    IntMatrix m = a;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i) {
                if (m.at(i, k) != 0) {
                    swap = i;
                    break;
                }
            }
            if (swap < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            }
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

ReducedSystem unit_pivot_eliminate(const CongruenceSystem& sys) {
    const std::int64_t n = sys.modulus;
    const int cols = sys.n_vars;
    const int nrows = static_cast<int>(sys.rows.size());

    std::vector<std::vector<std::int64_t>> a(static_cast<std::size_t>(nrows),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(cols), 0));
    for (int r = 0; r < nrows; ++r) {
        for (int t = 0; t < 4; ++t) {
            auto& cell = a[r][sys.rows[r].var[t]];
            cell = mod_norm(cell + sys.rows[r].coeff[t], n);
        }
    }

    ReducedSystem red;
    red.modulus = n;
    red.n_vars = cols;

    auto is_unit = [n](std::int64_t v) { return v == 1 || v == n - 1; };

    int pivots = 0;
    for (int c = 0; c < cols; ++c) {
        int pick = -1;
        bool column_live = false;
        for (int r = pivots; r < nrows; ++r) {
            if (a[r][c] == 0) continue;
            column_live = true;
            if (is_unit(a[r][c])) {
                pick = r;
                break;
            }
        }
        if (pick < 0) {
            if (column_live) {
                fail(Errc::no_unit_pivot,
                     "column " + std::to_string(c) + " has no +/-1 entry left to pivot on");
            }
            red.free_cols.push_back(c);
            continue;
        }
        if (pick != pivots) {
            for (int j = 0; j < cols; ++j) std::swap(a[pick][j], a[pivots][j]);
            red.ops.push_back({RowOp::Kind::swap, pivots, pick, 0});
        }
        const std::int64_t pivot = a[pivots][c];
        for (int r = 0; r < nrows; ++r) {
            if (r == pivots || a[r][c] == 0) continue;
            // pivot is its own inverse mod n, so this multiplier zeroes a[r][c]
            const std::int64_t m = mod_sym(-a[r][c] * pivot, n);
            for (int j = 0; j < cols; ++j) a[r][j] = mod_norm(a[r][j] + m * a[pivots][j], n);
            red.ops.push_back({RowOp::Kind::add_multiple, r, pivots, m});
        }
        red.pivot_cols.push_back(c);
        ++pivots;
    }

    red.rows.assign(a.begin(), a.begin() + pivots);
    return red;
}

void emit_elimination_trace(const ReducedSystem& red, std::ostream& out) {
    out << "elimination mod " << red.modulus << ": " << red.n_vars << " variables\n";
    for (const RowOp& op : red.ops) {
        if (op.kind == RowOp::Kind::swap) {
            out << "  swap r" << op.target << " r" << op.source << "\n";
        } else {
            out << "  r" << op.target << " += " << op.multiplier << " * r" << op.source << "\n";
        }
    }
    out << "pivot columns:";
    for (int c : red.pivot_cols) out << " " << c;
    out << "\nfree columns:";
    for (int c : red.free_cols) out << " " << c;
    out << "\n";
    for (std::size_t k = 0; k < red.rows.size(); ++k) {
        out << "  row " << k << ":";
        for (int j = 0; j < red.n_vars; ++j) {
            if (red.rows[k][j] != 0) out << " " << j << ":" << red.rows[k][j];
        }
        out << "\n";
    }
}

namespace {

void swap_rows(IntMatrix& a, IntMatrix& u, int i, int j) {
    for (int c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
}

void swap_cols(IntMatrix& a, IntMatrix& v, int i, int j) {
    for (int r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
}

void add_row(IntMatrix& a, IntMatrix& u, int target, int source, const BigInt& m) {
    for (int c = 0; c < a.cols; ++c) a.at(target, c) += m * a.at(source, c);
    for (int c = 0; c < u.cols; ++c) u.at(target, c) += m * u.at(source, c);
}

void add_col(IntMatrix& a, IntMatrix& v, int target, int source, const BigInt& m) {
    for (int r = 0; r < a.rows; ++r) a.at(r, target) += m * a.at(r, source);
    for (int r = 0; r < v.rows; ++r) v.at(r, target) += m * v.at(r, source);
}

void negate_row(IntMatrix& a, IntMatrix& u, int i) {
    for (int c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
}

} // namespace

SnfResult snf(const IntMatrix& input) {
    SnfResult res;
    res.rows = input.rows;
    res.cols = input.cols;
    res.u = IntMatrix::identity(input.rows);
    res.v = IntMatrix::identity(input.cols);

    IntMatrix a = input;
    const int bound = std::min(a.rows, a.cols);
    int k = 0;
    for (; k < bound; ++k) {
        // smallest nonzero magnitude in the trailing submatrix becomes the pivot
        int pr = -1;
        int pc = -1;
        BigInt best = 0;
        auto rescan = [&]() {
            pr = pc = -1;
            for (int i = k; i < a.rows; ++i) {
                for (int j = k; j < a.cols; ++j) {
                    if (a.at(i, j) == 0) continue;
                    BigInt mag = abs(a.at(i, j));
                    if (pr < 0 || mag < best) {
                        best = mag;
                        pr = i;
                        pc = j;
                    }
                }
            }
        };
        rescan();
        if (pr < 0) break;

        for (;;) {
            if (pr != k) swap_rows(a, res.u, k, pr);
            if (pc != k) swap_cols(a, res.v, k, pc);

            bool clean = true;
            for (int i = k + 1; i < a.rows; ++i) {
                if (a.at(i, k) == 0) continue;
                BigInt q = a.at(i, k) / a.at(k, k);
                if (q != 0) add_row(a, res.u, i, k, -q);
                if (a.at(i, k) != 0) clean = false;
            }
            for (int j = k + 1; j < a.cols; ++j) {
                if (a.at(k, j) == 0) continue;
                BigInt q = a.at(k, j) / a.at(k, k);
                if (q != 0) add_col(a, res.v, j, k, -q);
                if (a.at(k, j) != 0) clean = false;
            }
            if (!clean) {
                rescan();
                continue;
            }

            // pivot now alone in its row and column; enforce that it also
            // divides the rest of the submatrix
            int bi = -1;
            for (int i = k + 1; i < a.rows && bi < 0; ++i) {
                for (int j = k + 1; j < a.cols; ++j) {
                    if (a.at(i, j) % a.at(k, k) != 0) {
                        bi = i;
                        break;
                    }
                }
            }
            if (bi < 0) break;
            add_row(a, res.u, k, bi, 1);
            rescan();
        }

        if (a.at(k, k) < 0) negate_row(a, res.u, k);
    }

    res.rank = k;
    res.diag.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) res.diag.push_back(a.at(i, i));
    return res;
}

SolutionSampler SolutionSampler::from_reduced(ReducedSystem red) {
    SolutionSampler s;
    s.form_ = Form::reduced;
    s.modulus_ = red.modulus;
    s.n_vars_ = red.n_vars;
    s.red_ = std::move(red);
    return s;
}

SolutionSampler SolutionSampler::from_snf(const SnfResult& res, std::int64_t n) {
    if (n < 2) fail(Errc::bad_degree, "modulus must be at least 2");
    SolutionSampler s;
    s.form_ = Form::snf;
    s.modulus_ = n;
    s.n_vars_ = res.cols;
    s.v_mod_.assign(static_cast<std::size_t>(res.cols),
                    std::vector<std::int64_t>(static_cast<std::size_t>(res.cols), 0));
    for (int r = 0; r < res.cols; ++r) {
        for (int c = 0; c < res.cols; ++c) {
            BigInt rem = res.v.at(r, c) % n;
            if (rem < 0) rem += n;
            s.v_mod_[r][c] = rem.convert_to<std::int64_t>();
        }
    }
    // d_i * w_i = 0 (mod n) forces w_i to be a multiple of n / gcd(d_i, n)
    s.step_.assign(static_cast<std::size_t>(res.cols), 1);
    for (int i = 0; i < res.rank; ++i) {
        BigInt rem = res.diag[i] % n;
        if (rem < 0) rem += n;
        std::int64_t g = std::gcd(rem.convert_to<std::int64_t>(), n);
        s.step_[i] = n / g;
    }
    return s;
}

SolutionSampler SolutionSampler::from_basis(std::vector<std::vector<std::int64_t>> basis, int n_vars,
                                            std::int64_t prime) {
    SolutionSampler s;
    s.form_ = Form::basis;
    s.modulus_ = prime;
    s.n_vars_ = n_vars;
    s.basis_ = std::move(basis);
    return s;
}

std::vector<std::int64_t> SolutionSampler::assemble_reduced(std::span<const std::int64_t> free_vals) const {
    std::vector<std::int64_t> v(static_cast<std::size_t>(n_vars_), 0);
    for (std::size_t i = 0; i < red_.free_cols.size(); ++i) v[red_.free_cols[i]] = free_vals[i];
    for (std::size_t k = 0; k < red_.rows.size(); ++k) {
        std::int64_t rest = 0;
        for (int c : red_.free_cols) rest = mod_norm(rest + red_.rows[k][c] * v[c], modulus_);
        const std::int64_t pivot = red_.rows[k][red_.pivot_cols[k]];
        v[red_.pivot_cols[k]] = mod_norm(-pivot * rest, modulus_);
    }
    return v;
}

std::vector<std::int64_t> SolutionSampler::assemble_snf(std::span<const std::int64_t> w) const {
    std::vector<std::int64_t> v(static_cast<std::size_t>(n_vars_), 0);
    for (int r = 0; r < n_vars_; ++r) {
        std::int64_t acc = 0;
        for (int c = 0; c < n_vars_; ++c) acc = mod_norm(acc + v_mod_[r][c] * w[c], modulus_);
        v[r] = acc;
    }
    return v;
}

std::vector<std::int64_t> SolutionSampler::sample(std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    switch (form_) {
    case Form::reduced: {
        std::vector<std::int64_t> free_vals(red_.free_cols.size());
        for (auto& f : free_vals) f = uniform_below(rng, modulus_);
        return assemble_reduced(free_vals);
    }
    case Form::snf: {
        std::vector<std::int64_t> w(static_cast<std::size_t>(n_vars_));
        for (int i = 0; i < n_vars_; ++i) w[i] = step_[i] * uniform_below(rng, modulus_ / step_[i]);
        return assemble_snf(w);
    }
    case Form::basis: {
        std::vector<std::int64_t> v(static_cast<std::size_t>(n_vars_), 0);
        for (const auto& b : basis_) {
            const std::int64_t c = uniform_below(rng, modulus_);
            for (int j = 0; j < n_vars_; ++j) v[j] = mod_norm(v[j] + c * b[j], modulus_);
        }
        return v;
    }
    }
    return {};
}

BigInt SolutionSampler::count() const {
    BigInt c = 1;
    switch (form_) {
    case Form::reduced:
        for (std::size_t i = 0; i < red_.free_cols.size(); ++i) c *= modulus_;
        break;
    case Form::snf:
        for (int i = 0; i < n_vars_; ++i) c *= modulus_ / step_[i];
        break;
    case Form::basis:
        for (std::size_t i = 0; i < basis_.size(); ++i) c *= modulus_;
        break;
    }
    return c;
}

int SolutionSampler::dimension() const {
    switch (form_) {
    case Form::reduced:
        return static_cast<int>(red_.free_cols.size());
    case Form::snf: {
        int d = 0;
        for (int i = 0; i < n_vars_; ++i) {
            if (modulus_ / step_[i] > 1) ++d;
        }
        return d;
    }
    case Form::basis:
        return static_cast<int>(basis_.size());
    }
    return 0;
}

std::vector<std::vector<std::int64_t>> SolutionSampler::enumerate(std::uint64_t limit) const {
    if (count() > limit) throw std::length_error("solution set larger than enumeration limit");

    // per-coordinate choice counts for an odometer walk
    std::vector<std::int64_t> choices;
    switch (form_) {
    case Form::reduced:
        choices.assign(red_.free_cols.size(), modulus_);
        break;
    case Form::snf:
        for (int i = 0; i < n_vars_; ++i) choices.push_back(modulus_ / step_[i]);
        break;
    case Form::basis:
        choices.assign(basis_.size(), modulus_);
        break;
    }

    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> idx(choices.size(), 0);
    for (;;) {
        switch (form_) {
        case Form::reduced:
            out.push_back(assemble_reduced(idx));
            break;
        case Form::snf: {
            std::vector<std::int64_t> w(static_cast<std::size_t>(n_vars_));
            for (int i = 0; i < n_vars_; ++i) w[i] = step_[i] * idx[i];
            out.push_back(assemble_snf(w));
            break;
        }
        case Form::basis: {
            std::vector<std::int64_t> v(static_cast<std::size_t>(n_vars_), 0);
            for (std::size_t b = 0; b < basis_.size(); ++b) {
                for (int j = 0; j < n_vars_; ++j) {
                    v[j] = mod_norm(v[j] + idx[b] * basis_[b][j], modulus_);
                }
            }
            out.push_back(std::move(v));
            break;
        }
        }
        std::size_t p = 0;
        while (p < idx.size() && ++idx[p] == choices[p]) idx[p++] = 0;
        if (p == idx.size()) break;
    }
    return out;
}

SolutionSampler snf_nullspace_mod(const SnfResult& res, std::int64_t n) {
    return SolutionSampler::from_snf(res, n);
}

SolutionSampler prime_field_nullspace(const CongruenceSystem& sys) {
    const std::int64_t p = sys.modulus;
    if (!is_prime(p)) fail(Errc::not_prime, "modulus " + std::to_string(p) + " is not prime");

    const int cols = sys.n_vars;
    std::vector<std::vector<std::int64_t>> a(sys.rows.size(),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(cols), 0));
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        for (int t = 0; t < 4; ++t) {
            auto& cell = a[r][sys.rows[r].var[t]];
            cell = mod_norm(cell + sys.rows[r].coeff[t], p);
        }
    }

    std::vector<int> pivot_cols;
    int pivots = 0;
    for (int c = 0; c < cols && pivots < static_cast<int>(a.size()); ++c) {
        int pick = -1;
        for (int r = pivots; r < static_cast<int>(a.size()); ++r) {
            if (a[r][c] != 0) {
                pick = r;
                break;
            }
        }
        if (pick < 0) continue;
        std::swap(a[pick], a[pivots]);
        const std::int64_t inv = inv_mod(a[pivots][c], p);
        for (int j = 0; j < cols; ++j) a[pivots][j] = mod_norm(a[pivots][j] * inv, p);
        for (int r = 0; r < static_cast<int>(a.size()); ++r) {
            if (r == pivots || a[r][c] == 0) continue;
            const std::int64_t f = a[r][c];
            for (int j = 0; j < cols; ++j) a[r][j] = mod_norm(a[r][j] - f * a[pivots][j], p);
        }
        pivot_cols.push_back(c);
        ++pivots;
    }

    std::vector<std::vector<std::int64_t>> basis;
    std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
    for (int c : pivot_cols) is_pivot[c] = 1;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::int64_t> v(static_cast<std::size_t>(cols), 0);
        v[f] = 1;
        for (int k = 0; k < pivots; ++k) v[pivot_cols[k]] = mod_norm(-a[k][f], p);
        basis.push_back(std::move(v));
    }
    return SolutionSampler::from_basis(std::move(basis), cols, p);
}

std::vector<std::int64_t> heuristic_solve(const CongruenceSystem& sys, std::uint64_t seed, int max_sweeps) {
    const std::int64_t n = sys.modulus;
    std::mt19937_64 rng(seed);

    std::vector<std::int64_t> v(static_cast<std::size_t>(sys.n_vars));
    for (auto& x : v) x = uniform_below(rng, n);

    const int repairs_per_sweep = std::max<int>(1, static_cast<int>(sys.rows.size()));
    std::vector<std::size_t> unsat;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        for (int rep = 0; rep < repairs_per_sweep; ++rep) {
            unsat.clear();
            for (std::size_t r = 0; r < sys.rows.size(); ++r) {
                if (sys.row_residual(sys.rows[r], v) != 0) unsat.push_back(r);
            }
            if (unsat.empty()) return v;

            const auto& row = sys.rows[unsat[static_cast<std::size_t>(
                uniform_below(rng, static_cast<std::int64_t>(unsat.size())))]];
            const int t = static_cast<int>(uniform_below(rng, 4));
            std::int64_t rest = 0;
            for (int s = 0; s < 4; ++s) {
                if (s != t) rest = mod_norm(rest + row.coeff[s] * v[row.var[s]], n);
            }
            // coefficient is +/-1, hence its own inverse mod n
            v[row.var[t]] = mod_norm(-row.coeff[t] * rest, n);
        }
    }
    fail(Errc::timeout, "no satisfying assignment found within " + std::to_string(max_sweeps) + " sweeps");
}

std::vector<std::int64_t> sample_solution(const SolutionSampler& sampler, std::uint64_t seed) {
    return sampler.sample(seed);
}

std::vector<std::int64_t> solve_system(const CongruenceSystem& sys, SolverKind kind, std::uint64_t seed,
                                       const SolveOptions& opts) {
    switch (kind) {
    case SolverKind::eliminate:
        try {
            ReducedSystem red = unit_pivot_eliminate(sys);
            if (opts.trace != nullptr) emit_elimination_trace(red, *opts.trace);
            return SolutionSampler::from_reduced(std::move(red)).sample(seed);
        } catch (const Error& e) {
            if (e.code() != Errc::no_unit_pivot || !opts.snf_fallback) throw;
            if (opts.trace != nullptr) {
                *opts.trace << "no unit pivot (" << e.what() << "); switching to invariant factors\n";
            }
            return snf_nullspace_mod(snf(system_matrix(sys)), sys.modulus).sample(seed);
        }
    case SolverKind::snf:
        return snf_nullspace_mod(snf(system_matrix(sys)), sys.modulus).sample(seed);
    case SolverKind::heuristic:
        return heuristic_solve(sys, seed, opts.max_sweeps);
    case SolverKind::prime_field:
        return prime_field_nullspace(sys).sample(seed);
    }
    fail(Errc::dimension_mismatch, "unknown solver kind");
}

} // namespace nbcss
