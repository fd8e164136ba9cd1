#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "nbcss/binmat.hpp"
#include "nbcss/congruence.hpp"
#include "nbcss/error.hpp"

namespace nbcss::testing {

// Runs fn and reports the Errc it threw, if any.
template <class F>
std::optional<Errc> errc_of(F&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

inline BinaryMatrix random_binary_matrix(std::mt19937_64& rng, int rows, int cols, double density) {
    std::bernoulli_distribution bit(density);
    BinaryMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (bit(rng)) m.row_support[static_cast<std::size_t>(i)].push_back(j);
        }
    }
    return m;
}

// Forward-only dense elimination, deliberately structured differently
// from the library's reduced-echelon routine.
inline int naive_rank_f2(const std::vector<std::vector<std::uint8_t>>& rows_in, int cols) {
    std::vector<std::vector<std::uint8_t>> rows = rows_in;
    int rank = 0;
    for (int c = 0; c < cols; ++c) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
            if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) {
                for (int j = c; j < cols; ++j) {
                    rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] ^=
                        rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
                }
            }
        }
        ++rank;
    }
    return rank;
}

inline int naive_rank_f2(const BinaryMatrix& m) {
    std::vector<std::vector<std::uint8_t>> rows(
        static_cast<std::size_t>(m.rows),
        std::vector<std::uint8_t>(static_cast<std::size_t>(m.cols), 0));
    for (int i = 0; i < m.rows; ++i) {
        for (int j : m.row_support[static_cast<std::size_t>(i)]) {
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
        }
    }
    return naive_rank_f2(rows, m.cols);
}

using SolutionSet = std::set<std::vector<std::int64_t>>;

// Exhaustive walk over all modulus^n_vars assignments.
inline SolutionSet brute_force_solutions(const CongruenceSystem& sys) {
    SolutionSet out;
    std::vector<std::int64_t> v(static_cast<std::size_t>(sys.n_vars), 0);
    for (;;) {
        if (sys.satisfied(v)) out.insert(v);
        std::size_t p = 0;
        while (p < v.size() && ++v[p] == sys.modulus) v[p++] = 0;
        if (p == v.size()) break;
    }
    return out;
}

inline SolutionSet to_set(const std::vector<std::vector<std::int64_t>>& vs) {
    return SolutionSet(vs.begin(), vs.end());
}

// Small random pair whose overlaps are all of size 0 or 2, with at most
// max_vars exponent variables and at least one congruence row.
inline CssPair random_02_pair(std::mt19937_64& rng, int max_vars) {
    for (int tries = 0; tries < 100000; ++tries) {
        CssPair pair{random_binary_matrix(rng, 2, 5, 0.4), random_binary_matrix(rng, 2, 5, 0.4)};
        if (static_cast<int>(pair.hc.nnz() + pair.hd.nnz()) > max_vars) continue;
        const OverlapTable table = overlap_sets(pair);
        if (table.empty()) continue;
        bool ok = true;
        for (const auto& [key, cols] : table) {
            if (cols.size() != 2) ok = false;
        }
        if (ok) return pair;
    }
    fail(Errc::empty_seed, "no 0/2 pair found (generator parameters too tight)");
}

} // namespace nbcss::testing
