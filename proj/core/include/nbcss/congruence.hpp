#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nbcss/binmat.hpp"

namespace nbcss {

// One exponent variable per nonzero matrix position: e_{i,j} for H_C
// (gamma side) and f_{i',j} for H_D (delta side). Variables are ordered
// deterministically: all gamma-side in (row, col) lexicographic order,
// then all delta-side likewise.
struct VarIndex {
    enum class Side : std::uint8_t { gamma, delta };
    struct Var {
        Side side;
        int row;
        int col;
    };

    std::vector<Var> vars;
    std::map<std::pair<int, int>, int> gamma_pos;
    std::map<std::pair<int, int>, int> delta_pos;

    static VarIndex build(const CssPair& pair);

    int size() const { return static_cast<int>(vars.size()); }
    int gamma_var(int row, int col) const;
    int delta_var(int row, int col) const;
    std::string name(int v) const; // "e[i,j]" or "f[i,j]"
};

// One congruence e_{i,j} - e_{i,j'} + f_{i',j} - f_{i',j'} = 0 (mod n),
// originating from the size-2 overlap S_{i,i'} = {j, j'} with j < j'.
struct CongruenceRow {
    int i = 0;  // H_C row
    int ip = 0; // H_D row
    int j = 0;
    int jp = 0;
    std::array<int, 4> var{};   // e(i,j), e(i,j'), f(i',j), f(i',j')
    std::array<int, 4> coeff{}; // +1, -1, +1, -1
};

struct CongruenceSystem {
    int n_vars = 0;
    std::int64_t modulus = 0;
    std::vector<CongruenceRow> rows;

    // Exact residual check A v = 0 (mod modulus).
    bool satisfied(std::span<const std::int64_t> v) const;
    std::int64_t row_residual(const CongruenceRow& row, std::span<const std::int64_t> v) const;
};

VarIndex build_var_index(const CssPair& pair);

// One row per size-2 overlap, sorted by (i, i'). Any stored overlap of
// size other than 2 is outside the canonical case and raises
// Errc::overlap_too_large (the CSA route handles those pairs instead).
CongruenceSystem build_system(const CssPair& pair, const OverlapTable& table,
                              std::int64_t modulus);

// Human-diffable dump, one row per line:
//   (i,i',j,j') : +e[i,j] -e[i,j'] +f[i',j] -f[i',j'] (mod n)
void dump_congruences(const CongruenceSystem& sys, std::ostream& out);

} // namespace nbcss
