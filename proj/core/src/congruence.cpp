#include "nbcss/congruence.hpp"

#include <ostream>
#include <sstream>

namespace nbcss {

VarIndex VarIndex::build(const CssPair& pair) {
    VarIndex idx;
    for (int i = 0; i < pair.hc.rows; ++i)
        for (int j : pair.hc.row_support[static_cast<std::size_t>(i)]) {
            idx.gamma_pos.emplace(std::make_pair(i, j), static_cast<int>(idx.vars.size()));
            idx.vars.push_back({Side::gamma, i, j});
        }
    for (int i = 0; i < pair.hd.rows; ++i)
        for (int j : pair.hd.row_support[static_cast<std::size_t>(i)]) {
            idx.delta_pos.emplace(std::make_pair(i, j), static_cast<int>(idx.vars.size()));
            idx.vars.push_back({Side::delta, i, j});
        }
    return idx;
}

int VarIndex::gamma_var(int row, int col) const {
    auto it = gamma_pos.find({row, col});
    if (it == gamma_pos.end())
        fail(Errc::domain_mismatch,
             "no gamma-side variable at (" + std::to_string(row) + "," + std::to_string(col) + ")");
    return it->second;
}

int VarIndex::delta_var(int row, int col) const {
    auto it = delta_pos.find({row, col});
    if (it == delta_pos.end())
        fail(Errc::domain_mismatch,
             "no delta-side variable at (" + std::to_string(row) + "," + std::to_string(col) + ")");
    return it->second;
}

std::string VarIndex::name(int v) const {
    const Var& d = vars[static_cast<std::size_t>(v)];
    std::ostringstream os;
    os << (d.side == Side::gamma ? 'e' : 'f') << '[' << d.row << ',' << d.col << ']';
    return os.str();
}

bool CongruenceSystem::satisfied(std::span<const std::int64_t> v) const {
    for (const auto& row : rows)
        if (row_residual(row, v) != 0) return false;
    return true;
}

std::int64_t CongruenceSystem::row_residual(const CongruenceRow& row,
                                            std::span<const std::int64_t> v) const {
    std::int64_t s = 0;
    for (int k = 0; k < 4; ++k) s += row.coeff[static_cast<std::size_t>(k)] * v[static_cast<std::size_t>(row.var[static_cast<std::size_t>(k)])];
    std::int64_t r = s % modulus;
    if (r < 0) r += modulus;
    return r;
}

VarIndex build_var_index(const CssPair& pair) { return VarIndex::build(pair); }

CongruenceSystem build_system(const CssPair& pair, const OverlapTable& table,
                              std::int64_t modulus) {
    if (modulus < 2) fail(Errc::bad_degree, "modulus must be >= 2");
    const VarIndex idx = VarIndex::build(pair);

    CongruenceSystem sys;
    sys.n_vars = idx.size();
    sys.modulus = modulus;
    sys.rows.reserve(table.size());

    // OverlapTable is ordered by (i, i'), so rows come out sorted.
    for (const auto& [key, cols] : table) {
        const auto [i, ip] = key;
        if (cols.size() != 2) {
            std::ostringstream os;
            os << "overlap of rows (" << i << "," << ip << ") has size " << cols.size()
               << "; only 0/2 overlaps admit linear congruences";
            fail(Errc::overlap_too_large, os.str());
        }
        CongruenceRow row;
        row.i = i;
        row.ip = ip;
        row.j = cols[0];
        row.jp = cols[1];
        row.var = {idx.gamma_var(i, row.j), idx.gamma_var(i, row.jp),
                   idx.delta_var(ip, row.j), idx.delta_var(ip, row.jp)};
        row.coeff = {+1, -1, +1, -1};
        sys.rows.push_back(row);
    }
    return sys;
}

void dump_congruences(const CongruenceSystem& sys, std::ostream& out) {
    for (const auto& r : sys.rows) {
        out << '(' << r.i << ',' << r.ip << ',' << r.j << ',' << r.jp << ')'
            << " : +e[" << r.i << ',' << r.j << ']'
            << " -e[" << r.i << ',' << r.jp << ']'
            << " +f[" << r.ip << ',' << r.j << ']'
            << " -f[" << r.ip << ',' << r.jp << ']'
            << " (mod " << sys.modulus << ")\n";
    }
}

} // namespace nbcss
