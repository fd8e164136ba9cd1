#include "nbcss/binmat.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace nbcss {

BinaryMatrix BinaryMatrix::from_dense(const std::vector<std::vector<int>>& dense) {
    BinaryMatrix m;
    m.rows = static_cast<int>(dense.size());
    m.cols = dense.empty() ? 0 : static_cast<int>(dense[0].size());
    m.row_support.resize(dense.size());
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (static_cast<int>(dense[i].size()) != m.cols)
            fail(Errc::parse_error, "ragged dense matrix at row " + std::to_string(i));
        for (int j = 0; j < m.cols; ++j) {
            if (dense[i][j] != 0 && dense[i][j] != 1)
                fail(Errc::parse_error, "dense entry not 0/1");
            if (dense[i][j]) m.row_support[i].push_back(j);
        }
    }
    return m;
}

std::vector<std::vector<int>> BinaryMatrix::to_dense() const {
    std::vector<std::vector<int>> d(static_cast<std::size_t>(rows),
                                    std::vector<int>(static_cast<std::size_t>(cols), 0));
    for (int i = 0; i < rows; ++i)
        for (int j : row_support[static_cast<std::size_t>(i)]) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    return d;
}

bool BinaryMatrix::get(int r, int c) const {
    const auto& s = row_support[static_cast<std::size_t>(r)];
    return std::binary_search(s.begin(), s.end(), c);
}

std::size_t BinaryMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& s : row_support) n += s.size();
    return n;
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j : row_support[static_cast<std::size_t>(i)])
            t.row_support[static_cast<std::size_t>(j)].push_back(i);
    return t;
}

void BinaryMatrix::validate() const {
    if (static_cast<int>(row_support.size()) != rows)
        fail(Errc::parse_error, "row count does not match support table");
    for (int i = 0; i < rows; ++i) {
        const auto& s = row_support[static_cast<std::size_t>(i)];
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (s[k] < 0 || s[k] >= cols)
                fail(Errc::parse_error, "column index out of range in row " + std::to_string(i));
            if (k > 0 && s[k] <= s[k - 1])
                fail(Errc::parse_error, "row support not strictly increasing in row " + std::to_string(i));
        }
    }
}

namespace {

// Size of the sorted-list intersection, with optional collection of the
// shared columns.
std::size_t intersect(const std::vector<int>& a, const std::vector<int>& b,
                      std::vector<int>* out) {
    std::size_t count = 0;
    std::size_t ia = 0, ib = 0;
    while (ia < a.size() && ib < b.size()) {
        if (a[ia] < b[ib]) ++ia;
        else if (a[ia] > b[ib]) ++ib;
        else {
            if (out) out->push_back(a[ia]);
            ++count; ++ia; ++ib;
        }
    }
    return count;
}

void require_same_cols(const CssPair& pair) {
    if (pair.hc.cols != pair.hd.cols)
        fail(Errc::dimension_mismatch,
             "column counts differ: " + std::to_string(pair.hc.cols) + " vs " +
                 std::to_string(pair.hd.cols));
}

} // namespace

OrthogonalityReport check_orthogonal_f2(const CssPair& pair) {
    require_same_cols(pair);
    OrthogonalityReport report;
    for (int i = 0; i < pair.hc.rows; ++i) {
        for (int ip = 0; ip < pair.hd.rows; ++ip) {
            std::size_t n = intersect(pair.hc.row_support[static_cast<std::size_t>(i)],
                                      pair.hd.row_support[static_cast<std::size_t>(ip)], nullptr);
            if (n % 2 != 0) report.violations.push_back({i, ip, n});
        }
    }
    return report;
}

OverlapTable overlap_sets(const CssPair& pair) {
    require_same_cols(pair);
    OverlapTable table;
    for (int i = 0; i < pair.hc.rows; ++i) {
        for (int ip = 0; ip < pair.hd.rows; ++ip) {
            std::vector<int> shared;
            intersect(pair.hc.row_support[static_cast<std::size_t>(i)],
                      pair.hd.row_support[static_cast<std::size_t>(ip)], &shared);
            if (!shared.empty()) table.emplace(std::make_pair(i, ip), std::move(shared));
        }
    }
    return table;
}

std::map<std::size_t, std::size_t> overlap_histogram(const OverlapTable& table) {
    std::map<std::size_t, std::size_t> hist;
    for (const auto& [key, cols] : table) ++hist[cols.size()];
    return hist;
}

namespace {

// Dense elimination working set for the F_2 kernel.
struct DenseF2 {
    int rows, cols;
    std::vector<std::vector<std::uint8_t>> a;

    explicit DenseF2(const BinaryMatrix& m)
        : rows(m.rows), cols(m.cols),
          a(static_cast<std::size_t>(m.rows), std::vector<std::uint8_t>(static_cast<std::size_t>(m.cols), 0)) {
        for (int i = 0; i < m.rows; ++i)
            for (int j : m.row_support[static_cast<std::size_t>(i)]) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    }

    // Row-reduce to RREF; returns pivot column per pivot row.
    std::vector<int> rref() {
        std::vector<int> pivot_cols;
        int r = 0;
        for (int c = 0; c < cols && r < rows; ++c) {
            int p = -1;
            for (int i = r; i < rows; ++i)
                if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) { p = i; break; }
            if (p < 0) continue;
            std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(p)]);
            for (int i = 0; i < rows; ++i) {
                if (i != r && a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) {
                    for (int j = c; j < cols; ++j)
                        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ^= a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                }
            }
            pivot_cols.push_back(c);
            ++r;
        }
        return pivot_cols;
    }
};

} // namespace

std::vector<std::vector<std::uint8_t>> nullspace_f2(const BinaryMatrix& mat) {
    DenseF2 w(mat);
    std::vector<int> pivot_cols = w.rref();

    std::vector<std::uint8_t> is_pivot(static_cast<std::size_t>(mat.cols), 0);
    for (int c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = 1;

    std::vector<std::vector<std::uint8_t>> basis;
    for (int f = 0; f < mat.cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<std::uint8_t> v(static_cast<std::size_t>(mat.cols), 0);
        v[static_cast<std::size_t>(f)] = 1;
        // Pivot row k constrains pivot_cols[k]: value = entry at the free column.
        for (std::size_t k = 0; k < pivot_cols.size(); ++k)
            v[static_cast<std::size_t>(pivot_cols[k])] = w.a[k][static_cast<std::size_t>(f)];
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank_f2(const BinaryMatrix& mat) {
    DenseF2 w(mat);
    return static_cast<int>(w.rref().size());
}

BinaryMatrix parse_dense(std::istream& in) {
    std::vector<std::vector<int>> dense;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> row;
        std::string tok;
        while (ls >> tok) {
            if (tok == "0") row.push_back(0);
            else if (tok == "1") row.push_back(1);
            else fail(Errc::parse_error, "dense matrix token is not 0/1: '" + tok + "'");
        }
        if (row.empty()) continue; // blank line
        dense.push_back(std::move(row));
    }
    return BinaryMatrix::from_dense(dense);
}

void emit_dense(const BinaryMatrix& mat, std::ostream& out) {
    auto dense = mat.to_dense();
    for (const auto& row : dense) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << ' ';
            out << row[j];
        }
        out << '\n';
    }
}

BinaryMatrix parse_alist(std::istream& in) {
    std::vector<long> toks;
    long t;
    while (in >> t) toks.push_back(t);
    if (toks.size() < 4) fail(Errc::parse_error, "alist: truncated header");

    std::size_t pos = 0;
    auto next = [&]() -> long {
        if (pos >= toks.size()) fail(Errc::parse_error, "alist: unexpected end of input");
        return toks[pos++];
    };

    const long n = next(); // columns
    const long m = next(); // rows
    const long max_col_w = next();
    const long max_row_w = next();
    if (n < 0 || m < 0 || max_col_w < 0 || max_row_w < 0)
        fail(Errc::parse_error, "alist: negative dimension");

    std::vector<long> col_w(static_cast<std::size_t>(n)), row_w(static_cast<std::size_t>(m));
    long col_w_sum = 0, row_w_sum = 0;
    for (auto& w : col_w) { w = next(); col_w_sum += w; }
    for (auto& w : row_w) { w = next(); row_w_sum += w; }
    if (col_w_sum != row_w_sum)
        fail(Errc::parse_error, "alist: column and row weight totals disagree");

    // A padded file carries max_w entries per adjacency line, an unpadded
    // one exactly the weight. Decide from the total token count.
    const std::size_t remaining = toks.size() - pos;
    bool padded;
    if (remaining == static_cast<std::size_t>(n) * static_cast<std::size_t>(max_col_w) +
                         static_cast<std::size_t>(m) * static_cast<std::size_t>(max_row_w))
        padded = true;
    else if (remaining == static_cast<std::size_t>(col_w_sum + row_w_sum))
        padded = false;
    else
        fail(Errc::parse_error, "alist: adjacency token count matches neither padded nor unpadded layout");

    BinaryMatrix mat(static_cast<int>(m), static_cast<int>(n));
    auto read_list = [&](long weight, long max_w, std::vector<int>& out_list, long index_bound) {
        long count = padded ? max_w : weight;
        for (long k = 0; k < count; ++k) {
            long v = next();
            if (k < weight) {
                if (v < 1 || v > index_bound)
                    fail(Errc::parse_error, "alist: index out of range");
                out_list.push_back(static_cast<int>(v - 1));
            } else if (v != 0) {
                fail(Errc::parse_error, "alist: nonzero padding entry");
            }
        }
    };

    // Column adjacency, kept only for the consistency cross-check.
    std::vector<std::vector<int>> col_support(static_cast<std::size_t>(n));
    for (long j = 0; j < n; ++j)
        read_list(col_w[static_cast<std::size_t>(j)], max_col_w, col_support[static_cast<std::size_t>(j)], m);
    for (long i = 0; i < m; ++i)
        read_list(row_w[static_cast<std::size_t>(i)], max_row_w, mat.row_support[static_cast<std::size_t>(i)], n);

    for (auto& s : mat.row_support) std::sort(s.begin(), s.end());
    mat.validate();

    // The two adjacency lists must describe the same matrix.
    BinaryMatrix from_cols(static_cast<int>(n), static_cast<int>(m));
    from_cols.row_support = col_support;
    for (auto& s : from_cols.row_support) std::sort(s.begin(), s.end());
    from_cols.validate();
    if (from_cols.transposed().row_support != mat.row_support)
        fail(Errc::parse_error, "alist: row and column adjacency lists disagree");

    return mat;
}

void emit_alist(const BinaryMatrix& mat, std::ostream& out) {
    const BinaryMatrix t = mat.transposed(); // column supports
    std::size_t max_col_w = 0, max_row_w = 0;
    for (const auto& s : t.row_support) max_col_w = std::max(max_col_w, s.size());
    for (const auto& s : mat.row_support) max_row_w = std::max(max_row_w, s.size());

    out << mat.cols << ' ' << mat.rows << '\n';
    out << max_col_w << ' ' << max_row_w << '\n';
    for (int j = 0; j < mat.cols; ++j)
        out << t.row_support[static_cast<std::size_t>(j)].size() << (j + 1 < mat.cols ? ' ' : '\n');
    if (mat.cols == 0) out << '\n';
    for (int i = 0; i < mat.rows; ++i)
        out << mat.row_support[static_cast<std::size_t>(i)].size() << (i + 1 < mat.rows ? ' ' : '\n');
    if (mat.rows == 0) out << '\n';

    auto emit_padded = [&](const std::vector<int>& s, std::size_t width) {
        for (std::size_t k = 0; k < width; ++k) {
            if (k) out << ' ';
            out << (k < s.size() ? s[k] + 1 : 0);
        }
        out << '\n';
    };
    for (int j = 0; j < mat.cols; ++j) emit_padded(t.row_support[static_cast<std::size_t>(j)], max_col_w);
    for (int i = 0; i < mat.rows; ++i) emit_padded(mat.row_support[static_cast<std::size_t>(i)], max_row_w);
}

} // namespace nbcss
