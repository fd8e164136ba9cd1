#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "nbcss/error.hpp"

namespace nbcss {

// Sparse binary matrix stored as per-row sorted column-index lists.
struct BinaryMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<int>> row_support;

    BinaryMatrix() = default;
    BinaryMatrix(int r, int c) : rows(r), cols(c), row_support(static_cast<std::size_t>(r)) {}

    static BinaryMatrix from_dense(const std::vector<std::vector<int>>& dense);
    std::vector<std::vector<int>> to_dense() const;

    bool get(int r, int c) const;
    std::size_t nnz() const;
    BinaryMatrix transposed() const;

    // Checks the representation invariants: index bounds and strictly
    // increasing row lists. Throws Errc::parse_error on violation.
    void validate() const;

    bool operator==(const BinaryMatrix&) const = default;
};

// A CSS candidate pair (H_C, H_D) over a shared block length.
struct CssPair {
    BinaryMatrix hc;
    BinaryMatrix hd;

    int block_length() const { return hc.cols; }
};

// (hc row, hd row) -> sorted list of shared support columns; empty
// intersections are not stored.
using OverlapTable = std::map<std::pair<int, int>, std::vector<int>>;

struct OrthogonalityViolation {
    int hc_row = 0;
    int hd_row = 0;
    std::size_t overlap_size = 0;
};

struct OrthogonalityReport {
    std::vector<OrthogonalityViolation> violations;
    bool ok() const { return violations.empty(); }
};

// H_C H_D^T = 0 over F_2, i.e. every row-pair overlap has even size.
// Violations are reported exhaustively.
OrthogonalityReport check_orthogonal_f2(const CssPair& pair);

OverlapTable overlap_sets(const CssPair& pair);

// Overlap-size histogram over the stored (nonempty) entries.
std::map<std::size_t, std::size_t> overlap_histogram(const OverlapTable& table);

// Basis of the right kernel over F_2; dimension = cols - rank.
std::vector<std::vector<std::uint8_t>> nullspace_f2(const BinaryMatrix& mat);

int rank_f2(const BinaryMatrix& mat);

// Dense 0/1 text: one row per line, entries separated by single spaces.
BinaryMatrix parse_dense(std::istream& in);
void emit_dense(const BinaryMatrix& mat, std::ostream& out);

// MacKay alist sparse format. Emission is canonical (zero-padded lines);
// parsing accepts both padded and unpadded variants.
BinaryMatrix parse_alist(std::istream& in);
void emit_alist(const BinaryMatrix& mat, std::ostream& out);

} // namespace nbcss
