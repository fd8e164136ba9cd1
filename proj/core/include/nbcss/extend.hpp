#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nbcss/binmat.hpp"
#include "nbcss/congruence.hpp"
#include "nbcss/field.hpp"

namespace nbcss {

// Exponent tables for a candidate pair: gamma_exp[{i,j}] = e means the
// gamma-side entry (i,j) is alpha^e; delta_exp likewise for the delta
// side. Keys are exactly the supported positions.
struct ExponentAssignment {
    std::map<std::pair<int, int>, std::int64_t> gamma_exp;
    std::map<std::pair<int, int>, std::int64_t> delta_exp;

    // Unpacks a solver vector laid out according to the variable index.
    static ExponentAssignment from_vector(const VarIndex& index, std::span<const std::int64_t> v);
    std::vector<std::int64_t> to_vector(const VarIndex& index) const;
};

// Sparse matrix over GF(2^m); stored entries are nonzero.
struct FieldMatrix {
    Field field;
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, FieldElem>>> row_entries; // sorted by column

    FieldMatrix(Field f, int r, int c)
        : field(std::move(f)), rows(r), cols(c), row_entries(static_cast<std::size_t>(r)) {}

    FieldElem get(int r, int c) const; // 0 off support
    std::size_t nnz() const;
    BinaryMatrix support() const;

    bool operator==(const FieldMatrix& other) const {
        return field == other.field && rows == other.rows && cols == other.cols &&
               row_entries == other.row_entries;
    }
};

// Entry (i,j) = alpha^exponents[{i,j}] on the pattern's support. The
// exponent key set must match the support exactly; any missing or extra
// key raises Errc::domain_mismatch.
FieldMatrix assemble(const BinaryMatrix& pattern,
                     const std::map<std::pair<int, int>, std::int64_t>& exponents,
                     const Field& field);

struct ExtendedPair {
    FieldMatrix hgamma;
    FieldMatrix hdelta;
};

ExtendedPair assemble_pair(const CssPair& pair, const ExponentAssignment& assign, const Field& field);

// Exponents read back off the nonzero entries via discrete log.
std::map<std::pair<int, int>, std::int64_t> matrix_exponents(const FieldMatrix& mat);
ExponentAssignment extract_exponents(const ExtendedPair& ext);

struct FqViolation {
    int hgamma_row = 0;
    int hdelta_row = 0;
    FieldElem value = 0; // the nonzero inner product
};

struct FqReport {
    std::vector<FqViolation> violations;
    bool ok() const { return violations.empty(); }
};

// H_Gamma H_Delta^T = 0 over the common field. Violations are reported
// exhaustively; mismatched fields or column counts throw.
FqReport verify_orthogonal_fq(const FieldMatrix& hgamma, const FieldMatrix& hdelta);

struct SupportReport {
    std::vector<std::pair<int, int>> missing; // in pattern, zero in matrix
    std::vector<std::pair<int, int>> extra;   // nonzero in matrix, zero in pattern
    bool ok() const { return missing.empty() && extra.empty(); }
};

SupportReport verify_support(const FieldMatrix& mat, const BinaryMatrix& pattern);

std::vector<FieldElem> mat_vec(const FieldMatrix& mat, std::span<const FieldElem> v);

// Separable assignment gamma(i,j) = alpha^(a[i]+c[j]) and
// delta(i',j) = alpha^(b[i']-c[j]). Each overlap congruence telescopes to
// zero, so orthogonality holds for every even-overlap pair regardless of
// overlap size.
struct CsaParams {
    std::vector<std::int64_t> a; // one offset per H_C row
    std::vector<std::int64_t> b; // one offset per H_D row
    std::vector<std::int64_t> c; // one offset per column

    static CsaParams zeros(int mc, int md, int n);
    static CsaParams random(int mc, int md, int n, std::int64_t modulus, std::uint64_t seed);
};

// Requires F_2 orthogonality of the pair (Errc::odd_overlap otherwise)
// and offset vectors of matching lengths.
ExtendedPair csa(const CssPair& pair, const CsaParams& params, const Field& field);

// Column rescaling xi_j = alpha^(-c[j]) * x_j, mapping binary codewords
// of H_C to field codewords of the separable gamma matrix. Requires
// H_C x = 0 over F_2 (Errc::not_a_codeword).
std::vector<FieldElem> csa_lift(const BinaryMatrix& hc, const std::vector<std::uint8_t>& x,
                                const CsaParams& params, const Field& field);

// Hex grid format. First line "GF(2^m) poly=0x<mask>", then one line per
// row with fixed-width uppercase hex entries (zero digits off support).
// Lines starting with '#' are comments and may appear anywhere.
void emit_field_matrix(const FieldMatrix& mat, std::ostream& out,
                       const std::vector<std::string>& comments = {});
FieldMatrix parse_field_matrix(std::istream& in);

} // namespace nbcss
