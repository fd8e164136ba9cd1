#include "nbcss/extend.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "nbcss/error.hpp"

namespace nbcss {

namespace {

std::int64_t uniform_below(std::mt19937_64& rng, std::int64_t k) {
    if (k <= 1) return 0;
    const std::uint64_t bound = static_cast<std::uint64_t>(k);
    const std::uint64_t zone = std::numeric_limits<std::uint64_t>::max() / bound * bound;
    for (;;) {
        std::uint64_t u = rng();
        if (u < zone) return static_cast<std::int64_t>(u % bound);
    }
}

std::string pos_str(int r, int c) {
    return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

} // namespace

ExponentAssignment ExponentAssignment::from_vector(const VarIndex& index,
                                                   std::span<const std::int64_t> v) {
    if (static_cast<int>(v.size()) != index.size()) {
        fail(Errc::dimension_mismatch, "exponent vector length " + std::to_string(v.size()) +
                                           " does not match " + std::to_string(index.size()) +
                                           " variables");
    }
    ExponentAssignment out;
    for (std::size_t k = 0; k < index.vars.size(); ++k) {
        const auto& var = index.vars[k];
        auto& side = var.side == VarIndex::Side::gamma ? out.gamma_exp : out.delta_exp;
        side[{var.row, var.col}] = v[k];
    }
    return out;
}

std::vector<std::int64_t> ExponentAssignment::to_vector(const VarIndex& index) const {
    std::vector<std::int64_t> v;
    v.reserve(index.vars.size());
    for (const auto& var : index.vars) {
        const auto& side = var.side == VarIndex::Side::gamma ? gamma_exp : delta_exp;
        auto it = side.find({var.row, var.col});
        if (it == side.end()) {
            fail(Errc::domain_mismatch, "no exponent for position " + pos_str(var.row, var.col));
        }
        v.push_back(it->second);
    }
    return v;
}

FieldElem FieldMatrix::get(int r, int c) const {
    const auto& row = row_entries[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const std::pair<int, FieldElem>& e, int col) { return e.first < col; });
    if (it == row.end() || it->first != c) return 0;
    return it->second;
}

std::size_t FieldMatrix::nnz() const {
    std::size_t total = 0;
    for (const auto& row : row_entries) total += row.size();
    return total;
}

BinaryMatrix FieldMatrix::support() const {
    BinaryMatrix out(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (const auto& [c, val] : row_entries[static_cast<std::size_t>(r)]) {
            if (val != 0) out.row_support[static_cast<std::size_t>(r)].push_back(c);
        }
    }
    return out;
}

FieldMatrix assemble(const BinaryMatrix& pattern,
                     const std::map<std::pair<int, int>, std::int64_t>& exponents,
                     const Field& field) {
    FieldMatrix out(field, pattern.rows, pattern.cols);
    for (int r = 0; r < pattern.rows; ++r) {
        for (int c : pattern.row_support[static_cast<std::size_t>(r)]) {
            auto it = exponents.find({r, c});
            if (it == exponents.end()) {
                fail(Errc::domain_mismatch, "no exponent for supported position " + pos_str(r, c));
            }
            out.row_entries[static_cast<std::size_t>(r)].emplace_back(c, field.alpha_pow(it->second));
        }
    }
    if (exponents.size() != pattern.nnz()) {
        for (const auto& [pos, e] : exponents) {
            if (!pattern.get(pos.first, pos.second)) {
                fail(Errc::domain_mismatch,
                     "exponent given for unsupported position " + pos_str(pos.first, pos.second));
            }
        }
    }
    return out;
}

ExtendedPair assemble_pair(const CssPair& pair, const ExponentAssignment& assign, const Field& field) {
    return {assemble(pair.hc, assign.gamma_exp, field), assemble(pair.hd, assign.delta_exp, field)};
}

std::map<std::pair<int, int>, std::int64_t> matrix_exponents(const FieldMatrix& mat) {
    std::map<std::pair<int, int>, std::int64_t> out;
    for (int r = 0; r < mat.rows; ++r) {
        for (const auto& [c, val] : mat.row_entries[static_cast<std::size_t>(r)]) {
            out[{r, c}] = mat.field.dlog(val);
        }
    }
    return out;
}

ExponentAssignment extract_exponents(const ExtendedPair& ext) {
    ExponentAssignment out;
    out.gamma_exp = matrix_exponents(ext.hgamma);
    out.delta_exp = matrix_exponents(ext.hdelta);
    return out;
}

FqReport verify_orthogonal_fq(const FieldMatrix& hgamma, const FieldMatrix& hdelta) {
    if (hgamma.field != hdelta.field) {
        fail(Errc::field_mismatch, "matrices live in different fields");
    }
    if (hgamma.cols != hdelta.cols) {
        fail(Errc::dimension_mismatch, "column counts " + std::to_string(hgamma.cols) + " and " +
                                           std::to_string(hdelta.cols) + " differ");
    }
    const Field& f = hgamma.field;
    FqReport report;
    for (int i = 0; i < hgamma.rows; ++i) {
        const auto& ra = hgamma.row_entries[static_cast<std::size_t>(i)];
        for (int ip = 0; ip < hdelta.rows; ++ip) {
            const auto& rb = hdelta.row_entries[static_cast<std::size_t>(ip)];
            FieldElem sum = 0;
            auto ia = ra.begin();
            auto ib = rb.begin();
            while (ia != ra.end() && ib != rb.end()) {
                if (ia->first < ib->first) {
                    ++ia;
                } else if (ib->first < ia->first) {
                    ++ib;
                } else {
                    sum = f.add(sum, f.mul(ia->second, ib->second));
                    ++ia;
                    ++ib;
                }
            }
            if (sum != 0) report.violations.push_back({i, ip, sum});
        }
    }
    return report;
}

SupportReport verify_support(const FieldMatrix& mat, const BinaryMatrix& pattern) {
    if (mat.rows != pattern.rows || mat.cols != pattern.cols) {
        fail(Errc::dimension_mismatch, "matrix is " + std::to_string(mat.rows) + "x" +
                                           std::to_string(mat.cols) + ", pattern is " +
                                           std::to_string(pattern.rows) + "x" +
                                           std::to_string(pattern.cols));
    }
    SupportReport report;
    const BinaryMatrix actual = mat.support();
    for (int r = 0; r < pattern.rows; ++r) {
        for (int c : pattern.row_support[static_cast<std::size_t>(r)]) {
            if (!actual.get(r, c)) report.missing.emplace_back(r, c);
        }
        for (int c : actual.row_support[static_cast<std::size_t>(r)]) {
            if (!pattern.get(r, c)) report.extra.emplace_back(r, c);
        }
    }
    return report;
}

std::vector<FieldElem> mat_vec(const FieldMatrix& mat, std::span<const FieldElem> v) {
    if (static_cast<int>(v.size()) != mat.cols) {
        fail(Errc::dimension_mismatch, "vector length " + std::to_string(v.size()) +
                                           " does not match " + std::to_string(mat.cols) + " columns");
    }
    std::vector<FieldElem> y(static_cast<std::size_t>(mat.rows), 0);
    for (int r = 0; r < mat.rows; ++r) {
        FieldElem acc = 0;
        for (const auto& [c, val] : mat.row_entries[static_cast<std::size_t>(r)]) {
            acc = mat.field.add(acc, mat.field.mul(val, v[static_cast<std::size_t>(c)]));
        }
        y[static_cast<std::size_t>(r)] = acc;
    }
    return y;
}

CsaParams CsaParams::zeros(int mc, int md, int n) {
    CsaParams p;
    p.a.assign(static_cast<std::size_t>(mc), 0);
    p.b.assign(static_cast<std::size_t>(md), 0);
    p.c.assign(static_cast<std::size_t>(n), 0);
    return p;
}

CsaParams CsaParams::random(int mc, int md, int n, std::int64_t modulus, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CsaParams p = zeros(mc, md, n);
    for (auto& x : p.a) x = uniform_below(rng, modulus);
    for (auto& x : p.b) x = uniform_below(rng, modulus);
    for (auto& x : p.c) x = uniform_below(rng, modulus);
    return p;
}

ExtendedPair csa(const CssPair& pair, const CsaParams& params, const Field& field) {
    if (static_cast<int>(params.a.size()) != pair.hc.rows ||
        static_cast<int>(params.b.size()) != pair.hd.rows ||
        static_cast<int>(params.c.size()) != pair.hc.cols) {
        fail(Errc::dimension_mismatch, "offset vector lengths do not match the pair shape");
    }
    const OrthogonalityReport f2 = check_orthogonal_f2(pair);
    if (!f2.ok()) {
        const auto& v = f2.violations.front();
        fail(Errc::odd_overlap, "rows " + std::to_string(v.hc_row) + " and " +
                                    std::to_string(v.hd_row) + " share " +
                                    std::to_string(v.overlap_size) + " columns");
    }

    ExtendedPair out{FieldMatrix(field, pair.hc.rows, pair.hc.cols),
                     FieldMatrix(field, pair.hd.rows, pair.hd.cols)};
    for (int i = 0; i < pair.hc.rows; ++i) {
        for (int j : pair.hc.row_support[static_cast<std::size_t>(i)]) {
            out.hgamma.row_entries[static_cast<std::size_t>(i)].emplace_back(
                j, field.alpha_pow(params.a[static_cast<std::size_t>(i)] +
                                   params.c[static_cast<std::size_t>(j)]));
        }
    }
    for (int i = 0; i < pair.hd.rows; ++i) {
        for (int j : pair.hd.row_support[static_cast<std::size_t>(i)]) {
            out.hdelta.row_entries[static_cast<std::size_t>(i)].emplace_back(
                j, field.alpha_pow(params.b[static_cast<std::size_t>(i)] -
                                   params.c[static_cast<std::size_t>(j)]));
        }
    }
    return out;
}

std::vector<FieldElem> csa_lift(const BinaryMatrix& hc, const std::vector<std::uint8_t>& x,
                                const CsaParams& params, const Field& field) {
    if (static_cast<int>(x.size()) != hc.cols) {
        fail(Errc::dimension_mismatch, "word length " + std::to_string(x.size()) +
                                           " does not match " + std::to_string(hc.cols) + " columns");
    }
    if (static_cast<int>(params.c.size()) != hc.cols) {
        fail(Errc::dimension_mismatch, "column offset vector length does not match");
    }
    for (std::uint8_t bit : x) {
        if (bit > 1) fail(Errc::domain_mismatch, "codeword entries must be 0 or 1");
    }
    for (int r = 0; r < hc.rows; ++r) {
        int parity = 0;
        for (int c : hc.row_support[static_cast<std::size_t>(r)]) parity ^= x[static_cast<std::size_t>(c)];
        if (parity != 0) {
            fail(Errc::not_a_codeword, "row " + std::to_string(r) + " has odd inner product");
        }
    }
    std::vector<FieldElem> xi(x.size(), 0);
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j]) xi[j] = field.alpha_pow(-params.c[j]);
    }
    return xi;
}

namespace {

int hex_width(const Field& field) { return (field.degree() + 3) / 4; }

std::string hex_entry(FieldElem v, int width) {
    std::ostringstream os;
    os << std::uppercase << std::hex << std::setw(width) << std::setfill('0') << v;
    return os.str();
}

} // namespace

void emit_field_matrix(const FieldMatrix& mat, std::ostream& out,
                       const std::vector<std::string>& comments) {
    std::ostringstream poly;
    poly << std::uppercase << std::hex << mat.field.poly();
    out << "GF(2^" << mat.field.degree() << ") poly=0x" << poly.str() << "\n";
    for (const auto& line : comments) out << "# " << line << "\n";

    const int width = hex_width(mat.field);
    for (int r = 0; r < mat.rows; ++r) {
        for (int c = 0; c < mat.cols; ++c) {
            if (c > 0) out << " ";
            out << hex_entry(mat.get(r, c), width);
        }
        out << "\n";
    }
}

FieldMatrix parse_field_matrix(std::istream& in) {
    std::string line;
    auto next_line = [&](std::string& dst) {
        while (std::getline(in, dst)) {
            std::size_t start = dst.find_first_not_of(" \t\r");
            if (start == std::string::npos) continue;
            if (dst[start] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_line(line)) fail(Errc::parse_error, "missing field header line");

    int degree = 0;
    std::uint32_t poly = 0;
    {
        std::istringstream hs(line);
        std::string f1;
        std::string f2;
        hs >> f1 >> f2;
        const std::string prefix = "GF(2^";
        if (f1.rfind(prefix, 0) != 0 || f1.back() != ')' || f2.rfind("poly=", 0) != 0) {
            fail(Errc::parse_error, "bad field header: " + line);
        }
        try {
            degree = std::stoi(f1.substr(prefix.size(), f1.size() - prefix.size() - 1));
            poly = static_cast<std::uint32_t>(std::stoul(f2.substr(5), nullptr, 16));
        } catch (const std::exception&) {
            fail(Errc::parse_error, "bad field header: " + line);
        }
    }
    const Field field(degree, poly);

    std::vector<std::vector<std::pair<int, FieldElem>>> entries;
    int cols = -1;
    while (next_line(line)) {
        std::istringstream ls(line);
        std::vector<std::pair<int, FieldElem>> row;
        std::string tok;
        int c = 0;
        while (ls >> tok) {
            for (char ch : tok) {
                if (std::isxdigit(static_cast<unsigned char>(ch)) == 0) {
                    fail(Errc::parse_error, "bad hex entry: " + tok);
                }
            }
            const unsigned long v = std::stoul(tok, nullptr, 16);
            if (v >= field.order()) {
                fail(Errc::parse_error, "entry " + tok + " out of range for GF(2^" +
                                            std::to_string(degree) + ")");
            }
            if (v != 0) row.emplace_back(c, static_cast<FieldElem>(v));
            ++c;
        }
        if (cols < 0) {
            cols = c;
        } else if (c != cols) {
            fail(Errc::parse_error, "row " + std::to_string(entries.size()) + " has " +
                                        std::to_string(c) + " entries, expected " +
                                        std::to_string(cols));
        }
        entries.push_back(std::move(row));
    }

    FieldMatrix out(field, static_cast<int>(entries.size()), cols < 0 ? 0 : cols);
    out.row_entries = std::move(entries);
    return out;
}

} // namespace nbcss
