#include "formats.hpp"

#include <fstream>

#include "nbcss/error.hpp"

namespace nbcss::cli {

bool is_alist_path(const std::string& path) {
    const std::string ext = ".alist";
    return path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
}

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::parse_error, "cannot open " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(Errc::parse_error, "cannot write " + path);
    return out;
}

} // namespace

BinaryMatrix read_binary_matrix(const std::string& path) {
    std::ifstream in = open_in(path);
    return is_alist_path(path) ? parse_alist(in) : parse_dense(in);
}

void write_binary_matrix(const BinaryMatrix& mat, const std::string& path) {
    std::ofstream out = open_out(path);
    if (is_alist_path(path)) {
        emit_alist(mat, out);
    } else {
        emit_dense(mat, out);
    }
}

FieldMatrix read_field_matrix(const std::string& path) {
    std::ifstream in = open_in(path);
    return parse_field_matrix(in);
}

void write_field_matrix(const FieldMatrix& mat, const std::string& path,
                        const std::vector<std::string>& comments) {
    std::ofstream out = open_out(path);
    emit_field_matrix(mat, out, comments);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out = open_out(path);
    out << content;
}

} // namespace nbcss::cli
