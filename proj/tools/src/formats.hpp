#pragma once

#include <string>
#include <vector>

#include "nbcss/binmat.hpp"
#include "nbcss/extend.hpp"

namespace nbcss::cli {

// Binary matrices travel as dense 0/1 text unless the path ends in
// ".alist", which selects the sparse alist format.
bool is_alist_path(const std::string& path);

BinaryMatrix read_binary_matrix(const std::string& path);
void write_binary_matrix(const BinaryMatrix& mat, const std::string& path);

FieldMatrix read_field_matrix(const std::string& path);
void write_field_matrix(const FieldMatrix& mat, const std::string& path,
                        const std::vector<std::string>& comments);

void write_text_file(const std::string& path, const std::string& content);

} // namespace nbcss::cli
