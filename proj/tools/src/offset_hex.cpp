#include "offset_hex.hpp"

#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "nbcss/error.hpp"

namespace nbcss::cli {

OffsetHexMatrix parse_offset_hex(std::istream& in, std::int64_t modulus) {
    std::vector<std::vector<int>> support;
    std::map<std::pair<int, int>, std::int64_t> exponents;

    std::string line;
    int cols = -1;
    while (std::getline(in, line)) {
        const std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;

        std::istringstream ls(line);
        std::vector<int> row;
        std::string tok;
        int c = 0;
        const int r = static_cast<int>(support.size());
        while (ls >> tok) {
            if (tok.size() > 2) fail(Errc::parse_error, "byte entry too wide: " + tok);
            for (char ch : tok) {
                if (std::isxdigit(static_cast<unsigned char>(ch)) == 0) {
                    fail(Errc::parse_error, "bad hex byte: " + tok);
                }
            }
            const long v = std::stol(tok, nullptr, 16);
            if (v != 0) {
                row.push_back(c);
                exponents[{r, c}] = (v - 1) % modulus;
            }
            ++c;
        }
        if (cols < 0) {
            cols = c;
        } else if (c != cols) {
            fail(Errc::parse_error, "row " + std::to_string(r) + " has " + std::to_string(c) +
                                        " entries, expected " + std::to_string(cols));
        }
        support.push_back(std::move(row));
    }

    OffsetHexMatrix out;
    out.support.rows = static_cast<int>(support.size());
    out.support.cols = cols < 0 ? 0 : cols;
    out.support.row_support = std::move(support);
    out.exponents = std::move(exponents);
    return out;
}

} // namespace nbcss::cli
