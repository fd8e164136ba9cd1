#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <utility>

#include "nbcss/binmat.hpp"

namespace nbcss::cli {

// Exponent-offset hex grid: `00` is a zero entry, any other byte h means
// alpha^((h-1) mod modulus). This encoding fixes exponents without fixing
// a defining polynomial, so matrices read this way are verified through
// the exponent congruences rather than field arithmetic.
struct OffsetHexMatrix {
    BinaryMatrix support;
    std::map<std::pair<int, int>, std::int64_t> exponents;
};

OffsetHexMatrix parse_offset_hex(std::istream& in, std::int64_t modulus);

} // namespace nbcss::cli
