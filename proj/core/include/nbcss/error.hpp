#pragma once

#include <stdexcept>
#include <string>

namespace nbcss {

// Error categories. The CLI maps these onto process exit codes:
// parse/usage problems -> 2, infeasibility signals -> 3.
enum class Errc {
    bad_degree,
    not_primitive,
    log_of_zero,
    dimension_mismatch,
    empty_seed,
    overlap_too_large,
    no_unit_pivot,
    not_prime,
    timeout,
    domain_mismatch,
    field_mismatch,
    odd_overlap,
    not_a_codeword,
    parse_error,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace nbcss
