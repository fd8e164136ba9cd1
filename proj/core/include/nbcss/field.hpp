#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "nbcss/error.hpp"

namespace nbcss {

// Element of GF(2^m) in polynomial-basis representation: bit k is the
// coefficient of x^k. Valid values are < 2^m relative to some Field.
using FieldElem = std::uint32_t;

// GF(2^m) with exp/log tables relative to the primitive element alpha = x.
//
// Construction builds the tables by repeated multiplication by x modulo the
// defining polynomial and rejects any polynomial under which x fails to
// generate the full multiplicative group. Instances are immutable and cheap
// to copy; all operations are pure and safe for concurrent use.
class Field {
public:
    static constexpr int min_degree = 2;
    static constexpr int max_degree = 16;

    // Uses the default primitive polynomial for the given degree.
    explicit Field(int degree) : Field(degree, default_poly(degree)) {}

    // poly is the full bitmask of the defining polynomial, including the
    // x^m term (e.g. 0x11D for x^8+x^4+x^3+x^2+1).
    Field(int degree, std::uint32_t poly);

    int degree() const { return t_->m; }
    std::uint32_t order() const { return t_->q; }           // q = 2^m
    std::uint32_t poly() const { return t_->poly; }
    std::int64_t group_order() const { return t_->q - 1; }  // q-1, the exponent modulus

    // Addition is coefficient-wise over F_2; a + a = 0.
    FieldElem add(FieldElem a, FieldElem b) const { return a ^ b; }

    FieldElem mul(FieldElem a, FieldElem b) const {
        if (a == 0 || b == 0) return 0;
        std::int64_t s = t_->log[a] + t_->log[b];
        if (s >= group_order()) s -= group_order();
        return t_->exp[static_cast<std::size_t>(s)];
    }

    // alpha^k, with k reduced mod q-1 (negative k allowed).
    FieldElem alpha_pow(std::int64_t k) const {
        std::int64_t n = group_order();
        std::int64_t r = k % n;
        if (r < 0) r += n;
        return t_->exp[static_cast<std::size_t>(r)];
    }

    // Discrete log base alpha; defined on nonzero elements only.
    std::int64_t dlog(FieldElem a) const {
        if (a == 0) fail(Errc::log_of_zero, "dlog of zero element");
        return t_->log[a];
    }

    bool operator==(const Field& other) const {
        return t_->m == other.t_->m && t_->poly == other.t_->poly;
    }
    bool operator!=(const Field& other) const { return !(*this == other); }

    // Pinned table of default primitive polynomials, one per degree 2..16.
    // Each is verified primitive at construction time.
    static std::uint32_t default_poly(int degree);

private:
    struct Tables {
        int m;
        std::uint32_t q;
        std::uint32_t poly;
        std::vector<FieldElem> exp;     // exponent k in 0..q-2 -> element
        std::vector<std::int64_t> log;  // nonzero element -> exponent
    };
    std::shared_ptr<const Tables> t_;
};

} // namespace nbcss
