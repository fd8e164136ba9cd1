#include "nbcss/field.hpp"

#include <sstream>

namespace nbcss {

std::uint32_t Field::default_poly(int degree) {
    // Classic table of primitive polynomials over F_2, one per degree.
    // Bitmask includes the leading x^m term; see README for the full list.
    static constexpr std::uint32_t table[] = {
        0x7,     // m=2:  x^2+x+1
        0xB,     // m=3:  x^3+x+1
        0x13,    // m=4:  x^4+x+1
        0x25,    // m=5:  x^5+x^2+1
        0x43,    // m=6:  x^6+x+1
        0x89,    // m=7:  x^7+x^3+1
        0x11D,   // m=8:  x^8+x^4+x^3+x^2+1
        0x211,   // m=9:  x^9+x^4+1
        0x409,   // m=10: x^10+x^3+1
        0x805,   // m=11: x^11+x^2+1
        0x1053,  // m=12: x^12+x^6+x^4+x+1
        0x201B,  // m=13: x^13+x^4+x^3+x+1
        0x4443,  // m=14: x^14+x^10+x^6+x+1
        0x8003,  // m=15: x^15+x+1
        0x1100B, // m=16: x^16+x^12+x^3+x+1
    };
    if (degree < min_degree || degree > max_degree)
        fail(Errc::bad_degree, "field degree must be in [2,16], got " + std::to_string(degree));
    return table[degree - min_degree];
}

Field::Field(int degree, std::uint32_t poly) {
    if (degree < min_degree || degree > max_degree)
        fail(Errc::bad_degree, "field degree must be in [2,16], got " + std::to_string(degree));
    const std::uint32_t q = 1u << degree;
    if ((poly >> degree) != 1u) {
        std::ostringstream os;
        os << "polynomial 0x" << std::hex << poly << " does not have degree " << std::dec << degree;
        fail(Errc::bad_degree, os.str());
    }
    if ((poly & 1u) == 0) {
        std::ostringstream os;
        os << "polynomial 0x" << std::hex << poly << " has zero constant term";
        fail(Errc::bad_degree, os.str());
    }

    auto t = std::make_shared<Tables>();
    t->m = degree;
    t->q = q;
    t->poly = poly;
    t->exp.assign(q - 1, 0);
    t->log.assign(q, 0);

    // b runs through x^0, x^1, ... reduced mod poly. x is primitive exactly
    // when b first returns to 1 after q-1 steps.
    std::uint32_t b = 1;
    for (std::uint32_t k = 0; k < q - 1; ++k) {
        if (b == 1 && k > 0) {
            std::ostringstream os;
            os << "x has multiplicative order " << k << " < " << (q - 1)
               << " under polynomial 0x" << std::hex << poly;
            fail(Errc::not_primitive, os.str());
        }
        t->exp[k] = b;
        t->log[b] = k;
        b <<= 1;
        if (b & q) b ^= poly;
    }
    if (b != 1) {
        std::ostringstream os;
        os << "x is not primitive under polynomial 0x" << std::hex << poly;
        fail(Errc::not_primitive, os.str());
    }

    t_ = std::move(t);
}

} // namespace nbcss
