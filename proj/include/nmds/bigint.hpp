#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace nmds {

// Exact integers for weight counts: q^k overflows uint64 quickly and the
// MacWilliams transform must stay exact, so all counts live in cpp_int.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_pow(BigInt base, std::uint64_t e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace nmds
