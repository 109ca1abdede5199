#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace dignet {

/// Arbitrary-precision signed integer used for all coefficient arithmetic.
using BigInt = boost::multiprecision::cpp_int;

/// b^e as an exact integer.
inline BigInt big_pow(std::uint64_t base, unsigned exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace dignet
