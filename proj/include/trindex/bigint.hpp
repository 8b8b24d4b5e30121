#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace trindex {

// All integer arithmetic in this library is arbitrary precision.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int ipow(Int base, unsigned exp) {
    Int r{1};
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline Int iabs(const Int& m) { return m < 0 ? Int(-m) : m; }

// Canonical residue in [0, m), m > 0.
inline Int imod(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

// Symmetric residue in (-m/2, m/2].
inline Int imod_sym(const Int& x, const Int& m) {
    Int r = imod(x, m);
    if (2 * r > m) r -= m;
    return r;
}

// Modular inverse via extended Euclid; throws if gcd(a, m) != 1.
Int inv_mod(const Int& a, const Int& m);

}  // namespace trindex
