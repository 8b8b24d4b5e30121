#pragma once

#include <limits>
#include <stdexcept>

#include "trindex/bigint.hpp"

namespace trindex {

// p-adic valuation; infinite only for the input 0.
struct Valuation {
    long value = 0;
    bool infinite = false;

    static Valuation infinity() { return Valuation{0, true}; }
    static Valuation finite(long v) { return Valuation{v, false}; }

    bool operator==(const Valuation&) const = default;
};

inline Valuation vp(const Int& p, const Int& m) {
    if (m == 0) return Valuation::infinity();
    long k = 0;
    Int r = m;
    while (r % p == 0) {
        r /= p;
        ++k;
    }
    return Valuation::finite(k);
}

inline long vp_finite(const Int& p, const Int& m) {
    Valuation v = vp(p, m);
    if (v.infinite) throw std::domain_error("vp_finite: zero input");
    return v.value;
}

// m / p^vp(m), coprime to p, sign preserved.
inline Int unit_part(const Int& p, const Int& m) {
    if (m == 0) throw std::domain_error("unit_part: zero input");
    Int r = m;
    while (r % p == 0) r /= p;
    return r;
}

}  // namespace trindex
