#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "trindex/bigint.hpp"
#include "trindex/intpoly.hpp"

namespace trindex {

// Prime field F_p with word-sized p. Elements are residues in [0, p).
struct FpField {
    using Elem = std::uint64_t;
    std::uint64_t p;

    explicit FpField(std::uint64_t prime) : p(prime) {
        if (p < 2) throw std::domain_error("FpField: p >= 2 required");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("FpField::inv: zero");
        return pow(a, p - 2);
    }

    Elem from_int(const Int& v) const {
        return static_cast<Elem>(imod(v, Int(p)).convert_to<std::uint64_t>());
    }

    template <class Rng>
    Elem sample(Rng& rng) const {
        return rng() % p;
    }

    Int order() const { return Int(p); }
    std::uint64_t characteristic() const { return p; }
    unsigned extension_degree() const { return 1; }

    // x -> x^(q/p); identity in the prime field.
    Elem pth_root(Elem a) const { return a; }

    std::string elem_str(Elem a) const { return std::to_string(a); }
};

using FpPoly = std::vector<FpField::Elem>;

// F_p reduction of an integer polynomial.
FpPoly reduce_mod_p(const IntPoly& f, const FpField& k);

// Canonical monic integer lift: coefficients in [0, p).
IntPoly lift_to_int(const FpPoly& f, const FpField& k);

}  // namespace trindex
