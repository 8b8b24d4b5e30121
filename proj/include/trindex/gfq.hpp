#pragma once

#include <sstream>

#include "trindex/gfpoly.hpp"

namespace trindex {

// Extension field F_q = F_p[t]/(m(t)) with m monic irreducible over F_p.
// Elements are reduced F_p-polynomials in t of degree < deg m. No log
// tables; p and the extension degree stay tiny in this library.
struct FqField {
    using Elem = FpPoly;

    FpField base;
    FpPoly modulus;

    FqField(FpField base_field, FpPoly mod_poly)
        : base(base_field), modulus(std::move(mod_poly)) {
        if (gfp::degree(modulus) < 1)
            throw std::domain_error("FqField: modulus must be nonconstant");
        modulus = gfp::make_monic(base, modulus);
    }

    unsigned extension_degree() const {
        return static_cast<unsigned>(gfp::degree(modulus));
    }
    std::uint64_t characteristic() const { return base.p; }
    Int order() const { return ipow(Int(base.p), extension_degree()); }

    Elem zero() const { return {}; }
    Elem one() const { return {1}; }
    bool is_zero(const Elem& a) const { return a.empty(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem reduce(const Elem& a) const { return gfp::mod(base, a, modulus); }
    Elem add(const Elem& a, const Elem& b) const { return gfp::add(base, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return gfp::sub(base, a, b); }
    Elem neg(const Elem& a) const { return gfp::sub(base, Elem{}, a); }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(gfp::mul(base, a, b)); }

    Elem inv(const Elem& a) const {
        if (a.empty()) throw std::domain_error("FqField::inv: zero");
        // Extended Euclid in F_p[t].
        Elem r0 = modulus, r1 = reduce(a);
        Elem s0, s1{1};
        while (!r1.empty()) {
            auto [q, r2] = gfp::divmod(base, r0, r1);
            Elem s2 = gfp::sub(base, s0, gfp::mul(base, q, s1));
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (gfp::degree(r0) != 0)
            throw std::domain_error("FqField::inv: modulus not irreducible");
        return gfp::scale(base, s0, base.inv(r0[0]));
    }

    Elem pow(Elem a, Int e) const {
        Elem r = one();
        while (e > 0) {
            if ((e & 1) != 0) r = mul(r, a);
            e >>= 1;
            if (e > 0) a = mul(a, a);
        }
        return r;
    }

    Elem from_int(const Int& v) const {
        Elem e{base.from_int(v)};
        gfp::trim(base, e);
        return e;
    }

    template <class Rng>
    Elem sample(Rng& rng) const {
        Elem e(extension_degree());
        for (auto& c : e) c = base.sample(rng);
        gfp::trim(base, e);
        return e;
    }

    // x -> x^(q/p), the inverse of Frobenius.
    Elem pth_root(const Elem& a) const {
        Int e = order() / base.p;
        return pow(a, e);
    }

    std::string elem_str(const Elem& a) const {
        if (a.empty()) return "0";
        if (a.size() == 1) return std::to_string(a[0]);
        std::ostringstream os;
        os << "(";
        bool first = true;
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            if (!first) os << "+";
            first = false;
            if (i == 0 || a[i] != 1) os << a[i];
            if (i >= 1) {
                if (a[i] != 1) os << "*";
                os << "t";
                if (i > 1) os << "^" << i;
            }
        }
        os << ")";
        return os.str();
    }
};

using FqPoly = gfp::Poly<FqField>;

}  // namespace trindex
