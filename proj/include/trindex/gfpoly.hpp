#pragma once

#include <random>
#include <utility>

#include "trindex/gf.hpp"

namespace trindex::gfp {

// Dense polynomial over the field K, little-endian, no trailing zeros.
template <class K>
using Poly = std::vector<typename K::Elem>;

template <class K>
void trim(const K& k, Poly<K>& f) {
    while (!f.empty() && k.is_zero(f.back())) f.pop_back();
}

template <class E>
int degree(const std::vector<E>& f) {
    return static_cast<int>(f.size()) - 1;
}

template <class E>
bool is_zero(const std::vector<E>& f) {
    return f.empty();
}

template <class K>
Poly<K> constant(const K& k, typename K::Elem c) {
    Poly<K> f{c};
    trim(k, f);
    return f;
}

template <class K>
Poly<K> monomial(const K& k, int deg, typename K::Elem c) {
    if (k.is_zero(c)) return {};
    Poly<K> f(deg + 1, k.zero());
    f[deg] = c;
    return f;
}

template <class K>
bool eq(const K& k, const Poly<K>& f, const Poly<K>& g) {
    if (f.size() != g.size()) return false;
    for (size_t i = 0; i < f.size(); ++i)
        if (!k.eq(f[i], g[i])) return false;
    return true;
}

template <class K>
Poly<K> add(const K& k, const Poly<K>& f, const Poly<K>& g) {
    Poly<K> r(std::max(f.size(), g.size()), k.zero());
    for (size_t i = 0; i < f.size(); ++i) r[i] = f[i];
    for (size_t i = 0; i < g.size(); ++i) r[i] = k.add(r[i], g[i]);
    trim(k, r);
    return r;
}

template <class K>
Poly<K> sub(const K& k, const Poly<K>& f, const Poly<K>& g) {
    Poly<K> r(std::max(f.size(), g.size()), k.zero());
    for (size_t i = 0; i < f.size(); ++i) r[i] = f[i];
    for (size_t i = 0; i < g.size(); ++i) r[i] = k.sub(r[i], g[i]);
    trim(k, r);
    return r;
}

template <class K>
Poly<K> mul(const K& k, const Poly<K>& f, const Poly<K>& g) {
    if (f.empty() || g.empty()) return {};
    Poly<K> r(f.size() + g.size() - 1, k.zero());
    for (size_t i = 0; i < f.size(); ++i) {
        if (k.is_zero(f[i])) continue;
        for (size_t j = 0; j < g.size(); ++j)
            r[i + j] = k.add(r[i + j], k.mul(f[i], g[j]));
    }
    trim(k, r);
    return r;
}

template <class K>
Poly<K> scale(const K& k, const Poly<K>& f, typename K::Elem c) {
    if (k.is_zero(c)) return {};
    Poly<K> r = f;
    for (auto& ci : r) ci = k.mul(ci, c);
    return r;
}

template <class K>
Poly<K> make_monic(const K& k, const Poly<K>& f) {
    if (f.empty()) return f;
    if (k.eq(f.back(), k.one())) return f;
    return scale(k, f, k.inv(f.back()));
}

template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const K& k, const Poly<K>& f, const Poly<K>& g) {
    if (g.empty()) throw std::domain_error("gfp::divmod: zero divisor");
    Poly<K> r = f;
    int dg = degree(g);
    if (degree(r) < dg) return {{}, r};
    auto lc_inv = k.inv(g.back());
    Poly<K> q(r.size() - dg, k.zero());
    for (int i = degree(r); i >= dg; --i) {
        if (k.is_zero(r[i])) continue;
        auto c = k.mul(r[i], lc_inv);
        q[i - dg] = c;
        for (int j = 0; j <= dg; ++j)
            r[i - dg + j] = k.sub(r[i - dg + j], k.mul(c, g[j]));
    }
    trim(k, r);
    trim(k, q);
    return {q, r};
}

template <class K>
Poly<K> mod(const K& k, const Poly<K>& f, const Poly<K>& g) {
    return divmod(k, f, g).second;
}

template <class K>
Poly<K> gcd(const K& k, Poly<K> f, Poly<K> g) {
    while (!g.empty()) {
        f = mod(k, f, g);
        std::swap(f, g);
    }
    return make_monic(k, f);
}

template <class K>
Poly<K> derivative(const K& k, const Poly<K>& f) {
    if (f.size() <= 1) return {};
    Poly<K> r(f.size() - 1, k.zero());
    std::uint64_t p = k.characteristic();
    for (size_t i = 1; i < f.size(); ++i) {
        auto m = k.from_int(Int(i % p));
        r[i - 1] = k.mul(f[i], m);
    }
    trim(k, r);
    return r;
}

template <class K>
typename K::Elem eval(const K& k, const Poly<K>& f, typename K::Elem x) {
    auto r = k.zero();
    for (size_t i = f.size(); i-- > 0;) r = k.add(k.mul(r, x), f[i]);
    return r;
}

template <class K>
Poly<K> powmod(const K& k, Poly<K> base, Int e, const Poly<K>& m) {
    Poly<K> r = constant(k, k.one());
    base = mod(k, base, m);
    while (e > 0) {
        if ((e & 1) != 0) r = mod(k, mul(k, r, base), m);
        e >>= 1;
        if (e > 0) base = mod(k, mul(k, base, base), m);
    }
    return r;
}

// gcd(f, f') constant <=> squarefree.
template <class K>
bool is_squarefree(const K& k, const Poly<K>& f) {
    if (f.empty()) throw std::domain_error("is_squarefree: zero polynomial");
    Poly<K> d = derivative(k, f);
    if (d.empty()) return degree(f) == 0;  // nonconstant p-th powers are not squarefree
    return degree(gcd(k, f, d)) == 0;
}

}  // namespace trindex::gfp
