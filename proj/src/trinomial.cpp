#include "trindex/trinomial.hpp"

#include <stdexcept>

#include "trindex/valuation.hpp"

namespace trindex {

Int inv_mod(const Int& a, const Int& m) {
    Int r0 = m, r1 = imod(a, m);
    Int s0 = 0, s1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw std::domain_error("inv_mod: not invertible");
    return imod(s0, m);
}

IntPoly Trinomial::poly() const {
    IntPoly f(10, Int(0));
    f[0] = b;
    f[2] = a;
    f[9] = 1;
    intpoly::trim(f);
    return f;
}

Int discriminant(const Trinomial& t) {
    return t.b * (ipow(3, 18) * ipow(t.b, 7) + 4 * ipow(7, 7) * ipow(t.a, 9));
}

std::vector<Int> normalization_primes(const Trinomial& t) {
    // A violating prime satisfies p^7 | a (or a = 0) and p^9 | b, so trial
    // division up to |b|^(1/9) covers every candidate.
    std::vector<Int> out;
    if (t.b == 0) return out;
    Int absb = iabs(t.b);
    for (Int p = 2; ipow(p, 9) <= absb; ++p) {
        bool composite = false;
        for (Int d = 2; d * d <= p; ++d)
            if (p % d == 0) { composite = true; break; }
        if (composite) continue;
        long va = (t.a == 0) ? 9 : vp_finite(p, t.a);
        if (va >= 7 && vp_finite(p, t.b) >= 9) out.push_back(p);
    }
    return out;
}

Trinomial normalize(const Trinomial& t) {
    if (t.b == 0) throw std::domain_error("normalize: b = 0");
    Trinomial r = t;
    for (;;) {
        auto primes = normalization_primes(r);
        if (primes.empty()) break;
        for (const Int& p : primes) {
            Int p7 = ipow(p, 7), p9 = ipow(p, 9);
            while ((r.a == 0 || r.a % p7 == 0) && r.b % p9 == 0) {
                if (r.a != 0) r.a /= p7;
                r.b /= p9;
            }
        }
    }
    r.normalized = true;
    return r;
}

namespace {

int moebius(unsigned n) {
    int mu = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace

Int count_monic_irreducibles(const Int& p, unsigned f) {
    if (f == 0) throw std::domain_error("count_monic_irreducibles: f >= 1");
    Int total{0};
    for (unsigned d = 1; d <= f; ++d) {
        if (f % d != 0) continue;
        total += Int(moebius(d)) * ipow(p, f / d);
    }
    return total / f;
}

}  // namespace trindex
