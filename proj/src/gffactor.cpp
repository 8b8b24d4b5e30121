#include "trindex/gffactor.hpp"

#include <algorithm>
#include <random>

namespace trindex {

FpPoly reduce_mod_p(const IntPoly& f, const FpField& k) {
    FpPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = k.from_int(f[i]);
    gfp::trim(k, r);
    return r;
}

IntPoly lift_to_int(const FpPoly& f, const FpField&) {
    IntPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = Int(f[i]);
    intpoly::trim(r);
    return r;
}

namespace detail {

template <class K>
using P = gfp::Poly<K>;

// f = product of s_i^i with s_i squarefree pairwise coprime (Yun adapted to
// characteristic p, with p-th root recursion for vanishing derivative).
template <class K>
std::vector<std::pair<P<K>, unsigned>> squarefree_decomposition(const K& k, P<K> f) {
    std::vector<std::pair<P<K>, unsigned>> out;
    const std::uint64_t p = k.characteristic();
    f = gfp::make_monic(k, f);

    P<K> d = gfp::derivative(k, f);
    if (d.empty()) {
        // f = g(x^p); recurse on the p-th root.
        P<K> g((gfp::degree(f)) / p + 1, k.zero());
        for (size_t i = 0; i < f.size(); i += p) g[i / p] = k.pth_root(f[i]);
        gfp::trim(k, g);
        for (auto& [s, e] : squarefree_decomposition(k, g))
            out.emplace_back(std::move(s), e * static_cast<unsigned>(p));
        return out;
    }

    P<K> c = gfp::gcd(k, f, d);
    P<K> w = gfp::divmod(k, f, c).first;
    unsigned i = 1;
    while (gfp::degree(w) > 0) {
        P<K> y = gfp::gcd(k, w, c);
        P<K> z = gfp::divmod(k, w, y).first;
        if (gfp::degree(z) > 0) out.emplace_back(gfp::make_monic(k, z), i);
        c = gfp::divmod(k, c, y).first;
        w = std::move(y);
        ++i;
    }
    if (gfp::degree(c) > 0) {
        P<K> g((gfp::degree(c)) / p + 1, k.zero());
        for (size_t j = 0; j < c.size(); j += p) g[j / p] = k.pth_root(c[j]);
        gfp::trim(k, g);
        for (auto& [s, e] : squarefree_decomposition(k, g))
            out.emplace_back(std::move(s), e * static_cast<unsigned>(p));
    }
    return out;
}

// Distinct-degree split of a squarefree monic f: list of (product, d).
template <class K>
std::vector<std::pair<P<K>, unsigned>> distinct_degree(const K& k, P<K> f) {
    std::vector<std::pair<P<K>, unsigned>> out;
    const Int q = k.order();
    P<K> x = gfp::monomial(k, 1, k.one());
    P<K> h = gfp::mod(k, x, f);
    unsigned d = 0;
    while (gfp::degree(f) >= 2 * static_cast<int>(d + 1)) {
        ++d;
        h = gfp::powmod(k, h, q, f);
        P<K> g = gfp::gcd(k, gfp::sub(k, h, x), f);
        if (gfp::degree(g) > 0) {
            out.emplace_back(g, d);
            f = gfp::divmod(k, f, g).first;
            h = gfp::mod(k, h, f);
        }
    }
    if (gfp::degree(f) > 0)
        out.emplace_back(f, static_cast<unsigned>(gfp::degree(f)));
    return out;
}

template <class K>
P<K> random_poly_below(const K& k, int deg_bound, std::mt19937_64& rng) {
    P<K> r(deg_bound, k.zero());
    for (int i = 0; i < deg_bound; ++i) r[i] = k.sample(rng);
    gfp::trim(k, r);
    return r;
}

// Equal-degree splitting of a squarefree product of degree-d irreducibles.
// Odd characteristic uses Cantor-Zassenhaus power splitting; characteristic
// 2 uses the absolute trace map.
template <class K>
void equal_degree(const K& k, const P<K>& f, unsigned d, std::mt19937_64& rng,
                  std::vector<P<K>>& out) {
    const int n = gfp::degree(f);
    if (n == static_cast<int>(d)) {
        out.push_back(gfp::make_monic(k, f));
        return;
    }
    const Int q = k.order();
    for (;;) {
        P<K> r = random_poly_below(k, n, rng);
        if (gfp::degree(r) < 1) continue;
        P<K> g;
        if (k.characteristic() == 2) {
            // T(r) = r + r^2 + r^4 + ... over F_2, summed to q^d.
            unsigned bits = k.extension_degree() * d;
            P<K> t = gfp::mod(k, r, f);
            P<K> acc = t;
            for (unsigned i = 1; i < bits; ++i) {
                t = gfp::mod(k, gfp::mul(k, t, t), f);
                acc = gfp::add(k, acc, t);
            }
            g = gfp::gcd(k, acc, f);
        } else {
            Int e = (ipow(q, d) - 1) / 2;
            P<K> h = gfp::powmod(k, r, e, f);
            h = gfp::sub(k, h, gfp::constant(k, k.one()));
            g = gfp::gcd(k, h, f);
        }
        if (gfp::degree(g) > 0 && gfp::degree(g) < n) {
            equal_degree(k, g, d, rng, out);
            equal_degree(k, gfp::divmod(k, f, g).first, d, rng, out);
            return;
        }
    }
}

template <class K>
Factorization<K> factor_poly(const K& k, const P<K>& f, std::uint64_t seed) {
    if (gfp::is_zero(f))
        throw std::domain_error("factor: zero polynomial");
    Factorization<K> result;
    result.unit = f.back();
    if (gfp::degree(f) == 0) return result;

    std::mt19937_64 rng(seed);
    for (auto& [sq, mult] : squarefree_decomposition(k, f)) {
        for (auto& [prod, d] : distinct_degree(k, sq)) {
            std::vector<P<K>> irreducibles;
            equal_degree(k, prod, d, rng, irreducibles);
            for (auto& g : irreducibles)
                result.factors.push_back({std::move(g), mult});
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const FactorPower<K>& a, const FactorPower<K>& b) {
                  if (a.factor.size() != b.factor.size())
                      return a.factor.size() < b.factor.size();
                  return a.factor < b.factor;
              });
    return result;
}

// Rabin: f irreducible of degree n iff x^(q^n) = x mod f and
// gcd(x^(q^(n/t)) - x, f) = 1 for every prime t | n.
template <class K>
bool rabin_irreducible(const K& k, const P<K>& f) {
    const int n = gfp::degree(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    const Int q = k.order();
    P<K> x = gfp::monomial(k, 1, k.one());
    std::vector<unsigned> prime_divs;
    unsigned m = static_cast<unsigned>(n);
    for (unsigned t = 2; t <= m; ++t)
        if (m % t == 0) {
            prime_divs.push_back(t);
            while (m % t == 0) m /= t;
        }
    for (unsigned t : prime_divs) {
        P<K> h = gfp::powmod(k, x, ipow(q, n / t), f);
        P<K> g = gfp::gcd(k, gfp::sub(k, h, x), f);
        if (gfp::degree(g) != 0) return false;
    }
    P<K> h = gfp::powmod(k, x, ipow(q, n), f);
    return gfp::eq(k, h, gfp::mod(k, x, f));
}

template Factorization<FpField> factor_poly(const FpField&, const P<FpField>&, std::uint64_t);
template Factorization<FqField> factor_poly(const FqField&, const P<FqField>&, std::uint64_t);
template bool rabin_irreducible(const FpField&, const P<FpField>&);
template bool rabin_irreducible(const FqField&, const P<FqField>&);

}  // namespace detail

FactorizationModP factor_mod_p(const IntPoly& F, std::uint64_t p, std::uint64_t seed) {
    FpField k(p);
    FpPoly f = reduce_mod_p(F, k);
    if (gfp::is_zero(f))
        throw std::domain_error("factor_mod_p: polynomial vanishes mod p");
    return detail::factor_poly(k, f, seed);
}

FactorizationFq factor_over_extension(const FqField& k, const FqPoly& g, std::uint64_t seed) {
    return detail::factor_poly(k, g, seed);
}

bool is_irreducible_mod_p(const FpField& k, const FpPoly& f) {
    return detail::rabin_irreducible(k, f);
}

bool is_irreducible_fq(const FqField& k, const FqPoly& f) {
    return detail::rabin_irreducible(k, f);
}

}  // namespace trindex
