#include "trindex/irreducible.hpp"

#include <algorithm>
#include <bitset>
#include <cmath>

#include "trindex/gffactor.hpp"
#include "trindex/sylvester.hpp"
#include "trindex/valuation.hpp"

namespace trindex {

namespace {

constexpr int kSievePrimes = 25;

std::vector<std::uint64_t> first_good_primes(const Int& disc, int count) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; static_cast<int>(out.size()) < count; ++p) {
        bool prime = p >= 2;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) { prime = false; break; }
        if (!prime) continue;
        if (disc % p == 0) continue;  // F not squarefree mod p
        out.push_back(p);
        if (p > 2000) break;  // plenty; never reached in practice
    }
    return out;
}

std::bitset<10> subset_sums(const std::vector<int>& degs) {
    std::bitset<10> reach;
    reach.set(0);
    for (int d : degs) reach |= reach << d;
    return reach;
}

// --- Hensel fallback -----------------------------------------------------

struct ZpPoly {
    // Integer polynomial with coefficients reduced into [0, m).
    static IntPoly reduce(const IntPoly& f, const Int& m) {
        IntPoly r = f;
        for (auto& c : r) c = imod(c, m);
        intpoly::trim(r);
        return r;
    }
    static IntPoly mul(const IntPoly& f, const IntPoly& g, const Int& m) {
        return reduce(intpoly::mul(f, g), m);
    }
    static IntPoly add(const IntPoly& f, const IntPoly& g, const Int& m) {
        return reduce(intpoly::add(f, g), m);
    }
    static IntPoly sub(const IntPoly& f, const IntPoly& g, const Int& m) {
        return reduce(intpoly::sub(f, g), m);
    }
    // divmod by monic divisor, coefficients mod m
    static std::pair<IntPoly, IntPoly> divmod(const IntPoly& f, const IntPoly& g, const Int& m) {
        auto [q, r] = intpoly::divmod_monic(f, g);
        return {reduce(q, m), reduce(r, m)};
    }
};

// One quadratic Hensel step: from f = g*h (mod m), s*g + t*h = 1 (mod m)
// to the same congruences mod m^2 (g, h monic, deg s < deg h, deg t < deg g).
void hensel_step(const IntPoly& f, IntPoly& g, IntPoly& h, IntPoly& s, IntPoly& t,
                 const Int& m) {
    Int m2 = m * m;
    IntPoly e = ZpPoly::sub(f, intpoly::mul(g, h), m2);
    auto [q, r] = ZpPoly::divmod(ZpPoly::mul(s, e, m2), h, m2);
    IntPoly g1 = ZpPoly::add(g, ZpPoly::add(ZpPoly::mul(t, e, m2), ZpPoly::mul(q, g, m2), m2), m2);
    IntPoly h1 = ZpPoly::add(h, r, m2);
    IntPoly e2 = ZpPoly::sub(ZpPoly::add(ZpPoly::mul(s, g1, m2), ZpPoly::mul(t, h1, m2), m2),
                             IntPoly{1}, m2);
    auto [q2, r2] = ZpPoly::divmod(ZpPoly::mul(s, e2, m2), h1, m2);
    IntPoly s1 = ZpPoly::sub(s, r2, m2);
    IntPoly t1 = ZpPoly::sub(t, ZpPoly::add(ZpPoly::mul(t, e2, m2), ZpPoly::mul(q2, g1, m2), m2), m2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
}

// Bezout cofactors of coprime monic g, h over F_p, lifted canonically.
void bezout_mod_p(const FpField& k, const IntPoly& g, const IntPoly& h,
                  IntPoly& s, IntPoly& t) {
    FpPoly gp = reduce_mod_p(g, k), hp = reduce_mod_p(h, k);
    FpPoly r0 = gp, r1 = hp;
    FpPoly s0 = {1}, s1 = {};
    FpPoly t0 = {}, t1 = {1};
    while (!r1.empty()) {
        auto [q, r2] = gfp::divmod(k, r0, r1);
        FpPoly s2 = gfp::sub(k, s0, gfp::mul(k, q, s1));
        FpPoly t2 = gfp::sub(k, t0, gfp::mul(k, q, t1));
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    // r0 = s0*g + t0*h, constant for coprime inputs
    auto c = k.inv(r0[0]);
    s = lift_to_int(gfp::scale(k, s0, c), k);
    t = lift_to_int(gfp::scale(k, t0, c), k);
}

// Lift the factorization f = prod(factors) from mod p to mod >= bound.
std::vector<IntPoly> hensel_lift_tree(const IntPoly& f, std::vector<IntPoly> factors,
                                      const Int& p, const Int& bound) {
    if (factors.size() == 1) return {ZpPoly::reduce(f, [&] {
        Int m = p;
        while (m < bound) m *= m;
        return m;
    }())};
    size_t half = factors.size() / 2;
    IntPoly g{1}, h{1};
    FpField k(p.convert_to<std::uint64_t>());
    for (size_t i = 0; i < half; ++i)
        g = lift_to_int(gfp::mul(k, reduce_mod_p(g, k), reduce_mod_p(factors[i], k)), k);
    for (size_t i = half; i < factors.size(); ++i)
        h = lift_to_int(gfp::mul(k, reduce_mod_p(h, k), reduce_mod_p(factors[i], k)), k);
    IntPoly s, t;
    bezout_mod_p(k, g, h, s, t);
    Int m = p;
    while (m < bound) {
        hensel_step(f, g, h, s, t, m);
        m *= m;
    }
    std::vector<IntPoly> left(factors.begin(), factors.begin() + half);
    std::vector<IntPoly> right(factors.begin() + half, factors.end());
    auto lifted_left = hensel_lift_tree(g, std::move(left), p, bound);
    auto lifted_right = hensel_lift_tree(h, std::move(right), p, bound);
    lifted_left.insert(lifted_left.end(), lifted_right.begin(), lifted_right.end());
    return lifted_left;
}

// Mignotte: a monic divisor of degree <= 4 of monic F has coefficients
// bounded by 2^4 * ||F||_2.
Int recombination_modulus_bound(const Trinomial& t) {
    Int norm2_sq = 1 + t.a * t.a + t.b * t.b;
    Int root = boost::multiprecision::sqrt(norm2_sq) + 1;
    return 2 * 16 * root + 1;
}

std::optional<IntPoly> recombine(const IntPoly& F, const std::vector<IntPoly>& lifted,
                                 const Int& modulus) {
    const int r = static_cast<int>(lifted.size());
    for (unsigned mask = 1; mask + 1 < (1u << r); ++mask) {
        int deg = 0;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) deg += intpoly::degree(lifted[i]);
        if (deg < 1 || deg > 4) continue;
        IntPoly prod{1};
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) prod = ZpPoly::mul(prod, lifted[i], modulus);
        for (auto& c : prod) c = imod_sym(c, modulus);
        intpoly::trim(prod);
        if (intpoly::divides_monic(prod, F)) return prod;
    }
    return std::nullopt;
}

std::optional<IntPoly> factor_via_hensel(const Trinomial& t, const Int& disc) {
    IntPoly F = t.poly();
    auto good = first_good_primes(disc, kSievePrimes);
    // start from the reduction with the fewest modular factors
    std::uint64_t best_p = good[0];
    size_t best_count = SIZE_MAX;
    std::vector<IntPoly> best_factors;
    for (auto p : good) {
        auto fz = factor_mod_p(F, p);
        if (fz.factors.size() < best_count) {
            best_count = fz.factors.size();
            best_p = p;
            best_factors.clear();
            FpField k(p);
            for (auto& [g, m] : fz.factors) {
                if (m != 1) throw std::logic_error("good prime gave repeated factor");
                best_factors.push_back(lift_to_int(g, k));
            }
        }
        if (best_count == 1) return std::nullopt;  // irreducible mod p
    }
    Int bound = recombination_modulus_bound(t);
    auto lifted = hensel_lift_tree(F, std::move(best_factors), Int(best_p), bound);
    Int m = Int(best_p);
    while (m < bound) m *= m;
    return recombine(F, lifted, m);
}

}  // namespace

std::optional<IntPoly> proper_factor(const Trinomial& t) {
    IntPoly F = t.poly();
    if (t.b == 0) return intpoly::make({0, 0, 1});  // x^2 | F
    Int disc = discriminant(t);
    if (disc == 0) {
        // F has a repeated root z, which satisfies 9z^7 = -2a and
        // F(z) = (7a/9)z^2 + b = 0, so z^2 = -9b/(7a) is rational. Being an
        // algebraic integer, z is either an integer root of F or quadratic
        // with monic minimal polynomial x^2 - r, r = -9b/(7a) an integer.
        Int root_bound = 2;
        while (ipow(root_bound, 7) <= iabs(t.a) + iabs(t.b)) ++root_bound;
        for (Int z = -root_bound; z <= root_bound; ++z)
            if (z != 0 && intpoly::eval(F, z) == 0) return intpoly::x_minus(z);
        if (t.a != 0 && (9 * t.b) % (7 * t.a) == 0) {
            Int r = -(9 * t.b) / (7 * t.a);
            IntPoly quad = intpoly::make({-r, 0, 1});
            if (intpoly::divides_monic(quad, F)) return quad;
        }
        throw std::logic_error("disc = 0 without the predicted repeated factor");
    }

    // Degree-set sieve over good primes.
    auto good = first_good_primes(disc, kSievePrimes);
    std::bitset<10> achievable;
    achievable.set();
    for (auto p : good) {
        auto fz = factor_mod_p(t.poly(), p);
        if (fz.factors.size() == 1 && fz.factors[0].multiplicity == 1)
            return std::nullopt;  // irreducible mod p
        std::vector<int> degs;
        for (auto& [g, m] : fz.factors)
            for (unsigned i = 0; i < m; ++i) degs.push_back(gfp::degree(g));
        achievable &= subset_sums(degs);
        bool proper = false;
        for (int d = 1; d <= 8; ++d) proper = proper || achievable.test(d);
        if (!proper) return std::nullopt;
    }
    return factor_via_hensel(t, disc);
}

bool is_irreducible(const Trinomial& t) { return !proper_factor(t).has_value(); }

}  // namespace trindex
