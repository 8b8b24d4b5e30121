#pragma once

#include <cstdint>

#include "trindex/gfq.hpp"

namespace trindex {

// Seed for equal-degree splitting. Every factorization call builds its own
// generator from the seed, so runs (and concurrent calls) are reproducible.
inline constexpr std::uint64_t kDefaultFactorSeed = 0x9e3779b97f4a7c15ull;

template <class K>
struct FactorPower {
    gfp::Poly<K> factor;  // monic irreducible
    unsigned multiplicity;
};

// Full factorization: leading unit times the product of monic irreducible
// powers. Squarefree split, then distinct-degree, then equal-degree.
template <class K>
struct Factorization {
    typename K::Elem unit;
    std::vector<FactorPower<K>> factors;
};

using FactorizationModP = Factorization<FpField>;
using FactorizationFq = Factorization<FqField>;

namespace detail {
template <class K>
Factorization<K> factor_poly(const K& k, const gfp::Poly<K>& f, std::uint64_t seed);
template <class K>
bool rabin_irreducible(const K& k, const gfp::Poly<K>& f);
}  // namespace detail

// F mod p factored into powers of monic irreducible coprime polynomials.
// Domain error if F vanishes mod p.
FactorizationModP factor_mod_p(const IntPoly& F, std::uint64_t p,
                               std::uint64_t seed = kDefaultFactorSeed);

FactorizationFq factor_over_extension(const FqField& k, const FqPoly& g,
                                      std::uint64_t seed = kDefaultFactorSeed);

bool is_irreducible_mod_p(const FpField& k, const FpPoly& f);
bool is_irreducible_fq(const FqField& k, const FqPoly& f);

}  // namespace trindex
