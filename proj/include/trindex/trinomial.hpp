#pragma once

#include <vector>

#include "trindex/intpoly.hpp"

namespace trindex {

// The pair (a, b) defining F(x) = x^9 + a*x^2 + b.
//
// A normalized pair satisfies, for every prime p, vp(a) <= 6 or vp(b) <= 8;
// the tables of the index module assume this reduction has been applied.
struct Trinomial {
    Int a;
    Int b;
    bool normalized = false;

    IntPoly poly() const;
};

// b * (3^18*b^7 + 4*7^7*a^9), the discriminant of F in closed form.
Int discriminant(const Trinomial& t);

// While some prime p has vp(a) >= 7 and vp(b) >= 9, replace (a,b) by
// (a/p^7, b/p^9). Scaling the root by 1/p, the resulting trinomial defines
// the same field. Requires b != 0.
Trinomial normalize(const Trinomial& t);

// Primes p that could violate the normalization bound (p^7 | a and p^9 | b),
// found by trial division; helper shared with normalize.
std::vector<Int> normalization_primes(const Trinomial& t);

// N_f = (1/f) * sum_{d | f} mu(d) * p^(f/d), the count of monic irreducible
// polynomials of degree f over F_p.
Int count_monic_irreducibles(const Int& p, unsigned f);

}  // namespace trindex
