#pragma once

#include <string>
#include <vector>

#include "trindex/bigint.hpp"
#include "trindex/valuation.hpp"

namespace trindex {

// Dense integer polynomial, little-endian coefficients, no trailing zeros.
using IntPoly = std::vector<Int>;

namespace intpoly {

void trim(IntPoly& f);
int degree(const IntPoly& f);  // -1 for the zero polynomial
bool is_zero(const IntPoly& f);
bool is_monic(const IntPoly& f);

IntPoly make(std::initializer_list<Int> coeffs);
IntPoly monomial(int deg, const Int& c = 1);
IntPoly x_minus(const Int& c);  // x - c

IntPoly add(const IntPoly& f, const IntPoly& g);
IntPoly sub(const IntPoly& f, const IntPoly& g);
IntPoly mul(const IntPoly& f, const IntPoly& g);
IntPoly scale(const IntPoly& f, const Int& c);
IntPoly derivative(const IntPoly& f);
Int eval(const IntPoly& f, const Int& x);

// Euclidean division by a monic divisor; exact over Z.
struct DivMod {
    IntPoly quotient;
    IntPoly remainder;
};
DivMod divmod_monic(const IntPoly& f, const IntPoly& g);

// True iff g divides f exactly over Z (g monic).
bool divides_monic(const IntPoly& g, const IntPoly& f);

// Gauss valuation: min over nonzero coefficients of vp; infinite for 0.
Valuation content_valuation(const Int& p, const IntPoly& f);

// Every coefficient divided by p^k; requires exact divisibility.
IntPoly divide_pk(const IntPoly& f, const Int& p, long k);

// f(g(x)) mod m(x), m monic.
IntPoly compose_mod(const IntPoly& f, const IntPoly& g, const IntPoly& m);

std::string to_string(const IntPoly& f, const std::string& var = "x");

}  // namespace intpoly
}  // namespace trindex
