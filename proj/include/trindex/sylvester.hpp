#pragma once

#include "trindex/intpoly.hpp"
#include "trindex/trinomial.hpp"

namespace trindex {

// Exact determinant by Bareiss fraction-free elimination.
Int bareiss_determinant(std::vector<std::vector<Int>> m);

// Res(f, g) as the determinant of the (deg f + deg g) Sylvester matrix.
Int resultant(const IntPoly& f, const IntPoly& g);

// disc(F) = (-1)^(n(n-1)/2) * Res(F, F') / lc(F); the independent oracle
// for the closed-form discriminant, sign included.
Int discriminant_resultant(const Trinomial& t);

}  // namespace trindex
