#pragma once

#include <optional>

#include "trindex/trinomial.hpp"

namespace trindex {

// Decides irreducibility of F(x) = x^9 + a*x^2 + b over Q.
//
// Fast path: factor F modulo the first primes not dividing disc(F) and
// intersect the achievable factor-degree subset sums; if no proper degree
// survives (or some reduction is irreducible), F is irreducible. Fallback:
// Hensel lifting from one good prime and factor recombination against the
// Mignotte coefficient bound. Always a decision, never a heuristic.
bool is_irreducible(const Trinomial& t);

// A monic proper factor over Z when one exists (used by reports and the
// fallback path itself). nullopt iff F is irreducible.
std::optional<IntPoly> proper_factor(const Trinomial& t);

}  // namespace trindex
