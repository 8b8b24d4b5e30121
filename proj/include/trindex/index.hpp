#pragma once

#include <optional>
#include <string>

#include "trindex/newton.hpp"
#include "trindex/trinomial.hpp"

namespace trindex {

// Classical Dedekind criterion: does p divide (Z_K : Z[alpha])?
bool dedekind_divides(const Trinomial& t, std::uint64_t p,
                      std::uint64_t seed = kDefaultFactorSeed);

// How a per-prime result was obtained.
enum class Provenance { TableRow, EngineDedekind, EngineOre, EngineRefined };

std::string provenance_str(Provenance p);

// Shape of p Z_K. Dedekind's factorization theorem when p does not divide
// the index, the refined Ore engine otherwise.
SplittingType splitting_type(const Trinomial& t, std::uint64_t p,
                             std::uint64_t seed = kDefaultFactorSeed);
SplittingType splitting_type(const Trinomial& t, std::uint64_t p, Provenance& how,
                             std::uint64_t seed = kDefaultFactorSeed);

// Engstrom's criterion: p | i(K) iff P_f > N_f for some residue degree f.
bool engstrom_divides(std::uint64_t p, const SplittingType& s);

// Exact nu_p(i(K)) for the splitting types certified for this family;
// 0 whenever engstrom_divides fails; nullopt (= unknown, at least 1) for
// divisor types outside the certified list.
std::optional<long> engstrom_nu(std::uint64_t p, const SplittingType& s);

// Closed-form tables. Both expect a normalized trinomial.
// Returns nu and the identifier of the matched row ("T1.R3", "otherwise", ...).
struct TableResult {
    long nu;
    std::string row;
};
TableResult nu2_table(const Trinomial& t);
TableResult nu3_table(const Trinomial& t);

// Theorem: nu_p(i(K)) = 0 for p >= 5. verify = true recomputes the value
// through the splitting engine and asserts agreement.
long nup_general(const Trinomial& t, std::uint64_t p, bool verify = false,
                 std::uint64_t seed = kDefaultFactorSeed);

struct PrimeReport {
    long nu = 0;
    SplittingType splitting;
    Provenance provenance = Provenance::EngineDedekind;
    std::string table_row;  // matched table row for p in {2, 3}
    long nu_table = 0;      // table value (p in {2, 3})
    long nu_engine = 0;     // engstrom value from the engine splitting
};

struct IndexReport {
    Trinomial input;
    Trinomial normalized;
    bool irreducible = false;
    std::optional<IntPoly> factor_witness;  // for reducible inputs
    Int disc = 0;                           // of the normalized trinomial
    std::map<std::uint64_t, long> disc_valuations;  // p in {2,3,5,7}
    std::map<std::uint64_t, PrimeReport> per_prime;
    Int i_K = 1;
    bool monogenic_obstructed = false;
    std::vector<std::string> discrepancies;
};

// Full assembly: normalization, irreducibility, table and engine paths for
// p in {2, 3} (reconciled; discrepancies must stay empty), nu_p = 0 checks
// for p in {5, 7}. The congruence tables and the polygon engine are total
// in (a, b), so a report is produced even when F is reducible; callers gate
// on `irreducible` (the CLI exits 2 in that case).
IndexReport field_index(const Trinomial& t, std::uint64_t seed = kDefaultFactorSeed);

}  // namespace trindex
