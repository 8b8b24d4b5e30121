#pragma once

#include <optional>
#include <variant>

#include "trindex/gffactor.hpp"
#include "trindex/splitting.hpp"

namespace trindex {

// Raised when resolving a side would need machinery beyond degree-1 lift
// refinement (never reached by the x^9 + a*x^2 + b family).
struct RefinementUnsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when the refinement loop exceeds its iteration cap; indicates a
// bug rather than a mathematical obstruction.
struct IrregularUndecided : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// F = sum a_i(x) * phi(x)^i with deg a_i < deg phi.
struct PhiExpansion {
    IntPoly phi;
    std::vector<IntPoly> coeffs;
};

// One side of a principal polygon: slope -h/e in lowest terms, length l,
// degree d = l/e.
struct Side {
    long start_x = 0, start_y = 0;
    long end_x = 0, end_y = 0;
    long h = 0, e = 1;
    long length = 0;
    long degree = 0;

    bool operator==(const Side&) const = default;
};

// Principal phi-Newton polygon: lower convex hull of {(i, vp(a_i))}
// restricted to the strictly negative slopes, ending at (m, 0) where m is
// the multiplicity of phi-bar in F mod p.
struct NewtonPolygon {
    std::vector<std::pair<long, long>> points;    // (i, vp(a_i)), a_i != 0
    std::vector<std::pair<long, long>> vertices;  // principal hull vertices
    std::vector<Side> sides;                      // increasing slope

    long multiplicity() const { return vertices.empty() ? 0 : vertices.back().first; }
};

// Residue coefficients c_i of a side and the attached residual polynomial
// R(y) = sum t_j y^j over F_phi, t_j = c_{je}.
struct SideResidual {
    Side side;
    FqField field;
    std::vector<FqField::Elem> c;  // indexed by offset from side start
    FqPoly R;
};

PhiExpansion phi_expand(const IntPoly& F, const IntPoly& phi);

NewtonPolygon principal_polygon(const PhiExpansion& exp, std::uint64_t p);

SideResidual residual(const PhiExpansion& exp, const Side& side, std::uint64_t p);

bool is_phi_regular(const IntPoly& F, const IntPoly& phi, std::uint64_t p,
                    std::uint64_t seed = kDefaultFactorSeed);
bool is_p_regular(const IntPoly& F, std::uint64_t p,
                  std::uint64_t seed = kDefaultFactorSeed);

// deg(phi) times the number of lattice points (x, y), x >= 1, y >= 1, lying
// on or under the principal polygon.
long ind_phi(const IntPoly& F, const IntPoly& phi, std::uint64_t p);
long lattice_index(const NewtonPolygon& poly, int phi_degree);

// One refinement step: phi = x - c becomes x - (c + t*p^h) where t is the
// canonical lift of the repeated residual root and -h the (integer) slope
// of the offending side.
IntPoly refine(const IntPoly& F, std::uint64_t p, const IntPoly& phi,
               const Side& side, const FqField::Elem& repeated_root);

// Analysis of a single irreducible factor of F mod p after refinement has
// converged: final lift, polygon, residuals with their factorizations, and
// the (e, f) contribution.
struct PhiAnalysis {
    IntPoly phi;
    unsigned multiplicity = 0;
    unsigned refinement_steps = 0;
    long last_refinement_h = 0;  // exponent used by the final step
    NewtonPolygon polygon;
    std::vector<SideResidual> residuals;
    std::vector<FactorizationFq> residual_factorizations;
    SplittingType contribution;
    long lattice_points = 0;  // ind_phi at the final lift
};

struct NotPRegular {
    IntPoly phi;
    Side side;
    FqPoly repeated_factor;
    unsigned multiplicity = 0;
};

using OreOutcome = std::variant<SplittingType, NotPRegular>;

// Splitting shape by the theorem of Ore at the canonical lifts; the
// NotPRegular alternative carries the offending side.
OreOutcome ore_factorization(const IntPoly& F, std::uint64_t p,
                             std::uint64_t seed = kDefaultFactorSeed);

// Full engine: Ore at canonical lifts, refining non-regular sides until
// every residual is squarefree. Iteration cap vp(disc) + 2.
struct OreEngineResult {
    std::vector<PhiAnalysis> phis;
    SplittingType split;
    bool refined = false;
    long index_valuation = 0;  // vp((Z_K : Z[alpha])) for irreducible F
};
OreEngineResult ore_engine(const IntPoly& F, std::uint64_t p,
                           std::uint64_t seed = kDefaultFactorSeed);

// Deep-branch p-adic constants of the refinement analysis.
enum class DeepBranch { P2Deep, P3DeepA, P3DeepB };

// Which deep branch (a, b) lies in, if any.
std::optional<DeepBranch> classify_deep_branch(const Int& a, const Int& b);

// The constant as a p-adic integer mod p^precision, by modular inverse.
Int padic_constant(DeepBranch kind, const Int& a, const Int& b, unsigned precision);

}  // namespace trindex
