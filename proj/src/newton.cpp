#include "trindex/newton.hpp"

#include <numeric>

#include "trindex/sylvester.hpp"
#include "trindex/trinomial.hpp"
#include "trindex/valuation.hpp"

namespace trindex {

PhiExpansion phi_expand(const IntPoly& F, const IntPoly& phi) {
    if (!intpoly::is_monic(phi) || intpoly::degree(phi) < 1)
        throw std::domain_error("phi_expand: phi must be monic of degree >= 1");
    PhiExpansion out;
    out.phi = phi;
    IntPoly rest = F;
    while (!intpoly::is_zero(rest)) {
        auto [q, r] = intpoly::divmod_monic(rest, phi);
        out.coeffs.push_back(r);
        rest = std::move(q);
    }
    if (out.coeffs.empty()) out.coeffs.push_back({});
    return out;
}

namespace {

struct ValuedPoint {
    long x;
    long y;
};

// (i, vp(a_i)) for nonzero a_i, plus the multiplicity m = min{i : u_i = 0}.
std::pair<std::vector<ValuedPoint>, long> valued_points(const PhiExpansion& exp,
                                                        std::uint64_t p) {
    std::vector<ValuedPoint> pts;
    long m = -1;
    for (size_t i = 0; i < exp.coeffs.size(); ++i) {
        Valuation v = intpoly::content_valuation(Int(p), exp.coeffs[i]);
        if (v.infinite) continue;
        pts.push_back({static_cast<long>(i), v.value});
        if (m < 0 && v.value == 0) m = static_cast<long>(i);
    }
    if (m < 0) throw std::logic_error("valued_points: no unit coefficient (non-monic F?)");
    return {pts, m};
}

long cross(const ValuedPoint& o, const ValuedPoint& a, const ValuedPoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

NewtonPolygon principal_polygon(const PhiExpansion& exp, std::uint64_t p) {
    NewtonPolygon out;
    auto [pts, m] = valued_points(exp, p);
    for (auto& q : pts) out.points.emplace_back(q.x, q.y);
    if (m == 0) return out;  // phi-bar does not divide F mod p: empty principal part

    // Lower convex hull of the points with abscissa <= m; every side of the
    // hull then has strictly negative slope since (m, 0) is the unique
    // minimum-ordinate point in range.
    std::vector<ValuedPoint> hull;
    for (auto& q : pts) {
        if (q.x > m) break;
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), q) <= 0)
            hull.pop_back();
        hull.push_back(q);
    }
    for (auto& q : hull) out.vertices.emplace_back(q.x, q.y);
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        Side s;
        s.start_x = hull[i].x;
        s.start_y = hull[i].y;
        s.end_x = hull[i + 1].x;
        s.end_y = hull[i + 1].y;
        s.length = s.end_x - s.start_x;
        long rise = s.start_y - s.end_y;
        if (rise <= 0) throw std::logic_error("principal_polygon: non-negative slope side");
        long g = std::gcd(rise, s.length);
        s.h = rise / g;
        s.e = s.length / g;
        s.degree = s.length / s.e;
        out.sides.push_back(s);
    }
    return out;
}

SideResidual residual(const PhiExpansion& exp, const Side& side, std::uint64_t p) {
    FpField base(p);
    FpPoly phibar = reduce_mod_p(exp.phi, base);
    FqField field(base, phibar);
    SideResidual out{side, field, {}, {}};

    out.c.assign(side.length + 1, field.zero());
    for (long off = 0; off <= side.length; ++off) {
        long i = side.start_x + off;
        if (i >= static_cast<long>(exp.coeffs.size())) break;
        const IntPoly& ai = exp.coeffs[i];
        if (intpoly::is_zero(ai)) continue;
        long ui = intpoly::content_valuation(Int(p), ai).value;
        // on the side iff e*ui == e*start_y - h*off (strictly above otherwise)
        if (side.e * ui != side.e * side.start_y - side.h * off) continue;
        IntPoly unit = intpoly::divide_pk(ai, Int(p), ui);
        FpPoly red = reduce_mod_p(unit, base);
        out.c[off] = field.reduce(red);
    }

    out.R.assign(side.degree + 1, field.zero());
    for (long j = 0; j <= side.degree; ++j) out.R[j] = out.c[j * side.e];
    if (field.is_zero(out.R.front()) || field.is_zero(out.R.back()))
        throw std::logic_error("residual: side endpoints must give nonzero coefficients");
    return out;
}

long lattice_index(const NewtonPolygon& poly, int phi_degree) {
    if (poly.sides.empty()) return 0;
    if (poly.vertices.front().first > 0)
        throw std::domain_error("lattice_index: expansion has zero constant term");
    long count = 0;
    long m = poly.multiplicity();
    for (long x = 1; x < m; ++x) {
        for (const Side& s : poly.sides) {
            if (x < s.start_x || x > s.end_x) continue;
            // floor of the polygon ordinate at x
            long num = s.h * (x - s.start_x);
            long y = s.start_y - (num + s.e - 1) / s.e;
            if (y > 0) count += y;
            break;
        }
    }
    return count * phi_degree;
}

long ind_phi(const IntPoly& F, const IntPoly& phi, std::uint64_t p) {
    PhiExpansion exp = phi_expand(F, phi);
    NewtonPolygon poly = principal_polygon(exp, p);
    return lattice_index(poly, intpoly::degree(phi));
}

namespace {

struct SideScan {
    NewtonPolygon polygon;
    std::vector<SideResidual> residuals;
    std::vector<FactorizationFq> factorizations;
    // first side whose residual has a repeated factor, if any
    std::optional<size_t> offender;
};

SideScan scan_phi(const IntPoly& F, const IntPoly& phi, std::uint64_t p,
                  std::uint64_t seed) {
    SideScan out;
    PhiExpansion exp = phi_expand(F, phi);
    out.polygon = principal_polygon(exp, p);
    for (const Side& s : out.polygon.sides) {
        SideResidual r = residual(exp, s, p);
        FactorizationFq fz = factor_over_extension(r.field, r.R, seed);
        if (!out.offender) {
            for (auto& [g, mult] : fz.factors)
                if (mult > 1) {
                    out.offender = out.residuals.size();
                    break;
                }
        }
        out.residuals.push_back(std::move(r));
        out.factorizations.push_back(std::move(fz));
    }
    return out;
}

FqPoly first_repeated_factor(const FactorizationFq& fz, unsigned& mult) {
    for (auto& [g, m] : fz.factors)
        if (m > 1) {
            mult = m;
            return g;
        }
    throw std::logic_error("first_repeated_factor: none present");
}

}  // namespace

bool is_phi_regular(const IntPoly& F, const IntPoly& phi, std::uint64_t p,
                    std::uint64_t seed) {
    PhiExpansion exp = phi_expand(F, phi);
    NewtonPolygon poly = principal_polygon(exp, p);
    for (const Side& s : poly.sides) {
        SideResidual r = residual(exp, s, p);
        if (!gfp::is_squarefree(r.field, r.R)) return false;
    }
    (void)seed;
    return true;
}

bool is_p_regular(const IntPoly& F, std::uint64_t p, std::uint64_t seed) {
    auto fz = factor_mod_p(F, p, seed);
    FpField k(p);
    for (auto& [g, m] : fz.factors) {
        if (!is_phi_regular(F, lift_to_int(g, k), p, seed)) return false;
    }
    return true;
}

IntPoly refine(const IntPoly& F, std::uint64_t p, const IntPoly& phi,
               const Side& side, const FqField::Elem& repeated_root) {
    if (intpoly::degree(phi) != 1)
        throw RefinementUnsupported("refine: lift of degree > 1");
    if (side.e != 1)
        throw RefinementUnsupported("refine: non-integer slope");
    if (gfp::degree(repeated_root) > 0)
        throw RefinementUnsupported("refine: repeated root outside the prime field");

    // check the stated root really is a repeated root of this side's residual
    PhiExpansion exp = phi_expand(F, phi);
    SideResidual r = residual(exp, side, p);
    FqPoly lin{r.field.neg(repeated_root), r.field.one()};
    auto [q1, rem1] = gfp::divmod(r.field, r.R, lin);
    if (!gfp::is_zero(rem1) || !gfp::is_zero(gfp::mod(r.field, q1, lin)))
        throw std::domain_error("refine: residual has no repeated root at the given value");

    Int c = -phi[0];
    Int t = repeated_root.empty() ? Int(0) : Int(repeated_root[0]);
    Int c_new = c + t * ipow(Int(p), static_cast<unsigned>(side.h));
    return intpoly::x_minus(c_new);
}

OreOutcome ore_factorization(const IntPoly& F, std::uint64_t p, std::uint64_t seed) {
    auto fz = factor_mod_p(F, p, seed);
    FpField k(p);
    SplittingType split;
    for (auto& [g, mult] : fz.factors) {
        IntPoly phi = lift_to_int(g, k);
        SideScan scan = scan_phi(F, phi, p, seed);
        if (scan.offender) {
            size_t i = *scan.offender;
            unsigned m = 0;
            FqPoly rep = first_repeated_factor(scan.factorizations[i], m);
            return NotPRegular{phi, scan.residuals[i].side, rep, m};
        }
        long phi_deg = intpoly::degree(phi);
        for (size_t i = 0; i < scan.polygon.sides.size(); ++i)
            for (auto& [psi, m] : scan.factorizations[i].factors)
                split.add(scan.polygon.sides[i].e, phi_deg * gfp::degree(psi));
    }
    if (split.degree_sum() != intpoly::degree(F))
        throw std::logic_error("ore_factorization: degree bookkeeping failed");
    return split;
}

OreEngineResult ore_engine(const IntPoly& F, std::uint64_t p, std::uint64_t seed) {
    Int disc = resultant(F, intpoly::derivative(F));
    if (disc == 0)
        throw std::domain_error("ore_engine: polynomial is not squarefree over Q");
    const long cap = vp_finite(Int(p), disc) + 2;

    auto fz = factor_mod_p(F, p, seed);
    FpField k(p);
    OreEngineResult out;
    for (auto& [g, mult] : fz.factors) {
        PhiAnalysis pa;
        pa.phi = lift_to_int(g, k);
        pa.multiplicity = mult;
        for (;;) {
            SideScan scan = scan_phi(F, pa.phi, p, seed);
            if (scan.polygon.multiplicity() != static_cast<long>(mult))
                throw std::logic_error("ore_engine: polygon length drifted from multiplicity");
            if (!scan.offender) {
                pa.polygon = std::move(scan.polygon);
                pa.residuals = std::move(scan.residuals);
                pa.residual_factorizations = std::move(scan.factorizations);
                break;
            }
            if (static_cast<long>(pa.refinement_steps) >= cap)
                throw IrregularUndecided("ore_engine: refinement cap exceeded");
            size_t i = *scan.offender;
            const Side& side = scan.polygon.sides[i];
            unsigned m = 0;
            FqPoly rep = first_repeated_factor(scan.factorizations[i], m);
            if (gfp::degree(rep) != 1)
                throw RefinementUnsupported("ore_engine: repeated factor of degree > 1");
            const FqField& field = scan.residuals[i].field;
            FqField::Elem root = field.neg(rep[0]);
            pa.phi = refine(F, p, pa.phi, side, root);
            pa.last_refinement_h = side.h;
            ++pa.refinement_steps;
            out.refined = true;
        }
        long phi_deg = intpoly::degree(pa.phi);
        for (size_t i = 0; i < pa.polygon.sides.size(); ++i)
            for (auto& [psi, m] : pa.residual_factorizations[i].factors)
                pa.contribution.add(pa.polygon.sides[i].e, phi_deg * gfp::degree(psi));
        pa.lattice_points = lattice_index(pa.polygon, static_cast<int>(phi_deg));
        out.index_valuation += pa.lattice_points;
        out.split.merge(pa.contribution);
        out.phis.push_back(std::move(pa));
    }
    if (out.split.degree_sum() != intpoly::degree(F))
        throw std::logic_error("ore_engine: degree bookkeeping failed");
    return out;
}

std::optional<DeepBranch> classify_deep_branch(const Int& a, const Int& b) {
    if (imod(a, 128) == 64 && imod(b, 512) == 256) return DeepBranch::P2Deep;
    Int am = imod(a, 81), bm = imod(b, 81), s = imod(a + b + 1, 243);
    if (am == 9 && bm == 71 && s == 0) return DeepBranch::P3DeepA;
    if (am == 36 && bm == 44 && s == 0) return DeepBranch::P3DeepB;
    if (am == 63 && bm == 17 && s == 81) return DeepBranch::P3DeepB;
    return std::nullopt;
}

Int padic_constant(DeepBranch kind, const Int& a, const Int& b, unsigned precision) {
    auto branch = classify_deep_branch(a, b);
    if (!branch || *branch != kind)
        throw std::domain_error("padic_constant: (a, b) is not in the requested branch");
    Int num, den, pk;
    switch (kind) {
        case DeepBranch::P2Deep: {
            Int a2 = unit_part(2, a), b2 = unit_part(2, b);
            num = 2 * 343 * ipow(a2, 4);
            den = ipow(3, 8) * ipow(b2, 3);
            pk = ipow(Int(2), precision);
            break;
        }
        case DeepBranch::P3DeepA: {
            Int a3 = a / 9;
            num = 2 * 343 * ipow(a3, 4);
            den = ipow(b, 3);
            pk = ipow(Int(3), precision);
            break;
        }
        case DeepBranch::P3DeepB: {
            Int a3 = a / 9;
            num = b;
            den = 20 * ipow(a3, 2);
            pk = ipow(Int(3), precision);
            break;
        }
    }
    return imod(num * inv_mod(den, pk), pk);
}

}  // namespace trindex
