#include "trindex/index.hpp"

#include "trindex/irreducible.hpp"
#include "trindex/valuation.hpp"

namespace trindex {

bool dedekind_divides(const Trinomial& t, std::uint64_t p, std::uint64_t seed) {
    IntPoly F = t.poly();
    FpField k(p);
    auto fz = factor_mod_p(F, p, seed);

    FpPoly radical{1}, cofactor{1};
    for (auto& [g, m] : fz.factors) {
        radical = gfp::mul(k, radical, g);
        for (unsigned i = 1; i < m; ++i) cofactor = gfp::mul(k, cofactor, g);
    }
    IntPoly gstar = lift_to_int(radical, k);
    IntPoly hstar = lift_to_int(cofactor, k);

    IntPoly T = intpoly::sub(intpoly::mul(gstar, hstar), F);
    T = intpoly::divide_pk(T, Int(p), 1);

    FpPoly Tbar = reduce_mod_p(T, k);
    FpPoly g1 = gfp::gcd(k, radical, cofactor);
    FpPoly g2 = gfp::is_zero(Tbar) ? g1 : gfp::gcd(k, g1, Tbar);
    return gfp::degree(g2) > 0;
}

std::string provenance_str(Provenance p) {
    switch (p) {
        case Provenance::TableRow: return "table-row";
        case Provenance::EngineDedekind: return "engine-dedekind";
        case Provenance::EngineOre: return "engine-ore";
        case Provenance::EngineRefined: return "engine-refined";
    }
    return "?";
}

SplittingType splitting_type(const Trinomial& t, std::uint64_t p, Provenance& how,
                             std::uint64_t seed) {
    if (!dedekind_divides(t, p, seed)) {
        // Dedekind's factorization theorem: e = multiplicity, f = degree.
        SplittingType s;
        for (auto& [g, m] : factor_mod_p(t.poly(), p, seed).factors)
            s.add(m, gfp::degree(g));
        how = Provenance::EngineDedekind;
        return s;
    }
    OreEngineResult res = ore_engine(t.poly(), p, seed);
    how = res.refined ? Provenance::EngineRefined : Provenance::EngineOre;
    return res.split;
}

SplittingType splitting_type(const Trinomial& t, std::uint64_t p, std::uint64_t seed) {
    Provenance how;
    return splitting_type(t, p, how, seed);
}

bool engstrom_divides(std::uint64_t p, const SplittingType& s) {
    if (s.degree_sum() != 9)
        throw std::domain_error("engstrom_divides: splitting does not sum to 9");
    for (auto& [f, count] : s.residue_degree_counts())
        if (Int(count) > count_monic_irreducibles(p, static_cast<unsigned>(f)))
            return true;
    return false;
}

std::optional<long> engstrom_nu(std::uint64_t p, const SplittingType& s) {
    if (!engstrom_divides(p, s)) return 0;
    if (p == 2) {
        if (s == make_splitting({{1, 1}, {1, 1}, {7, 1}})) return 1;
        // two unramified degree-1 primes, two degree-3 primes, one more
        // prime of residue degree 1 (any ramification)
        long ones_11 = 0, ones_13 = 0;
        std::vector<std::pair<long, long>> rest;
        for (auto& pr : s.pairs) {
            if (pr == std::pair<long, long>{1, 1} && ones_11 < 2) { ++ones_11; continue; }
            if (pr == std::pair<long, long>{1, 3} && ones_13 < 2) { ++ones_13; continue; }
            rest.push_back(pr);
        }
        if (ones_11 == 2 && ones_13 == 2 && rest.size() == 1 && rest[0].second == 1)
            return 1;
    }
    if (p == 3) {
        if (s == make_splitting({{1, 1}, {1, 1}, {1, 1}, {6, 1}})) return 1;
    }
    return std::nullopt;  // divides, exact power not certified
}

namespace {

void require_normalized(const Trinomial& t, const char* who) {
    if (!normalization_primes(t).empty())
        throw std::domain_error(std::string(who) + ": trinomial is not normalized");
}

bool cong(const Int& x, long r, long m) { return imod(x, m) == imod(Int(r), m); }

}  // namespace

TableResult nu2_table(const Trinomial& t) {
    require_normalized(t, "nu2_table");
    const Int &a = t.a, &b = t.b;
    long va = (a == 0) ? 99 : vp_finite(2, a);  // vp(0) larger than any row needs
    long vb = vp_finite(2, b);
    Int a2 = (a == 0) ? Int(0) : unit_part(2, a);
    Int b2 = unit_part(2, b);

    std::vector<std::pair<const char*, bool>> rows;
    rows.emplace_back("T1.R1", va == 0 && vb >= 2 && vb % 2 == 0 && imod(b2 + a, 8) == 0);
    // nu2(a) = c in 1..4: nu2(b) = 2k + c, k >= 1, with b2 = -a2 (mod 8)
    for (long c = 1; c <= 4; ++c) {
        static const char* ids[] = {"T1.R2", "T1.R3", "T1.R4", "T1.R5"};
        rows.emplace_back(ids[c - 1], va == c && vb >= c + 2 && (vb - c) % 2 == 0 &&
                                          imod(b2 + a2, 8) == 0);
    }
    rows.emplace_back("T1.R6", va == 5 && vb >= 9 && (vb - 7) % 2 == 0 && imod(b2 + a2, 8) == 0);
    rows.emplace_back("T1.R7", va == 6 && vb >= 10 && (vb - 8) % 2 == 0 && imod(b2 + a2, 8) == 0);
    rows.emplace_back("T1.R8", va == 5 && vb == 7 && imod(a2 + b2, 8) == 4);
    {
        bool match = false;
        if (va == 6 && vb == 8) {
            Int disc = discriminant(t);
            if (disc != 0) {
                long vd = vp_finite(2, disc);
                Int d2 = unit_part(2, disc);
                match = vd % 2 == 0 && imod(d2 - a2 * b2, 8) == 0;
            }
        }
        rows.emplace_back("T1.R9", match);
    }

    TableResult out{0, "otherwise"};
    int matches = 0;
    for (auto& [id, hit] : rows)
        if (hit) {
            ++matches;
            out = {1, id};
        }
    if (matches > 1) throw std::logic_error("nu2_table: multiple rows matched");
    return out;
}

TableResult nu3_table(const Trinomial& t) {
    require_normalized(t, "nu3_table");
    const Int &a = t.a, &b = t.b;

    struct Row {
        const char* id;
        long am, bm;   // (a, b) mod 81
        long sm;       // a + b mod 243
    };
    static const Row kRows[] = {
        {"T2.R1a", 9, 71, 242}, {"T2.R1b", 36, 44, 242}, {"T2.R2", 63, 17, 80},
        {"T2.R3", 18, 64, 163}, {"T2.R4a", 45, 37, 1},   {"T2.R4b", 72, 10, 1},
    };

    bool disc_ok = false;
    Int disc = discriminant(t);
    if (disc != 0) {
        long vd = vp_finite(3, disc);
        Int d3 = unit_part(3, disc);
        disc_ok = vd % 2 == 0 && imod(d3, 3) == 2;  // nu3(disc) = 2k, disc_3 = -1 (mod 3)
    }

    TableResult out{0, "otherwise"};
    int matches = 0;
    for (const Row& r : kRows) {
        if (cong(a, r.am, 81) && cong(b, r.bm, 81) && cong(a + b, r.sm, 243) && disc_ok) {
            ++matches;
            out = {1, r.id};
        }
    }
    if (matches > 1) throw std::logic_error("nu3_table: multiple rows matched");
    return out;
}

long nup_general(const Trinomial& t, std::uint64_t p, bool verify, std::uint64_t seed) {
    if (p < 5) throw std::domain_error("nup_general: p >= 5 required");
    if (verify) {
        SplittingType s = splitting_type(t, p, seed);
        if (engstrom_divides(p, s))
            throw std::logic_error("nup_general: engine contradicts the p >= 5 theorem");
    }
    return 0;
}

IndexReport field_index(const Trinomial& t, std::uint64_t seed) {
    if (t.b == 0) throw std::domain_error("field_index: b = 0");
    IndexReport r;
    r.input = t;
    r.normalized = normalize(t);
    r.irreducible = is_irreducible(r.normalized);
    if (!r.irreducible) r.factor_witness = proper_factor(r.normalized);
    r.disc = discriminant(r.normalized);
    for (std::uint64_t p : {2, 3, 5, 7})
        r.disc_valuations[p] = (r.disc == 0) ? -1 : vp_finite(Int(p), r.disc);

    const bool engine_usable = r.disc != 0;

    for (std::uint64_t p : {2, 3}) {
        PrimeReport pr;
        TableResult tab = (p == 2) ? nu2_table(r.normalized) : nu3_table(r.normalized);
        pr.nu_table = tab.nu;
        pr.table_row = tab.row;
        pr.nu = tab.nu;
        pr.provenance = Provenance::TableRow;
        if (engine_usable) {
            pr.splitting = splitting_type(r.normalized, p, pr.provenance, seed);
            auto nu_eng = engstrom_nu(p, pr.splitting);
            if (!nu_eng.has_value()) {
                pr.nu_engine = -1;
                r.discrepancies.push_back(
                    "p=" + std::to_string(p) +
                    ": engine splitting " + pr.splitting.str() +
                    " has no certified Engstrom value");
            } else {
                pr.nu_engine = *nu_eng;
                if (pr.nu_engine != pr.nu_table)
                    r.discrepancies.push_back(
                        "p=" + std::to_string(p) + ": table row " + pr.table_row +
                        " gives " + std::to_string(pr.nu_table) + " but engine splitting " +
                        pr.splitting.str() + " gives " + std::to_string(pr.nu_engine));
            }
        } else {
            pr.nu_engine = pr.nu_table;
        }
        r.per_prime[p] = std::move(pr);
    }

    for (std::uint64_t p : {5, 7}) {
        PrimeReport pr;
        pr.nu = 0;
        pr.nu_table = 0;
        pr.table_row = "thm-p-ge-5";
        pr.nu_engine = 0;
        pr.provenance = Provenance::TableRow;
        if (engine_usable) {
            pr.splitting = splitting_type(r.normalized, p, pr.provenance, seed);
            if (engstrom_divides(p, pr.splitting))
                r.discrepancies.push_back("p=" + std::to_string(p) +
                                          ": engine contradicts nu_p = 0, splitting " +
                                          pr.splitting.str());
        }
        r.per_prime[p] = std::move(pr);
    }

    r.i_K = ipow(Int(2), static_cast<unsigned>(r.per_prime[2].nu)) *
            ipow(Int(3), static_cast<unsigned>(r.per_prime[3].nu));
    r.monogenic_obstructed = (r.i_K != 1);
    return r;
}

}  // namespace trindex
