#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "trindex/gffactor.hpp"
#include "trindex/trinomial.hpp"

using namespace trindex;

namespace {

FpPoly remultiply(const FpField& k, const FactorizationModP& fz) {
    FpPoly acc{fz.unit};
    for (const auto& [g, m] : fz.factors)
        for (unsigned i = 0; i < m; ++i) acc = gfp::mul(k, acc, g);
    return acc;
}

std::multiset<std::pair<int, unsigned>> degree_profile(const FactorizationModP& fz) {
    std::multiset<std::pair<int, unsigned>> out;
    for (const auto& [g, m] : fz.factors)
        out.insert({gfp::degree(g), m});
    return out;
}

}  // namespace

TEST_CASE("factor_mod_p on the trinomial family shapes") {
    // a odd, b even at p = 2: x^2 (x+1) (x^3+x+1) (x^3+x^2+1)
    Trinomial t{99, 8055028};
    auto fz = factor_mod_p(t.poly(), 2);
    REQUIRE(fz.factors.size() == 4);
    CHECK(degree_profile(fz) ==
          std::multiset<std::pair<int, unsigned>>{{1, 2}, {1, 1}, {3, 1}, {3, 1}});
    CHECK(remultiply(FpField(2), fz) == reduce_mod_p(t.poly(), FpField(2)));

    // a = -1, b = 0 mod 3: x^2 (x-1) (x^6+x^5+x^4+x^3+x^2+x+1)
    Trinomial t3{2, 3};
    auto fz3 = factor_mod_p(t3.poly(), 3);
    REQUIRE(fz3.factors.size() == 3);
    CHECK(degree_profile(fz3) ==
          std::multiset<std::pair<int, unsigned>>{{1, 2}, {1, 1}, {6, 1}});
    FpPoly sextic = {1, 1, 1, 1, 1, 1, 1};
    bool found = false;
    for (const auto& [g, m] : fz3.factors) found = found || g == sextic;
    CHECK(found);

    // a, b both even at p = 2: x^9
    auto fz2 = factor_mod_p(Trinomial{2, 4}.poly(), 2);
    REQUIRE(fz2.factors.size() == 1);
    CHECK(fz2.factors[0].factor == FpPoly{0, 1});
    CHECK(fz2.factors[0].multiplicity == 9);

    CHECK_THROWS_AS(factor_mod_p(intpoly::make({2, 4, 6}), 2), std::domain_error);
}

TEST_CASE("factorization over an extension field") {
    FpField f2(2);
    // F_4 = F_2[t]/(t^2+t+1)
    FqField f4(f2, FpPoly{1, 1, 1});

    // y^3 + 1 = (y+1)(y^2+y+1) over F_2 viewed inside F_4[y] splits the
    // quadratic further: (y+1)(y+t)(y+t+1).
    FqPoly g{{f4.one(), f4.zero(), f4.zero(), f4.one()}};
    auto fz = factor_over_extension(f4, g);
    CHECK(fz.factors.size() == 3);
    for (const auto& [h, m] : fz.factors) {
        CHECK(gfp::degree(h) == 1);
        CHECK(m == 1);
    }

    // y^2 + y + 1 is irreducible over F_2 but splits over F_4.
    FqField trivial_ext(f2, FpPoly{0, 1});  // F_2[t]/(t) = F_2
    FqPoly q{{trivial_ext.one(), trivial_ext.one(), trivial_ext.one()}};
    auto fzq = factor_over_extension(trivial_ext, q);
    REQUIRE(fzq.factors.size() == 1);
    CHECK(gfp::degree(fzq.factors[0].factor) == 2);
    CHECK(is_irreducible_fq(trivial_ext, q));

    // -y^2 + 1 = -(y-1)(y+1) over F_3.
    FpField f3(3);
    FqField f3x(f3, FpPoly{0, 1});
    FqPoly r{{f3x.one(), f3x.zero(), f3x.from_int(-1)}};
    auto fzr = factor_over_extension(f3x, r);
    REQUIRE(fzr.factors.size() == 2);
    CHECK(f3x.eq(fzr.unit, f3x.from_int(-1)));
    CHECK(gfp::eq(f3x, fzr.factors[0].factor, FqPoly{{f3x.one(), f3x.one()}}));
    CHECK(gfp::eq(f3x, fzr.factors[1].factor, FqPoly{{f3x.from_int(-1), f3x.one()}}));
}

TEST_CASE("squarefree detection") {
    FpField f2(2);
    FqField k2(f2, FpPoly{0, 1});
    // (y+1)^2 over F_2
    FqPoly sq{{k2.one(), k2.zero(), k2.one()}};
    CHECK_FALSE(gfp::is_squarefree(k2, sq));
    // y^3 + 1 over F_2: gcd with derivative y^2 is 1
    FqPoly cube{{k2.one(), k2.zero(), k2.zero(), k2.one()}};
    CHECK(gfp::is_squarefree(k2, cube));

    FpField f3(3);
    FqField k3(f3, FpPoly{0, 1});
    FqPoly y2{{k3.zero(), k3.zero(), k3.one()}};
    CHECK_FALSE(gfp::is_squarefree(k3, y2));
    CHECK_THROWS_AS(gfp::is_squarefree(k3, FqPoly{}), std::domain_error);
}

namespace {

std::vector<FpPoly> all_monic_irreducibles(const FpField& k, unsigned max_deg) {
    std::vector<FpPoly> out;
    for (unsigned d = 1; d <= max_deg; ++d) {
        std::vector<std::uint64_t> c(d + 1, 0);
        c[d] = 1;
        for (;;) {
            FpPoly f = c;
            gfp::trim(k, f);
            bool irred = true;
            for (const auto& g : out) {
                if (2 * g.size() > f.size() + 1) break;
                if (gfp::is_zero(gfp::mod(k, f, g))) { irred = false; break; }
            }
            if (irred) out.push_back(f);
            unsigned i = 0;
            while (i < d && c[i] == k.p - 1) c[i++] = 0;
            if (i == d) break;
            ++c[i];
        }
    }
    return out;
}

// Trial-division factorization oracle for degree <= 9 inputs.
std::map<FpPoly, unsigned> factor_by_trial_division(const FpField& k, FpPoly f) {
    std::map<FpPoly, unsigned> out;
    auto irreducibles = all_monic_irreducibles(k, 4);
    f = gfp::make_monic(k, f);
    for (const auto& g : irreducibles) {
        while (gfp::degree(f) >= gfp::degree(g) &&
               gfp::is_zero(gfp::mod(k, f, g))) {
            ++out[g];
            f = gfp::divmod(k, f, g).first;
        }
    }
    if (gfp::degree(f) > 0) ++out[f];  // leftover is irreducible (deg > 8/2)
    return out;
}

}  // namespace

TEST_CASE("factorizations agree with trial division for p <= 7") {
    std::mt19937_64 rng(123);
    for (std::uint64_t p : {2, 3, 5, 7}) {
        FpField k(p);
        std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
        for (int trial = 0; trial < 60; ++trial) {
            FpPoly f(10);
            for (auto& c : f) c = dist(rng);
            f[9] = 1;  // monic degree 9
            auto fz = factor_mod_p(lift_to_int(f, k), p);

            std::map<FpPoly, unsigned> got;
            for (const auto& [g, m] : fz.factors) got[g] = m;
            CHECK(got == factor_by_trial_division(k, f));

            // invariants: re-multiplication, degree bookkeeping, certified factors
            CHECK(remultiply(k, fz) == f);
            int degsum = 0;
            for (const auto& [g, m] : fz.factors) {
                degsum += gfp::degree(g) * static_cast<int>(m);
                CHECK(is_irreducible_mod_p(k, g));
            }
            CHECK(degsum == 9);
        }
    }
}

TEST_CASE("equal-degree splitting is deterministic for a fixed seed") {
    Trinomial t{99, 8055028};
    auto a = factor_mod_p(t.poly(), 2, 12345);
    auto b = factor_mod_p(t.poly(), 2, 12345);
    REQUIRE(a.factors.size() == b.factors.size());
    for (size_t i = 0; i < a.factors.size(); ++i) {
        CHECK(a.factors[i].factor == b.factors[i].factor);
        CHECK(a.factors[i].multiplicity == b.factors[i].multiplicity);
    }
}
