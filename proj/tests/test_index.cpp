#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trindex/index.hpp"
#include "trindex/valuation.hpp"

using namespace trindex;

TEST_CASE("Dedekind criterion") {
    CHECK(dedekind_divides({0, 4}, 2));        // index valuation 4 at 2
    CHECK_FALSE(dedekind_divides({0, 2}, 2));  // Eisenstein
    // disc(54,87) is a 5-adic unit, so 5 cannot divide the index
    REQUIRE(discriminant({54, 87}) % 5 != 0);
    CHECK_FALSE(dedekind_divides({54, 87}, 5));
    CHECK(dedekind_divides({99, 8055028}, 2));
    CHECK(dedekind_divides({90, 19835}, 3));
}

TEST_CASE("splitting types of the worked examples") {
    CHECK(splitting_type({99, 8055028}, 2) ==
          make_splitting({{1, 1}, {1, 1}, {1, 1}, {1, 3}, {1, 3}}));
    CHECK(splitting_type({64, 256}, 2) == make_splitting({{1, 1}, {1, 1}, {7, 1}}));
    CHECK(splitting_type({90, 19835}, 3) ==
          make_splitting({{1, 1}, {1, 1}, {1, 1}, {6, 1}}));

    Provenance how;
    splitting_type({54, 87}, 2, how);
    CHECK(how == Provenance::EngineDedekind);
    splitting_type({64, 256}, 2, how);
    CHECK(how == Provenance::EngineRefined);
}

TEST_CASE("Engstrom criterion") {
    CHECK(engstrom_divides(2, make_splitting({{1, 1}, {1, 1}, {1, 1}, {1, 3}, {1, 3}})));
    CHECK_FALSE(engstrom_divides(2, make_splitting({{9, 1}})));
    CHECK_FALSE(engstrom_divides(3, make_splitting({{1, 1}, {1, 2}, {6, 1}})));
    CHECK(engstrom_divides(3, make_splitting({{1, 1}, {1, 1}, {1, 1}, {6, 1}})));
    CHECK_THROWS_AS(engstrom_divides(2, make_splitting({{1, 1}})), std::domain_error);
}

TEST_CASE("Engstrom exact values") {
    CHECK(engstrom_nu(2, make_splitting({{1, 1}, {1, 1}, {7, 1}})) == 1);
    CHECK(engstrom_nu(3, make_splitting({{1, 1}, {1, 1}, {1, 1}, {6, 1}})) == 1);
    CHECK(engstrom_nu(2, make_splitting({{3, 1}, {3, 2}})) == 0);
    CHECK(engstrom_nu(2, make_splitting({{1, 1}, {1, 1}, {1, 1}, {1, 3}, {1, 3}})) == 1);
    // divisor type outside the certified list stays unknown
    CHECK(engstrom_nu(2, make_splitting({{1, 1}, {1, 1}, {1, 1}, {1, 1}, {5, 1}})) ==
          std::nullopt);
}

TEST_CASE("nu_2 table") {
    CHECK(nu2_table({99, 8055028}).nu == 1);
    CHECK(nu2_table({99, 8055028}).row == "T1.R1");
    CHECK(nu2_table({64, 256}).nu == 1);
    CHECK(nu2_table({64, 256}).row == "T1.R9");
    CHECK(nu2_table({54, 87}).nu == 0);
    CHECK_THROWS_AS(nu2_table({128, 512}), std::domain_error);  // not normalized
}

TEST_CASE("nu_3 table") {
    CHECK(nu3_table({90, 19835}).nu == 1);
    CHECK(nu3_table({90, 19835}).row == "T2.R1a");
    CHECK(nu3_table({99, 8055028}).nu == 1);
    CHECK(nu3_table({99, 8055028}).row == "T2.R3");
    CHECK(nu3_table({64, 256}).nu == 0);
    CHECK(nu3_table({54, 87}).nu == 0);
}

TEST_CASE("nu_p vanishes for p >= 5") {
    CHECK(nup_general({1, 3}, 5, true) == 0);    // (a,b) = (1,3) mod 5
    CHECK(nup_general({3, 7}, 7, true) == 0);    // 7 | b, nu7(a) = 0
    CHECK(nup_general({5, 11}, 11, true) == 0);
    CHECK_THROWS_AS(nup_general({1, 3}, 3), std::domain_error);
}

TEST_CASE("field index of the worked examples") {
    auto r1 = field_index({54, 87});
    CHECK(r1.i_K == 1);
    CHECK(r1.irreducible);
    CHECK_FALSE(r1.monogenic_obstructed);
    CHECK(r1.discrepancies.empty());

    auto r2 = field_index({64, 256});
    CHECK(r2.i_K == 2);
    CHECK(r2.monogenic_obstructed);
    CHECK(r2.discrepancies.empty());
    CHECK_FALSE(r2.irreducible);  // (x + 2) divides; tables and engine still agree
    REQUIRE(r2.factor_witness.has_value());
    CHECK(intpoly::divides_monic(*r2.factor_witness, Trinomial{64, 256}.poly()));

    auto r3 = field_index({90, 19835});
    CHECK(r3.i_K == 3);
    CHECK(r3.irreducible);
    CHECK(r3.discrepancies.empty());

    auto r4 = field_index({99, 8055028});
    CHECK(r4.i_K == 6);
    CHECK(r4.irreducible);
    CHECK(r4.discrepancies.empty());
    CHECK(r4.per_prime[2].nu == 1);
    CHECK(r4.per_prime[3].nu == 1);
    CHECK(r4.per_prime[5].nu == 0);
    CHECK(r4.per_prime[7].nu == 0);

    CHECK_THROWS_AS(field_index({1, 0}), std::domain_error);
}

TEST_CASE("table and engine agree on a smoke grid") {
    long i_counts[7] = {0, 0, 0, 0, 0, 0, 0};
    for (long a = 1; a <= 40; ++a) {
        for (long b = 1; b <= 40; ++b) {
            Trinomial t{a, b};
            if (!is_irreducible(t)) continue;
            auto r = field_index(t);
            CAPTURE(a);
            CAPTURE(b);
            REQUIRE(r.discrepancies.empty());
            CHECK(r.per_prime[2].nu <= 1);
            CHECK(r.per_prime[3].nu <= 1);
            bool legal = r.i_K == 1 || r.i_K == 2 || r.i_K == 3 || r.i_K == 6;
            CHECK(legal);
            i_counts[r.i_K.convert_to<long>()]++;
        }
    }
    CHECK(i_counts[1] > 0);  // the grid certainly contains monogenic-compatible cases
}

TEST_CASE("normalization is applied before the tables") {
    // (a, b) and (a*2^7, b*2^9) define the same field
    auto r1 = field_index({99, 8055028});
    auto r2 = field_index({99 * 128, Int(8055028) * 512});
    CHECK(r1.i_K == r2.i_K);
    CHECK(r2.normalized.a == 99);
    CHECK(r2.normalized.b == 8055028);
}
