#include <catch_amalgamated.hpp>

#include "hauptq/eta.hpp"
#include "oracles.hpp"

using namespace hauptq;

TEST_CASE("eta expansion carries the fractional prefactor") {
    const auto e = expand_eta(8, 100);
    CHECK(e.offset24() == 8);
    CHECK_FALSE(e.is_integral());
    CHECK_THROWS_AS(e.to_laurent(), evaluation_error);
    const auto prod = e * expand_eta(16, 100);
    REQUIRE(prod.is_integral());
    const auto s = prod.to_laurent();
    CHECK(s.order() == 1);
    const auto ref = oracle::naive_eta_product({{8, 1}, {16, 1}}, 99);
    for (std::int64_t n = 1; n < 100; ++n) CHECK(s[n] == ref[n - 1]);
}

TEST_CASE("offsets normalise into [0, 24)") {
    const FractionalSeries f(50, LaurentSeries::constant(1, 10));
    CHECK(f.offset24() == 2);
    CHECK(f.body().order() == 2);
    const FractionalSeries g(-1, LaurentSeries::constant(1, 10));
    CHECK(g.offset24() == 23);
    CHECK(g.body().order() == -1);
}

TEST_CASE("eta quotient construction") {
    CHECK_THROWS_AS(EtaQuotient(6, {{4, 1}}), construction_error);
    CHECK_THROWS_AS(EtaQuotient(6, {{2, 0}}), construction_error);
    CHECK_THROWS_AS(EtaQuotient(0, {{1, 1}}), construction_error);
    const EtaQuotient f(6, {{1, -3}, {2, 3}, {3, 9}, {6, -9}, {1, 0}});
    CHECK(f.exponent(3) == 9);
    CHECK(f.exponent(5) == 0);
    CHECK(f.offset24() == -3 + 6 + 27 - 54);
}

TEST_CASE("quotient text round-trips") {
    const EtaQuotient f(6, {{1, -3}, {2, 3}, {3, 9}, {6, -9}});
    CHECK(to_text(f) == "N=6; 1^-3 * 2^3 * 3^9 * 6^-9");
    CHECK(parse_eta_quotient(to_text(f)) == f);
    CHECK(parse_eta_quotient("N=6; 2^3 * 3^9 * 1^-3 * 6^-9") == f);
    CHECK(parse_eta_quotient("N=128; 8 * 16") == EtaQuotient(128, {{8, 1}, {16, 1}}));
    CHECK(parse_eta_quotient("N=4; 2 * 2^+1") == EtaQuotient(4, {{2, 2}}));
    CHECK_THROWS_AS(parse_eta_quotient("N=6; 4^1"), parse_error);
    CHECK_THROWS_AS(parse_eta_quotient("6; 1^1"), parse_error);
    CHECK_THROWS_AS(parse_eta_quotient("N=6; 1^"), parse_error);
}

TEST_CASE("Ligozat data for the weight-one eta products") {
    const auto a = ligozat_check(parse_eta_quotient("N=128; 8^1 * 16^1"));
    CHECK(a.weight == 1);
    CHECK(a.cond24_upper);
    CHECK(a.cond24_lower);
    REQUIRE(a.character_kernel);
    CHECK(*a.character_kernel == -2);
    CHECK(*a.fundamental_discriminant == -8);
    CHECK(*a.character_value == -128);

    const auto b = ligozat_check(parse_eta_quotient("N=80; 4^1 * 20^1"));
    CHECK(b.weight == 1);
    CHECK(b.cond24_upper);
    CHECK(b.cond24_lower);
    CHECK(*b.character_kernel == -5);
    CHECK(*b.fundamental_discriminant == -20);

    const auto half = ligozat_check(parse_eta_quotient("N=1; 1^1"));
    CHECK(half.weight == Rational(1, 2));
    CHECK_FALSE(half.integral_weight);
    CHECK_FALSE(half.character_value);
    CHECK_FALSE(half.cond24_upper);
}

TEST_CASE("cusp orders") {
    for (const char* text : {"N=128; 8 * 16", "N=80; 4 * 20"}) {
        const auto rep = holomorphy_report(parse_eta_quotient(text));
        CHECK(rep.holomorphic);
        CHECK(rep.cuspidal);
        for (const auto& c : rep.cusps) CHECK(sgn(c.order) > 0);
    }
    // Delta = eta^24 at level 1 vanishes to order 1 at infinity
    const auto delta = parse_eta_quotient("N=1; 1^24");
    CHECK(cusp_order(delta, 1, 1).order == 1);
    // the Hauptmodul body for level 6 has a pole somewhere
    const auto h = holomorphy_report(parse_eta_quotient("N=6; 1^-3 * 2^3 * 3^9 * 6^-9"));
    CHECK_FALSE(h.holomorphic);
    CHECK_THROWS_AS(cusp_order(delta, 1, 2), domain_error);
}

TEST_CASE("expand_quotient agrees with the naive product") {
    const EtaQuotient f(10, {{1, -1}, {2, 1}, {5, 5}, {10, -5}});
    const auto s = expand_quotient(f, 300);
    CHECK(s.offset24() == 0);
    const auto ref = oracle::naive_eta_product({{1, -1}, {2, 1}, {5, 5}, {10, -5}}, 300);
    const auto body = s.to_laurent();
    // offset -24 means a q^-1 prefactor
    for (std::int64_t n = -1; n < body.precision(); ++n) CHECK(body[n] == ref[n + 1]);
}
