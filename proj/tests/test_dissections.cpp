#include <catch_amalgamated.hpp>

#include "hauptq/dissections.hpp"

using namespace hauptq;

TEST_CASE("every registered identity verifies") {
    for (const auto& id : identity_registry()) {
        INFO(to_string(id));
        const auto rep = verify(id, 300);
        CHECK(rep.ok);
        CHECK(rep.checked_upto == 300);
    }
}

TEST_CASE("identity ids parse in full and short form") {
    for (const auto& id : identity_registry()) CHECK(parse_identity_id(to_string(id)) == id);
    CHECK(parse_identity_id("D4").kind == IdentityId::Kind::D4);
    CHECK(parse_identity_id("B(5)") == IdentityId{IdentityId::Kind::Binomial, 5});
    CHECK_THROWS_AS(parse_identity_id("D8"), catalog_error);
    CHECK_THROWS_AS(parse_identity_id("B(4)"), catalog_error);
}

TEST_CASE("the binomial identity fails over the integers") {
    const auto sides = build_sides({IdentityId::Kind::Binomial, 1}, 50);
    const auto exact = congruent_mod(sides.lhs, sides.rhs, Modulus::exact(), 50);
    CHECK_FALSE(exact.congruent);
    REQUIRE(exact.mismatch);
    CHECK(exact.mismatch->exponent == 1);
}

TEST_CASE("derived sides agree with the printed ones") {
    const auto d4 = build_sides({IdentityId::Kind::D4}, 200);
    CHECK(congruent_mod(d4.rhs, derive_d4_rhs(200), Modulus::exact(), 200).congruent);
    const auto d6 = build_sides({IdentityId::Kind::D6}, 200);
    CHECK(congruent_mod(d6.rhs, derive_d6_rhs(200), Modulus::exact(), 200).congruent);
}

TEST_CASE("five-dissection support") {
    // (q^2;q^2)/(q^5;q^5) has no exponents congruent to 1 or 3 mod 5
    const LaurentSeries s = euler_series(2, 500) / euler_series(5, 500);
    CHECK(five_dissect_check(s, {1, 3}));
    CHECK_FALSE(five_dissect_check(s, {2}));
    CHECK(rr_R_series(10)[0] == 1);
    CHECK_THROWS_AS(rr_R_series(0), domain_error);
}

TEST_CASE("perturbing one side is detected") {
    auto sides = build_sides({IdentityId::Kind::D1}, 100);
    const auto bumped = sides.rhs + LaurentSeries::monomial(1, 37, 100);
    const auto rep = congruent_mod(sides.lhs, bumped, sides.modulus, 100);
    CHECK_FALSE(rep.congruent);
    CHECK(rep.mismatch->exponent == 37);
}
