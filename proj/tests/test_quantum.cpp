#include <random>

#include "doctest.h"
#include "polytri/quantum.hpp"
#include "polytri/trinomial.hpp"

using namespace polytri;

namespace {
Poly P(const Field& f, std::vector<Elem> asc) { return Poly(f, std::move(asc)); }
}

TEST_CASE("css construction and parameter formula") {
    const Field& F2 = Field::get(2, 1);
    Poly mod = P(F2, {1, 0, 1, 0, 1});  // x^4+x^2+1
    Poly g = P(F2, {1, 1, 1});

    // g2 given directly; g2 = modulus makes C2 the zero code.
    auto cand = css_from_nested(mod, g, mod, GivenPoly::Generator);
    CHECK(cand.n == 4);
    CHECK(cand.k == 2);
    CHECK(cand.C2.k() == 0);
    CHECK(cand.h2.is_one());
    CHECK(cand.label_field == "2^2");

    // g2 = g1 gives k = 0.
    auto same = css_from_nested(mod, g, g, GivenPoly::Generator);
    CHECK(same.k == 0);
    auto dsame = css_distance(same);
    CHECK(dsame.exact);
    CHECK(dsame.d == 0);

    // Check polynomial form: h2 = g means g2 = modulus / g = g here.
    auto viah = css_from_nested(mod, g, g, GivenPoly::CheckPoly);
    CHECK(viah.C2.gen() == g);
    CHECK(viah.k == 0);

    CHECK_THROWS_AS(css_from_nested(mod, g, P(F2, {1, 1}), GivenPoly::Generator),
                    NotADivisor);
}

TEST_CASE("css nesting is enforced") {
    const Field& F5 = Field::get(5, 1);
    Poly mod = P(F5, {4, 0, 0, 0, 1});  // x^4 - 1
    Poly g1 = P(F5, {4, 1});            // x - 1
    Poly g2 = P(F5, {3, 4, 1});         // (x+1)(x-2) = x^2 + 4x + 3
    CHECK(divides(g2, mod));
    CHECK(!divides(g1, g2));
    CHECK_THROWS_AS(css_from_nested(mod, g1, g2, GivenPoly::Generator), NotNested);
    // And a valid nested pair works.
    Poly g2ok = g1 * P(F5, {1, 1});  // (x-1)(x+1) = x^2 - 1
    auto cand = css_from_nested(mod, g1, g2ok, GivenPoly::Generator);
    CHECK(cand.k == 1);
}

TEST_CASE("css distance tiny cases") {
    const Field& F2 = Field::get(2, 1);
    Poly mod = P(F2, {1, 0, 1, 0, 1});
    // C2 = {0}, C1 = full space: d = 1.
    auto full = css_from_nested(mod, Poly::one(F2), mod, GivenPoly::Generator);
    auto dfull = css_distance(full);
    CHECK(dfull.exact);
    CHECK(dfull.d == 1);

    // g1 = x^2+x+1, g2 = modulus: min(minwt C1 = 2, dual side = 1) = 1.
    auto cand = css_from_nested(mod, P(F2, {1, 1, 1}), mod, GivenPoly::Generator);
    auto d = css_distance(cand);
    CHECK(d.exact);
    CHECK(d.side1 == 2);
    CHECK(d.side2 == 1);
    CHECK(d.d == 1);
    CHECK(!d.claimed_not_verified);
}

TEST_CASE("table row [[10,2,4]] over GF(13)") {
    const Field& F13 = Field::get(13, 1);
    Poly mod = Trinomial(F13, 10, 1, 2, 1).poly();  // x^10 - 2x - 1
    Poly g1 = P(F13, {8, 10, 1, 1, 1});             // "8A111"
    Poly h2 = P(F13, {12, 6, 10, 1, 1});            // "C6A11"
    auto cand = css_from_nested(mod, g1, h2, GivenPoly::CheckPoly);
    CHECK(cand.n == 10);
    CHECK(cand.k == 2);
    CHECK(cand.label_field == "13^2");
    auto d = css_distance(cand);
    CHECK(d.exact);
    CHECK(d.d == 4);

    // A tiny budget produces a bracket flagged as unverified.
    auto claimed = css_distance(cand, 1000);
    CHECK(!claimed.exact);
    CHECK(claimed.claimed_not_verified);
    if (claimed.d > 0) CHECK(claimed.d >= 4);
}

TEST_CASE("divisor lifting preserves css structure") {
    const Field& F5 = Field::get(5, 1);
    std::mt19937_64 rng(4242);
    int done = 0;
    while (done < 15) {
        long long m = 2 + (long long)(rng() % 11);
        long long t = 2 + (long long)(rng() % 5);
        if (m * t > 60) continue;
        Elem b = Elem(1 + rng() % 4);
        // x^m - b | x^(tm) - b^t always; binomial_divides must agree.
        Elem bt = 1;
        for (long long j = 0; j < t; ++j) bt = F5.mul(bt, b);
        CHECK(binomial_divides(F5, m, b, m * t, bt));

        Poly small_mod = Poly::monomial(F5, m) - Poly::constant(F5, b);
        auto divs = monic_divisors(factor(small_mod), F5);
        Poly g1 = divs[rng() % divs.size()];
        Poly g2 = g1 * divs[rng() % divs.size()];
        if (!divides(g2, small_mod)) continue;
        ++done;
        auto cand = css_from_nested(small_mod, g1, g2, GivenPoly::Generator);

        // Composition x -> x^t embeds both codes in x^(tm) - b.
        Poly big_mod = Poly::monomial(F5, m * t) - Poly::constant(F5, b);
        CHECK(compose_xpow(small_mod, t) == big_mod);
        auto lifted = css_from_nested(big_mod, compose_xpow(g1, t),
                                      compose_xpow(g2, t), GivenPoly::Generator);
        CHECK(lifted.n == cand.n * t);
        CHECK(lifted.k == cand.k * t);
    }
}
