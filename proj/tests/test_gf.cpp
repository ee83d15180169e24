#include "doctest.h"
#include "polytri/gf.hpp"

using namespace polytri;

TEST_CASE("prime field arithmetic") {
    const Field& F = Field::get(7, 1);
    CHECK(F.q() == 7);
    CHECK(F.add(5, 4) == 2);
    CHECK(F.mul(5, 4) == 6);
    CHECK(F.neg(3) == 4);
    CHECK(F.inv(3) == 5);
    CHECK(F.sub(2, 5) == 4);
    CHECK(F.pow(3, 6) == 1);
    CHECK(F.pow(2, -1) == 4);
    CHECK_THROWS_AS(F.inv(0), DivisionByZero);
    // Smallest primitive root of 7.
    CHECK(F.generator() == 3);
    CHECK(F.mult_order(3) == 6);
    CHECK(F.mult_order(2) == 3);
    CHECK(F.mult_order(6) == 2);
}

TEST_CASE("GF(4) tables") {
    const Field& F = Field::get(2, 2);
    // Modulus x^2 + x + 1, generator x (index 2).
    CHECK(F.modulus() == std::vector<std::uint8_t>({1, 1, 1}));
    CHECK(F.generator() == 2);
    CHECK(F.mul(2, 2) == 3);   // x * x = x + 1
    CHECK(F.mul(2, 3) == 1);   // x (x+1) = 1
    CHECK(F.inv(2) == 3);
    CHECK(F.add(2, 3) == 1);
    CHECK(F.neg(3) == 3);      // char 2
    // Square roots: (x+1)^2 = x, x^2 = x+1.
    CHECK(F.pth_root(2) == 3);
    CHECK(F.pth_root(3) == 2);
    CHECK(F.mult_order(2) == 3);
}

TEST_CASE("GF(8) and GF(9) moduli") {
    const Field& F8 = Field::get(2, 3);
    CHECK(F8.modulus() == std::vector<std::uint8_t>({1, 1, 0, 1}));  // x^3+x+1
    CHECK(F8.mult_order(F8.generator()) == 7);

    const Field& F9 = Field::get(3, 2);
    CHECK(F9.modulus() == std::vector<std::uint8_t>({2, 1, 1}));  // x^2+x+2
    CHECK(F9.generator() == 3);  // the element x
    CHECK(F9.mult_order(3) == 8);
    // x^4 = 2 in GF(9) with this modulus.
    CHECK(F9.pow(3, 4) == 2);
}

TEST_CASE("field axioms hold for every supported q") {
    for (auto [p, w] : {std::pair{2, 1}, {3, 1}, {5, 1}, {7, 1},  {11, 1},
                        {13, 1}, {17, 1}, {2, 2}, {3, 2}, {2, 3}, {5, 2},
                        {7, 2}, {2, 4},  {3, 3}, {2, 5}, {2, 6}}) {
        const Field& F = Field::get(p, w);
        CHECK(F.q() <= 64);
        for (int x = 0; x < F.q(); ++x) {
            CHECK(F.add(Elem(x), F.neg(Elem(x))) == 0);
            CHECK(F.mul(Elem(x), 1) == x);
            if (x != 0) {
                CHECK(F.mul(Elem(x), F.inv(Elem(x))) == 1);
                CHECK((F.q() - 1) % F.mult_order(Elem(x)) == 0);
            }
            CHECK(F.pow(F.pth_root(Elem(x)), F.p()) == x);
            for (int y = 0; y < F.q(); ++y) {
                CHECK(F.add(Elem(x), Elem(y)) == F.add(Elem(y), Elem(x)));
                CHECK(F.mul(Elem(x), Elem(y)) == F.mul(Elem(y), Elem(x)));
                // Frobenius is additive.
                CHECK(F.pow(F.add(Elem(x), Elem(y)), F.p()) ==
                      F.add(F.pow(Elem(x), F.p()), F.pow(Elem(y), F.p())));
            }
        }
        CHECK(F.mult_order(F.generator()) == F.q() - 1);
    }
}

TEST_CASE("interning and parsing") {
    CHECK(&Field::get(3, 1) == &Field::get(3, 1));
    CHECK(&Field::parse("4") == &Field::get(2, 2));
    CHECK(&Field::parse("2^2") == &Field::get(2, 2));
    CHECK(&Field::parse("9") == &Field::get(3, 2));
    CHECK(&Field::parse("13") == &Field::get(13, 1));
    CHECK(&Field::parse("7^2") == &Field::get(7, 2));
    CHECK_THROWS_AS(Field::parse("6"), Error);
    CHECK_THROWS_AS(Field::parse("128"), Error);
    CHECK_THROWS_AS(Field::parse("abc"), BadToken);
    CHECK_THROWS_AS(Field::get(4, 1), Error);
    CHECK(Field::get(2, 6).q() == 64);
}

TEST_CASE("element text round trip") {
    const Field& F17 = Field::get(17, 1);
    CHECK(F17.format(12) == "C");
    CHECK(F17.parse_elem("C") == 12);
    CHECK(F17.parse_elem("12") == 12);
    CHECK(F17.format(9) == "9");
    CHECK_THROWS_AS(F17.parse_elem("H"), BadToken);

    const Field& F9 = Field::get(3, 2);
    for (int x = 0; x < 9; ++x)
        CHECK(F9.parse_elem(F9.format(Elem(x))) == x);
    CHECK(F9.parse_elem("a^4") == 2);
    CHECK(F9.from_int(-1) == 2);
    CHECK(F9.from_int(5) == 2);
}
