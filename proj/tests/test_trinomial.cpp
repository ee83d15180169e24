#include <random>

#include "doctest.h"
#include "polytri/trinomial.hpp"

using namespace polytri;

namespace {
Poly P(const Field& f, std::vector<Elem> asc) { return Poly(f, std::move(asc)); }
}

TEST_CASE("trinomial basics") {
    const Field& F3 = Field::get(3, 1);
    Trinomial t(F3, 4, 2, 1, 1);
    CHECK(t.poly() == P(F3, {2, 0, 2, 0, 1}));  // x^4 + 2x^2 + 2
    CHECK(t.name() == "x^4 - 1*x^2 - 1");
    CHECK_THROWS_AS(Trinomial(F3, 2, 2, 1, 1), Error);
    CHECK_THROWS_AS(Trinomial(F3, 3, 1, 0, 1), Error);
    CHECK_THROWS_AS(Trinomial(F3, 3, 1, 1, 5), Error);
}

TEST_CASE("trinomial square roots") {
    const Field& F3 = Field::get(3, 1);
    auto r = trinomial_sqrt(F3, 2, 1, 1, 2);  // x^2 - x - 2 = (x+1)^2
    REQUIRE(r.has_value());
    CHECK(*r == P(F3, {1, 1}));

    const Field& F2 = Field::get(2, 1);
    auto r2 = trinomial_sqrt(F2, 4, 2, 1, 1);  // x^4 + x^2 + 1
    REQUIRE(r2.has_value());
    CHECK(*r2 == P(F2, {1, 1, 1}));

    const Field& F5 = Field::get(5, 1);
    CHECK(!trinomial_sqrt(F5, 4, 1, 1, 1).has_value());  // i != n/2
    auto r3 = trinomial_sqrt(F5, 4, 2, 1, 1);  // (x^2+2)^2 = x^4 - x^2 - 1
    REQUIRE(r3.has_value());
    CHECK(*r3 == P(F5, {2, 0, 1}));
    CHECK(!trinomial_sqrt(F5, 4, 2, 1, 2).has_value());  // -2 = 3 is a nonresidue
    // Round trip: square a random trinomial-shaped root and recover it.
    std::mt19937_64 rng(5);
    for (const Field* Fp : {&F2, &F3, &F5, &Field::get(2, 2)}) {
        const Field& F = *Fp;
        std::uniform_int_distribution<int> coeff(1, F.q() - 1);
        for (int trial = 0; trial < 50; ++trial) {
            long long m = 2 + (long long)(rng() % 6);
            long long j = 1 + (long long)(rng() % (std::size_t)m);
            if (j >= m) continue;
            Poly root = Poly::monomial(F, m) +
                        Poly::monomial(F, j, Elem(coeff(rng))) +
                        Poly::constant(F, Elem(coeff(rng)));
            Poly sq = root * root;
            // sq = x^2m - a x^? - b only when cross terms vanish (char 2) or
            // j = m/2... just verify: whenever sq has exactly 3 terms, the
            // returned root must square back to sq.
            std::vector<long long> supp;
            for (long long d = 0; d <= sq.degree(); ++d)
                if (sq.coeff(d) != 0) supp.push_back(d);
            if (supp.size() != 3 || supp[0] != 0) continue;
            Elem a = F.neg(sq.coeff(supp[1]));
            Elem b = F.neg(sq.coeff(0));
            auto rec = trinomial_sqrt(F, 2 * m, supp[1], a, b);
            REQUIRE(rec.has_value());
            CHECK(*rec * *rec == sq);
        }
    }
}

TEST_CASE("multiplicity profile verdicts") {
    const Field& F2 = Field::get(2, 1);
    auto p1 = multiplicity_profile(Trinomial(F2, 4, 2, 1, 1));
    CHECK(p1.c1 == 2);
    CHECK(p1.d1 == 1);
    CHECK(p1.z == 1);
    CHECK(p1.verdict == MultVerdict::UniformPZ);
    CHECK(p1.actual.factors.size() == 1);
    CHECK(p1.actual.factors[0].first == P(F2, {1, 1, 1}));
    CHECK(p1.actual.factors[0].second == 2);

    const Field& F3 = Field::get(3, 1);
    auto p2 = multiplicity_profile(Trinomial(F3, 3, 1, 1, 1));
    CHECK(p2.z == 0);
    CHECK(p2.verdict == MultVerdict::UniformPZ);
    CHECK(p2.actual.squarefree());

    auto p3 = multiplicity_profile(Trinomial(F3, 6, 3, 1, 2));
    CHECK(p3.c1 == 1);
    CHECK(p3.d1 == 1);
    CHECK(p3.z == 1);
    CHECK(p3.verdict == MultVerdict::Uniform2PZ);
    CHECK(p3.actual.factors.size() == 1);
    CHECK(p3.actual.factors[0].first == P(F3, {1, 1}));
    CHECK(p3.actual.factors[0].second == 6);

    // (x+1)^2 (x+2) = x^3 + 4x^2 + 2 over GF(5): mixed multiplicities.
    const Field& F5 = Field::get(5, 1);
    auto p4 = multiplicity_profile(Trinomial(F5, 3, 2, 1, 3));
    CHECK(p4.verdict == MultVerdict::Mixed);
    CHECK(p4.d == P(F5, {1, 1}));
    CHECK(p4.Dprime == 1);
}

TEST_CASE("multiplicity profile random property") {
    std::mt19937_64 rng(99);
    for (const Field* Fp : {&Field::get(2, 1), &Field::get(3, 1),
                            &Field::get(5, 1), &Field::get(2, 2),
                            &Field::get(3, 2)}) {
        const Field& F = *Fp;
        std::uniform_int_distribution<int> coeff(1, F.q() - 1);
        for (int trial = 0; trial < 150; ++trial) {
            long long n = 2 + (long long)(rng() % 24);
            long long i = 1 + (long long)(rng() % (std::size_t)(n - 1));
            Trinomial t(F, n, i, Elem(coeff(rng)), Elem(coeff(rng)));
            // Must not throw ProfileMismatch: the theorem predicts exactly.
            auto prof = multiplicity_profile(t);
            CHECK((prof.verdict != MultVerdict::Unresolved ||
                   !prof.predicted.size()));
        }
    }
}

TEST_CASE("GF(2) multiplicity is the 2-part of gcd(n, i)") {
    const Field& F2 = Field::get(2, 1);
    for (long long n = 2; n <= 20; ++n) {
        for (long long i = 1; i < n; ++i) {
            auto prof = multiplicity_profile(Trinomial(F2, n, i, 1, 1));
            long long z2 = 1;
            long long g = std::gcd(n, i);
            while (g % 2 == 0) {
                z2 *= 2;
                g /= 2;
            }
            for (const auto& [p, m] : prof.actual.factors)
                CHECK(m % z2 == 0);
        }
    }
}

TEST_CASE("sparse uniform multiplicity") {
    const Field& F2 = Field::get(2, 1);
    auto s1 = sparse_uniform_multiplicity(P(F2, {1, 0, 1, 0, 1}));  // x^4+x^2+1
    REQUIRE(s1.has_value());
    CHECK(*s1 == 2);

    const Field& F3 = Field::get(3, 1);
    std::vector<Elem> c(10, 0);
    c[1] = c[3] = c[9] = 1;
    auto s2 = sparse_uniform_multiplicity(P(F3, c));  // x^9+x^3+x
    REQUIRE(s2.has_value());
    CHECK(*s2 == 1);

    std::vector<Elem> c2(7, 0);
    c2[0] = c2[4] = c2[6] = 1;
    CHECK(!sparse_uniform_multiplicity(P(F3, c2)).has_value());  // x^6+x^4+1

    // Genuine counterexample to the uniform prediction: the non-power
    // exponent attains the reduced minimum. 2x^25+3x^10+x^5 over GF(5) is
    // (2x^5+3x^2+x)^5 and x+1 divides that base twice.
    const Field& F5 = Field::get(5, 1);
    std::vector<Elem> c3(26, 0);
    c3[5] = 1;
    c3[10] = 3;
    c3[25] = 2;
    CHECK_THROWS_AS(sparse_uniform_multiplicity(P(F5, c3)), ProfileMismatch);
}

TEST_CASE("reversible counts") {
    const Field& F2 = Field::get(2, 1);
    auto d1 = reversible_count(P(F2, {1, 0, 1, 0, 1}));
    CHECK(d1.self_parts.size() == 1);
    CHECK(d1.count == 3);
    CHECK(d1.strict_count == 3);
    CHECK(d1.brute_count == 3);

    auto d2 = reversible_count(P(F2, {1, 1, 1}));
    CHECK(d2.count == 2);

    const Field& F3 = Field::get(3, 1);
    auto d3 = reversible_count(Trinomial(F3, 3, 1, 1, 1).poly());
    CHECK(d3.count == 1);
    CHECK(d3.plain_part.degree() == 3);

    // x^3 - 2x^2 - 2 = (x+2)(x^2+2x+2): one semi-reciprocal linear factor.
    auto d4 = reversible_count(P(F3, {1, 0, 1, 1}));
    CHECK(d4.semi_parts.size() == 1);
    CHECK(d4.semi_parts[0].w == 1);
    CHECK(d4.count == 2);
    CHECK(d4.strict_count == 1);
    CHECK(d4.brute_count == 2);

    // x^4 + 1 = (x^2+x+2)(x^2+2x+2) over GF(3): a reciprocal pair.
    auto d5 = reversible_count(P(F3, {1, 0, 0, 0, 1}));
    CHECK(d5.pair_parts.size() == 1);
    CHECK(d5.count == 2);

    CHECK_THROWS_AS(reversible_count(P(F3, {0, 1})), ZeroConstantTerm);
    CHECK_THROWS_AS(reversible_count(Poly::one(F3)), ConstantPolynomial);
}

TEST_CASE("reversible count formula matches brute force exhaustively (small)") {
    for (const Field* Fp : {&Field::get(2, 1), &Field::get(3, 1)}) {
        const Field& F = *Fp;
        for (long long n = 2; n <= 10; ++n)
            for (long long i = 1; i < n; ++i)
                for (int a = 1; a < F.q(); ++a)
                    for (int b = 1; b < F.q(); ++b) {
                        auto dec = reversible_count(
                            Trinomial(F, n, i, Elem(a), Elem(b)).poly());
                        CHECK(dec.brute_count == dec.count);
                    }
    }
}

TEST_CASE("trinomial gcds") {
    const Field& F5 = Field::get(5, 1);
    Poly g = trinomial_gcd(Trinomial(F5, 2, 1, 3, 3), Trinomial(F5, 2, 1, 4, 2));
    CHECK(g == P(F5, {4, 1}));  // x - 1

    const Field& F3 = Field::get(3, 1);
    CHECK(trinomial_gcd(Trinomial(F3, 4, 2, 1, 1), Trinomial(F3, 4, 2, 2, 1)).is_one());
    CHECK(trinomial_gcd(Trinomial(F5, 4, 2, 1, 1), Trinomial(F5, 4, 2, 1, 2)).is_one());
    CHECK_THROWS_AS(trinomial_gcd(Trinomial(F5, 2, 1, 3, 3), Trinomial(F5, 2, 1, 3, 3)),
                    Error);
    CHECK_THROWS_AS(trinomial_gcd(Trinomial(F5, 2, 1, 3, 3), Trinomial(F5, 3, 1, 3, 3)),
                    Error);
}

TEST_CASE("trinomial gcd over GF(3) is always a unit (exhaustive n <= 10)") {
    const Field& F3 = Field::get(3, 1);
    for (long long n = 2; n <= 10; ++n)
        for (long long i = 1; i < n; ++i)
            for (int a1 = 1; a1 <= 2; ++a1)
                for (int b1 = 1; b1 <= 2; ++b1)
                    for (int a2 = 1; a2 <= 2; ++a2)
                        for (int b2 = 1; b2 <= 2; ++b2) {
                            if (a1 == a2 && b1 == b2) continue;
                            CHECK(trinomial_gcd(
                                      Trinomial(F3, n, i, Elem(a1), Elem(b1)),
                                      Trinomial(F3, n, i, Elem(a2), Elem(b2)))
                                      .is_one());
                        }
}

TEST_CASE("binomial divisibility") {
    const Field& F5 = Field::get(5, 1);
    CHECK(binomial_divides(F5, 7, 2, 21, 3));
    const Field& F7 = Field::get(7, 1);
    CHECK(binomial_divides(F7, 3, 2, 15, 4));
    CHECK(binomial_divides(F7, 14, 2, 392, 2));
    CHECK(!binomial_divides(F5, 2, 2, 4, 3));
    CHECK(!binomial_divides(F5, 3, 2, 7, 4));  // 3 does not divide 7
    // Small exhaustive slice; the criterion itself cross-checks against
    // direct division for every call with m <= 2000.
    const Field& F3 = Field::get(3, 1);
    for (long long n = 1; n <= 8; ++n)
        for (long long m = 1; m <= 24; ++m)
            for (int a = 1; a <= 2; ++a)
                for (int b = 1; b <= 2; ++b)
                    (void)binomial_divides(F3, n, Elem(a), m, Elem(b));
}

TEST_CASE("partners") {
    const Field& F3 = Field::get(3, 1);
    Trinomial t1(F3, 3, 1, 1, 1);
    Trinomial p1 = partner(t1);
    CHECK(p1.n == 3);
    CHECK(p1.i == 2);
    CHECK(p1.a == 2);
    CHECK(p1.b == 1);

    Trinomial t2(F3, 4, 1, 1, 2);
    Trinomial p2 = partner(t2);
    CHECK(p2.i == 3);
    CHECK(p2.a == 1);
    CHECK(p2.b == 2);

    std::mt19937_64 rng(31);
    for (const Field* Fp : {&Field::get(2, 1), &F3, &Field::get(5, 1),
                            &Field::get(3, 2)}) {
        const Field& F = *Fp;
        std::uniform_int_distribution<int> coeff(1, F.q() - 1);
        for (int trial = 0; trial < 30; ++trial) {
            long long n = 2 + (long long)(rng() % 12);
            long long i = 1 + (long long)(rng() % (std::size_t)(n - 1));
            Trinomial t(F, n, i, Elem(coeff(rng)), Elem(coeff(rng)));
            Trinomial back = partner(partner(t));
            CHECK(back == t);
        }
    }
}

TEST_CASE("semi-reciprocal gcd probe (conjecture evidence, not asserted)") {
    std::mt19937_64 rng(47);
    const Field& F3 = Field::get(3, 1);
    int mismatches = 0, runs = 0;
    for (int trial = 0; trial < 40; ++trial) {
        long long n = 2 + (long long)(rng() % 10);
        long long i = 1 + (long long)(rng() % (std::size_t)(n - 1));
        Trinomial t(F3, n, i, Elem(1 + rng() % 2), Elem(1 + rng() % 2));
        auto probe = semi_gcd_probe(t);
        ++runs;
        if (!probe.match) ++mismatches;
    }
    CHECK(runs == 40);
    MESSAGE("semi-gcd probe mismatches: " << mismatches << "/" << runs);
}
