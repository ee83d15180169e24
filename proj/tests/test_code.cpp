#include <random>

#include "doctest.h"
#include "polytri/code.hpp"
#include "polytri/trinomial.hpp"

using namespace polytri;

namespace {
Poly P(const Field& f, std::vector<Elem> asc) { return Poly(f, std::move(asc)); }
}

TEST_CASE("construction and generator matrix") {
    const Field& F2 = Field::get(2, 1);
    Poly mod = P(F2, {1, 0, 1, 0, 1});  // x^4+x^2+1
    PolycyclicCode C(mod, P(F2, {1, 1, 1}));
    CHECK(C.n() == 4);
    CHECK(C.k() == 2);
    Matrix G = C.generator_matrix();
    REQUIRE(G.size() == 2);
    CHECK(G[0] == Row({1, 1, 1, 0}));
    CHECK(G[1] == Row({0, 1, 1, 1}));
    CHECK(C.contains({1, 1, 1, 0}));
    CHECK(C.contains({1, 0, 0, 1}));  // (x^2+x+1)(x+1) = x^3+1
    CHECK(!C.contains({1, 0, 0, 0}));

    CHECK_THROWS_AS(PolycyclicCode(mod, P(F2, {1, 1})), NotADivisor);
    // Non-monic generator is normalized.
    const Field& F3 = Field::get(3, 1);
    Poly m3 = Trinomial(F3, 3, 2, 2, 2).poly();  // (x+2)(x^2+2x+2)
    PolycyclicCode C3(m3, P(F3, {1, 2}).scaled(2));
    CHECK(C3.gen() == P(F3, {2, 1}));

    // Full space and zero code.
    PolycyclicCode full(mod, Poly::one(F2));
    CHECK(full.k() == 4);
    PolycyclicCode zero(mod, mod);
    CHECK(zero.k() == 0);
}

TEST_CASE("table-style code over GF(3)") {
    const Field& F3 = Field::get(3, 1);
    Poly mod = Trinomial(F3, 14, 7, 1, 1).poly();
    Poly g = P(F3, {1, 0, 1, 2, 0, 1, 1, 0, 1});
    PolycyclicCode C(mod, g);
    CHECK(C.k() == 6);
    auto d = min_distance(C);
    CHECK(d.exact);
    CHECK(d.d == 6);
}

TEST_CASE("parity check matrix") {
    const Field& F2 = Field::get(2, 1);
    PolycyclicCode C(P(F2, {1, 0, 1, 0, 1}), P(F2, {1, 1, 1}));
    auto pc = parity_check_matrix(C);
    CHECK(pc.e == 6);
    CHECK(pc.h == P(F2, {1, 1, 0, 1, 1}));
    REQUIRE(pc.window.size() == 2);
    CHECK(pc.window[0] == Row({1, 1, 0, 1}));
    CHECK(pc.window[1] == Row({0, 1, 1, 0}));
    CHECK(pc.dual_basis.size() == 2);

    PolycyclicCode zero(P(F2, {1, 0, 1, 0, 1}), P(F2, {1, 0, 1, 0, 1}));
    CHECK(parity_check_matrix(zero).dual_basis.size() == 4);
    PolycyclicCode full(P(F2, {1, 0, 1, 0, 1}), Poly::one(F2));
    CHECK(parity_check_matrix(full).window.empty());
    CHECK(parity_check_matrix(full).dual_basis.empty());
}

TEST_CASE("minimum distance") {
    const Field& F2 = Field::get(2, 1);
    Poly mod = P(F2, {1, 0, 1, 0, 1});
    CHECK(min_distance(PolycyclicCode(mod, Poly::one(F2))).d == 1);
    auto d = min_distance(PolycyclicCode(mod, P(F2, {1, 1, 1})));
    CHECK(d.exact);
    CHECK(d.d == 2);  // (x^2+x+1)(x+1)... weight of x^3+1 is 2
    CHECK(min_distance(PolycyclicCode(mod, mod)).d == 0);

    // Budget exhaustion yields a non-exact upper bound.
    const Field& F3 = Field::get(3, 1);
    Poly m3 = Trinomial(F3, 14, 7, 1, 1).poly();
    PolycyclicCode big(m3, Poly::one(F3));
    auto bracket = min_distance(big, 100);
    CHECK(!bracket.exact);
    CHECK(bracket.d >= 1);
    CHECK(bracket.lower == 1);
}

TEST_CASE("self-dual example over GF(5)") {
    const Field& F5 = Field::get(5, 1);
    Poly mod = Trinomial(F5, 18, 9, 1, 2).poly();
    Poly g = P(F5, {3, 0, 0, 0, 0, 0, 0, 0, 0, 1});  // x^9 + 3
    PolycyclicCode C(mod, g);
    CHECK(C.k() == 9);
    auto p = properties(C);
    CHECK(p.self_orthogonal);
    CHECK(p.self_dual);
    auto d = min_distance(C);
    CHECK(d.exact);
    CHECK(d.d == 2);
}

TEST_CASE("property flags") {
    const Field& F2 = Field::get(2, 1);
    PolycyclicCode C(P(F2, {1, 0, 1, 0, 1}), P(F2, {1, 1, 1}));
    auto p = properties(C);
    CHECK(p.reversible);
    CHECK(p.isodual_candidate);
    CHECK(!p.self_orthogonal);
    REQUIRE(p.isodual_weight_evidence.has_value());
    CHECK(*p.isodual_weight_evidence);

    auto pfull = properties(PolycyclicCode(P(F2, {1, 0, 1, 0, 1}), Poly::one(F2)));
    CHECK(pfull.reversible);
    CHECK(!pfull.self_orthogonal);
    CHECK(!pfull.self_dual);
    CHECK(pfull.dual_containing);

    // Self-dual implies self-orthogonal and k = n/2 (checked on the GF(5) hit
    // above); dual_containing for a dual-containing cyclic-style code:
    const Field& F3 = Field::get(3, 1);
    Poly m3 = Trinomial(F3, 3, 2, 2, 2).poly();
    auto psmall = properties(PolycyclicCode(m3, P(F3, {2, 1})));
    CHECK(psmall.reversible);  // x+2 is monic-reciprocal fixed
}

TEST_CASE("reversibility criterion equals brute reversal closure") {
    std::mt19937_64 rng(2024);
    for (const Field* Fp : {&Field::get(2, 1), &Field::get(3, 1), &Field::get(5, 1)}) {
        const Field& F = *Fp;
        int done = 0;
        while (done < 25) {
            long long n = 3 + (long long)(rng() % 6);
            long long i = 1 + (long long)(rng() % (std::size_t)(n - 1));
            Elem a = Elem(1 + rng() % (std::size_t)(F.q() - 1));
            Elem b = Elem(1 + rng() % (std::size_t)(F.q() - 1));
            Poly mod = Trinomial(F, n, i, a, b).poly();
            auto fac = factor(mod);
            auto divs = monic_divisors(fac, F);
            const Poly& g = divs[rng() % divs.size()];
            if (g.coeff(0) == 0 || g == mod) continue;
            PolycyclicCode C(mod, g);
            ++done;
            bool flag = properties(C).reversible;
            // Brute force: reversal of every codeword is a codeword.
            std::vector<unsigned long long> hist;
            Matrix G = C.generator_matrix();
            bool closed = true;
            Row msg((std::size_t)C.k(), 0);
            // enumerate all messages directly (q^k small here)
            unsigned long long total = 1;
            for (long long j = 0; j < C.k(); ++j) total *= (unsigned)F.q();
            for (unsigned long long v = 1; v < total && closed; ++v) {
                unsigned long long t = v;
                Row word((std::size_t)C.n(), 0);
                for (std::size_t j = 0; j < msg.size(); ++j) {
                    Elem mj = Elem(t % (unsigned)F.q());
                    t /= (unsigned)F.q();
                    if (mj == 0) continue;
                    for (std::size_t c = 0; c < word.size(); ++c)
                        word[c] = F.add(word[c], F.mul(mj, G[j][c]));
                }
                Row rev(word.rbegin(), word.rend());
                if (!C.contains(rev)) closed = false;
            }
            CHECK(flag == closed);
        }
    }
}

TEST_CASE("reversed code") {
    const Field& F3 = Field::get(3, 1);
    Poly mod = Trinomial(F3, 3, 2, 2, 2).poly();
    PolycyclicCode C(mod, P(F3, {2, 1}));
    PolycyclicCode R = reversed_code(C);
    CHECK(R.gen() == P(F3, {2, 1}));
    CHECK(R.modulus() == monic_reciprocal(mod));

    // Weight distributions agree (coordinate reversal is an equivalence).
    auto wc = weight_enumerator(C);
    auto wr = weight_enumerator(R);
    CHECK(wc == wr);

    const Field& F2 = Field::get(2, 1);
    PolycyclicCode C2(P(F2, {1, 0, 1, 0, 1}), P(F2, {1, 1, 1}));
    CHECK(reversed_code(C2).gen() == C2.gen());
}

TEST_CASE("dual dimensions and annihilation") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 30; ++trial) {
        const Field& F = trial % 2 ? Field::get(3, 1) : Field::get(2, 2);
        long long n = 3 + (long long)(rng() % 8);
        long long i = 1 + (long long)(rng() % (std::size_t)(n - 1));
        Elem a = Elem(1 + rng() % (std::size_t)(F.q() - 1));
        Elem b = Elem(1 + rng() % (std::size_t)(F.q() - 1));
        Poly mod = Trinomial(F, n, i, a, b).poly();
        auto divs = monic_divisors(factor(mod), F);
        const Poly& g = divs[rng() % divs.size()];
        PolycyclicCode C(mod, g);
        Matrix dual = nullspace_basis(F, C.generator_matrix(), C.n());
        CHECK((long long)dual.size() == C.n() - C.k());
        for (const auto& dr : dual)
            for (const auto& gr : C.generator_matrix()) {
                Elem dot = 0;
                for (std::size_t c = 0; c < dr.size(); ++c)
                    dot = F.add(dot, F.mul(dr[c], gr[c]));
                CHECK(dot == 0);
            }
        if (C.gen().coeff(0) != 0) (void)parity_check_matrix(C);
    }
}

TEST_CASE("expansion and enlargement") {
    const Field& F2 = Field::get(2, 1);
    Poly mod = P(F2, {1, 0, 1});  // x^2 - 1 = x^2 + 1
    PolycyclicCode C(mod, P(F2, {1, 1}));
    PolycyclicCode E = expand_code(C, 2);
    CHECK(E.n() == 4);
    CHECK(E.k() == 2);
    CHECK(E.gen() == P(F2, {1, 0, 1}));

    auto en = enlarge_code(C, 2);
    CHECK(en.n == 4);
    CHECK(en.k == 1);
    REQUIRE(en.rows.size() == 1);
    CHECK(en.rows[0] == Row({1, 0, 1, 0}));

    // i = 1 is the identity.
    CHECK(expand_code(C, 1).gen() == C.gen());
    CHECK(enlarge_code(C, 1).rows.size() == 1);

    // Distance is preserved by expansion (small cases).
    CHECK(min_distance(E).d == min_distance(C).d);

    const Field& F3 = Field::get(3, 1);
    Poly tri = Trinomial(F3, 4, 2, 1, 1).poly();
    CHECK_THROWS_AS(expand_code(PolycyclicCode(tri, Poly::one(F3)), 2), NotCyclic);
}

TEST_CASE("rref and nullspace") {
    const Field& F3 = Field::get(3, 1);
    Matrix m = {{1, 2, 0}, {2, 2, 0}, {0, 0, 1}};
    CHECK(rref(F3, m) == 3);
    Matrix m2 = {{1, 2, 0}, {2, 1, 0}};  // second row = 2 * first
    Matrix ns = nullspace_basis(F3, m2, 3);
    CHECK(ns.size() == 2);
    for (const auto& v : ns) {
        Elem dot = F3.add(v[0], F3.mul(2, v[1]));
        CHECK(dot == 0);
    }
}
