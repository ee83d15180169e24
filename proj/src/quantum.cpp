#include "polytri/quantum.hpp"

namespace polytri {

CssCandidate css_from_nested(const Poly& modulus, const Poly& g1,
                             const Poly& h2_or_g2, GivenPoly given) {
    const Field& F = modulus.field();
    Poly g2(F), h2(F);
    if (given == GivenPoly::CheckPoly) {
        h2 = h2_or_g2;
        auto [q, r] = divrem(modulus, h2);
        if (!r.is_zero()) throw NotADivisor("check polynomial h2");
        g2 = q.monic();
    } else {
        g2 = h2_or_g2.monic();
        auto [q, r] = divrem(modulus, g2);
        if (!r.is_zero()) throw NotADivisor("generator g2");
        h2 = q;
    }
    if (!divides(g1.monic(), g2)) throw NotNested();

    PolycyclicCode C1(modulus, g1);
    PolycyclicCode C2(modulus, g2);
    for (const Row& row : C2.generator_matrix())
        if (!C1.contains(row)) throw NotNested();

    long long k = g2.degree() - g1.monic().degree();
    std::string label = std::to_string(F.q()) + "^2";
    return CssCandidate{std::move(C1), std::move(C2), std::move(h2),
                        modulus.degree(), k, std::move(label)};
}

CssDistance css_distance(const CssCandidate& cand, unsigned long long budget) {
    const Field& F = cand.C1.field();
    CssDistance res;
    if (cand.k == 0) {
        res.exact = true;
        res.side1_exact = res.side2_exact = true;
        return res;
    }
    const long long n = cand.n;

    // Side 1: min weight of C1 \ C2. A codeword m*g1 lies in C2 iff
    // (g2/g1) | m.
    Poly q21 = divrem(cand.C2.gen(), cand.C1.gen()).first;
    auto skip1 = [&](const Row& msg, const Row&) {
        Poly m(F, std::vector<Elem>(msg.begin(), msg.end()));
        return divrem(m, q21).second.is_zero();
    };
    DistanceResult s1 =
        min_weight_span(F, cand.C1.generator_matrix(), budget, skip1);
    res.side1 = s1.d;
    res.side1_exact = s1.exact;

    // Side 2: min weight of C2-perp \ C1-perp; membership in C1-perp is
    // orthogonality to every row of G1 (early exit on the first nonzero dot).
    Matrix G1 = cand.C1.generator_matrix();
    Matrix dual2 = nullspace_basis(F, cand.C2.generator_matrix(), n);
    auto skip2 = [&](const Row&, const Row& word) {
        for (const Row& g : G1) {
            Elem dot = 0;
            for (std::size_t c = 0; c < word.size(); ++c)
                dot = F.add(dot, F.mul(g[c], word[c]));
            if (dot != 0) return false;
        }
        return true;
    };
    DistanceResult s2 = min_weight_span(F, dual2, budget, skip2);
    res.side2 = s2.d;
    res.side2_exact = s2.exact;

    // d = 0 from a side means no qualifying word was reached (only possible
    // under budget truncation for k > 0); it carries no bound.
    long long best = n + 1;
    if (res.side1 > 0 && res.side1 < best) best = res.side1;
    if (res.side2 > 0 && res.side2 < best) best = res.side2;
    res.d = best <= n ? best : 0;
    res.exact = res.side1_exact && res.side2_exact;
    res.claimed_not_verified = !res.exact;
    return res;
}

}  // namespace polytri
