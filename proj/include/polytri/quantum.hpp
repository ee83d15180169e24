#ifndef POLYTRI_QUANTUM_HPP
#define POLYTRI_QUANTUM_HPP

#include "polytri/code.hpp"

namespace polytri {

/// CSS pair built from nested generators g1 | g2 | modulus. The quantum code
/// has length n and dimension k = deg g2 - deg g1; the quantum alphabet is
/// GF(q^2) while all classical computation stays over GF(q).
struct CssCandidate {
    PolycyclicCode C1;  // <g1>
    PolycyclicCode C2;  // <g2> subset of C1
    Poly h2;            // modulus / g2
    long long n;
    long long k;
    std::string label_field;  // "q^2" descriptor for reporting
};

enum class GivenPoly { CheckPoly, Generator };

/// Builds the candidate from (modulus, g1) and either g2 directly or its
/// check polynomial h2 (then g2 := modulus / h2). NotADivisor when the given
/// polynomial does not divide the modulus; NotNested unless g1 | g2. The
/// nesting is additionally verified row-by-row on the generator matrices.
CssCandidate css_from_nested(const Poly& modulus, const Poly& g1,
                             const Poly& h2_or_g2, GivenPoly given);

struct CssDistance {
    bool exact = false;
    long long d = 0;    // exact distance, or best upper bound found
    bool side1_exact = false, side2_exact = false;
    long long side1 = 0, side2 = 0;  // min weight of C1\C2 and C2-perp\C1-perp
    /// Set when some side exceeded the per-side budget: the table value is a
    /// claim, not a verified distance.
    bool claimed_not_verified = false;
};

/// Standard CSS minimum: min( minwt(C1 \ C2), minwt(C2-perp \ C1-perp) ),
/// each side enumerated exhaustively when its message space fits the budget.
CssDistance css_distance(const CssCandidate& cand,
                         unsigned long long budget = 10000000ULL);

}  // namespace polytri

#endif
