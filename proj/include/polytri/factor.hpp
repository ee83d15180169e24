#ifndef POLYTRI_FACTOR_HPP
#define POLYTRI_FACTOR_HPP

#include <utility>
#include <vector>

#include "polytri/poly.hpp"

namespace polytri {

struct Factorization {
    Elem unit = 1;
    std::vector<std::pair<Poly, long long>> factors;  // monic irreducible, multiplicity

    Poly expand(const Field& f) const;
    long long max_multiplicity() const;
    bool squarefree() const { return max_multiplicity() <= 1; }
    /// Sorted multiset of (degree, multiplicity), for degree-distribution checks.
    std::vector<std::pair<long long, long long>> degree_distribution() const;
};

/// Complete factorization over GF(q): x-power stripping, char-p square-free
/// decomposition with p-th root extraction, distinct-degree splitting, and
/// Cantor-Zassenhaus equal-degree splitting seeded from the input bytes.
Factorization factor(const Poly& f);

bool is_irreducible(const Poly& f);

/// All monic divisors of f in canonical order. Throws Error when the divisor
/// count exceeds cap.
std::vector<Poly> monic_divisors(const Factorization& fac, const Field& field,
                                 long long cap = 1000000);
long long divisor_count(const Factorization& fac);

/// ord(f): least e with f_stripped | x^e - 1. Computed through the
/// factorization and the prime factors of q^d - 1; verified by divisibility
/// checks before returning.
long long ord(const Poly& f);

/// Oracle: smallest e <= cap with f_stripped | x^e - 1, by iteration.
long long ord_bruteforce(const Poly& f, long long cap = 1000000);

/// sord(f): least e with x^e congruent to a nonzero constant mod f_stripped.
std::pair<long long, Elem> sord(const Poly& f, long long cap = 4000000);

}  // namespace polytri

#endif
