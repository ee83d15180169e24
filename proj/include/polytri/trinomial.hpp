#ifndef POLYTRI_TRINOMIAL_HPP
#define POLYTRI_TRINOMIAL_HPP

#include <optional>
#include <string>

#include "polytri/factor.hpp"

namespace polytri {

/// x^n - a x^i - b with n > i > 0 and a, b nonzero.
struct Trinomial {
    Trinomial(const Field& F, long long n, long long i, Elem a, Elem b);

    const Field& field() const { return *f_; }
    Poly poly() const;
    /// Canonical name "x^n - a*x^i - b" with field-formatted coefficients.
    std::string name() const;

    bool operator==(const Trinomial& o) const {
        return f_ == o.f_ && n == o.n && i == o.i && a == o.a && b == o.b;
    }

    long long n, i;
    Elem a, b;

  private:
    const Field* f_;
};

enum class MultVerdict { UniformPZ, Uniform2PZ, Mixed, Unresolved };
const char* to_string(MultVerdict v);

/// Characteristic-p multiplicity prediction for a trinomial: n = p^c1 c2,
/// i = p^d1 d2 with p coprime to c2, d2; z = min(c1, d1); a = a_red^(p^z),
/// b = b_red^(p^z); reduced = x^(p^(c1-z) c2) - a_red x^(p^(d1-z) d2) - b_red
/// and the trinomial is reduced^(p^z).
struct MultiplicityProfile {
    explicit MultiplicityProfile(const Field& F)
        : reduced(Poly::zero(F)), d(Poly::zero(F)) {}

    long long c1 = 0, c2 = 0, d1 = 0, d2 = 0, z = 0;
    Elem a_red = 0, b_red = 0;
    Poly reduced;
    Poly d;  // gcd(reduced, reduced')
    long long D = 0, Dprime = 0;
    MultVerdict verdict = MultVerdict::Unresolved;
    /// Predicted (multiplicity, description) classes; empty when Unresolved.
    std::vector<std::pair<long long, std::string>> predicted;
    Factorization actual;
};

/// Prediction cross-checked against factor(); ProfileMismatch if a
/// Uniform/Mixed prediction disagrees with the actual multiplicities.
MultiplicityProfile multiplicity_profile(const Trinomial& t);

/// Uniform multiplicity gcd(support) when at most one exponent in the
/// support of f is not a positive power of p. Cross-checked against
/// factor(); a ProfileMismatch here is a genuine counterexample to the
/// prediction, not an implementation bug, and carries the factorization.
std::optional<long long> sparse_uniform_multiplicity(const Poly& f);

struct SelfPart {
    Poly p;
    long long s;  // multiplicity
};
struct PairPart {
    Poly q, qbar;  // qbar = monic reciprocal partner of q
    long long m, m2, nmin;
};
struct SemiPart {
    Poly f;
    long long w;  // multiplicity
    long long e;  // exponent choices contributing e+1 to the count
};

struct ReciprocalDecomposition {
    explicit ReciprocalDecomposition(const Field& F) : plain_part(Poly::one(F)) {}

    std::vector<SelfPart> self_parts;
    std::vector<PairPart> pair_parts;
    std::vector<SemiPart> semi_parts;
    Poly plain_part;
    /// Number of monic divisors fixed by monic_reciprocal (reversible
    /// generators, trivial generator included): prod (s_i+1)(n_i+1)(e_i+1)
    /// with e_i = w_i.
    long long count = 0;
    /// Number of strictly self-reciprocal monic divisors (g = g*), where the
    /// semi slots contribute floor(w_i/2)+1 even exponents instead.
    long long strict_count = 0;
    /// Brute-force reversible-divisor count, -1 when not audited.
    long long brute_count = -1;
};

/// Classifies the irreducible factors of the modulus and counts reversible
/// divisors; audited against brute-force divisor enumeration when the
/// divisor count is at most 10^6. CountMismatch on disagreement.
ReciprocalDecomposition reversible_count(const Poly& modulus);

/// Euclidean gcd of two distinct trinomials sharing (n, i); asserts the
/// theorem shape (unit or binomial x^gcd(n,i) - c) and the shared-a /
/// shared-b / GF(3) specializations. ShapeViolation when an assertion fails.
Poly trinomial_gcd(const Trinomial& t1, const Trinomial& t2);

/// x^nA - a divides x^mB - b, by the decomposition criterion
/// nA | mB and b' = (a')^(m2/n2); cross-checked by direct division when
/// mB <= 2000.
bool binomial_divides(const Field& F, long long nA, Elem a, long long mB, Elem b);

/// Mutually reciprocal partner x^n - a(-b)^-1 x^(n-i) - b^-1; asserts equal
/// ord (skipped on OrderTooLarge) and equal degree distributions.
Trinomial partner(const Trinomial& t);

/// Probe for the semi-reciprocal gcd remark: gcd(t, x^n - a(-b)^-1 x^i - b^-1)
/// versus the product of semi-reciprocal factor powers of t. Returns
/// (gcd, predicted product, agreement); disagreement is evidence, not error.
struct SemiGcdProbe {
    Poly gcd, predicted;
    bool match;
};
SemiGcdProbe semi_gcd_probe(const Trinomial& t);

}  // namespace polytri

#endif
