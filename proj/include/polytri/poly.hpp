#ifndef POLYTRI_POLY_HPP
#define POLYTRI_POLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "polytri/gf.hpp"

namespace polytri {

/// Dense polynomial over a field, ascending coefficients, highest stored
/// coefficient nonzero. The zero polynomial has an empty coefficient vector
/// and degree -1.
class Poly {
  public:
    explicit Poly(const Field& f) : f_(&f) {}
    Poly(const Field& f, std::vector<Elem> coeffs) : f_(&f), c_(std::move(coeffs)) {
        trim();
    }

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly one(const Field& f) { return constant(f, 1); }
    static Poly constant(const Field& f, Elem c);
    static Poly monomial(const Field& f, long long deg, Elem c = 1);

    const Field& field() const { return *f_; }
    long long degree() const { return (long long)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Elem coeff(long long j) const {
        return (j >= 0 && j < (long long)c_.size()) ? c_[std::size_t(j)] : Elem(0);
    }
    Elem lead() const { return c_.empty() ? Elem(0) : c_.back(); }
    const std::vector<Elem>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(Elem s) const;
    Poly shifted(long long k) const;  // multiply by x^k

    bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Elem eval(Elem x) const;
    Poly monic() const;

    /// Canonical order: by degree, then coefficient indices ascending.
    bool canonical_less(const Poly& o) const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check_field(const Poly& o) const {
        if (f_ != o.f_) throw FieldMismatch();
    }
    const Field* f_;
    std::vector<Elem> c_;
};

std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g);
bool divides(const Poly& g, const Poly& f);

/// Monic gcd; gcd(f, 0) = monic(f).
Poly poly_gcd(Poly f, Poly g);

/// (d, u, v) with u f + v g = d = monic gcd(f, g).
struct ExtGcd {
    Poly d, u, v;
};
ExtGcd poly_ext_gcd(const Poly& f, const Poly& g);

Poly derivative(const Poly& f);

/// f*(x) = x^deg(f) f(1/x); trailing zero coefficients of f drop the degree.
Poly reciprocal(const Poly& f);
/// f(0)^-1 * f*; requires f(0) != 0.
Poly monic_reciprocal(const Poly& f);

/// f(x^i).
Poly compose_xpow(const Poly& f, long long i);

Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& a, unsigned long long e, const Poly& m);
/// a^(q^reps) mod m by repeated q-th powering.
Poly frobenius_powmod(Poly a, int reps, const Poly& m);

/// f with the maximal power of x divided out; h receives that power.
Poly strip_x(const Poly& f, long long* h = nullptr);

/// Monic square root of x^n - a x^i - b when one exists. Odd characteristic:
/// requires n even, i = n/2, and c with c^2 = -b, a = +-2c; the root is
/// x^(n/2) -+ c. Characteristic 2: requires n, i even; the root is
/// x^(n/2) + a'x^(i/2) + b' with a'^2 = a, b'^2 = b. The result is verified
/// by squaring before it is returned.
std::optional<Poly> trinomial_sqrt(const Field& f, long long n, long long i,
                                   Elem a, Elem b);

enum class ReciprocalTag { SelfReciprocal, SemiReciprocal, PairPartner, Plain };

struct ReciprocalClass {
    ReciprocalTag tag = ReciprocalTag::Plain;
    Elem alpha = 0;            // scale for SemiReciprocal (always -1)
    bool divisible_by_x = false;
};

/// Strict Def-5.2 classification: SelfReciprocal iff f = f*; SemiReciprocal
/// iff f = alpha f* with alpha != 1. PairPartner is only produced by
/// are_pair_reciprocal.
ReciprocalClass classify_reciprocal(const Poly& f);
bool are_pair_reciprocal(const Poly& f, const Poly& g);

/// Reversibility predicate: f = monic_reciprocal(f). Subsumes self- and
/// semi-reciprocal.
bool is_monic_reciprocal_fixed(const Poly& f);

}  // namespace polytri

#endif
