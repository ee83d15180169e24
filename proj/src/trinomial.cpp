#include "polytri/trinomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace polytri {

namespace {

// v = p^e * m with p coprime to m.
std::pair<long long, long long> p_decompose(long long v, int p) {
    long long e = 0;
    while (v % p == 0) {
        v /= p;
        ++e;
    }
    return {e, v};
}

Elem iterated_pth_root(const Field& F, Elem x, long long times) {
    for (long long j = 0; j < times; ++j) x = F.pth_root(x);
    return x;
}

bool is_positive_p_power(long long v, int p) {
    if (v < p) return false;
    while (v % p == 0) v /= p;
    return v == 1;
}

std::string describe_factorization(const Factorization& fac, const Field& F) {
    std::ostringstream os;
    for (const auto& [pi, mi] : fac.factors) {
        os << "(deg " << pi.degree() << ")^" << mi << " ";
    }
    os << "over GF(" << F.descriptor() << ")";
    return os.str();
}

}  // namespace

Trinomial::Trinomial(const Field& F, long long n_, long long i_, Elem a_, Elem b_)
    : n(n_), i(i_), a(a_), b(b_), f_(&F) {
    if (!(n > i && i > 0)) throw Error("trinomial requires n > i > 0");
    if (a == 0 || b == 0) throw Error("trinomial requires a, b nonzero");
    if (a >= F.q() || b >= F.q()) throw Error("coefficient outside the field");
}

Poly Trinomial::poly() const {
    return Poly::monomial(*f_, n) - Poly::monomial(*f_, i, a) -
           Poly::constant(*f_, b);
}

std::string Trinomial::name() const {
    std::ostringstream os;
    os << "x^" << n << " - " << f_->format(a) << "*x^" << i << " - "
       << f_->format(b);
    return os.str();
}

const char* to_string(MultVerdict v) {
    switch (v) {
        case MultVerdict::UniformPZ: return "uniform-p^z";
        case MultVerdict::Uniform2PZ: return "uniform-2p^z";
        case MultVerdict::Mixed: return "mixed";
        case MultVerdict::Unresolved: return "unresolved";
    }
    return "?";
}

MultiplicityProfile multiplicity_profile(const Trinomial& t) {
    const Field& F = t.field();
    const int p = F.p();
    MultiplicityProfile prof(F);
    std::tie(prof.c1, prof.c2) = p_decompose(t.n, p);
    std::tie(prof.d1, prof.d2) = p_decompose(t.i, p);
    prof.z = std::min(prof.c1, prof.d1);
    prof.a_red = iterated_pth_root(F, t.a, prof.z);
    prof.b_red = iterated_pth_root(F, t.b, prof.z);
    long long pz = 1;
    for (long long j = 0; j < prof.z; ++j) pz *= p;
    long long en = t.n / pz, ei = t.i / pz;
    prof.reduced = Poly::monomial(F, en) - Poly::monomial(F, ei, prof.a_red) -
                   Poly::constant(F, prof.b_red);
    prof.d = poly_gcd(prof.reduced, derivative(prof.reduced));
    prof.actual = factor(t.poly());

    if (prof.d.is_one()) {
        prof.verdict = MultVerdict::UniformPZ;
        prof.predicted.emplace_back(pz, "all irreducible factors");
    } else if (prof.c1 != prof.d1) {
        // The theorem promises d = 1 whenever c1 != d1.
        throw ProfileMismatch("gcd is not a unit although c1 != d1 for " +
                              t.name());
    } else if (is_irreducible(prof.d)) {
        prof.D = prof.d.degree();
        prof.Dprime = prof.reduced.degree() - 2 * prof.D;
        if (prof.Dprime == 0) {
            prof.verdict = MultVerdict::Uniform2PZ;
            prof.predicted.emplace_back(2 * pz, "all irreducible factors");
        } else {
            prof.verdict = MultVerdict::Mixed;
            prof.predicted.emplace_back(2 * pz, "the factor d(x)");
            prof.predicted.emplace_back(pz, "every other factor");
        }
    } else {
        prof.verdict = MultVerdict::Unresolved;  // d(x) reducible: out of scope
        prof.D = prof.d.degree();
        prof.Dprime = prof.reduced.degree() - 2 * prof.D;
    }

    for (const auto& [pi, mi] : prof.actual.factors) {
        bool ok = true;
        switch (prof.verdict) {
            case MultVerdict::UniformPZ: ok = mi == pz; break;
            case MultVerdict::Uniform2PZ: ok = mi == 2 * pz; break;
            case MultVerdict::Mixed: {
                // g = reduced^(p^z), so g and reduced share irreducible
                // factors; d is irreducible, hence "divides d" means "is d".
                ok = (pi == prof.d) ? (mi == 2 * pz) : (mi == pz);
                break;
            }
            case MultVerdict::Unresolved: ok = true; break;
        }
        if (!ok)
            throw ProfileMismatch(t.name() + " predicted " +
                                  to_string(prof.verdict) + " but actual is " +
                                  describe_factorization(prof.actual, F));
    }
    return prof;
}

std::optional<long long> sparse_uniform_multiplicity(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    if (f.is_constant()) throw ConstantPolynomial();
    const Field& F = f.field();
    std::vector<long long> support;
    for (long long j = 0; j <= f.degree(); ++j)
        if (f.coeff(j) != 0) support.push_back(j);
    long long non_powers = 0;
    for (long long e : support)
        if (!is_positive_p_power(e, F.p())) ++non_powers;
    if (non_powers > 1) return std::nullopt;
    long long s = 0;
    for (long long e : support) s = std::gcd(s, e);
    Factorization fac = factor(f);
    for (const auto& [pi, mi] : fac.factors)
        if (mi != s)
            throw ProfileMismatch("uniform multiplicity " + std::to_string(s) +
                                  " predicted but actual is " +
                                  describe_factorization(fac, F));
    return s;
}

ReciprocalDecomposition reversible_count(const Poly& modulus) {
    if (modulus.is_zero()) throw ZeroPolynomial();
    if (modulus.is_constant()) throw ConstantPolynomial();
    if (modulus.coeff(0) == 0) throw ZeroConstantTerm();
    const Field& F = modulus.field();
    ReciprocalDecomposition dec(F);
    Factorization fac = factor(modulus);

    std::vector<bool> used(fac.factors.size(), false);
    for (std::size_t j = 0; j < fac.factors.size(); ++j) {
        if (used[j]) continue;
        const auto& [pj, mj] = fac.factors[j];
        Poly partner = monic_reciprocal(pj);
        if (partner == pj) {
            if (reciprocal(pj) == pj)
                dec.self_parts.push_back({pj, mj});
            else
                dec.semi_parts.push_back({pj, mj, mj});
            used[j] = true;
            continue;
        }
        bool paired = false;
        for (std::size_t k = j + 1; k < fac.factors.size(); ++k) {
            if (used[k]) continue;
            if (fac.factors[k].first == partner) {
                dec.pair_parts.push_back({pj, partner, mj, fac.factors[k].second,
                                          std::min(mj, fac.factors[k].second)});
                used[j] = used[k] = true;
                paired = true;
                break;
            }
        }
        if (!paired) {
            for (long long e = 0; e < mj; ++e) dec.plain_part = dec.plain_part * pj;
            used[j] = true;
        }
    }

    dec.count = 1;
    dec.strict_count = 1;
    for (const auto& sp : dec.self_parts) {
        dec.count *= sp.s + 1;
        dec.strict_count *= sp.s + 1;
    }
    for (const auto& pp : dec.pair_parts) {
        dec.count *= pp.nmin + 1;
        dec.strict_count *= pp.nmin + 1;
    }
    for (const auto& sm : dec.semi_parts) {
        dec.count *= sm.e + 1;
        dec.strict_count *= sm.w / 2 + 1;
    }

    if (divisor_count(fac) <= 1000000) {
        long long brute = 0;
        for (const auto& d : monic_divisors(fac, F))
            if (d.is_one() || is_monic_reciprocal_fixed(d)) ++brute;
        dec.brute_count = brute;
        if (brute != dec.count)
            throw CountMismatch("formula " + std::to_string(dec.count) +
                                " vs brute force " + std::to_string(brute));
    }
    return dec;
}

Poly trinomial_gcd(const Trinomial& t1, const Trinomial& t2) {
    if (&t1.field() != &t2.field()) throw FieldMismatch();
    if (t1.n != t2.n || t1.i != t2.i) throw Error("trinomial_gcd needs equal (n, i)");
    if (t1 == t2) throw Error("trinomial_gcd needs distinct trinomials");
    const Field& F = t1.field();
    Poly g = poly_gcd(t1.poly(), t2.poly());
    if (!g.is_one()) {
        long long G = std::gcd(t1.n, t1.i);
        bool binomial_shape = g.degree() == G && g.coeff(0) != 0 && g.is_monic();
        for (long long j = 1; j < g.degree() && binomial_shape; ++j)
            if (g.coeff(j) != 0) binomial_shape = false;
        if (!binomial_shape)
            throw ShapeViolation("gcd of " + t1.name() + " and " + t2.name() +
                                 " is neither a unit nor a binomial of degree gcd(n,i)");
        if (t1.a == t2.a || t1.b == t2.b)
            throw ShapeViolation("nonunit gcd with a shared coefficient: " +
                                 t1.name() + ", " + t2.name());
        if (F.q() == 3)
            throw ShapeViolation("nonunit gcd over GF(3): " + t1.name() + ", " +
                                 t2.name());
    }
    return g;
}

bool binomial_divides(const Field& F, long long nA, Elem a, long long mB, Elem b) {
    if (nA < 1 || mB < 1 || a == 0 || b == 0)
        throw Error("binomial_divides requires positive degrees and nonzero constants");
    bool result = false;
    if (mB % nA == 0) {
        auto [n1, n2] = p_decompose(nA, F.p());
        auto [m1, m2] = p_decompose(mB, F.p());
        Elem ap = iterated_pth_root(F, a, n1);
        Elem bp = iterated_pth_root(F, b, m1);
        result = bp == F.pow(ap, m2 / n2);
    }
    if (mB <= 2000) {
        Poly big = Poly::monomial(F, mB) - Poly::constant(F, b);
        Poly small = Poly::monomial(F, nA) - Poly::constant(F, a);
        if (divides(small, big) != result)
            throw Error("binomial divisibility criterion disagrees with division");
    }
    return result;
}

Trinomial partner(const Trinomial& t) {
    const Field& F = t.field();
    Trinomial t2(F, t.n, t.n - t.i, F.div(t.a, F.neg(t.b)), F.inv(t.b));
    Factorization f1 = factor(t.poly());
    Factorization f2 = factor(t2.poly());
    if (f1.degree_distribution() != f2.degree_distribution())
        throw Error("partner degree distributions differ for " + t.name());
    try {
        if (ord(t.poly()) != ord(t2.poly()))
            throw Error("partner orders differ for " + t.name());
    } catch (const OrderTooLarge&) {
        // Order beyond budget: the degree-distribution assertion stands alone.
    }
    return t2;
}

SemiGcdProbe semi_gcd_probe(const Trinomial& t) {
    const Field& F = t.field();
    Poly f2 = Poly::monomial(F, t.n) -
              Poly::monomial(F, t.i, F.div(t.a, F.neg(t.b))) -
              Poly::constant(F, F.inv(t.b));
    Poly g = poly_gcd(t.poly(), f2);
    Poly predicted = Poly::one(F);
    for (const auto& [pi, mi] : factor(t.poly()).factors) {
        if (pi.coeff(0) == 0) continue;
        if (monic_reciprocal(pi) == pi && reciprocal(pi) != pi)
            for (long long e = 0; e < mi; ++e) predicted = predicted * pi;
    }
    return {g, predicted, g == predicted};
}

}  // namespace polytri
