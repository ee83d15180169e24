#include "polytri/factor.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace polytri {

namespace {

using u128 = unsigned __int128;

Poly powmod_u128(const Poly& a, u128 e, const Poly& m) {
    Poly r = divrem(Poly::one(a.field()), m).second;
    Poly base = divrem(a, m).second;
    while (e > 0) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

/// g with g^p = c, valid when c' = 0 (all exponents divisible by p).
Poly poly_pth_root(const Poly& c) {
    const Field& F = c.field();
    const int p = F.p();
    std::vector<Elem> r;
    for (long long j = 0; j * p <= c.degree(); ++j)
        r.push_back(F.pth_root(c.coeff(j * p)));
    return Poly(F, std::move(r));
}

void squarefree_decompose(const Poly& f, long long mult_scale,
                          std::vector<std::pair<Poly, long long>>& out) {
    const Field& F = f.field();
    const int p = F.p();
    if (f.is_constant()) return;
    Poly d = derivative(f);
    if (d.is_zero()) {
        squarefree_decompose(poly_pth_root(f), mult_scale * p, out);
        return;
    }
    Poly c = poly_gcd(f, d);
    Poly w = divrem(f, c).first.monic();
    long long i = 1;
    while (!w.is_one()) {
        Poly y = poly_gcd(w, c);
        Poly z = divrem(w, y).first.monic();
        if (!z.is_one()) out.emplace_back(z, i * mult_scale);
        ++i;
        w = y;
        c = divrem(c, y).first.monic();
    }
    if (!c.is_one()) squarefree_decompose(poly_pth_root(c), mult_scale * p, out);
}

Poly random_poly(const Field& F, long long max_deg, std::mt19937_64& rng) {
    std::vector<Elem> c(std::size_t(max_deg) + 1);
    std::uniform_int_distribution<int> dist(0, F.q() - 1);
    for (auto& x : c) x = Elem(dist(rng));
    return Poly(F, std::move(c));
}

void equal_degree_split(const Poly& u, long long d, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
    const Field& F = u.field();
    if (u.degree() == d) {
        out.push_back(u);
        return;
    }
    const bool char2 = F.p() == 2;
    while (true) {
        Poly r = divrem(random_poly(F, u.degree() - 1, rng), u).second;
        if (r.is_constant()) continue;
        // Trace map: sums of iterated Frobenius images, constant on each
        // irreducible factor's residue field.
        Poly t = r;
        Poly cur = r;
        const long long reps = char2 ? d * F.w() : d;
        for (long long j = 1; j < reps; ++j) {
            cur = char2 ? mulmod(cur, cur, u) : powmod_u128(cur, (u128)F.q(), u);
            t = t + cur;
        }
        t = divrem(t, u).second;
        Poly g = t.is_zero() ? u : poly_gcd(t, u);
        if (!char2 && (g.is_one() || g.degree() == u.degree())) {
            Poly s = powmod_u128(t, u128((F.q() - 1) / 2), u) - Poly::one(F);
            g = s.is_zero() ? u : poly_gcd(s, u);
        }
        if (g.is_one() || g.degree() == u.degree()) continue;
        equal_degree_split(g, d, rng, out);
        equal_degree_split(divrem(u, g).first.monic(), d, rng, out);
        return;
    }
}

void distinct_degree_factor(Poly g, std::mt19937_64& rng,
                            std::vector<Poly>& out) {
    const Field& F = g.field();
    Poly h = divrem(Poly::monomial(F, 1), g).second;
    for (long long d = 1; 2 * d <= g.degree(); ++d) {
        h = powmod_u128(h, (u128)F.q(), g);
        Poly u = poly_gcd(h - Poly::monomial(F, 1), g);
        if (!u.is_one()) {
            equal_degree_split(u, d, rng, out);
            g = divrem(g, u).first.monic();
            h = divrem(h, g).second;
        }
    }
    if (g.degree() > 0) out.push_back(g);
}

}  // namespace

Poly Factorization::expand(const Field& f) const {
    Poly r = Poly::constant(f, unit);
    for (const auto& [p, m] : factors)
        for (long long j = 0; j < m; ++j) r = r * p;
    return r;
}

long long Factorization::max_multiplicity() const {
    long long m = 0;
    for (const auto& [p, mult] : factors) m = std::max(m, mult);
    return m;
}

std::vector<std::pair<long long, long long>> Factorization::degree_distribution() const {
    std::vector<std::pair<long long, long long>> r;
    for (const auto& [p, m] : factors) r.emplace_back(p.degree(), m);
    std::sort(r.begin(), r.end());
    return r;
}

Factorization factor(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    const Field& F = f.field();
    Factorization result;
    result.unit = f.lead();
    if (f.is_constant()) {
        result.unit = f.coeff(0);
        return result;
    }
    long long xpow = 0;
    Poly g = strip_x(f, &xpow).monic();
    if (xpow > 0) result.factors.emplace_back(Poly::monomial(F, 1), xpow);

    std::uint64_t seed = 0x9e3779b97f4a7c15ULL ^ (std::uint64_t)F.q();
    for (Elem c : f.coeffs()) seed = seed * 1099511628211ULL + c;
    std::mt19937_64 rng(seed);

    std::vector<std::pair<Poly, long long>> parts;
    squarefree_decompose(g, 1, parts);
    for (const auto& [part, mult] : parts) {
        std::vector<Poly> irr;
        distinct_degree_factor(part, rng, irr);
        for (const auto& p : irr) result.factors.emplace_back(p, mult);
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) { return a.first.canonical_less(b.first); });
    return result;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    Factorization fac = factor(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

long long divisor_count(const Factorization& fac) {
    long long n = 1;
    for (const auto& [p, m] : fac.factors) {
        if (n > (1LL << 62) / (m + 1)) return 1LL << 62;
        n *= m + 1;
    }
    return n;
}

std::vector<Poly> monic_divisors(const Factorization& fac, const Field& field,
                                 long long cap) {
    if (divisor_count(fac) > cap) throw Error("divisor count exceeds cap");
    std::vector<Poly> divs = {Poly::one(field)};
    for (const auto& [p, m] : fac.factors) {
        std::vector<Poly> next;
        next.reserve(divs.size() * std::size_t(m + 1));
        for (const auto& d : divs) {
            Poly acc = d;
            next.push_back(acc);
            for (long long j = 1; j <= m; ++j) {
                acc = acc * p;
                next.push_back(acc);
            }
        }
        divs = std::move(next);
    }
    std::sort(divs.begin(), divs.end(),
              [](const Poly& a, const Poly& b) { return a.canonical_less(b); });
    return divs;
}

namespace {

bool is_prime_u64(unsigned long long n) {
    if (n < 2) return false;
    for (unsigned long long d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        if (n % d == 0) return n == d;
    }
    auto mulmod64 = [](unsigned long long a, unsigned long long b,
                       unsigned long long m) {
        return (unsigned long long)((u128)a * b % m);
    };
    auto powmod64 = [&](unsigned long long a, unsigned long long e,
                        unsigned long long m) {
        unsigned long long r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulmod64(r, a, m);
            a = mulmod64(a, a, m);
            e >>= 1;
        }
        return r;
    };
    unsigned long long d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (unsigned long long a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                                 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (a % n == 0) continue;
        unsigned long long x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int j = 1; j < s; ++j) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Prime factors of v, trial division then Miller-Rabin on the cofactor.
std::vector<unsigned long long> prime_factors_u128(u128 v) {
    std::vector<unsigned long long> primes;
    for (unsigned long long d = 2; d <= 1000000ULL && (u128)d * d <= v; ++d) {
        if (v % d == 0) {
            primes.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) {
        if (v > (u128)1 << 62)
            throw OrderTooLarge("cofactor of q^d - 1 too large to factor");
        unsigned long long w = (unsigned long long)v;
        if (!is_prime_u64(w))
            throw OrderTooLarge("composite cofactor of q^d - 1 beyond trial division");
        primes.push_back(w);
    }
    return primes;
}

}  // namespace

long long ord(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    const Field& F = f.field();
    Poly g = strip_x(f, nullptr).monic();
    if (g.is_constant()) return 1;

    Factorization fac = factor(g);
    std::set<unsigned long long> primes;
    u128 e_lcm = 1;
    for (const auto& [pi, mult] : fac.factors) {
        const long long d = pi.degree();
        if (d > 24) throw OrderTooLarge("irreducible factor degree exceeds 24");
        u128 qd = 1;
        for (long long j = 0; j < d; ++j) {
            if (qd > ((u128)1 << 120) / (u128)F.q())
                throw OrderTooLarge("q^d overflows");
            qd *= (u128)F.q();
        }
        u128 e = qd - 1;
        auto pf = prime_factors_u128(e);
        const Poly x = Poly::monomial(F, 1);
        for (unsigned long long r : pf) {
            primes.insert(r);
            while (e % r == 0 && powmod_u128(x, e / r, pi).is_one()) e /= r;
        }
        u128 a = e_lcm, b = e;
        while (b) {
            u128 t = a % b;
            a = b;
            b = t;
        }
        u128 next = e_lcm / a * e;
        if (next > (u128)1 << 62) throw OrderTooLarge("lcm of factor orders overflows");
        e_lcm = next;
    }
    long long t = 1;
    const long long max_mult = fac.max_multiplicity();
    while (t < max_mult) {
        t *= F.p();
        if (e_lcm > ((u128)1 << 62) / (u128)F.p())
            throw OrderTooLarge("p-power contribution overflows");
        e_lcm *= (u128)F.p();
        primes.insert((unsigned long long)F.p());
    }
    long long e = (long long)e_lcm;

    // Minimize and verify against g directly.
    const Poly x = Poly::monomial(F, 1);
    bool reduced = true;
    while (reduced) {
        reduced = false;
        for (unsigned long long r : primes) {
            if (e % (long long)r == 0 &&
                powmod_u128(x, (u128)(e / (long long)r), g).is_one()) {
                e /= (long long)r;
                reduced = true;
                break;
            }
        }
    }
    if (!powmod_u128(x, (u128)e, g).is_one())
        throw Error("internal: order verification failed");
    return e;
}

long long ord_bruteforce(const Poly& f, long long cap) {
    if (f.is_zero()) throw ZeroPolynomial();
    const Field& F = f.field();
    Poly g = strip_x(f, nullptr).monic();
    if (g.is_constant()) return 1;
    const Poly x = Poly::monomial(F, 1);
    Poly r = divrem(x, g).second;
    for (long long e = 1; e <= cap; ++e) {
        if (r.is_one()) return e;
        r = divrem(r.shifted(1), g).second;
    }
    throw OrderTooLarge("brute-force cap reached");
}

std::pair<long long, Elem> sord(const Poly& f, long long cap) {
    if (f.is_zero()) throw ZeroPolynomial();
    if (f.is_constant()) throw ConstantPolynomial();
    const Field& F = f.field();
    Poly g = strip_x(f, nullptr).monic();
    if (g.is_constant()) throw ConstantPolynomial();
    Poly r = divrem(Poly::monomial(F, 1), g).second;
    for (long long e = 1; e <= cap; ++e) {
        if (r.is_constant() && !r.is_zero()) return {e, r.coeff(0)};
        r = divrem(r.shifted(1), g).second;
    }
    throw OrderTooLarge("semi-order cap reached");
}

}  // namespace polytri
