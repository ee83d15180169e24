#include "polytri/poly.hpp"

#include <algorithm>

namespace polytri {

Poly Poly::constant(const Field& f, Elem c) {
    Poly r(f);
    if (c != 0) r.c_ = {c};
    return r;
}

Poly Poly::monomial(const Field& f, long long deg, Elem c) {
    Poly r(f);
    if (c != 0) {
        r.c_.assign(std::size_t(deg) + 1, 0);
        r.c_.back() = c;
    }
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    check_field(o);
    Poly r(*f_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t j = 0; j < r.c_.size(); ++j)
        r.c_[j] = f_->add(j < c_.size() ? c_[j] : Elem(0),
                          j < o.c_.size() ? o.c_[j] : Elem(0));
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = f_->neg(c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_field(o);
    Poly r(*f_);
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = f_->add(r.c_[i + j], f_->mul(c_[i], o.c_[j]));
    }
    r.trim();
    return r;
}

Poly Poly::scaled(Elem s) const {
    Poly r(*f_);
    if (s == 0) return r;
    r.c_ = c_;
    for (auto& c : r.c_) c = f_->mul(c, s);
    return r;
}

Poly Poly::shifted(long long k) const {
    Poly r(*f_);
    if (c_.empty()) return r;
    r.c_.assign(c_.size() + std::size_t(k), 0);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
}

Elem Poly::eval(Elem x) const {
    Elem r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = f_->add(f_->mul(r, x), *it);
    return r;
}

Poly Poly::monic() const {
    if (c_.empty() || c_.back() == 1) return *this;
    return scaled(f_->inv(c_.back()));
}

bool Poly::canonical_less(const Poly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (c_[j] != o.c_[j]) return c_[j] < o.c_[j];
    return false;
}

std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw DivisionByZero();
    const Field& F = f.field();
    if (&F != &g.field()) throw FieldMismatch();
    if (f.degree() < g.degree()) return {Poly::zero(F), f};
    std::vector<Elem> rem(f.coeffs());
    std::vector<Elem> quot(std::size_t(f.degree() - g.degree()) + 1, 0);
    const Elem lead_inv = F.inv(g.lead());
    for (long long d = f.degree(); d >= g.degree(); --d) {
        Elem c = rem[std::size_t(d)];
        if (c == 0) continue;
        Elem qc = F.mul(c, lead_inv);
        quot[std::size_t(d - g.degree())] = qc;
        for (long long j = 0; j <= g.degree(); ++j) {
            auto& r = rem[std::size_t(d - g.degree() + j)];
            r = F.sub(r, F.mul(qc, g.coeff(j)));
        }
    }
    return {Poly(F, std::move(quot)), Poly(F, std::move(rem))};
}

bool divides(const Poly& g, const Poly& f) {
    return divrem(f, g).second.is_zero();
}

Poly poly_gcd(Poly f, Poly g) {
    if (f.is_zero() && g.is_zero()) throw BothZero();
    while (!g.is_zero()) {
        Poly r = divrem(f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

ExtGcd poly_ext_gcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) throw BothZero();
    const Field& F = f.field();
    Poly r0 = f, r1 = g;
    Poly s0 = Poly::one(F), s1 = Poly::zero(F);
    Poly t0 = Poly::zero(F), t1 = Poly::one(F);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = r1;
        r1 = r;
        Poly s = s0 - q * s1;
        s0 = s1;
        s1 = s;
        Poly t = t0 - q * t1;
        t0 = t1;
        t1 = t;
    }
    Elem lead_inv = F.inv(r0.lead());
    return {r0.scaled(lead_inv), s0.scaled(lead_inv), t0.scaled(lead_inv)};
}

Poly derivative(const Poly& f) {
    const Field& F = f.field();
    std::vector<Elem> c;
    for (long long j = 1; j <= f.degree(); ++j)
        c.push_back(F.mul(f.coeff(j), F.from_int(j)));
    return Poly(F, std::move(c));
}

Poly reciprocal(const Poly& f) {
    std::vector<Elem> c(f.coeffs());
    std::reverse(c.begin(), c.end());
    return Poly(f.field(), std::move(c));
}

Poly monic_reciprocal(const Poly& f) {
    if (f.coeff(0) == 0) throw ZeroConstantTerm();
    return reciprocal(f).scaled(f.field().inv(f.coeff(0)));
}

Poly compose_xpow(const Poly& f, long long i) {
    if (i == 1 || f.is_zero()) return f;
    std::vector<Elem> c(std::size_t(f.degree() * i) + 1, 0);
    for (long long j = 0; j <= f.degree(); ++j) c[std::size_t(j * i)] = f.coeff(j);
    return Poly(f.field(), std::move(c));
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) {
    return divrem(a * b, m).second;
}

Poly powmod(const Poly& a, unsigned long long e, const Poly& m) {
    Poly r = divrem(Poly::one(a.field()), m).second;
    Poly base = divrem(a, m).second;
    while (e > 0) {
        if (e & 1ULL) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

Poly frobenius_powmod(Poly a, int reps, const Poly& m) {
    const unsigned long long q = (unsigned long long)a.field().q();
    for (int j = 0; j < reps; ++j) a = powmod(a, q, m);
    return a;
}

Poly strip_x(const Poly& f, long long* h) {
    if (f.is_zero()) {
        if (h) *h = 0;
        return f;
    }
    long long k = 0;
    while (f.coeff(k) == 0) ++k;
    if (h) *h = k;
    std::vector<Elem> c(f.coeffs().begin() + k, f.coeffs().end());
    return Poly(f.field(), std::move(c));
}

std::optional<Poly> trinomial_sqrt(const Field& F, long long n, long long i,
                                   Elem a, Elem b) {
    if (n <= i || i <= 0 || a == 0 || b == 0) return std::nullopt;
    Poly target = Poly::monomial(F, n) - Poly::monomial(F, i, a) -
                  Poly::constant(F, b);
    auto verified = [&](const Poly& r) -> std::optional<Poly> {
        if (r * r == target) return r;
        return std::nullopt;
    };
    if (F.p() == 2) {
        if (n % 2 || i % 2) return std::nullopt;
        Poly r = Poly::monomial(F, n / 2) +
                 Poly::monomial(F, i / 2, F.pth_root(a)) +
                 Poly::constant(F, F.pth_root(b));
        return verified(r);
    }
    if (n % 2 || i != n / 2) return std::nullopt;
    for (int c = 1; c < F.q(); ++c) {
        if (F.mul(Elem(c), Elem(c)) != F.neg(b)) continue;
        // (x^m +- c)^2 = x^n +- 2c x^m + c^2, so a must be -+2c.
        Elem twoc = F.mul(F.from_int(2), Elem(c));
        if (a == F.neg(twoc))
            return verified(Poly::monomial(F, n / 2) + Poly::constant(F, Elem(c)));
        if (a == twoc)
            return verified(Poly::monomial(F, n / 2) - Poly::constant(F, Elem(c)));
    }
    return std::nullopt;
}

ReciprocalClass classify_reciprocal(const Poly& f) {
    ReciprocalClass r;
    if (f.is_zero()) throw ZeroPolynomial();
    if (f.coeff(0) == 0) {
        r.divisible_by_x = true;
        return r;  // Plain: x | f rules out self/semi/pair
    }
    if (f.is_constant()) return r;
    Poly star = reciprocal(f);
    if (star == f) {
        r.tag = ReciprocalTag::SelfReciprocal;
        return r;
    }
    // f = alpha f* forces alpha = lead(f) / lead(f*) = lead(f) / f(0).
    const Field& F = f.field();
    Elem alpha = F.div(f.lead(), f.coeff(0));
    if (alpha != 1 && star.scaled(alpha) == f) {
        r.tag = ReciprocalTag::SemiReciprocal;
        r.alpha = alpha;
        // Prop 5.7/5.8: the scale of a semi-reciprocal polynomial is -1.
        if (alpha != F.neg(1)) throw Error("semi-reciprocal scale is not -1");
    }
    return r;
}

bool are_pair_reciprocal(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return false;
    if (f.coeff(0) == 0 || g.coeff(0) == 0) return false;
    Poly star = reciprocal(g);
    if (star.degree() != f.degree()) return false;
    Elem alpha = f.field().div(f.lead(), star.lead());
    return star.scaled(alpha) == f;
}

bool is_monic_reciprocal_fixed(const Poly& f) {
    if (f.is_zero() || f.coeff(0) == 0) return false;
    return monic_reciprocal(f) == f.monic();
}

}  // namespace polytri
