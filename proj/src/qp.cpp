#include "polytri/qp.hpp"

namespace polytri {

QpCode::QpCode(Poly modulus, Poly g, std::vector<Poly> blocks)
    : base_(std::move(modulus), std::move(g)), h_(base_.field()) {
    h_ = divrem(base_.modulus(), base_.gen()).first;
    if (blocks.empty()) throw Error("at least one block is required");
    for (auto& f : blocks) {
        Poly red = divrem(f, base_.modulus()).second;
        if (red.is_zero()) throw ZeroPolynomial();
        coprime_.push_back(h_.is_constant() || poly_gcd(red, h_).is_one());
        blocks_.push_back(std::move(red));
    }
}

bool QpCode::all_coprime() const {
    for (bool c : coprime_)
        if (!c) return false;
    return true;
}

Matrix QpCode::generator_matrix() const {
    const long long n = base_.n();
    Matrix m;
    for (long long j = 0; j < dim(); ++j) {
        Row r((std::size_t)length(), 0);
        for (long long bi = 0; bi < ell(); ++bi) {
            Poly block = mulmod(base_.gen().shifted(j), blocks_[(std::size_t)bi],
                                base_.modulus());
            for (long long c = 0; c <= block.degree(); ++c)
                r[(std::size_t)(bi * n + c)] = block.coeff(c);
        }
        m.push_back(std::move(r));
    }
    return m;
}

QpCode build_qp(const Poly& modulus, const Poly& g,
                const std::vector<Poly>& blocks) {
    return QpCode(modulus, g, blocks);
}

QpDistance qp_distance_and_bound(const QpCode& P, unsigned long long budget) {
    const Field& F = P.field();
    QpDistance res;
    res.base_d = min_distance(P.base(), budget);

    if (P.all_coprime() && res.base_d.exact) {
        // Certify <g f_i> = <g>: with u f_i + v h = 1, g f_i u = g mod modulus.
        for (const Poly& f : P.blocks()) {
            if (P.h().is_constant()) continue;
            ExtGcd e = poly_ext_gcd(f, P.h());
            if (!e.d.is_one())
                throw Error("internal: coprimality flag disagrees with gcd");
            Poly lifted = divrem(P.base().gen() * f * e.u, P.base().modulus()).second;
            Poly expect = divrem(P.base().gen(), P.base().modulus()).second;
            if (lifted != expect)
                throw Error("Bezout lift failed to recover the generator");
        }
        res.bound = P.ell() * res.base_d.d;
    }

    res.D = min_weight_span(F, P.generator_matrix(), budget);
    if (res.bound && res.D.exact && res.D.d < *res.bound)
        throw BoundViolation("exact distance " + std::to_string(res.D.d) +
                             " below bound " + std::to_string(*res.bound));
    return res;
}

}  // namespace polytri
