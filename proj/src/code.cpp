#include "polytri/code.hpp"

#include <algorithm>

namespace polytri {

long long rref(const Field& F, Matrix& m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    long long rank = 0;
    for (std::size_t col = 0; col < cols && rank < (long long)m.size(); ++col) {
        std::size_t pivot = m.size();
        for (std::size_t r = (std::size_t)rank; r < m.size(); ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == m.size()) continue;
        std::swap(m[(std::size_t)rank], m[pivot]);
        Row& prow = m[(std::size_t)rank];
        Elem inv = F.inv(prow[col]);
        for (auto& x : prow) x = F.mul(x, inv);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == (std::size_t)rank || m[r][col] == 0) continue;
            Elem c = m[r][col];
            for (std::size_t j = 0; j < cols; ++j)
                m[r][j] = F.sub(m[r][j], F.mul(c, prow[j]));
        }
        ++rank;
    }
    m.resize((std::size_t)rank, Row());
    return rank;
}

Matrix nullspace_basis(const Field& F, const Matrix& rows, long long n) {
    Matrix m = rows;
    for (auto& r : m) r.resize((std::size_t)n, 0);
    long long rank = rref(F, m);
    // Pivot column of each rref row.
    std::vector<long long> pivot_col(m.size());
    std::vector<bool> is_pivot((std::size_t)n, false);
    for (std::size_t r = 0; r < m.size(); ++r) {
        long long c = 0;
        while (c < n && m[r][(std::size_t)c] == 0) ++c;
        pivot_col[r] = c;
        if (c < n) is_pivot[(std::size_t)c] = true;
    }
    Matrix basis;
    for (long long free = 0; free < n; ++free) {
        if (is_pivot[(std::size_t)free]) continue;
        Row v((std::size_t)n, 0);
        v[(std::size_t)free] = 1;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (pivot_col[r] >= n) continue;
            v[(std::size_t)pivot_col[r]] = F.neg(m[r][(std::size_t)free]);
        }
        basis.push_back(std::move(v));
    }
    (void)rank;
    return basis;
}

DistanceResult min_weight_span(
    const Field& F, const Matrix& rows, unsigned long long budget,
    const std::function<bool(const Row& msg, const Row& word)>& skip,
    std::vector<unsigned long long>* weight_hist) {
    DistanceResult res;
    const std::size_t k = rows.size();
    const std::size_t n = k ? rows[0].size() : 0;
    if (weight_hist) weight_hist->assign(n + 1, 0);
    if (k == 0) {
        res.exact = true;
        res.d = 0;
        if (weight_hist) (*weight_hist)[0] = 1;
        return res;
    }
    const int q = F.q();
    // delta[v] = elem(v+1 mod q) - elem(v): applied on each odometer step.
    std::vector<Elem> delta((std::size_t)q);
    for (int v = 0; v < q; ++v) delta[(std::size_t)v] = F.sub(Elem((v + 1) % q), Elem(v));

    Row msg(k, 0);
    Row word(n, 0);
    long long best = (long long)n + 1;
    bool complete = true;
    unsigned long long seen = 0;
    if (weight_hist) (*weight_hist)[0] = 1;  // zero codeword
    while (true) {
        // Advance the odometer by one.
        std::size_t j = 0;
        while (j < k) {
            Elem step = delta[msg[j]];
            if (step != 0)
                for (std::size_t c = 0; c < n; ++c)
                    word[c] = F.add(word[c], F.mul(step, rows[j][c]));
            msg[j] = Elem((msg[j] + 1) % q);
            if (msg[j] != 0) break;
            ++j;
        }
        if (j == k) break;  // wrapped around: all messages seen
        ++seen;
        if (!skip || !skip(msg, word)) {
            long long w = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (word[c] != 0) ++w;
            if (weight_hist) ++(*weight_hist)[(std::size_t)w];
            if (w < best) best = w;
        }
        if (seen >= budget) {
            // Check whether anything is left.
            bool done = true;
            for (std::size_t t = 0; t < k; ++t)
                if (msg[t] != Elem(q - 1)) done = false;
            if (!done) complete = false;
            break;
        }
    }
    res.exact = complete;
    res.d = best <= (long long)n ? best : 0;
    res.enumerated = seen;
    return res;
}

PolycyclicCode::PolycyclicCode(Poly modulus, Poly g)
    : modulus_(std::move(modulus)), g_(std::move(g).monic()) {
    if (modulus_.degree() < 1 || !modulus_.is_monic())
        throw Error("modulus must be monic of degree >= 1");
    if (g_.is_zero()) throw ZeroPolynomial();
    if (&modulus_.field() != &g_.field()) throw FieldMismatch();
    if (!divides(g_, modulus_))
        throw NotADivisor("generator does not divide the modulus");
}

Matrix PolycyclicCode::generator_matrix() const {
    Matrix m;
    for (long long j = 0; j < k(); ++j) {
        Row r((std::size_t)n(), 0);
        for (long long c = 0; c <= g_.degree(); ++c)
            r[(std::size_t)(j + c)] = g_.coeff(c);
        m.push_back(std::move(r));
    }
    return m;
}

bool PolycyclicCode::contains(const Row& word) const {
    if ((long long)word.size() != n()) return false;
    Poly p(field(), std::vector<Elem>(word.begin(), word.end()));
    return divrem(p, g_).second.is_zero();
}

ParityCheck parity_check_matrix(const PolycyclicCode& C) {
    const Field& F = C.field();
    long long e = ord(C.modulus());
    Poly xe = Poly::monomial(F, e) - Poly::one(F);
    auto [h_mod, r_mod] = divrem(xe, C.modulus());
    if (!r_mod.is_zero())
        throw Error("modulus does not divide x^e - 1 (modulus divisible by x?)");
    auto [h, r] = divrem(xe, C.gen());
    if (!r.is_zero()) throw Error("internal: generator does not divide x^e - 1");

    const long long s = C.gen().degree();
    const long long n = C.n();
    Matrix window;
    for (long long j = 0; j < s; ++j) {
        Row row((std::size_t)n, 0);
        // Reversed h coefficients shifted right by j, truncated to n columns.
        for (long long c = j; c < n; ++c) {
            long long idx = h.degree() - (c - j);
            if (idx >= 0) row[(std::size_t)c] = h.coeff(idx);
        }
        window.push_back(std::move(row));
    }
    Matrix G = C.generator_matrix();
    for (const auto& hr : window)
        for (const auto& gr : G) {
            Elem dot = 0;
            for (std::size_t c = 0; c < hr.size(); ++c)
                dot = F.add(dot, F.mul(hr[c], gr[c]));
            if (dot != 0)
                throw Error("parity-check window does not annihilate the code");
        }
    return ParityCheck{e, h, std::move(window), nullspace_basis(F, G, n)};
}

DistanceResult min_distance(const PolycyclicCode& C, unsigned long long budget) {
    if (C.k() == 0) {
        DistanceResult r;
        r.exact = true;
        r.d = 0;
        return r;
    }
    return min_weight_span(C.field(), C.generator_matrix(), budget);
}

std::vector<unsigned long long> weight_enumerator(const PolycyclicCode& C,
                                                  unsigned long long cap) {
    long double size = 1;
    for (long long j = 0; j < C.k(); ++j) size *= C.field().q();
    if (size > (long double)cap) throw Error("weight enumerator out of budget");
    std::vector<unsigned long long> hist;
    min_weight_span(C.field(), C.generator_matrix(),
                    (unsigned long long)(size + 1), nullptr, &hist);
    if (hist.empty()) hist.assign((std::size_t)C.n() + 1, 0);
    return hist;
}

CodeProperties properties(const PolycyclicCode& C) {
    const Field& F = C.field();
    CodeProperties p;
    Matrix G = C.generator_matrix();
    p.self_orthogonal = true;
    for (std::size_t r1 = 0; r1 < G.size() && p.self_orthogonal; ++r1)
        for (std::size_t r2 = r1; r2 < G.size() && p.self_orthogonal; ++r2) {
            Elem dot = 0;
            for (std::size_t c = 0; c < G[r1].size(); ++c)
                dot = F.add(dot, F.mul(G[r1][c], G[r2][c]));
            if (dot != 0) p.self_orthogonal = false;
        }
    if (C.k() == 0) p.self_orthogonal = true;
    p.self_dual = p.self_orthogonal && 2 * C.k() == C.n();
    p.reversible = !C.gen().is_constant()
                       ? is_monic_reciprocal_fixed(C.gen())
                       : true;
    p.isodual_candidate = C.gen() * C.gen() == C.modulus();

    Matrix dual = nullspace_basis(F, G, C.n());
    p.dual_containing = true;
    for (const auto& row : dual)
        if (!C.contains(row)) p.dual_containing = false;

    long double csize = 1, dsize = 1;
    for (long long j = 0; j < C.k(); ++j) csize *= F.q();
    for (long long j = 0; j < C.n() - C.k(); ++j) dsize *= F.q();
    if (csize <= 1000000.0L && dsize <= 1000000.0L) {
        std::vector<unsigned long long> wc, wd;
        min_weight_span(F, G, (unsigned long long)(csize + 1), nullptr, &wc);
        min_weight_span(F, dual, (unsigned long long)(dsize + 1), nullptr, &wd);
        if (wc.size() < wd.size()) wc.resize(wd.size(), 0);
        if (wd.size() < wc.size()) wd.resize(wc.size(), 0);
        p.isodual_weight_evidence = wc == wd;
    }
    return p;
}

PolycyclicCode reversed_code(const PolycyclicCode& C) {
    if (C.gen().coeff(0) == 0 || C.modulus().coeff(0) == 0)
        throw ZeroConstantTerm();
    PolycyclicCode rev(monic_reciprocal(C.modulus()), monic_reciprocal(C.gen()));
    if (properties(C).self_orthogonal && !properties(rev).self_orthogonal)
        throw Error("reversal did not preserve self-orthogonality");
    return rev;
}

namespace {
void require_cyclic(const PolycyclicCode& C) {
    const Field& F = C.field();
    Poly cyc = Poly::monomial(F, C.n()) - Poly::one(F);
    if (C.modulus() != cyc) throw NotCyclic();
}
}  // namespace

PolycyclicCode expand_code(const PolycyclicCode& C, long long i) {
    require_cyclic(C);
    if (i < 1) throw Error("expansion index must be >= 1");
    const Field& F = C.field();
    Poly modulus = Poly::monomial(F, C.n() * i) - Poly::one(F);
    return PolycyclicCode(modulus, compose_xpow(C.gen(), i));
}

EnlargedCode enlarge_code(const PolycyclicCode& C, long long i) {
    require_cyclic(C);
    if (i < 1) throw Error("expansion index must be >= 1");
    Poly gi = compose_xpow(C.gen(), i);
    long long ni = C.n() * i;
    Matrix rows;
    for (long long j = 0; j < C.k(); ++j) {
        Poly shifted = gi.shifted(i * j);
        Row r((std::size_t)ni, 0);
        for (long long c = 0; c <= shifted.degree(); ++c)
            r[(std::size_t)c] = shifted.coeff(c);
        rows.push_back(std::move(r));
    }
    return EnlargedCode{ni, C.k(), std::move(rows)};
}

}  // namespace polytri
