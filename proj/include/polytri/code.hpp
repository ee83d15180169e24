#ifndef POLYTRI_CODE_HPP
#define POLYTRI_CODE_HPP

#include <functional>
#include <optional>
#include <string>

#include "polytri/factor.hpp"

namespace polytri {

using Row = std::vector<Elem>;
using Matrix = std::vector<Row>;

/// Reduced row echelon form in place; returns the rank.
long long rref(const Field& F, Matrix& m);
/// Basis of the right nullspace of an r x n matrix.
Matrix nullspace_basis(const Field& F, const Matrix& rows, long long n);

struct DistanceResult {
    bool exact = false;
    long long d = 0;          // exact distance, or the best upper bound found
    long long lower = 1;      // trivial lower bound when not exact
    unsigned long long enumerated = 0;
};

/// Minimum weight of the row span by odometer enumeration of all q^k - 1
/// nonzero messages. Stops early after `budget` messages and reports an
/// upper bound. `skip` (optional) drops messages from consideration; the
/// result is then the minimum over non-skipped messages only.
DistanceResult min_weight_span(
    const Field& F, const Matrix& rows, unsigned long long budget,
    const std::function<bool(const Row& msg, const Row& word)>& skip = nullptr,
    std::vector<unsigned long long>* weight_hist = nullptr);

/// Ideal <g> of F_q[x]/<modulus> with g | modulus, dimension k = n - deg g.
class PolycyclicCode {
  public:
    /// Normalizes g to monic and verifies divisibility (NotADivisor).
    PolycyclicCode(Poly modulus, Poly g);

    const Field& field() const { return modulus_.field(); }
    const Poly& modulus() const { return modulus_; }
    const Poly& gen() const { return g_; }
    long long n() const { return modulus_.degree(); }
    long long k() const { return n() - g_.degree(); }

    /// k x n Toeplitz matrix: row j = coefficients of x^j g(x).
    Matrix generator_matrix() const;
    /// True iff the vector's polynomial is a codeword (divisible by g).
    bool contains(const Row& word) const;

  private:
    Poly modulus_, g_;
};

struct ParityCheck {
    long long e;       // ord(modulus)
    Poly h;            // (x^e - 1) / g
    Matrix window;     // deg(g) x n reversed-h window rows
    Matrix dual_basis; // (n - k) x n nullspace basis of the generator matrix
};

/// Window parity-check rows per the order-e cyclic embedding, plus a generic
/// dual basis. OrderTooLarge when ord(modulus) is out of budget.
ParityCheck parity_check_matrix(const PolycyclicCode& C);

DistanceResult min_distance(const PolycyclicCode& C,
                            unsigned long long budget = 100000000ULL);

/// Weight enumerator A_0..A_n; throws Error when q^k exceeds cap.
std::vector<unsigned long long> weight_enumerator(
    const PolycyclicCode& C, unsigned long long cap = 1000000ULL);

struct CodeProperties {
    bool self_orthogonal = false;
    bool self_dual = false;
    bool dual_containing = false;
    bool reversible = false;
    bool isodual_candidate = false;  // g^2 = modulus
    /// Weight-enumerator comparison of C against its nullspace dual:
    /// unset when either side exceeds the enumeration cap.
    std::optional<bool> isodual_weight_evidence;
};

CodeProperties properties(const PolycyclicCode& C);

/// Code generated by monic_reciprocal(g) in the reciprocal-normalized
/// modulus; preserves self-orthogonality (asserted).
PolycyclicCode reversed_code(const PolycyclicCode& C);

/// <g(x^i)> in x^(ni) - 1: parameters [ni, ki]. NotCyclic unless the
/// modulus is x^n - 1.
PolycyclicCode expand_code(const PolycyclicCode& C, long long i);

/// Length-ni, dimension-k code with messages restricted to polynomials in
/// x^i: rows g(x^i) x^(ij), j < k.
struct EnlargedCode {
    long long n, k;
    Matrix rows;
};
EnlargedCode enlarge_code(const PolycyclicCode& C, long long i);

}  // namespace polytri

#endif
