#ifndef POLYTRI_QP_HPP
#define POLYTRI_QP_HPP

#include "polytri/code.hpp"

namespace polytri {

/// 1-generator quasi-polycyclic code <g f_1 | ... | g f_l> of length l*n and
/// dimension k = n - deg g.
class QpCode {
  public:
    QpCode(Poly modulus, Poly g, std::vector<Poly> blocks);

    const Field& field() const { return base_.field(); }
    const PolycyclicCode& base() const { return base_; }
    const Poly& h() const { return h_; }  // modulus / g
    const std::vector<Poly>& blocks() const { return blocks_; }
    const std::vector<bool>& coprime() const { return coprime_; }
    bool all_coprime() const;
    long long ell() const { return (long long)blocks_.size(); }
    long long length() const { return ell() * base_.n(); }
    long long dim() const { return base_.k(); }

    /// k x (l*n) matrix: row j = (x^j g f_1 mod modulus | ... | x^j g f_l).
    Matrix generator_matrix() const;

  private:
    PolycyclicCode base_;
    Poly h_;
    std::vector<Poly> blocks_;
    std::vector<bool> coprime_;
};

QpCode build_qp(const Poly& modulus, const Poly& g,
                const std::vector<Poly>& blocks);

struct QpDistance {
    /// l * d(base); present only when every gcd(f_i, h) = 1.
    std::optional<long long> bound;
    /// Exact distance of the base code (enumeration shares the budget).
    DistanceResult base_d;
    DistanceResult D;
};

/// Evaluates the block-count distance bound D >= l*d. When all blocks are
/// coprime to h the bound is certified by lifting a modular inverse of each
/// f_i (so that g itself lies in <g f_i>); BoundViolation if the exhaustive
/// enumeration ever contradicts the bound.
QpDistance qp_distance_and_bound(const QpCode& P,
                                 unsigned long long budget = 100000000ULL);

}  // namespace polytri

#endif
