#ifndef POLYTRI_GF_HPP
#define POLYTRI_GF_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polytri/errors.hpp"

namespace polytri {

/// Index of a field element: sum of polynomial-basis digits times p^j. 0 is
/// always the zero element, 1 the one element.
using Elem = std::uint8_t;

/// GF(p^w) with q = p^w <= 64, full add/mul lookup tables. Instances are
/// immutable and interned: Field::get returns the same object for the same
/// (p, w), so pointer equality identifies the field.
class Field {
  public:
    static const Field& get(int p, int w);
    /// Accepts "q" for a prime field or "p^w" for extensions, e.g. "3", "2^2".
    static const Field& parse(std::string_view descriptor);

    int p() const { return p_; }
    int w() const { return w_; }
    int q() const { return q_; }

    /// Degree-w monic irreducible over GF(p), ascending coefficients
    /// (length w+1). For w = 1 this is the placeholder x.
    const std::vector<std::uint8_t>& modulus() const { return modulus_; }
    Elem generator() const { return generator_; }

    Elem add(Elem x, Elem y) const { return add_[idx(x, y)]; }
    Elem sub(Elem x, Elem y) const { return add_[idx(x, neg_[y])]; }
    Elem mul(Elem x, Elem y) const { return mul_[idx(x, y)]; }
    Elem neg(Elem x) const { return neg_[x]; }
    Elem inv(Elem x) const {
        if (x == 0) throw DivisionByZero();
        return inv_[x];
    }
    Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
    Elem pow(Elem x, long long e) const;

    /// The unique beta with beta^p = x (inverse Frobenius).
    Elem pth_root(Elem x) const { return proot_[x]; }

    /// Smallest z >= 1 with x^z = 1; divides q - 1.
    int mult_order(Elem x) const;

    /// Embedding of an integer via the prime subfield (value mod p).
    Elem from_int(long long v) const;

    /// Polynomial-basis digits of x, ascending, length w.
    std::vector<std::uint8_t> repr(Elem x) const;

    /// Human-readable form: decimal digit / A-G letter for prime fields,
    /// "0", "1", "a", "a^k" for extension fields.
    std::string format(Elem x) const;
    Elem parse_elem(std::string_view text) const;

    std::string descriptor() const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

  private:
    Field(int p, int w);
    std::size_t idx(Elem x, Elem y) const { return std::size_t(x) * q_ + y; }

    int p_, w_, q_;
    std::vector<std::uint8_t> modulus_;
    Elem generator_ = 0;
    std::vector<Elem> add_, mul_;
    std::vector<Elem> neg_, inv_, proot_;
    std::vector<int> log_;  // discrete log base generator, log_[0] unused
};

}  // namespace polytri

#endif
