#ifndef POLYTRI_ERRORS_HPP
#define POLYTRI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polytri {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct FieldMismatch : Error {
    FieldMismatch() : Error("operands belong to different fields") {}
};

struct ZeroElement : Error {
    ZeroElement() : Error("operation undefined for the zero element") {}
};

struct BadToken : Error {
    explicit BadToken(const std::string& tok) : Error("bad token: " + tok) {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct ConstantPolynomial : Error {
    ConstantPolynomial() : Error("operation undefined for constant polynomials") {}
};

struct BothZero : Error {
    BothZero() : Error("gcd of two zero polynomials") {}
};

struct ZeroConstantTerm : Error {
    ZeroConstantTerm() : Error("polynomial has zero constant term") {}
};

struct OrderTooLarge : Error {
    explicit OrderTooLarge(const std::string& why) : Error("order out of budget: " + why) {}
};

struct NotADivisor : Error {
    explicit NotADivisor(const std::string& what) : Error("not a divisor: " + what) {}
};

struct NotNested : Error {
    NotNested() : Error("g1 does not divide g2") {}
};

struct NotCyclic : Error {
    NotCyclic() : Error("modulus is not x^n - 1") {}
};

struct ProfileMismatch : Error {
    explicit ProfileMismatch(const std::string& what)
        : Error("multiplicity profile mismatch: " + what) {}
};

struct CountMismatch : Error {
    explicit CountMismatch(const std::string& what)
        : Error("reversible count mismatch: " + what) {}
};

struct ShapeViolation : Error {
    explicit ShapeViolation(const std::string& what)
        : Error("gcd shape violation: " + what) {}
};

struct BoundViolation : Error {
    explicit BoundViolation(const std::string& what)
        : Error("distance bound violation: " + what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace polytri

#endif
