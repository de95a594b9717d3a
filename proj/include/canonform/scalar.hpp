#ifndef CANONFORM_SCALAR_HPP
#define CANONFORM_SCALAR_HPP

#include <canonform/error.hpp>

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace canonform {

enum class FieldKind { Rationals, PrimeField };

// Selects the active field: the rationals or a prime field GF(p).
// Every Scalar, Polynomial and matrix in the library is tagged with one of
// these; operations on operands with different descriptors throw FieldMismatch.
class FieldDescriptor {
public:
    // Moduli above this are rejected by gf() unless a larger cap is passed.
    // Root search over GF(p) is exhaustive, so p has to stay desk-sized.
    static constexpr std::uint64_t default_modulus_cap = std::uint64_t{1} << 16;
    // (p-1)^2 must fit in a uint64 for modular multiplication.
    static constexpr std::uint64_t hard_modulus_limit = (std::uint64_t{1} << 32) - 1;

    static FieldDescriptor rationals() { return FieldDescriptor(FieldKind::Rationals, 0); }

    // Throws NotPrime if p is composite (trial division) or outside the cap.
    static FieldDescriptor gf(std::uint64_t p, std::uint64_t modulus_cap = default_modulus_cap);

    FieldKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == FieldKind::Rationals; }
    bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }
    std::uint64_t modulus() const { return modulus_; }

    bool operator==(const FieldDescriptor&) const = default;

    std::string name() const; // "rational" or "gf(p)"

private:
    FieldDescriptor(FieldKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    FieldKind kind_;
    std::uint64_t modulus_; // 0 for the rationals
};

// Exact field element. Rationals are kept in lowest terms with positive
// denominator, prime-field values as the representative in [0, p), so
// operator== is structural equality.
class Scalar {
public:
    static Scalar zero(const FieldDescriptor& field);
    static Scalar one(const FieldDescriptor& field);
    static Scalar integer(long long value, const FieldDescriptor& field);
    static Scalar from_mpq(mpq_class value, const FieldDescriptor& field);

    const FieldDescriptor& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    // Rationals only.
    const mpq_class& rational() const { return std::get<mpq_class>(value_); }
    // Prime field only.
    std::uint64_t representative() const { return std::get<std::uint64_t>(value_); }

    Scalar operator-() const;
    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const; // rhs must be nonzero

    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    // Canonical order: numeric over the rationals, representative over GF(p).
    // Throws FieldMismatch across fields.
    bool operator<(const Scalar& rhs) const;

    // "n" or "n/d" over the rationals, the representative over GF(p).
    std::string str() const;

private:
    Scalar(FieldDescriptor field, mpq_class q) : field_(field), value_(std::move(q)) {}
    Scalar(FieldDescriptor field, std::uint64_t rep) : field_(field), value_(rep) {}

    FieldDescriptor field_;
    std::variant<mpq_class, std::uint64_t> value_;
};

// Multiplicative inverse; throws DivisionByZero on zero.
Scalar invert(const Scalar& a);

// Grammar (bit-exact): [-]digits[/digits]. Over GF(p) the integer is reduced
// mod p and "a/b" means a*b^-1. Throws ParseError / DivisionByZero.
Scalar parse_scalar(std::string_view text, const FieldDescriptor& field);

void require_same_field(const FieldDescriptor& a, const FieldDescriptor& b);

} // namespace canonform

#endif
