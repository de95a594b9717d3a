#ifndef CANONFORM_POLYNOMIAL_HPP
#define CANONFORM_POLYNOMIAL_HPP

#include <canonform/scalar.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace canonform {

// Dense univariate polynomial over the active field. Coefficients are stored
// in ascending degree with no trailing zeros; the zero polynomial has an
// empty coefficient vector and degree -1.
class Polynomial {
public:
    static Polynomial zero(const FieldDescriptor& field) { return Polynomial(field, {}); }
    static Polynomial one(const FieldDescriptor& field) { return constant(Scalar::one(field)); }
    static Polynomial constant(const Scalar& c);
    static Polynomial variable(const FieldDescriptor& field); // the indeterminate
    static Polynomial monic_linear(const Scalar& root);       // x - root
    // Ascending coefficients; trailing zeros are stripped. All coefficients
    // must share `field`.
    static Polynomial from_coeffs(const FieldDescriptor& field, std::vector<Scalar> coeffs);

    const FieldDescriptor& field() const { return field_; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    // Zero beyond the degree.
    Scalar coeff(std::size_t k) const;
    const Scalar& leading() const; // nonzero polynomial only

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Scalar& c) const;

    bool operator==(const Polynomial& rhs) const;
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    // Horner evaluation.
    Scalar operator()(const Scalar& x) const;

private:
    Polynomial(FieldDescriptor field, std::vector<Scalar> coeffs)
        : field_(field), coeffs_(std::move(coeffs)) {}

    void strip();

    FieldDescriptor field_;
    std::vector<Scalar> coeffs_;
};

// Euclidean division: f = q*g + r with deg r < deg g. Throws DivisionByZero
// if g is zero.
std::pair<Polynomial, Polynomial> divrem(const Polynomial& f, const Polynomial& g);

// Exact quotient; throws CertificateInvalid if the remainder is nonzero.
Polynomial div_exact(const Polynomial& f, const Polynomial& g);

struct ExtendedGcd {
    Polynomial d, s, t; // d = s*f + t*g, d monic
};

// Extended Euclid; d is monic and divides both inputs. Not both inputs zero.
ExtendedGcd gcd_ext(const Polynomial& f, const Polynomial& g);
Polynomial gcd(const Polynomial& f, const Polynomial& g);

Polynomial monic(const Polynomial& f); // nonzero f scaled by lc(f)^-1
Polynomial pow(const Polynomial& f, unsigned exponent);

// Linear-factor part of a polynomial: roots in the field with exact
// multiplicities, plus the monic rootless remainder, so that
//   lc(f) * prod (x - root)^mult * remainder == f.
struct LinearSplit {
    std::vector<std::pair<Scalar, unsigned>> roots; // canonical scalar order
    Polynomial remainder;
};

// Over the rationals candidates come from the rational root theorem applied
// to the primitive integer form of f; over GF(p) all p field elements are
// tried. Multiplicities by repeated exact division. f must be nonzero.
LinearSplit linear_split(const Polynomial& f);

// Thrown when a diagonal entry of the Smith form has a rootless factor of
// positive degree, i.e. the characteristic polynomial does not split into
// linear factors over the working field.
class CharPolyDoesNotSplit : public Error {
public:
    explicit CharPolyDoesNotSplit(Polynomial remainder);
    const Polynomial& remainder() const { return remainder_; }

private:
    Polynomial remainder_;
};

// For monic g = x^n - a_{n-1} x^{n-1} - ... - a_0 (n >= 1), the sequence
// q_{n-1}, ..., q_0 with q_{n-1} = 1 and q_{j-1} = x*q_j - a_j. Satisfies
// x*q_0 - a_0 = g and deg q_j = n-1-j.
std::vector<Polynomial> horner_sequence(const Polynomial& g);

// Sparse descending rendering, e.g. "l^3 - 2*l + 1".
std::string to_string(const Polynomial& f, char variable = 'l');

} // namespace canonform

#endif
