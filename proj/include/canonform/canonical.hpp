#ifndef CANONFORM_CANONICAL_HPP
#define CANONFORM_CANONICAL_HPP

#include <canonform/matrix.hpp>
#include <canonform/polymatrix.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace canonform {

// Nontrivial monic diagonal entries of the Smith form of xE - A, in
// divisibility order. Their product is the characteristic polynomial and the
// last entry is the minimal polynomial.
struct InvariantFactorList {
    std::vector<Polynomial> factors;

    bool operator==(const InvariantFactorList&) const = default;
};

// One (x - eigenvalue)^exponent factor.
struct ElementaryDivisor {
    Scalar eigenvalue;
    unsigned exponent;

    bool operator==(const ElementaryDivisor&) const = default;
};

enum class FormKind { Jordan, Rational };

// A canonical form together with the invertible transform S satisfying
// A * S = S * form; the generators are the cyclic vectors the columns of S
// were built from.
struct CanonicalResult {
    FormKind kind;
    DenseMatrix form;
    DenseMatrix transform;
    std::vector<ElementaryDivisor> jordan_blocks; // Jordan only
    std::vector<Polynomial> rational_blocks;      // Rational only (monic g_i)
    std::vector<ColumnVector> generators;
};

struct SimilarityCertificate {
    bool similar;
    InvariantFactorList invariants_left, invariants_right;
    std::optional<DenseMatrix> witness; // A = W * B * W^-1, present on request
};

InvariantFactorList invariant_factors(const DenseMatrix& A);

// Product of the invariant factors, cross-checked against the monic
// determinant of xE - A.
Polynomial char_poly(const DenseMatrix& A);
// Last invariant factor.
Polynomial min_poly(const DenseMatrix& A);

// Cyclic generators read off the Smith cofactors: for the nontrivial
// diagonal entry d at position p, y = sum_k Pinv[k][p](A) * e_k. Checks
// d(A) * y = 0 for each and throws CertificateInvalid on failure.
std::vector<ColumnVector> extract_generators(const SmithDecomposition& S, const DenseMatrix& A);

// eigenvalue on the diagonal, 1 on the superdiagonal.
DenseMatrix jordan_block(const Scalar& eigenvalue, std::size_t size);

// 1 on the superdiagonal and the coefficients (a_0, ..., a_{n-1}) of
// g = x^n - a_{n-1} x^{n-1} - ... - a_0 in the bottom row.
DenseMatrix companion_block(const Polynomial& g);

// Jordan form with verified transform; requires every invariant factor to
// split into linear factors over the field (CharPolyDoesNotSplit otherwise).
CanonicalResult jordan_form(const DenseMatrix& A);

// Rational form with verified transform; works over any field.
CanonicalResult rational_form(const DenseMatrix& A);

// Similarity decision by comparing invariant factor lists; the witness is
// computed only on request since it costs two rational form runs.
SimilarityCertificate similar(const DenseMatrix& A, const DenseMatrix& B,
                              bool with_witness = false);

// A * S = S * form, S invertible and the form matches its block descriptors
// exactly. False on any mismatch, never throws.
bool verify_similarity(const DenseMatrix& A, const CanonicalResult& result);

// Minimal block-diagonal partition of a square matrix with each block
// classified as a Jordan or companion block; nullopt when some block is
// neither. Used to check externally supplied certificates.
struct DetectedBlocks {
    FormKind kind;
    std::vector<ElementaryDivisor> jordan_blocks;
    std::vector<Polynomial> rational_blocks;
};
std::optional<DetectedBlocks> detect_form_blocks(const DenseMatrix& form);

} // namespace canonform

#endif
