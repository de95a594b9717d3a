#ifndef CANONFORM_POLYMATRIX_HPP
#define CANONFORM_POLYMATRIX_HPP

#include <canonform/matrix.hpp>
#include <canonform/polynomial.hpp>

#include <cstddef>
#include <utility>
#include <vector>

namespace canonform {

// Dense matrix over F[x].
class PolyMatrix {
public:
    static PolyMatrix zero(const FieldDescriptor& field, std::size_t rows, std::size_t cols);
    static PolyMatrix identity(const FieldDescriptor& field, std::size_t n);

    const FieldDescriptor& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Polynomial& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    PolyMatrix operator*(const PolyMatrix& rhs) const;
    bool operator==(const PolyMatrix& rhs) const;
    bool operator!=(const PolyMatrix& rhs) const { return !(*this == rhs); }

    bool is_identity() const;

private:
    PolyMatrix(FieldDescriptor field, std::size_t rows, std::size_t cols,
               std::vector<Polynomial> entries)
        : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {}

    FieldDescriptor field_;
    std::size_t rows_, cols_;
    std::vector<Polynomial> entries_;
};

// The characteristic matrix xE - A.
PolyMatrix char_matrix(const DenseMatrix& A);

// P * M * Q = D with P, Q unimodular, D diagonal with monic entries forming a
// divisibility chain (trivial 1-entries first). Pinv and Qinv are accumulated
// alongside by applying mirrored inverse operations, P*Pinv = Q*Qinv = I.
struct SmithDecomposition {
    PolyMatrix D, P, Q, Qinv, Pinv;
    std::vector<Polynomial> diag;
};

SmithDecomposition smith_normal_form(const PolyMatrix& M);

enum class DiagonalMode { InvariantFactors, ElementaryDivisors };

struct DiagonalShape {
    DiagonalMode mode;
    // nontrivial diagonal entries with their positions
    std::vector<std::pair<Polynomial, std::size_t>> entries;
};

DiagonalShape invariant_factor_shape(const SmithDecomposition& S);

// Splits every invariant factor into powers of distinct linear factors via
// 2x2 unimodular coprime splits, keeping P*M*Q = D valid for the original M.
// Final diagonal order: trivial 1s first, then eigenvalues ascending with
// exponents descending per eigenvalue. Throws CharPolyDoesNotSplit when some
// invariant factor has a rootless factor of positive degree.
std::pair<SmithDecomposition, DiagonalShape>
refine_to_elementary_divisors(const SmithDecomposition& S);

// Determinant over F[x], computed by elimination over formal fractions of
// polynomials with gcd cancellation.
Polynomial det(const PolyMatrix& M);

// det is a nonzero constant, i.e. M is invertible over F[x].
bool is_unimodular(const PolyMatrix& M);

// Recomputes P*(xE-A)*Q and compares with D entrywise; also checks Q*Qinv and
// P*Pinv. False on any mismatch, never throws.
bool verify_smith_identity(const DenseMatrix& A, const SmithDecomposition& S);

} // namespace canonform

#endif
