#ifndef CANONFORM_MATRIX_HPP
#define CANONFORM_MATRIX_HPP

#include <canonform/polynomial.hpp>
#include <canonform/scalar.hpp>

#include <cstddef>
#include <vector>

namespace canonform {

// Dense row-major matrix of exact field elements.
class DenseMatrix {
public:
    static DenseMatrix zero(const FieldDescriptor& field, std::size_t rows, std::size_t cols);
    static DenseMatrix identity(const FieldDescriptor& field, std::size_t n);
    static DenseMatrix from_rows(const FieldDescriptor& field,
                                 const std::vector<std::vector<Scalar>>& rows);

    const FieldDescriptor& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    DenseMatrix operator+(const DenseMatrix& rhs) const;
    DenseMatrix operator-(const DenseMatrix& rhs) const;
    DenseMatrix operator*(const DenseMatrix& rhs) const;
    DenseMatrix operator*(const Scalar& c) const;

    bool operator==(const DenseMatrix& rhs) const;
    bool operator!=(const DenseMatrix& rhs) const { return !(*this == rhs); }

    bool is_zero() const;
    bool is_identity() const;

private:
    DenseMatrix(FieldDescriptor field, std::size_t rows, std::size_t cols,
                std::vector<Scalar> entries)
        : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {}

    FieldDescriptor field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> entries_;
};

struct ColumnVector {
    static ColumnVector zero(const FieldDescriptor& field, std::size_t dim);
    static ColumnVector unit(const FieldDescriptor& field, std::size_t dim, std::size_t k);

    std::size_t dim() const { return entries.size(); }
    bool is_zero() const;

    ColumnVector operator+(const ColumnVector& rhs) const;
    ColumnVector operator*(const Scalar& c) const;
    bool operator==(const ColumnVector& rhs) const;

    FieldDescriptor field;
    std::vector<Scalar> entries;
};

// A * v.
ColumnVector apply(const DenseMatrix& A, const ColumnVector& v);

// Gauss-Jordan with first-nonzero pivoting; exact. Throws Singular / NotSquare.
DenseMatrix invert(const DenseMatrix& A);

// Exact determinant by elimination with row-swap sign tracking.
Scalar det(const DenseMatrix& A);

// f(A) with Horner's scheme; the constant term contributes c*I.
DenseMatrix eval(const Polynomial& f, const DenseMatrix& A);

// f(A) * v without forming f(A).
ColumnVector eval_apply(const Polynomial& f, const DenseMatrix& A, const ColumnVector& v);

} // namespace canonform

#endif
