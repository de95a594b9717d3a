#include <canonform/matrix.hpp>

namespace canonform {

namespace {

void require_square(const DenseMatrix& A) {
    if (!A.is_square()) throw NotSquare("matrix is not square");
}

} // namespace

DenseMatrix DenseMatrix::zero(const FieldDescriptor& field, std::size_t rows, std::size_t cols) {
    return DenseMatrix(field, rows, cols,
                       std::vector<Scalar>(rows * cols, Scalar::zero(field)));
}

DenseMatrix DenseMatrix::identity(const FieldDescriptor& field, std::size_t n) {
    DenseMatrix m = zero(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

DenseMatrix DenseMatrix::from_rows(const FieldDescriptor& field,
                                   const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    std::vector<Scalar> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionMismatch("ragged rows");
        for (const Scalar& e : row) {
            require_same_field(field, e.field());
            entries.push_back(e);
        }
    }
    return DenseMatrix(field, r, c, std::move(entries));
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& rhs) const {
    require_same_field(field_, rhs.field_);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix add shape");
    DenseMatrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] += rhs.entries_[k];
    return out;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& rhs) const {
    require_same_field(field_, rhs.field_);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sub shape");
    DenseMatrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] -= rhs.entries_[k];
    return out;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
    require_same_field(field_, rhs.field_);
    if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product inner dimensions");
    DenseMatrix out = zero(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out(i, j) += a * rhs(k, j);
            }
        }
    }
    return out;
}

DenseMatrix DenseMatrix::operator*(const Scalar& c) const {
    require_same_field(field_, c.field());
    DenseMatrix out = *this;
    for (Scalar& e : out.entries_) e *= c;
    return out;
}

bool DenseMatrix::operator==(const DenseMatrix& rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
           entries_ == rhs.entries_;
}

bool DenseMatrix::is_zero() const {
    for (const Scalar& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

bool DenseMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& e = (*this)(i, j);
            if (i == j ? !e.is_one() : !e.is_zero()) return false;
        }
    }
    return true;
}

ColumnVector ColumnVector::zero(const FieldDescriptor& field, std::size_t dim) {
    return {field, std::vector<Scalar>(dim, Scalar::zero(field))};
}

ColumnVector ColumnVector::unit(const FieldDescriptor& field, std::size_t dim, std::size_t k) {
    ColumnVector v = zero(field, dim);
    v.entries[k] = Scalar::one(field);
    return v;
}

bool ColumnVector::is_zero() const {
    for (const Scalar& e : entries) {
        if (!e.is_zero()) return false;
    }
    return true;
}

ColumnVector ColumnVector::operator+(const ColumnVector& rhs) const {
    require_same_field(field, rhs.field);
    if (dim() != rhs.dim()) throw DimensionMismatch("vector add shape");
    ColumnVector out = *this;
    for (std::size_t k = 0; k < entries.size(); ++k) out.entries[k] += rhs.entries[k];
    return out;
}

ColumnVector ColumnVector::operator*(const Scalar& c) const {
    ColumnVector out = *this;
    for (Scalar& e : out.entries) e *= c;
    return out;
}

bool ColumnVector::operator==(const ColumnVector& rhs) const {
    return field == rhs.field && entries == rhs.entries;
}

ColumnVector apply(const DenseMatrix& A, const ColumnVector& v) {
    require_same_field(A.field(), v.field);
    if (A.cols() != v.dim()) throw DimensionMismatch("matrix-vector shape");
    ColumnVector out = ColumnVector::zero(A.field(), A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) {
            if (A(i, j).is_zero()) continue;
            out.entries[i] += A(i, j) * v.entries[j];
        }
    }
    return out;
}

DenseMatrix invert(const DenseMatrix& A) {
    require_square(A);
    const std::size_t n = A.rows();
    DenseMatrix work = A;
    DenseMatrix inv = DenseMatrix::identity(A.field(), n);

    for (std::size_t col = 0; col < n; ++col) {
        // first nonzero entry scanning top to bottom; arithmetic is exact so
        // no magnitude pivoting is needed
        std::size_t pivot = col;
        while (pivot < n && work(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw Singular("matrix is singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(pivot, j), work(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const Scalar scale = invert(work(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            work(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || work(i, col).is_zero()) continue;
            const Scalar factor = work(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                work(i, j) -= factor * work(col, j);
                inv(i, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

Scalar det(const DenseMatrix& A) {
    require_square(A);
    const std::size_t n = A.rows();
    DenseMatrix work = A;
    bool negate = false;
    Scalar result = Scalar::one(A.field());

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return Scalar::zero(A.field());
        if (pivot != col) {
            negate = !negate;
            for (std::size_t j = col; j < n; ++j) std::swap(work(pivot, j), work(col, j));
        }
        result *= work(col, col);
        const Scalar inv_pivot = invert(work(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            if (work(i, col).is_zero()) continue;
            const Scalar factor = work(i, col) * inv_pivot;
            for (std::size_t j = col; j < n; ++j) {
                work(i, j) -= factor * work(col, j);
            }
        }
    }
    return negate ? -result : result;
}

DenseMatrix eval(const Polynomial& f, const DenseMatrix& A) {
    require_square(A);
    require_same_field(f.field(), A.field());
    const std::size_t n = A.rows();
    DenseMatrix acc = DenseMatrix::zero(A.field(), n, n);
    for (std::size_t k = f.coeffs().size(); k-- > 0;) {
        acc = A * acc;
        const Scalar& c = f.coeffs()[k];
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += c;
    }
    return acc;
}

ColumnVector eval_apply(const Polynomial& f, const DenseMatrix& A, const ColumnVector& v) {
    require_square(A);
    require_same_field(f.field(), A.field());
    if (A.cols() != v.dim()) throw DimensionMismatch("matrix-vector shape");
    ColumnVector acc = ColumnVector::zero(A.field(), v.dim());
    for (std::size_t k = f.coeffs().size(); k-- > 0;) {
        acc = apply(A, acc);
        const Scalar& c = f.coeffs()[k];
        if (c.is_zero()) continue;
        acc = acc + v * c;
    }
    return acc;
}

} // namespace canonform
