#include <canonform/matrix.hpp>

#include "../support/testutil.hpp"

#include <doctest.h>

using namespace canonform;
using testing::mat;
using testing::sc;

namespace {
const FieldDescriptor Q = FieldDescriptor::rationals();
const FieldDescriptor F7 = FieldDescriptor::gf(7);
} // namespace

TEST_CASE("multiplication and application") {
    const DenseMatrix A = mat(Q, {{1, 2}, {3, 4}});
    CHECK(A * DenseMatrix::identity(Q, 2) == A);
    CHECK(DenseMatrix::identity(Q, 2) * A == A);

    const DenseMatrix N = mat(Q, {{0, 1}, {0, 0}});
    CHECK((N * N).is_zero());

    const ColumnVector e1 = ColumnVector::unit(Q, 2, 1);
    const ColumnVector r = apply(mat(Q, {{1, 1}, {0, 1}}), e1);
    CHECK(r.entries[0] == sc(Q, 1));
    CHECK(r.entries[1] == sc(Q, 1));

    // columns of A are the images of the unit vectors
    for (std::size_t k = 0; k < 2; ++k) {
        const ColumnVector col = apply(A, ColumnVector::unit(Q, 2, k));
        for (std::size_t i = 0; i < 2; ++i) CHECK(col.entries[i] == A(i, k));
    }

    CHECK_THROWS_AS(A * mat(Q, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), DimensionMismatch);
    CHECK_THROWS_AS(A * mat(F7, {{1, 2}, {3, 4}}), FieldMismatch);
}

TEST_CASE("inversion") {
    CHECK(invert(mat(Q, {{1, 1}, {0, 1}})) == mat(Q, {{1, -1}, {0, 1}}));
    CHECK(invert(DenseMatrix::identity(Q, 3)) == DenseMatrix::identity(Q, 3));
    CHECK_THROWS_AS(invert(mat(Q, {{1, 2}, {2, 4}})), Singular);
    CHECK_THROWS_AS(invert(DenseMatrix::zero(Q, 2, 3)), NotSquare);

    testing::Rng rng(1234);
    for (const FieldDescriptor& field : {Q, F7}) {
        for (int i = 0; i < 20; ++i) {
            const DenseMatrix A = testing::random_invertible(rng, field, 4, -5, 5);
            const DenseMatrix inv = invert(A);
            CHECK((A * inv).is_identity());
            CHECK((inv * A).is_identity());
        }
    }
}

TEST_CASE("determinant") {
    CHECK(det(DenseMatrix::identity(Q, 4)) == sc(Q, 1));
    CHECK(det(mat(Q, {{1, 2}, {3, 4}})) == sc(Q, -2));
    CHECK_THROWS_AS(det(DenseMatrix::zero(Q, 2, 3)), NotSquare);

    testing::Rng rng(88);
    for (const FieldDescriptor& field : {Q, F7}) {
        for (int i = 0; i < 25; ++i) {
            const DenseMatrix A = testing::random_matrix(rng, field, 3, -5, 5);
            const DenseMatrix B = testing::random_matrix(rng, field, 3, -5, 5);
            // cross-check against the cofactor-expansion oracle
            CHECK(det(A) == testing::det_cofactor(A));
            CHECK(det(A * B) == det(A) * det(B));
        }
    }
}

TEST_CASE("singular exactly when the determinant vanishes") {
    testing::Rng rng(4321);
    for (int i = 0; i < 30; ++i) {
        const DenseMatrix A = testing::random_matrix(rng, Q, 3, -3, 3);
        const bool invertible = [&] {
            try {
                (void)invert(A);
                return true;
            } catch (const Singular&) {
                return false;
            }
        }();
        CHECK(invertible == !det(A).is_zero());
    }
}
