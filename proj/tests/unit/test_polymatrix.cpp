#include <canonform/polymatrix.hpp>

#include "../support/testutil.hpp"

#include <doctest.h>

#include <set>
#include <string>
#include <utility>

using namespace canonform;
using testing::mat;
using testing::poly;
using testing::sc;

namespace {
const FieldDescriptor Q = FieldDescriptor::rationals();
const FieldDescriptor F2 = FieldDescriptor::gf(2);
const FieldDescriptor F7 = FieldDescriptor::gf(7);

// diag entries must match the determinantal-divisor quotients exactly
void check_against_divisor_oracle(const DenseMatrix& A, const SmithDecomposition& S) {
    const PolyMatrix M = char_matrix(A);
    Polynomial previous = Polynomial::one(A.field());
    for (std::size_t k = 0; k < A.rows(); ++k) {
        const Polynomial divisor = testing::determinantal_divisor(M, k + 1);
        CHECK(S.diag[k] * previous == divisor);
        previous = divisor;
    }
}

std::multiset<std::pair<std::string, unsigned>> root_multiset(const std::vector<Polynomial>& ds) {
    std::multiset<std::pair<std::string, unsigned>> out;
    for (const Polynomial& d : ds) {
        if (d.degree() < 1) continue;
        for (const auto& [root, mult] : linear_split(d).roots) out.insert({root.str(), mult});
    }
    return out;
}
} // namespace

TEST_CASE("characteristic matrix") {
    const PolyMatrix M = char_matrix(mat(Q, {{3, 1}, {0, 3}}));
    CHECK(M(0, 0) == poly(Q, {-3, 1}));
    CHECK(M(0, 1) == poly(Q, {-1}));
    CHECK(M(1, 0).is_zero());
    CHECK(M(1, 1) == poly(Q, {-3, 1}));

    const PolyMatrix Z = char_matrix(DenseMatrix::zero(Q, 2, 2));
    CHECK(Z(0, 0) == Polynomial::variable(Q));
    CHECK(Z(1, 1) == Polynomial::variable(Q));
    CHECK(Z(0, 1).is_zero());

    const PolyMatrix I = char_matrix(DenseMatrix::identity(Q, 3));
    for (std::size_t i = 0; i < 3; ++i) CHECK(I(i, i) == poly(Q, {-1, 1}));
    CHECK_THROWS_AS(char_matrix(DenseMatrix::zero(Q, 2, 3)), NotSquare);
}

TEST_CASE("smith normal form examples") {
    const DenseMatrix A1 = mat(Q, {{3, 1}, {0, 3}});
    const SmithDecomposition S1 = smith_normal_form(char_matrix(A1));
    CHECK(S1.diag[0].is_one());
    CHECK(S1.diag[1] == poly(Q, {9, -6, 1})); // (x-3)^2
    CHECK(verify_smith_identity(A1, S1));
    check_against_divisor_oracle(A1, S1);

    const DenseMatrix A2 = mat(Q, {{1, 0}, {0, 2}});
    const SmithDecomposition S2 = smith_normal_form(char_matrix(A2));
    CHECK(S2.diag[0].is_one());
    CHECK(S2.diag[1] == poly(Q, {2, -3, 1})); // (x-1)(x-2)
    CHECK(verify_smith_identity(A2, S2));
    check_against_divisor_oracle(A2, S2);

    const DenseMatrix A3 = mat(Q, {{2, 0}, {0, 2}});
    const SmithDecomposition S3 = smith_normal_form(char_matrix(A3));
    CHECK(S3.diag[0] == poly(Q, {-2, 1}));
    CHECK(S3.diag[1] == poly(Q, {-2, 1}));
    CHECK(verify_smith_identity(A3, S3));
    check_against_divisor_oracle(A3, S3);
}

TEST_CASE("smith properties on random matrices") {
    testing::Rng rng(20250101);
    for (const FieldDescriptor& field : {Q, F7, F2}) {
        for (int i = 0; i < 25; ++i) {
            const std::size_t n =
                static_cast<std::size_t>(rng.uniform(1, field.is_rationals() ? 4 : 5));
            const DenseMatrix A = testing::random_matrix(rng, field, n, -5, 5);
            const SmithDecomposition S = smith_normal_form(char_matrix(A));

            CHECK(verify_smith_identity(A, S));
            CHECK(is_unimodular(S.P));
            CHECK(is_unimodular(S.Q));

            Polynomial product = Polynomial::one(field);
            for (std::size_t k = 0; k < n; ++k) {
                CHECK(S.diag[k].is_monic());
                if (k + 1 < n) CHECK(divrem(S.diag[k + 1], S.diag[k]).second.is_zero());
                product = product * S.diag[k];
            }
            CHECK(product == monic(det(char_matrix(A))));
            if (n <= 4) check_against_divisor_oracle(A, S);
        }
    }
}

TEST_CASE("refine to elementary divisors") {
    // diag(1, (x-1)(x-2)) -> diag(x-1, x-2)
    const DenseMatrix A = mat(Q, {{1, 0}, {0, 2}});
    const SmithDecomposition S = smith_normal_form(char_matrix(A));
    const auto [R, shape] = refine_to_elementary_divisors(S);
    CHECK(shape.mode == DiagonalMode::ElementaryDivisors);
    CHECK(R.diag[0] == poly(Q, {-1, 1}));
    CHECK(R.diag[1] == poly(Q, {-2, 1}));
    CHECK(verify_smith_identity(A, R));
    REQUIRE(shape.entries.size() == 2);
    CHECK(shape.entries[0].second == 0);
    CHECK(shape.entries[1].second == 1);

    // a single eigenvalue keeps its single elementary divisor
    const DenseMatrix B = mat(Q, {{3, 1}, {0, 3}});
    const auto [RB, shapeB] = refine_to_elementary_divisors(smith_normal_form(char_matrix(B)));
    CHECK(RB.diag[0].is_one());
    CHECK(RB.diag[1] == poly(Q, {9, -6, 1}));
    CHECK(verify_smith_identity(B, RB));

    // x^2 + 1 has no rational roots
    const DenseMatrix C = mat(Q, {{0, 1}, {-1, 0}});
    const SmithDecomposition SC = smith_normal_form(char_matrix(C));
    CHECK_THROWS_AS((void)refine_to_elementary_divisors(SC), CharPolyDoesNotSplit);
    try {
        (void)refine_to_elementary_divisors(SC);
    } catch (const CharPolyDoesNotSplit& e) {
        CHECK(e.remainder() == poly(Q, {1, 0, 1}));
    }
    // ... but x^2 + 1 = (x-2)(x-3) over gf(5)
    const FieldDescriptor F5 = FieldDescriptor::gf(5);
    const DenseMatrix C5 = mat(F5, {{0, 1}, {-1, 0}});
    const auto [R5, shape5] = refine_to_elementary_divisors(smith_normal_form(char_matrix(C5)));
    CHECK(R5.diag[0] == poly(F5, {-2, 1}));
    CHECK(R5.diag[1] == poly(F5, {-3, 1}));
    CHECK(verify_smith_identity(C5, R5));
}

TEST_CASE("refinement preserves the identity and the root multiset") {
    testing::Rng rng(606060);
    for (const FieldDescriptor& field : {Q, F7}) {
        int done = 0;
        while (done < 15) {
            const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
            // conjugated diagonal matrices always split
            DenseMatrix D0 = DenseMatrix::zero(field, n, n);
            for (std::size_t k = 0; k < n; ++k) D0(k, k) = testing::random_scalar(rng, field, -3, 3);
            const DenseMatrix G = testing::random_invertible(rng, field, n, -3, 3);
            const DenseMatrix A = G * D0 * invert(G);

            const SmithDecomposition S = smith_normal_form(char_matrix(A));
            const auto [R, shape] = refine_to_elementary_divisors(S);
            CHECK(verify_smith_identity(A, R));
            CHECK(root_multiset(S.diag) == root_multiset(R.diag));
            for (const auto& [d, pos] : shape.entries) {
                const LinearSplit s = linear_split(d);
                CHECK(s.roots.size() == 1);
                CHECK(s.remainder.is_one());
                CHECK(R.diag[pos] == d);
            }
            // canonical order: eigenvalues ascending, exponents descending
            for (std::size_t k = 0; k + 1 < shape.entries.size(); ++k) {
                const auto a = linear_split(shape.entries[k].first).roots[0];
                const auto b = linear_split(shape.entries[k + 1].first).roots[0];
                const bool ordered = a.first < b.first ||
                                     (a.first == b.first && a.second >= b.second);
                CHECK(ordered);
            }
            ++done;
        }
    }
}

TEST_CASE("unimodularity") {
    CHECK(is_unimodular(PolyMatrix::identity(Q, 3)));
    PolyMatrix D = PolyMatrix::identity(Q, 2);
    D(0, 0) = Polynomial::variable(Q);
    CHECK(!is_unimodular(D));
    CHECK_THROWS_AS(is_unimodular(PolyMatrix::zero(Q, 2, 3)), NotSquare);

    const DenseMatrix A = mat(F7, {{1, 2, 3}, {4, 5, 6}, {0, 1, 2}});
    const SmithDecomposition S = smith_normal_form(char_matrix(A));
    CHECK(is_unimodular(S.P));
    CHECK(is_unimodular(S.Q));
    CHECK(is_unimodular(S.Qinv));
    CHECK(is_unimodular(S.Pinv));
}

TEST_CASE("polymatrix determinant matches the cofactor oracle") {
    testing::Rng rng(111);
    for (const FieldDescriptor& field : {Q, F7}) {
        for (int i = 0; i < 10; ++i) {
            const DenseMatrix A = testing::random_matrix(rng, field, 4, -4, 4);
            const PolyMatrix M = char_matrix(A);
            CHECK(det(M) == testing::det_cofactor(M));
        }
    }
}

TEST_CASE("verify_smith_identity rejects tampering") {
    const DenseMatrix A = mat(Q, {{3, 1}, {0, 3}});
    const SmithDecomposition S = smith_normal_form(char_matrix(A));
    CHECK(verify_smith_identity(A, S));

    SmithDecomposition bad = S;
    bad.D(1, 1) = bad.D(1, 1) + Polynomial::one(Q);
    bad.diag[1] = bad.D(1, 1);
    CHECK(!verify_smith_identity(A, bad));

    SmithDecomposition swapped = S;
    std::swap(swapped.Q, swapped.Qinv);
    CHECK(!verify_smith_identity(A, swapped)); // Q is not self-inverse here

    SmithDecomposition wrong_inverse = S;
    wrong_inverse.Qinv = wrong_inverse.Q;
    CHECK(!verify_smith_identity(A, wrong_inverse));
}
