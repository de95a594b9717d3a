#include <canonform/canonical.hpp>

#include <cstddef>
#include <utility>

namespace canonform {

namespace {

void require_square(const DenseMatrix& A) {
    if (!A.is_square()) throw NotSquare("matrix is not square");
}

DenseMatrix block_diagonal(const FieldDescriptor& field,
                           const std::vector<DenseMatrix>& blocks) {
    std::size_t n = 0;
    for (const DenseMatrix& b : blocks) n += b.rows();
    DenseMatrix out = DenseMatrix::zero(field, n, n);
    std::size_t offset = 0;
    for (const DenseMatrix& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(offset + i, offset + j) = b(i, j);
            }
        }
        offset += b.rows();
    }
    return out;
}

// (eigenvalue, exponent) of an elementary divisor (x - eigenvalue)^exponent.
ElementaryDivisor read_elementary_divisor(const Polynomial& d) {
    const LinearSplit split = linear_split(d);
    if (split.roots.size() != 1 || !split.remainder.is_one()) {
        throw CertificateInvalid("refined diagonal entry is not a power of a linear factor");
    }
    return {split.roots[0].first, split.roots[0].second};
}

} // namespace

InvariantFactorList invariant_factors(const DenseMatrix& A) {
    require_square(A);
    const SmithDecomposition S = smith_normal_form(char_matrix(A));
    InvariantFactorList list;
    for (const Polynomial& d : S.diag) {
        if (d.degree() >= 1) list.factors.push_back(d);
    }
    return list;
}

Polynomial char_poly(const DenseMatrix& A) {
    require_square(A);
    const InvariantFactorList list = invariant_factors(A);
    Polynomial product = Polynomial::one(A.field());
    for (const Polynomial& d : list.factors) product = product * d;
    // independent route: the determinant of xE - A
    if (product != monic(det(char_matrix(A)))) {
        throw CertificateInvalid("invariant factor product disagrees with det(xE - A)");
    }
    return product;
}

Polynomial min_poly(const DenseMatrix& A) {
    require_square(A);
    const InvariantFactorList list = invariant_factors(A);
    if (list.factors.empty()) throw CertificateInvalid("empty invariant factor list");
    return list.factors.back();
}

std::vector<ColumnVector> extract_generators(const SmithDecomposition& S,
                                             const DenseMatrix& A) {
    require_square(A);
    const std::size_t n = A.rows();
    if (S.diag.size() != n) throw DimensionMismatch("decomposition size mismatch");

    std::vector<ColumnVector> generators;
    for (std::size_t pos = 0; pos < n; ++pos) {
        const Polynomial& d = S.diag[pos];
        if (d.degree() < 1) continue;
        ColumnVector y = ColumnVector::zero(A.field(), n);
        for (std::size_t k = 0; k < n; ++k) {
            const Polynomial& entry = S.Pinv(k, pos);
            if (entry.is_zero()) continue;
            y = y + eval_apply(entry, A, ColumnVector::unit(A.field(), n, k));
        }
        if (!eval_apply(d, A, y).is_zero()) {
            throw CertificateInvalid("generator is not annihilated by its diagonal entry");
        }
        generators.push_back(std::move(y));
    }
    return generators;
}

DenseMatrix jordan_block(const Scalar& eigenvalue, std::size_t size) {
    if (size == 0) throw NonpositiveSize("jordan block size must be positive");
    DenseMatrix J = DenseMatrix::zero(eigenvalue.field(), size, size);
    for (std::size_t i = 0; i < size; ++i) {
        J(i, i) = eigenvalue;
        if (i + 1 < size) J(i, i + 1) = Scalar::one(eigenvalue.field());
    }
    return J;
}

DenseMatrix companion_block(const Polynomial& g) {
    if (g.degree() < 1) throw NonpositiveSize("companion block needs degree >= 1");
    if (!g.is_monic()) throw NotMonic("companion block needs a monic polynomial");
    const FieldDescriptor& field = g.field();
    const std::size_t n = static_cast<std::size_t>(g.degree());
    DenseMatrix T = DenseMatrix::zero(field, n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) T(i, i + 1) = Scalar::one(field);
    // bottom row holds a_0..a_{n-1} of g = x^n - a_{n-1} x^{n-1} - ... - a_0
    for (std::size_t j = 0; j < n; ++j) T(n - 1, j) = -g.coeff(j);
    return T;
}

namespace {

CanonicalResult finish_result(const DenseMatrix& A, CanonicalResult result) {
    Scalar d = det(result.transform);
    if (d.is_zero()) {
        throw CertificateInvalid("transform columns are not a basis");
    }
    if (A * result.transform != result.transform * result.form) {
        throw CertificateInvalid("transform does not intertwine the form");
    }
    return result;
}

} // namespace

CanonicalResult jordan_form(const DenseMatrix& A) {
    require_square(A);
    const std::size_t n = A.rows();
    const auto [S, shape] = refine_to_elementary_divisors(smith_normal_form(char_matrix(A)));
    const std::vector<ColumnVector> generators = extract_generators(S, A);

    DenseMatrix transform = DenseMatrix::zero(A.field(), n, n);
    std::vector<ElementaryDivisor> blocks;
    std::vector<DenseMatrix> form_blocks;
    std::size_t column = 0;
    for (std::size_t idx = 0; idx < shape.entries.size(); ++idx) {
        const ElementaryDivisor ed = read_elementary_divisor(shape.entries[idx].first);
        const ColumnVector& y = generators[idx];

        // chain (A - eig)^j y for j = 0..exponent-1, laid out highest power
        // first so the block comes out with ones on the superdiagonal
        DenseMatrix shifted = A;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= ed.eigenvalue;
        std::vector<ColumnVector> chain{y};
        for (unsigned j = 1; j < ed.exponent; ++j) chain.push_back(apply(shifted, chain.back()));
        for (std::size_t j = chain.size(); j-- > 0;) {
            for (std::size_t i = 0; i < n; ++i) transform(i, column) = chain[j].entries[i];
            ++column;
        }
        form_blocks.push_back(jordan_block(ed.eigenvalue, ed.exponent));
        blocks.push_back(ed);
    }
    if (column != n) throw CertificateInvalid("block sizes do not sum to the dimension");

    CanonicalResult result{FormKind::Jordan, block_diagonal(A.field(), form_blocks),
                           std::move(transform), std::move(blocks), {}, generators};
    return finish_result(A, std::move(result));
}

CanonicalResult rational_form(const DenseMatrix& A) {
    require_square(A);
    const std::size_t n = A.rows();
    const SmithDecomposition S = smith_normal_form(char_matrix(A));
    const std::vector<ColumnVector> generators = extract_generators(S, A);

    std::vector<Polynomial> factors;
    for (const Polynomial& d : S.diag) {
        if (d.degree() >= 1) factors.push_back(d);
    }

    DenseMatrix transform = DenseMatrix::zero(A.field(), n, n);
    std::vector<DenseMatrix> form_blocks;
    std::size_t column = 0;
    for (std::size_t idx = 0; idx < factors.size(); ++idx) {
        const Polynomial& g = factors[idx];
        const ColumnVector& y = generators[idx];
        const std::vector<Polynomial> horner = horner_sequence(g); // q_{m-1}, ..., q_0
        const std::size_t m = horner.size();
        // columns q_0(A)y, q_1(A)y, ..., q_{m-1}(A)y = y realize the
        // companion pattern with ones on the superdiagonal
        for (std::size_t j = 0; j < m; ++j) {
            const ColumnVector col = eval_apply(horner[m - 1 - j], A, y);
            for (std::size_t i = 0; i < n; ++i) transform(i, column) = col.entries[i];
            ++column;
        }
        form_blocks.push_back(companion_block(g));
    }
    if (column != n) throw CertificateInvalid("block sizes do not sum to the dimension");

    CanonicalResult result{FormKind::Rational, block_diagonal(A.field(), form_blocks),
                           std::move(transform), {}, std::move(factors), generators};
    return finish_result(A, std::move(result));
}

SimilarityCertificate similar(const DenseMatrix& A, const DenseMatrix& B, bool with_witness) {
    require_square(A);
    require_square(B);
    require_same_field(A.field(), B.field());
    if (A.rows() != B.rows()) throw DimensionMismatch("similarity needs equal dimensions");

    SimilarityCertificate cert{false, invariant_factors(A), invariant_factors(B), std::nullopt};
    cert.similar = cert.invariants_left == cert.invariants_right;
    if (cert.similar && with_witness) {
        const CanonicalResult ra = rational_form(A);
        const CanonicalResult rb = rational_form(B);
        DenseMatrix W = ra.transform * invert(rb.transform);
        if (A * W != W * B) throw CertificateInvalid("similarity witness failed to verify");
        cert.witness = std::move(W);
    }
    return cert;
}

bool verify_similarity(const DenseMatrix& A, const CanonicalResult& result) {
    try {
        if (!A.is_square()) return false;
        const std::size_t n = A.rows();
        if (result.form.rows() != n || result.form.cols() != n) return false;
        if (result.transform.rows() != n || result.transform.cols() != n) return false;

        std::vector<DenseMatrix> expected_blocks;
        if (result.kind == FormKind::Jordan) {
            if (!result.rational_blocks.empty()) return false;
            for (const ElementaryDivisor& b : result.jordan_blocks) {
                expected_blocks.push_back(jordan_block(b.eigenvalue, b.exponent));
            }
        } else {
            if (!result.jordan_blocks.empty()) return false;
            for (const Polynomial& g : result.rational_blocks) {
                expected_blocks.push_back(companion_block(g));
            }
        }
        std::size_t total = 0;
        for (const DenseMatrix& b : expected_blocks) total += b.rows();
        if (total != n) return false;
        if (block_diagonal(A.field(), expected_blocks) != result.form) return false;

        if (det(result.transform).is_zero()) return false;
        return A * result.transform == result.transform * result.form;
    } catch (const Error&) {
        return false;
    }
}

std::optional<DetectedBlocks> detect_form_blocks(const DenseMatrix& form) {
    if (!form.is_square()) return std::nullopt;
    const std::size_t n = form.rows();
    if (n == 0) return std::nullopt;

    // minimal block-diagonal partition: cut after index b when both
    // off-diagonal quadrants around b are zero
    std::vector<std::pair<std::size_t, std::size_t>> segments;
    std::size_t start = 0;
    for (std::size_t b = 0; b < n; ++b) {
        bool cut = true;
        for (std::size_t r = 0; r <= b && cut; ++r) {
            for (std::size_t c = b + 1; c < n && cut; ++c) {
                if (!form(r, c).is_zero() || !form(c, r).is_zero()) cut = false;
            }
        }
        if (cut) {
            segments.emplace_back(start, b);
            start = b + 1;
        }
    }

    const auto as_jordan = [&](std::size_t s, std::size_t e) -> std::optional<ElementaryDivisor> {
        const Scalar& eig = form(s, s);
        for (std::size_t i = s; i <= e; ++i) {
            for (std::size_t j = s; j <= e; ++j) {
                const Scalar& v = form(i, j);
                if (i == j ? v != eig : (j == i + 1 ? !v.is_one() : !v.is_zero())) {
                    return std::nullopt;
                }
            }
        }
        return ElementaryDivisor{eig, static_cast<unsigned>(e - s + 1)};
    };
    const auto as_companion = [&](std::size_t s, std::size_t e) -> std::optional<Polynomial> {
        for (std::size_t i = s; i < e; ++i) {
            for (std::size_t j = s; j <= e; ++j) {
                const Scalar& v = form(i, j);
                if (j == i + 1 ? !v.is_one() : !v.is_zero()) return std::nullopt;
            }
        }
        const std::size_t m = e - s + 1;
        std::vector<Scalar> coeffs;
        for (std::size_t j = 0; j < m; ++j) coeffs.push_back(-form(e, s + j));
        coeffs.push_back(Scalar::one(form.field()));
        return Polynomial::from_coeffs(form.field(), std::move(coeffs));
    };

    DetectedBlocks jordan{FormKind::Jordan, {}, {}};
    bool all_jordan = true;
    for (const auto& [s, e] : segments) {
        if (auto b = as_jordan(s, e)) {
            jordan.jordan_blocks.push_back(*b);
        } else {
            all_jordan = false;
            break;
        }
    }
    if (all_jordan) return jordan;

    DetectedBlocks rational{FormKind::Rational, {}, {}};
    for (const auto& [s, e] : segments) {
        if (auto g = as_companion(s, e)) {
            rational.rational_blocks.push_back(*g);
        } else {
            return std::nullopt;
        }
    }
    return rational;
}

} // namespace canonform
