#include <canonform/polymatrix.hpp>

#include <algorithm>
#include <array>
#include <cassert>
#include <numeric>
#include <optional>

namespace canonform {

PolyMatrix PolyMatrix::zero(const FieldDescriptor& field, std::size_t rows, std::size_t cols) {
    return PolyMatrix(field, rows, cols,
                      std::vector<Polynomial>(rows * cols, Polynomial::zero(field)));
}

PolyMatrix PolyMatrix::identity(const FieldDescriptor& field, std::size_t n) {
    PolyMatrix m = zero(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial::one(field);
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& rhs) const {
    require_same_field(field_, rhs.field_);
    if (cols_ != rhs.rows_) throw DimensionMismatch("polymatrix product inner dimensions");
    PolyMatrix out = zero(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Polynomial& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                if (rhs(k, j).is_zero()) continue;
                out(i, j) = out(i, j) + a * rhs(k, j);
            }
        }
    }
    return out;
}

bool PolyMatrix::operator==(const PolyMatrix& rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
           entries_ == rhs.entries_;
}

bool PolyMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            const Polynomial& e = (*this)(i, j);
            if (i == j ? !e.is_one() : !e.is_zero()) return false;
        }
    }
    return true;
}

PolyMatrix char_matrix(const DenseMatrix& A) {
    if (!A.is_square()) throw NotSquare("characteristic matrix needs a square input");
    const FieldDescriptor& field = A.field();
    const std::size_t n = A.rows();
    PolyMatrix M = PolyMatrix::zero(field, n, n);
    const Polynomial x = Polynomial::variable(field);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Polynomial neg = Polynomial::constant(-A(i, j));
            M(i, j) = (i == j) ? x + neg : neg;
        }
    }
    return M;
}

namespace {

// Working matrix plus the four accumulated cofactors. Every elementary
// operation keeps the invariants
//   P * M0 * Q = D,   P * Pinv = I,   Q * Qinv = I
// (M0 the starting matrix): inverse row operations land in Pinv columns,
// inverse column operations in Qinv rows, in mirrored order.
struct Cofactored {
    PolyMatrix D, P, Q, Qinv, Pinv;

    explicit Cofactored(const PolyMatrix& M)
        : D(M),
          P(PolyMatrix::identity(M.field(), M.rows())),
          Q(PolyMatrix::identity(M.field(), M.cols())),
          Qinv(PolyMatrix::identity(M.field(), M.cols())),
          Pinv(PolyMatrix::identity(M.field(), M.rows())) {}

    explicit Cofactored(const SmithDecomposition& S)
        : D(S.D), P(S.P), Q(S.Q), Qinv(S.Qinv), Pinv(S.Pinv) {}

    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < D.cols(); ++k) std::swap(D(i, k), D(j, k));
        for (std::size_t k = 0; k < P.cols(); ++k) std::swap(P(i, k), P(j, k));
        for (std::size_t k = 0; k < Pinv.rows(); ++k) std::swap(Pinv(k, i), Pinv(k, j));
    }

    // row_dst += f * row_src
    void row_addmul(std::size_t dst, std::size_t src, const Polynomial& f) {
        if (f.is_zero()) return;
        for (std::size_t k = 0; k < D.cols(); ++k) D(dst, k) = D(dst, k) + f * D(src, k);
        for (std::size_t k = 0; k < P.cols(); ++k) P(dst, k) = P(dst, k) + f * P(src, k);
        for (std::size_t k = 0; k < Pinv.rows(); ++k)
            Pinv(k, src) = Pinv(k, src) - f * Pinv(k, dst);
    }

    void row_scale(std::size_t i, const Scalar& c) {
        const Polynomial cc = Polynomial::constant(c);
        const Polynomial ci = Polynomial::constant(invert(c));
        for (std::size_t k = 0; k < D.cols(); ++k) D(i, k) = D(i, k) * cc;
        for (std::size_t k = 0; k < P.cols(); ++k) P(i, k) = P(i, k) * cc;
        for (std::size_t k = 0; k < Pinv.rows(); ++k) Pinv(k, i) = Pinv(k, i) * ci;
    }

    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < D.rows(); ++k) std::swap(D(k, i), D(k, j));
        for (std::size_t k = 0; k < Q.rows(); ++k) std::swap(Q(k, i), Q(k, j));
        for (std::size_t k = 0; k < Qinv.cols(); ++k) std::swap(Qinv(i, k), Qinv(j, k));
    }

    // col_dst += f * col_src
    void col_addmul(std::size_t dst, std::size_t src, const Polynomial& f) {
        if (f.is_zero()) return;
        for (std::size_t k = 0; k < D.rows(); ++k) D(k, dst) = D(k, dst) + f * D(k, src);
        for (std::size_t k = 0; k < Q.rows(); ++k) Q(k, dst) = Q(k, dst) + f * Q(k, src);
        for (std::size_t k = 0; k < Qinv.cols(); ++k)
            Qinv(src, k) = Qinv(src, k) - f * Qinv(dst, k);
    }

    // rows (i, j) <- U * rows (i, j); U = [[a,b],[c,d]] with det(U) = 1
    void left_2x2(std::size_t i, std::size_t j, const Polynomial& a, const Polynomial& b,
                  const Polynomial& c, const Polynomial& d) {
        const auto mix_rows = [&](PolyMatrix& M) {
            for (std::size_t k = 0; k < M.cols(); ++k) {
                Polynomial ri = M(i, k), rj = M(j, k);
                M(i, k) = a * ri + b * rj;
                M(j, k) = c * ri + d * rj;
            }
        };
        mix_rows(D);
        mix_rows(P);
        // Pinv <- Pinv * U^-1, U^-1 = [[d,-b],[-c,a]]
        for (std::size_t k = 0; k < Pinv.rows(); ++k) {
            Polynomial ci = Pinv(k, i), cj = Pinv(k, j);
            Pinv(k, i) = d * ci - c * cj;
            Pinv(k, j) = a * cj - b * ci;
        }
    }

    // cols (i, j) <- cols (i, j) * V; V = [[a,b],[c,d]] with det(V) = 1
    void right_2x2(std::size_t i, std::size_t j, const Polynomial& a, const Polynomial& b,
                   const Polynomial& c, const Polynomial& d) {
        const auto mix_cols = [&](PolyMatrix& M) {
            for (std::size_t k = 0; k < M.rows(); ++k) {
                Polynomial ci = M(k, i), cj = M(k, j);
                M(k, i) = ci * a + cj * c;
                M(k, j) = ci * b + cj * d;
            }
        };
        mix_cols(D);
        mix_cols(Q);
        // Qinv <- V^-1 * Qinv, V^-1 = [[d,-b],[-c,a]]
        for (std::size_t k = 0; k < Qinv.cols(); ++k) {
            Polynomial ri = Qinv(i, k), rj = Qinv(j, k);
            Qinv(i, k) = d * ri - b * rj;
            Qinv(j, k) = a * rj - c * ri;
        }
    }

    SmithDecomposition take() && {
        std::vector<Polynomial> diag;
        const std::size_t n = std::min(D.rows(), D.cols());
        diag.reserve(n);
        for (std::size_t i = 0; i < n; ++i) diag.push_back(D(i, i));
        return SmithDecomposition{std::move(D), std::move(P), std::move(Q), std::move(Qinv),
                                  std::move(Pinv), std::move(diag)};
    }
};

// Nonzero entry of minimal degree in the trailing submatrix starting at
// (t, t); ties broken by smallest (row, col).
std::optional<std::pair<std::size_t, std::size_t>> min_degree_pivot(const PolyMatrix& D,
                                                                    std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    int best_degree = 0;
    for (std::size_t i = t; i < D.rows(); ++i) {
        for (std::size_t j = t; j < D.cols(); ++j) {
            if (D(i, j).is_zero()) continue;
            const int degree = D(i, j).degree();
            if (!best || degree < best_degree) {
                best = {{i, j}};
                best_degree = degree;
            }
        }
    }
    return best;
}

} // namespace

SmithDecomposition smith_normal_form(const PolyMatrix& M) {
    if (!M.is_square()) throw NotSquare("smith_normal_form needs a square matrix");
    Cofactored w(M);
    const std::size_t n = M.rows();

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            const auto pivot = min_degree_pivot(w.D, t);
            if (!pivot) break; // trailing submatrix is zero
            w.row_swap(t, pivot->first);
            w.col_swap(t, pivot->second);

            // reduce the pivot column and row; nonzero remainders become
            // lower-degree pivot candidates
            bool remainder_left = false;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (w.D(i, t).is_zero()) continue;
                auto [q, r] = divrem(w.D(i, t), w.D(t, t));
                w.row_addmul(i, t, -q);
                if (!r.is_zero()) remainder_left = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.D(t, j).is_zero()) continue;
                auto [q, r] = divrem(w.D(t, j), w.D(t, t));
                w.col_addmul(j, t, -q);
                if (!r.is_zero()) remainder_left = true;
            }
            if (remainder_left) continue;

            // pivot row and column are clear; make the pivot divide the rest
            // of the submatrix before moving on
            bool offender_found = false;
            for (std::size_t i = t + 1; i < n && !offender_found; ++i) {
                for (std::size_t j = t + 1; j < n && !offender_found; ++j) {
                    if (w.D(i, j).is_zero()) continue;
                    if (!divrem(w.D(i, j), w.D(t, t)).second.is_zero()) {
                        w.row_addmul(t, i, Polynomial::one(M.field()));
                        offender_found = true;
                    }
                }
            }
            if (!offender_found) break;
        }
        if (!w.D(t, t).is_zero() && !w.D(t, t).is_monic()) {
            w.row_scale(t, invert(w.D(t, t).leading()));
        }
    }
    return std::move(w).take();
}

DiagonalShape invariant_factor_shape(const SmithDecomposition& S) {
    DiagonalShape shape{DiagonalMode::InvariantFactors, {}};
    for (std::size_t i = 0; i < S.diag.size(); ++i) {
        if (S.diag[i].degree() >= 1) shape.entries.emplace_back(S.diag[i], i);
    }
    return shape;
}

namespace {

struct DiagonalEntryKey {
    bool nontrivial;
    std::optional<Scalar> eigenvalue;
    unsigned exponent = 0;

    // trivial entries first, then eigenvalues ascending, exponents descending
    bool precedes(const DiagonalEntryKey& rhs) const {
        if (nontrivial != rhs.nontrivial) return !nontrivial;
        if (!nontrivial) return false;
        if (*eigenvalue != *rhs.eigenvalue) return *eigenvalue < *rhs.eigenvalue;
        return exponent > rhs.exponent;
    }
};

DiagonalEntryKey classify_elementary(const Polynomial& d) {
    if (d.degree() < 1) return {false, std::nullopt, 0};
    const LinearSplit split = linear_split(d);
    if (split.roots.size() != 1 || !split.remainder.is_one()) {
        throw CertificateInvalid("diagonal entry is not a power of a linear factor");
    }
    return {true, split.roots[0].first, split.roots[0].second};
}

} // namespace

std::pair<SmithDecomposition, DiagonalShape>
refine_to_elementary_divisors(const SmithDecomposition& S) {
    Cofactored w(S);
    const std::size_t n = w.D.rows();

    // check splitting first, in chain order, so the reported remainder is
    // the one from the earliest offending invariant factor
    std::vector<std::size_t> nontrivial;
    std::vector<std::size_t> free_slots;
    for (std::size_t pos = 0; pos < n; ++pos) {
        const Polynomial& d = w.D(pos, pos);
        if (d.degree() < 1) {
            free_slots.push_back(pos);
            continue;
        }
        const LinearSplit split = linear_split(d);
        if (split.remainder.degree() >= 1) throw CharPolyDoesNotSplit(split.remainder);
        nontrivial.push_back(pos);
    }

    // split the largest invariant factor first; each coprime split moves the
    // power of the smallest eigenvalue into a spare trivial slot
    for (std::size_t k = nontrivial.size(); k-- > 0;) {
        const std::size_t pos = nontrivial[k];
        LinearSplit split = linear_split(w.D(pos, pos));
        while (split.roots.size() >= 2) {
            const auto& [root, mult] = split.roots.front();
            const Polynomial f = pow(Polynomial::monic_linear(root), mult);
            const Polynomial g = div_exact(w.D(pos, pos), f);
            assert(!free_slots.empty());
            const std::size_t slot = free_slots.back();
            free_slots.pop_back();

            // with s*f + t*g = 1:  U * diag(1, f*g) * V = diag(f, g) for
            // U = [[f,-t],[g,s]], V = [[1-t*g, t*g],[-1, 1]], det U = det V = 1
            const ExtendedGcd bezout = gcd_ext(f, g);
            if (!bezout.d.is_one()) {
                throw CertificateInvalid("elementary divisor factors are not coprime");
            }
            const Polynomial tg = bezout.t * g;
            const Polynomial one = Polynomial::one(w.D.field());
            w.left_2x2(slot, pos, f, -bezout.t, g, bezout.s);
            w.right_2x2(slot, pos, one - tg, tg, -one, one);

            split = linear_split(w.D(pos, pos));
        }
    }

    // canonical diagonal order by selection sort with simultaneous row and
    // column swaps
    std::vector<DiagonalEntryKey> keys;
    keys.reserve(n);
    for (std::size_t i = 0; i < n; ++i) keys.push_back(classify_elementary(w.D(i, i)));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t best = k;
        for (std::size_t j = k + 1; j < n; ++j) {
            if (keys[j].precedes(keys[best])) best = j;
        }
        if (best != k) {
            w.row_swap(k, best);
            w.col_swap(k, best);
            std::swap(keys[k], keys[best]);
        }
    }

    SmithDecomposition refined = std::move(w).take();
    DiagonalShape shape{DiagonalMode::ElementaryDivisors, {}};
    for (std::size_t i = 0; i < n; ++i) {
        if (refined.diag[i].degree() >= 1) shape.entries.emplace_back(refined.diag[i], i);
    }
    return {std::move(refined), std::move(shape)};
}

namespace {

// Formal fraction of polynomials: den monic, gcd(num, den) = 1.
struct Frac {
    Polynomial num, den;

    static Frac of(const Polynomial& p) { return {p, Polynomial::one(p.field())}; }

    bool is_zero() const { return num.is_zero(); }

    void reduce() {
        if (num.is_zero()) {
            den = Polynomial::one(den.field());
            return;
        }
        const Polynomial g = gcd(num, den);
        if (g.degree() >= 1) {
            num = div_exact(num, g);
            den = div_exact(den, g);
        }
        if (!den.is_monic()) {
            const Scalar scale = invert(den.leading());
            num = num * scale;
            den = den * scale;
        }
    }

    Frac operator*(const Frac& rhs) const {
        Frac out{num * rhs.num, den * rhs.den};
        out.reduce();
        return out;
    }

    Frac operator-(const Frac& rhs) const {
        Frac out{num * rhs.den - rhs.num * den, den * rhs.den};
        out.reduce();
        return out;
    }

    Frac operator/(const Frac& rhs) const {
        if (rhs.is_zero()) throw DivisionByZero("formal fraction division by zero");
        Frac out{num * rhs.den, den * rhs.num};
        out.reduce();
        return out;
    }
};

} // namespace

Polynomial det(const PolyMatrix& M) {
    if (!M.is_square()) throw NotSquare("polymatrix determinant needs a square matrix");
    const std::size_t n = M.rows();
    const FieldDescriptor& field = M.field();

    std::vector<std::vector<Frac>> work(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) work[i].push_back(Frac::of(M(i, j)));
    }

    bool negate = false;
    Frac result = Frac::of(Polynomial::one(field));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Polynomial::zero(field);
        if (pivot != col) {
            std::swap(work[pivot], work[col]);
            negate = !negate;
        }
        result = result * work[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (work[i][col].is_zero()) continue;
            const Frac factor = work[i][col] / work[col][col];
            for (std::size_t j = col; j < n; ++j) {
                work[i][j] = work[i][j] - factor * work[col][j];
            }
        }
    }
    if (!result.den.is_one()) {
        throw CertificateInvalid("polymatrix determinant did not reduce to a polynomial");
    }
    return negate ? -result.num : result.num;
}

bool is_unimodular(const PolyMatrix& M) {
    if (!M.is_square()) throw NotSquare("unimodularity needs a square matrix");
    const Polynomial d = det(M);
    return !d.is_zero() && d.degree() == 0;
}

bool verify_smith_identity(const DenseMatrix& A, const SmithDecomposition& S) {
    try {
        if (!A.is_square()) return false;
        const std::size_t n = A.rows();
        if (S.D.rows() != n || S.D.cols() != n) return false;
        if (S.diag.size() != n) return false;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j ? S.D(i, i) != S.diag[i] : !S.D(i, j).is_zero()) return false;
            }
        }
        if (!(S.Q * S.Qinv).is_identity()) return false;
        if (!(S.P * S.Pinv).is_identity()) return false;
        return S.P * char_matrix(A) * S.Q == S.D;
    } catch (const Error&) {
        return false;
    }
}

} // namespace canonform
