#include <canonform/polynomial.hpp>

#include <algorithm>
#include <set>

namespace canonform {

Polynomial Polynomial::constant(const Scalar& c) {
    std::vector<Scalar> coeffs;
    if (!c.is_zero()) coeffs.push_back(c);
    return Polynomial(c.field(), std::move(coeffs));
}

Polynomial Polynomial::variable(const FieldDescriptor& field) {
    return Polynomial(field, {Scalar::zero(field), Scalar::one(field)});
}

Polynomial Polynomial::monic_linear(const Scalar& root) {
    return Polynomial(root.field(), {-root, Scalar::one(root.field())});
}

Polynomial Polynomial::from_coeffs(const FieldDescriptor& field, std::vector<Scalar> coeffs) {
    for (const Scalar& c : coeffs) require_same_field(field, c.field());
    Polynomial f(field, std::move(coeffs));
    f.strip();
    return f;
}

void Polynomial::strip() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Polynomial::coeff(std::size_t k) const {
    if (k < coeffs_.size()) return coeffs_[k];
    return Scalar::zero(field_);
}

const Scalar& Polynomial::leading() const { return coeffs_.back(); }

Polynomial Polynomial::operator-() const {
    std::vector<Scalar> coeffs;
    coeffs.reserve(coeffs_.size());
    for (const Scalar& c : coeffs_) coeffs.push_back(-c);
    return Polynomial(field_, std::move(coeffs));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    require_same_field(field_, rhs.field_);
    std::vector<Scalar> coeffs;
    const std::size_t n = std::max(coeffs_.size(), rhs.coeffs_.size());
    coeffs.reserve(n);
    for (std::size_t k = 0; k < n; ++k) coeffs.push_back(coeff(k) + rhs.coeff(k));
    Polynomial f(field_, std::move(coeffs));
    f.strip();
    return f;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    require_same_field(field_, rhs.field_);
    if (is_zero() || rhs.is_zero()) return zero(field_);
    std::vector<Scalar> coeffs(coeffs_.size() + rhs.coeffs_.size() - 1, Scalar::zero(field_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            coeffs[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    Polynomial f(field_, std::move(coeffs));
    f.strip(); // can lose leading terms only in characteristic p
    return f;
}

Polynomial Polynomial::operator*(const Scalar& c) const {
    require_same_field(field_, c.field());
    std::vector<Scalar> coeffs;
    coeffs.reserve(coeffs_.size());
    for (const Scalar& a : coeffs_) coeffs.push_back(a * c);
    Polynomial f(field_, std::move(coeffs));
    f.strip();
    return f;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    return field_ == rhs.field_ && coeffs_ == rhs.coeffs_;
}

Scalar Polynomial::operator()(const Scalar& x) const {
    require_same_field(field_, x.field());
    Scalar acc = Scalar::zero(field_);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& f, const Polynomial& g) {
    require_same_field(f.field(), g.field());
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    const FieldDescriptor& field = f.field();
    if (f.degree() < g.degree()) return {Polynomial::zero(field), f};

    std::vector<Scalar> rem(f.coeffs());
    const std::size_t qsize = static_cast<std::size_t>(f.degree() - g.degree()) + 1;
    std::vector<Scalar> quot(qsize, Scalar::zero(field));
    const Scalar lg_inv = invert(g.leading());
    const std::size_t dg = static_cast<std::size_t>(g.degree());

    for (std::size_t k = rem.size(); k-- > dg;) {
        if (rem[k].is_zero()) continue;
        const Scalar q = rem[k] * lg_inv;
        quot[k - dg] = q;
        for (std::size_t j = 0; j <= dg; ++j) {
            rem[k - dg + j] -= q * g.coeffs()[j];
        }
    }
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(dg), rem.end());
    return {Polynomial::from_coeffs(field, std::move(quot)),
            Polynomial::from_coeffs(field, std::move(rem))};
}

Polynomial div_exact(const Polynomial& f, const Polynomial& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) throw CertificateInvalid("expected exact polynomial division");
    return q;
}

ExtendedGcd gcd_ext(const Polynomial& f, const Polynomial& g) {
    require_same_field(f.field(), g.field());
    if (f.is_zero() && g.is_zero()) throw DivisionByZero("gcd of two zero polynomials");
    const FieldDescriptor& field = f.field();

    Polynomial r0 = f, r1 = g;
    Polynomial s0 = Polynomial::one(field), s1 = Polynomial::zero(field);
    Polynomial t0 = Polynomial::zero(field), t1 = Polynomial::one(field);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    const Scalar scale = invert(r0.leading());
    return {r0 * scale, s0 * scale, t0 * scale};
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) { return gcd_ext(f, g).d; }

Polynomial monic(const Polynomial& f) {
    if (f.is_zero()) throw DivisionByZero("monic of the zero polynomial");
    if (f.is_monic()) return f;
    return f * invert(f.leading());
}

Polynomial pow(const Polynomial& f, unsigned exponent) {
    Polynomial acc = Polynomial::one(f.field());
    for (unsigned k = 0; k < exponent; ++k) acc = acc * f;
    return acc;
}

namespace {

// All positive divisors of |z| (z nonzero), by trial-division factorization.
std::vector<mpz_class> positive_divisors(mpz_class z) {
    z = abs(z);
    std::vector<std::pair<mpz_class, unsigned>> factors;
    for (mpz_class d = 2; d * d <= z; ++d) {
        if (z % d == 0) {
            unsigned e = 0;
            while (z % d == 0) {
                z /= d;
                ++e;
            }
            factors.emplace_back(d, e);
        }
    }
    if (z > 1) factors.emplace_back(z, 1);
    std::vector<mpz_class> divisors{1};
    for (const auto& [p, e] : factors) {
        const std::size_t count = divisors.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * pk);
        }
    }
    return divisors;
}

// Rational-root candidates of f over the rationals, sorted ascending.
std::vector<Scalar> rational_root_candidates(const Polynomial& f) {
    const FieldDescriptor& field = f.field();
    // clear denominators to an integer polynomial
    mpz_class den_lcm = 1;
    for (const Scalar& c : f.coeffs()) {
        mpz_class d = c.rational().get_den();
        den_lcm = lcm(den_lcm, d);
    }
    std::vector<mpz_class> zc;
    zc.reserve(f.coeffs().size());
    for (const Scalar& c : f.coeffs()) {
        mpq_class q = c.rational() * den_lcm;
        zc.push_back(q.get_num()); // q is integral here
    }
    // strip the content; only the constant/leading pair matters afterwards
    std::size_t low = 0;
    while (low < zc.size() && zc[low] == 0) ++low; // x^low divides f; 0 is handled as a candidate
    std::set<mpq_class> candidates;
    candidates.insert(mpq_class(0));
    if (low < zc.size()) {
        const std::vector<mpz_class> nums = positive_divisors(zc[low]);
        const std::vector<mpz_class> dens = positive_divisors(zc.back());
        for (const mpz_class& n : nums) {
            for (const mpz_class& d : dens) {
                mpq_class q(n, d);
                q.canonicalize();
                candidates.insert(q);
                candidates.insert(mpq_class(-q));
            }
        }
    }
    std::vector<Scalar> out;
    out.reserve(candidates.size());
    for (const mpq_class& q : candidates) out.push_back(Scalar::from_mpq(q, field));
    return out; // std::set iterates ascending
}

} // namespace

LinearSplit linear_split(const Polynomial& f) {
    if (f.is_zero()) throw DivisionByZero("linear_split of the zero polynomial");
    const FieldDescriptor& field = f.field();

    std::vector<Scalar> candidates;
    if (field.is_rationals()) {
        candidates = rational_root_candidates(f);
    } else {
        for (std::uint64_t r = 0; r < field.modulus(); ++r) {
            candidates.push_back(Scalar::integer(static_cast<long long>(r), field));
        }
    }

    LinearSplit split{{}, monic(f)};
    for (const Scalar& root : candidates) {
        if (split.remainder.degree() < 1) break;
        unsigned mult = 0;
        while (!split.remainder.is_zero() && split.remainder(root).is_zero()) {
            split.remainder = div_exact(split.remainder, Polynomial::monic_linear(root));
            ++mult;
        }
        if (mult > 0) split.roots.emplace_back(root, mult);
    }
    return split;
}

CharPolyDoesNotSplit::CharPolyDoesNotSplit(Polynomial remainder)
    : Error("characteristic polynomial does not split over " + remainder.field().name() +
            ": irreducible remainder " + canonform::to_string(remainder)),
      remainder_(std::move(remainder)) {}

std::vector<Polynomial> horner_sequence(const Polynomial& g) {
    if (g.degree() < 1) throw NonpositiveSize("horner_sequence needs degree >= 1");
    if (!g.is_monic()) throw NotMonic("horner_sequence needs a monic polynomial");
    const FieldDescriptor& field = g.field();
    const std::size_t n = static_cast<std::size_t>(g.degree());
    const Polynomial x = Polynomial::variable(field);

    // g = x^n - a_{n-1} x^{n-1} - ... - a_0, so a_j = -coeff_j(g) for j < n
    std::vector<Polynomial> seq;
    seq.reserve(n);
    seq.push_back(Polynomial::one(field)); // q_{n-1}
    for (std::size_t j = n - 1; j > 0; --j) {
        const Polynomial a_j = Polynomial::constant(-g.coeff(j));
        seq.push_back(x * seq.back() - a_j); // q_{j-1} = x*q_j - a_j
    }
    return seq; // q_{n-1}, ..., q_0
}

std::string to_string(const Polynomial& f, char variable) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int k = f.degree(); k >= 0; --k) {
        Scalar c = f.coeff(static_cast<std::size_t>(k));
        if (c.is_zero()) continue;
        std::string sign;
        if (out.empty()) {
            if (f.field().is_rationals() && sgn(c.rational()) < 0) {
                sign = "-";
                c = -c;
            }
        } else {
            sign = " + ";
            if (f.field().is_rationals() && sgn(c.rational()) < 0) {
                sign = " - ";
                c = -c;
            }
        }
        std::string term;
        if (k == 0) {
            term = c.str();
        } else {
            if (!c.is_one()) term = c.str() + "*";
            term += variable;
            if (k > 1) term += "^" + std::to_string(k);
        }
        out += sign + term;
    }
    return out;
}

} // namespace canonform
