#include <canonform/scalar.hpp>

#include <utility>

namespace canonform {

namespace {

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw DivisionByZero("inverse of zero in gf(" + std::to_string(p) + ")");
    // extended Euclid on (a, p); p prime so gcd is 1
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

} // namespace

FieldDescriptor FieldDescriptor::gf(std::uint64_t p, std::uint64_t modulus_cap) {
    if (modulus_cap > hard_modulus_limit) modulus_cap = hard_modulus_limit;
    if (p < 2 || p > modulus_cap) {
        throw NotPrime("gf modulus " + std::to_string(p) + " outside (1, " +
                       std::to_string(modulus_cap) + "]");
    }
    if (!is_prime_u64(p)) {
        throw NotPrime("gf modulus " + std::to_string(p) + " is not prime");
    }
    return FieldDescriptor(FieldKind::PrimeField, p);
}

std::string FieldDescriptor::name() const {
    if (is_rationals()) return "rational";
    return "gf(" + std::to_string(modulus_) + ")";
}

void require_same_field(const FieldDescriptor& a, const FieldDescriptor& b) {
    if (!(a == b)) {
        throw FieldMismatch("field mismatch: " + a.name() + " vs " + b.name());
    }
}

Scalar Scalar::zero(const FieldDescriptor& field) {
    if (field.is_rationals()) return Scalar(field, mpq_class(0));
    return Scalar(field, std::uint64_t{0});
}

Scalar Scalar::one(const FieldDescriptor& field) {
    if (field.is_rationals()) return Scalar(field, mpq_class(1));
    return Scalar(field, std::uint64_t{1});
}

Scalar Scalar::integer(long long value, const FieldDescriptor& field) {
    if (field.is_rationals()) {
        mpq_class q;
        q = mpz_class(static_cast<long>(value)); // long long fits in long on LP64
        return Scalar(field, std::move(q));
    }
    const std::uint64_t p = field.modulus();
    long long r = value % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return Scalar(field, static_cast<std::uint64_t>(r));
}

Scalar Scalar::from_mpq(mpq_class value, const FieldDescriptor& field) {
    if (field.is_rationals()) {
        value.canonicalize();
        return Scalar(field, std::move(value));
    }
    // reduce num * den^-1 mod p
    const std::uint64_t p = field.modulus();
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class num = value.get_num() % pz;
    if (num < 0) num += pz;
    mpz_class den = value.get_den() % pz;
    std::uint64_t d = den.get_ui();
    if (d == 0) throw DivisionByZero("denominator is zero mod " + std::to_string(p));
    std::uint64_t n = num.get_ui();
    return Scalar(field, (n * mod_inverse(d, p)) % p);
}

bool Scalar::is_zero() const {
    if (field_.is_rationals()) return sgn(rational()) == 0;
    return representative() == 0;
}

bool Scalar::is_one() const {
    if (field_.is_rationals()) return rational() == 1;
    return representative() == 1;
}

Scalar Scalar::operator-() const {
    if (field_.is_rationals()) return Scalar(field_, mpq_class(-rational()));
    const std::uint64_t p = field_.modulus();
    const std::uint64_t r = representative();
    return Scalar(field_, r == 0 ? 0 : p - r);
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    require_same_field(field_, rhs.field_);
    if (field_.is_rationals()) return Scalar(field_, mpq_class(rational() + rhs.rational()));
    const std::uint64_t p = field_.modulus();
    return Scalar(field_, (representative() + rhs.representative()) % p);
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    require_same_field(field_, rhs.field_);
    if (field_.is_rationals()) return Scalar(field_, mpq_class(rational() - rhs.rational()));
    const std::uint64_t p = field_.modulus();
    return Scalar(field_, (representative() + p - rhs.representative()) % p);
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    require_same_field(field_, rhs.field_);
    if (field_.is_rationals()) return Scalar(field_, mpq_class(rational() * rhs.rational()));
    const std::uint64_t p = field_.modulus();
    return Scalar(field_, (representative() * rhs.representative()) % p);
}

Scalar Scalar::operator/(const Scalar& rhs) const { return *this * invert(rhs); }

bool Scalar::operator==(const Scalar& rhs) const {
    if (!(field_ == rhs.field_)) return false;
    if (field_.is_rationals()) return rational() == rhs.rational();
    return representative() == rhs.representative();
}

bool Scalar::operator<(const Scalar& rhs) const {
    require_same_field(field_, rhs.field_);
    if (field_.is_rationals()) return rational() < rhs.rational();
    return representative() < rhs.representative();
}

std::string Scalar::str() const {
    if (field_.is_rationals()) return rational().get_str();
    return std::to_string(representative());
}

Scalar invert(const Scalar& a) {
    if (a.is_zero()) throw DivisionByZero("inverse of zero in " + a.field().name());
    if (a.field().is_rationals()) {
        return Scalar::from_mpq(mpq_class(1) / a.rational(), a.field());
    }
    const std::uint64_t p = a.field().modulus();
    return Scalar::integer(static_cast<long long>(mod_inverse(a.representative(), p)), a.field());
}

Scalar parse_scalar(std::string_view text, const FieldDescriptor& field) {
    const auto bad = [&](const char* why) {
        return ParseError(std::string("bad scalar '") + std::string(text) + "': " + why);
    };
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && text[i] == '-') {
        negative = true;
        ++i;
    }
    std::size_t num_begin = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == num_begin) throw bad("expected digits");
    std::string num(text.substr(num_begin, i - num_begin));
    std::string den = "1";
    if (i < text.size()) {
        if (text[i] != '/') throw bad("unexpected character");
        ++i;
        std::size_t den_begin = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == den_begin || i != text.size()) throw bad("expected denominator digits");
        den = std::string(text.substr(den_begin));
    }
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw DivisionByZero("bad scalar '" + std::string(text) + "': zero denominator");
    if (negative) n = -n;
    return Scalar::from_mpq(mpq_class(n, d), field);
}

} // namespace canonform
