#include "fpn/field.hpp"

#include <cctype>

namespace fpn {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p < 2 || p >= (1u << 31))
        throw InputError("prime field characteristic must satisfy 2 <= p < 2^31, got " +
                         std::to_string(p));
    if (!is_prime_u32(p))
        throw InputError("field characteristic " + std::to_string(p) + " is not prime");
    return FieldSpec{FieldKind::PrimeField, p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text.rfind("GF:", 0) == 0) {
        const std::string num = text.substr(3);
        if (num.empty()) throw InputError("bad field spec '" + text + "'");
        std::uint64_t v = 0;
        for (char c : num) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw InputError("bad field spec '" + text + "'");
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
            if (v >= (1ull << 31))
                throw InputError("field characteristic in '" + text + "' exceeds 2^31");
        }
        return prime(static_cast<std::uint32_t>(v));
    }
    throw InputError("bad field spec '" + text + "' (expected \"Q\" or \"GF:<p>\")");
}

std::string FieldSpec::str() const {
    return kind == FieldKind::Rationals ? "Q" : "GF:" + std::to_string(p);
}

namespace {

// Modular inverse by extended Euclid; a must be a nonzero residue mod p.
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw InternalError("mod_inverse: argument not invertible");
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce_mod(const mpz_class& z, std::uint32_t p) {
    mpz_class r = z % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r.get_ui());
}

} // namespace

Scalar Scalar::zero(const FieldSpec& f) {
    Scalar s;
    s.field_ = f;
    return s;
}

Scalar Scalar::one(const FieldSpec& f) { return from_int(1, f); }

Scalar Scalar::from_int(long n, const FieldSpec& f) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldKind::Rationals) {
        s.rat_ = Rational(n);
    } else {
        std::int64_t r = n % static_cast<std::int64_t>(f.p);
        if (r < 0) r += f.p;
        s.res_ = static_cast<std::uint32_t>(r);
    }
    return s;
}

Scalar Scalar::from_rational(const Rational& r) {
    Scalar s;
    s.field_ = FieldSpec::rationals();
    s.rat_ = r;
    s.rat_.canonicalize();
    return s;
}

Scalar Scalar::residue(std::uint64_t v, const FieldSpec& f) {
    if (f.kind != FieldKind::PrimeField)
        throw InputError("residue scalar requires a prime field");
    Scalar s;
    s.field_ = f;
    s.res_ = static_cast<std::uint32_t>(v % f.p);
    return s;
}

Scalar Scalar::parse(const std::string& text, const FieldSpec& f) {
    // Syntax: -?digits ( "/" digits )?, denominator > 0.
    std::size_t i = 0;
    const auto fail = [&]() -> void {
        throw InputError("bad field element '" + text + "' (expected \"a\" or \"a/b\" with b > 0)");
    };
    if (text.empty()) fail();
    if (text[i] == '-') ++i;
    std::size_t num_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_start) fail();
    mpz_class num(text.substr(0, i), 10);
    mpz_class den(1);
    if (i < text.size()) {
        if (text[i] != '/') fail();
        ++i;
        std::size_t den_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_start || i != text.size()) fail();
        den = mpz_class(text.substr(den_start), 10);
        if (den == 0) throw InputError("bad field element '" + text + "': zero denominator");
    }
    if (f.kind == FieldKind::Rationals) {
        Rational r(num, den);
        r.canonicalize();
        return from_rational(r);
    }
    const std::uint32_t n = reduce_mod(num, f.p);
    const std::uint32_t d = reduce_mod(den, f.p);
    if (d == 0)
        throw InputError("field element '" + text + "' has denominator divisible by " +
                         std::to_string(f.p));
    Scalar s;
    s.field_ = f;
    s.res_ = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(n) * mod_inverse(d, f.p)) % f.p);
    return s;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw InputError("mixed-field arithmetic: " + field_.str() + " vs " + o.field_.str());
}

bool Scalar::is_zero() const {
    return field_.kind == FieldKind::Rationals ? rat_ == 0 : res_ == 0;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.kind == FieldKind::Rationals ? rat_ == o.rat_ : res_ == o.res_;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::Rationals)
        s.rat_ = rat_ + o.rat_;
    else
        s.res_ = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(res_) + o.res_) % field_.p);
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + o.neg(); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::Rationals)
        s.rat_ = rat_ * o.rat_;
    else
        s.res_ = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(res_) * o.res_) % field_.p);
    return s;
}

Scalar Scalar::neg() const {
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::Rationals)
        s.rat_ = -rat_;
    else
        s.res_ = res_ == 0 ? 0 : field_.p - res_;
    return s;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZeroError("inversion of zero in " + field_.str());
    Scalar s;
    s.field_ = field_;
    if (field_.kind == FieldKind::Rationals) {
        s.rat_ = 1 / rat_;
    } else {
        s.res_ = mod_inverse(res_, field_.p);
    }
    return s;
}

std::string Scalar::str() const {
    if (field_.kind == FieldKind::PrimeField) return std::to_string(res_);
    if (rat_.get_den() == 1) return rat_.get_num().get_str();
    return rat_.get_num().get_str() + "/" + rat_.get_den().get_str();
}

const Rational& Scalar::rational() const {
    if (field_.kind != FieldKind::Rationals)
        throw InternalError("rational() on a prime-field scalar");
    return rat_;
}

std::uint32_t Scalar::residue_value() const {
    if (field_.kind != FieldKind::PrimeField)
        throw InternalError("residue_value() on a rational scalar");
    return res_;
}

} // namespace fpn
