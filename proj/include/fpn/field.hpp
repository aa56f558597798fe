#ifndef FPN_FIELD_HPP
#define FPN_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "fpn/common.hpp"

namespace fpn {

using Rational = mpq_class;

enum class FieldKind { Rationals, PrimeField };

/**
 * The ground field: the rationals or a prime field GF(p) with p < 2^31.
 * Serialized as "Q" or "GF:<p>".
 */
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::uint32_t p = 0; // meaningful iff kind == PrimeField

    static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }
    static FieldSpec prime(std::uint32_t p);
    static FieldSpec parse(const std::string& text);

    std::string str() const;
    bool operator==(const FieldSpec& o) const {
        return kind == o.kind && (kind == FieldKind::Rationals || p == o.p);
    }
};

bool is_prime_u32(std::uint32_t n);

/**
 * An exact field element tagged with its field. Rationals are kept in
 * lowest terms with positive denominator; prime-field residues are the
 * canonical representative in [0, p).
 *
 * Mixed-field arithmetic raises InputError; inverting zero raises
 * DivisionByZeroError. Values are immutable after construction.
 */
class Scalar {
public:
    Scalar() = default; // rational zero

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    // Integer n mapped into the field (reduced mod p for prime fields).
    static Scalar from_int(long n, const FieldSpec& f);
    static Scalar from_rational(const Rational& r);
    static Scalar residue(std::uint64_t v, const FieldSpec& f);
    // Accepts "a" or "a/b" with b > 0; over GF(p) a fraction means a*b^-1.
    static Scalar parse(const std::string& text, const FieldSpec& f);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar neg() const;
    Scalar inv() const;

    // Canonical serialization: "a" or "a/b" (b > 1) for rationals, the
    // residue for prime fields.
    std::string str() const;

    const Rational& rational() const;
    std::uint32_t residue_value() const;

private:
    FieldSpec field_ = FieldSpec::rationals();
    Rational rat_ = 0;        // Rationals only
    std::uint32_t res_ = 0;   // PrimeField only

    void check_same_field(const Scalar& o) const;
};

} // namespace fpn

#endif
