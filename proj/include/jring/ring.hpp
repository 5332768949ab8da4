#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "jring/error.hpp"

namespace jring {

enum class RingKind {
    rational,           // Q with the trivial involution
    gaussian_rational,  // Q(i) with complex conjugation
    prime_field,        // Z/p, p an odd prime, trivial involution
    polynomial,         // base[t], involution coefficient-wise + t -> sign*t
};

/// Identifier of a commutative involutive unital ring with invertible 2.
/// Equality of ids is structural; every value carries its id.
class RingId {
public:
    static RingId rational();
    static RingId gaussian_rational();
    static RingId prime_field(std::uint64_t p);
    static RingId polynomial(RingId base, int involution_sign);

    RingKind kind() const { return kind_; }
    std::uint64_t modulus() const { return modulus_; }
    int involution_sign() const { return sign_; }
    const RingId& base() const;

    bool operator==(const RingId& other) const;
    bool operator!=(const RingId& other) const { return !(*this == other); }

    /// True when the involution is the identity map.
    bool trivial_involution() const;
    /// Field kinds support exact division (rational, gaussian-rational, prime-field).
    bool is_field() const;

    std::string to_string() const;
    static RingId parse(std::string_view text);

private:
    RingId() = default;
    RingKind kind_ = RingKind::rational;
    std::uint64_t modulus_ = 0;
    int sign_ = 1;
    std::shared_ptr<const RingId> base_;
};

struct GaussianParts {
    mpq_class re;
    mpq_class im;
    bool operator==(const GaussianParts& o) const { return re == o.re && im == o.im; }
};

/// An element of a ring, stored in a unique canonical form so that payload
/// equality coincides with ring equality.
class RingValue {
public:
    using PolyCoeffs = std::vector<RingValue>;
    using Payload = std::variant<mpq_class, GaussianParts, std::uint64_t, PolyCoeffs>;

    RingValue(RingId ring, Payload payload);

    const RingId& ring() const { return ring_; }
    const Payload& payload() const { return payload_; }

    bool is_zero() const;
    bool operator==(const RingValue& other) const;
    bool operator!=(const RingValue& other) const { return !(*this == other); }

    // Payload accessors; each asserts the matching kind.
    const mpq_class& rational_value() const;
    const GaussianParts& gaussian_value() const;
    std::uint64_t residue_value() const;
    const PolyCoeffs& poly_coeffs() const;

private:
    RingId ring_;
    Payload payload_;
};

// Element constructors.
RingValue zero(const RingId& ring);
RingValue one(const RingId& ring);
RingValue from_int(const RingId& ring, long long v);
/// The inverse of 1+1; exists in every supported ring.
RingValue half(const RingId& ring);

RingValue make_rational(const mpq_class& q);
RingValue make_gaussian(const mpq_class& re, const mpq_class& im);
RingValue make_residue(const RingId& ring, std::uint64_t r);
RingValue make_polynomial(const RingId& ring, std::vector<RingValue> coeffs);

// Arithmetic. Binary operations throw RingMismatch when the ids differ.
RingValue operator+(const RingValue& a, const RingValue& b);
RingValue operator-(const RingValue& a, const RingValue& b);
RingValue operator-(const RingValue& a);
RingValue operator*(const RingValue& a, const RingValue& b);

/// The ring involution r -> r*.
RingValue star(const RingValue& v);
/// Multiplicative inverse; field kinds only, nonzero input.
RingValue inverse(const RingValue& v);

/// Splits r into (fixed, skew) with fixed = half(r + r*), skew = half(r - r*).
std::pair<RingValue, RingValue> fixed_decompose(const RingValue& v);
RingValue fixed_part(const RingValue& v);
RingValue skew_part(const RingValue& v);
bool is_fixed(const RingValue& v);

// Text form used by the serialization layer: rational "p/q" (q omitted when 1),
// gaussian-rational "p/q+r/s*i" with zero parts omitted, prime-field residue digits.
// Polynomial values serialize as coefficient arrays, not strings (see serial.hpp).
std::string value_to_string(const RingValue& v);
RingValue value_from_string(const RingId& ring, std::string_view text);

/// Operation table for one ring, validated at construction: rejects rings in
/// which 2 is not invertible and malformed ids (e.g. composite moduli).
class Ring {
public:
    explicit Ring(RingId id);

    const RingId& id() const { return id_; }

    RingValue zero() const { return jring::zero(id_); }
    RingValue one() const { return jring::one(id_); }
    RingValue half() const { return jring::half(id_); }
    RingValue from_int(long long v) const { return jring::from_int(id_, v); }

    RingValue add(const RingValue& a, const RingValue& b) const;
    RingValue neg(const RingValue& a) const;
    RingValue mul(const RingValue& a, const RingValue& b) const;
    RingValue star(const RingValue& a) const;
    bool eq(const RingValue& a, const RingValue& b) const;
    RingValue inverse(const RingValue& a) const;

    bool is_field() const { return id_.is_field(); }
    bool trivial_involution() const { return id_.trivial_involution(); }

    /// Generator g of the skew part as a rank-one module over the fixed
    /// subfield (g = i for gaussian-rational). Throws SkewGeneratorUnavailable
    /// when no such generator is supported.
    RingValue skew_generator() const;
    /// For skew s, the fixed coefficient b with s = skew_generator() * b.
    RingValue skew_coefficient(const RingValue& s) const;

    /// Rank of the ring as a module over its fixed subfield (1 or 2).
    int fixed_rank() const;
    /// Coordinates of v over the fixed subfield, as fixed values of this ring.
    std::vector<RingValue> fixed_coords(const RingValue& v) const;
    RingValue from_fixed_coords(const std::vector<RingValue>& coords) const;

private:
    RingId id_;
};

Ring make_ring(const RingId& id);

}  // namespace jring
