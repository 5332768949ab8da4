#include "jring/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace jring {

namespace {

void require_same_ring(const RingValue& a, const RingValue& b) {
    if (a.ring() != b.ring()) {
        throw RingMismatch("operands belong to different rings: " + a.ring().to_string() +
                           " vs " + b.ring().to_string());
    }
}

bool is_small_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::vector<RingValue> trim_poly(std::vector<RingValue> coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    return coeffs;
}

}  // namespace

// ---------------------------------------------------------------------------
// RingId

RingId RingId::rational() {
    RingId id;
    id.kind_ = RingKind::rational;
    return id;
}

RingId RingId::gaussian_rational() {
    RingId id;
    id.kind_ = RingKind::gaussian_rational;
    return id;
}

RingId RingId::prime_field(std::uint64_t p) {
    RingId id;
    id.kind_ = RingKind::prime_field;
    id.modulus_ = p;
    return id;
}

RingId RingId::polynomial(RingId base, int involution_sign) {
    RingId id;
    id.kind_ = RingKind::polynomial;
    id.sign_ = involution_sign;
    id.base_ = std::make_shared<const RingId>(std::move(base));
    return id;
}

const RingId& RingId::base() const {
    if (kind_ != RingKind::polynomial || !base_) {
        throw InvalidRing("base() is only defined for polynomial rings");
    }
    return *base_;
}

bool RingId::operator==(const RingId& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case RingKind::rational:
        case RingKind::gaussian_rational:
            return true;
        case RingKind::prime_field:
            return modulus_ == other.modulus_;
        case RingKind::polynomial:
            return sign_ == other.sign_ && *base_ == *other.base_;
    }
    return false;
}

bool RingId::trivial_involution() const {
    switch (kind_) {
        case RingKind::rational:
        case RingKind::prime_field:
            return true;
        case RingKind::gaussian_rational:
            return false;
        case RingKind::polynomial:
            return sign_ == 1 && base().trivial_involution();
    }
    return false;
}

bool RingId::is_field() const {
    return kind_ != RingKind::polynomial;
}

std::string RingId::to_string() const {
    switch (kind_) {
        case RingKind::rational:
            return "rational";
        case RingKind::gaussian_rational:
            return "gaussian-rational";
        case RingKind::prime_field:
            return "prime-field(" + std::to_string(modulus_) + ")";
        case RingKind::polynomial:
            return "polynomial(" + base().to_string() + "," + (sign_ > 0 ? "+1" : "-1") + ")";
    }
    return "?";
}

RingId RingId::parse(std::string_view text) {
    auto strip = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = strip(text);
    if (text == "rational") return rational();
    if (text == "gaussian-rational") return gaussian_rational();
    if (text.starts_with("prime-field(") && text.ends_with(")")) {
        std::string digits(text.substr(12, text.size() - 13));
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError("bad prime-field modulus: " + std::string(text));
        }
        return prime_field(std::stoull(digits));
    }
    if (text.starts_with("polynomial(") && text.ends_with(")")) {
        std::string_view inner = text.substr(11, text.size() - 12);
        // split at the top-level comma (the base may itself contain commas)
        int depth = 0;
        std::size_t split = std::string_view::npos;
        for (std::size_t k = 0; k < inner.size(); ++k) {
            if (inner[k] == '(') ++depth;
            else if (inner[k] == ')') --depth;
            else if (inner[k] == ',' && depth == 0) split = k;
        }
        if (split == std::string_view::npos) {
            throw ParseError("polynomial ring needs (base,sign): " + std::string(text));
        }
        RingId base = parse(inner.substr(0, split));
        std::string_view sign = strip(inner.substr(split + 1));
        if (sign == "+1" || sign == "1") return polynomial(std::move(base), +1);
        if (sign == "-1") return polynomial(std::move(base), -1);
        throw ParseError("polynomial involution sign must be +1 or -1: " + std::string(text));
    }
    throw ParseError("unknown ring: " + std::string(text));
}

// ---------------------------------------------------------------------------
// RingValue

RingValue::RingValue(RingId ring, Payload payload) : ring_(std::move(ring)), payload_(std::move(payload)) {}

bool RingValue::is_zero() const {
    switch (ring_.kind()) {
        case RingKind::rational:
            return rational_value() == 0;
        case RingKind::gaussian_rational:
            return gaussian_value().re == 0 && gaussian_value().im == 0;
        case RingKind::prime_field:
            return residue_value() == 0;
        case RingKind::polynomial:
            return poly_coeffs().empty();
    }
    return false;
}

bool RingValue::operator==(const RingValue& other) const {
    if (ring_ != other.ring_) return false;
    return payload_ == other.payload_;
}

const mpq_class& RingValue::rational_value() const { return std::get<mpq_class>(payload_); }
const GaussianParts& RingValue::gaussian_value() const { return std::get<GaussianParts>(payload_); }
std::uint64_t RingValue::residue_value() const { return std::get<std::uint64_t>(payload_); }
const RingValue::PolyCoeffs& RingValue::poly_coeffs() const { return std::get<PolyCoeffs>(payload_); }

// ---------------------------------------------------------------------------
// Element constructors

RingValue zero(const RingId& ring) {
    switch (ring.kind()) {
        case RingKind::rational:
            return RingValue(ring, mpq_class(0));
        case RingKind::gaussian_rational:
            return RingValue(ring, GaussianParts{mpq_class(0), mpq_class(0)});
        case RingKind::prime_field:
            return RingValue(ring, std::uint64_t{0});
        case RingKind::polynomial:
            return RingValue(ring, RingValue::PolyCoeffs{});
    }
    throw InvalidRing("zero: unknown ring kind");
}

RingValue one(const RingId& ring) { return from_int(ring, 1); }

RingValue from_int(const RingId& ring, long long v) {
    switch (ring.kind()) {
        case RingKind::rational:
            return RingValue(ring, mpq_class(static_cast<long>(v)));
        case RingKind::gaussian_rational:
            return RingValue(ring, GaussianParts{mpq_class(static_cast<long>(v)), mpq_class(0)});
        case RingKind::prime_field: {
            long long m = static_cast<long long>(ring.modulus());
            long long r = v % m;
            if (r < 0) r += m;
            return RingValue(ring, static_cast<std::uint64_t>(r));
        }
        case RingKind::polynomial: {
            if (v == 0) return zero(ring);
            return RingValue(ring, RingValue::PolyCoeffs{from_int(ring.base(), v)});
        }
    }
    throw InvalidRing("from_int: unknown ring kind");
}

RingValue half(const RingId& ring) {
    switch (ring.kind()) {
        case RingKind::rational:
            return RingValue(ring, mpq_class(1, 2));
        case RingKind::gaussian_rational:
            return RingValue(ring, GaussianParts{mpq_class(1, 2), mpq_class(0)});
        case RingKind::prime_field: {
            std::uint64_t p = ring.modulus();
            if (p == 2) throw TwoNotInvertible("2 is not invertible modulo 2");
            return RingValue(ring, (p + 1) / 2);
        }
        case RingKind::polynomial:
            return RingValue(ring, RingValue::PolyCoeffs{half(ring.base())});
    }
    throw InvalidRing("half: unknown ring kind");
}

RingValue make_rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return RingValue(RingId::rational(), std::move(c));
}

RingValue make_gaussian(const mpq_class& re, const mpq_class& im) {
    mpq_class r = re, i = im;
    r.canonicalize();
    i.canonicalize();
    return RingValue(RingId::gaussian_rational(), GaussianParts{std::move(r), std::move(i)});
}

RingValue make_residue(const RingId& ring, std::uint64_t r) {
    if (ring.kind() != RingKind::prime_field) throw InvalidRing("make_residue needs a prime field");
    return RingValue(ring, r % ring.modulus());
}

RingValue make_polynomial(const RingId& ring, std::vector<RingValue> coeffs) {
    if (ring.kind() != RingKind::polynomial) throw InvalidRing("make_polynomial needs a polynomial ring");
    for (const auto& c : coeffs) {
        if (c.ring() != ring.base()) throw RingMismatch("polynomial coefficient from wrong base ring");
    }
    return RingValue(ring, trim_poly(std::move(coeffs)));
}

// ---------------------------------------------------------------------------
// Arithmetic

RingValue operator+(const RingValue& a, const RingValue& b) {
    require_same_ring(a, b);
    const RingId& ring = a.ring();
    switch (ring.kind()) {
        case RingKind::rational:
            return RingValue(ring, mpq_class(a.rational_value() + b.rational_value()));
        case RingKind::gaussian_rational:
            return RingValue(ring, GaussianParts{a.gaussian_value().re + b.gaussian_value().re,
                                                 a.gaussian_value().im + b.gaussian_value().im});
        case RingKind::prime_field: {
            std::uint64_t p = ring.modulus();
            std::uint64_t s = a.residue_value() + b.residue_value();
            if (s >= p) s -= p;
            return RingValue(ring, s);
        }
        case RingKind::polynomial: {
            const auto& x = a.poly_coeffs();
            const auto& y = b.poly_coeffs();
            RingValue::PolyCoeffs out;
            out.reserve(std::max(x.size(), y.size()));
            for (std::size_t k = 0; k < std::max(x.size(), y.size()); ++k) {
                if (k < x.size() && k < y.size()) out.push_back(x[k] + y[k]);
                else if (k < x.size()) out.push_back(x[k]);
                else out.push_back(y[k]);
            }
            return RingValue(ring, trim_poly(std::move(out)));
        }
    }
    throw InvalidRing("operator+: unknown ring kind");
}

RingValue operator-(const RingValue& a) {
    const RingId& ring = a.ring();
    switch (ring.kind()) {
        case RingKind::rational:
            return RingValue(ring, mpq_class(-a.rational_value()));
        case RingKind::gaussian_rational:
            return RingValue(ring, GaussianParts{-a.gaussian_value().re, -a.gaussian_value().im});
        case RingKind::prime_field: {
            std::uint64_t r = a.residue_value();
            return RingValue(ring, r == 0 ? 0 : ring.modulus() - r);
        }
        case RingKind::polynomial: {
            RingValue::PolyCoeffs out;
            out.reserve(a.poly_coeffs().size());
            for (const auto& c : a.poly_coeffs()) out.push_back(-c);
            return RingValue(ring, std::move(out));
        }
    }
    throw InvalidRing("operator-: unknown ring kind");
}

RingValue operator-(const RingValue& a, const RingValue& b) { return a + (-b); }

RingValue operator*(const RingValue& a, const RingValue& b) {
    require_same_ring(a, b);
    const RingId& ring = a.ring();
    switch (ring.kind()) {
        case RingKind::rational:
            return RingValue(ring, mpq_class(a.rational_value() * b.rational_value()));
        case RingKind::gaussian_rational: {
            const auto& x = a.gaussian_value();
            const auto& y = b.gaussian_value();
            return RingValue(ring, GaussianParts{x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re});
        }
        case RingKind::prime_field:
            return RingValue(ring, mod_mul(a.residue_value(), b.residue_value(), ring.modulus()));
        case RingKind::polynomial: {
            const auto& x = a.poly_coeffs();
            const auto& y = b.poly_coeffs();
            if (x.empty() || y.empty()) return zero(ring);
            RingValue::PolyCoeffs out(x.size() + y.size() - 1, zero(ring.base()));
            for (std::size_t k = 0; k < x.size(); ++k) {
                for (std::size_t l = 0; l < y.size(); ++l) {
                    out[k + l] = out[k + l] + x[k] * y[l];
                }
            }
            return RingValue(ring, trim_poly(std::move(out)));
        }
    }
    throw InvalidRing("operator*: unknown ring kind");
}

RingValue star(const RingValue& v) {
    const RingId& ring = v.ring();
    switch (ring.kind()) {
        case RingKind::rational:
        case RingKind::prime_field:
            return v;
        case RingKind::gaussian_rational:
            return RingValue(ring, GaussianParts{v.gaussian_value().re, -v.gaussian_value().im});
        case RingKind::polynomial: {
            RingValue::PolyCoeffs out;
            out.reserve(v.poly_coeffs().size());
            bool flip = false;  // sign^k applied degree by degree
            for (const auto& c : v.poly_coeffs()) {
                RingValue s = star(c);
                out.push_back((flip && ring.involution_sign() < 0) ? -s : std::move(s));
                flip = !flip;
            }
            return RingValue(ring, trim_poly(std::move(out)));
        }
    }
    throw InvalidRing("star: unknown ring kind");
}

RingValue inverse(const RingValue& v) {
    const RingId& ring = v.ring();
    if (!ring.is_field()) throw UnsupportedRing("inverse requires a field kind: " + ring.to_string());
    if (v.is_zero()) throw Error("inverse of zero");
    switch (ring.kind()) {
        case RingKind::rational:
            return RingValue(ring, mpq_class(1 / v.rational_value()));
        case RingKind::gaussian_rational: {
            const auto& g = v.gaussian_value();
            mpq_class norm = g.re * g.re + g.im * g.im;
            return RingValue(ring, GaussianParts{g.re / norm, -g.im / norm});
        }
        case RingKind::prime_field:
            return RingValue(ring, mod_pow(v.residue_value(), ring.modulus() - 2, ring.modulus()));
        default:
            break;
    }
    throw InvalidRing("inverse: unknown ring kind");
}

std::pair<RingValue, RingValue> fixed_decompose(const RingValue& v) {
    RingValue h = half(v.ring());
    RingValue s = star(v);
    return {h * (v + s), h * (v - s)};
}

RingValue fixed_part(const RingValue& v) { return fixed_decompose(v).first; }
RingValue skew_part(const RingValue& v) { return fixed_decompose(v).second; }
bool is_fixed(const RingValue& v) { return star(v) == v; }

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string mpq_to_string(const mpq_class& q) {
    std::ostringstream os;
    os << q.get_num();
    if (q.get_den() != 1) os << "/" << q.get_den();
    return os.str();
}

mpq_class parse_mpq(std::string_view text) {
    std::string_view t = text;
    bool neg = false;
    if (!t.empty() && (t.front() == '+' || t.front() == '-')) {
        neg = t.front() == '-';
        t.remove_prefix(1);
    }
    auto slash = t.find('/');
    std::string_view num = t.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : t.substr(slash + 1);
    auto all_digits = [](std::string_view s) {
        return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
    };
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("bad rational literal: " + std::string(text));
    }
    mpq_class q{mpz_class(std::string(num)), mpz_class(std::string(den))};
    if (q.get_den() == 0) throw ParseError("zero denominator: " + std::string(text));
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
}

}  // namespace

std::string value_to_string(const RingValue& v) {
    switch (v.ring().kind()) {
        case RingKind::rational:
            return mpq_to_string(v.rational_value());
        case RingKind::gaussian_rational: {
            const auto& g = v.gaussian_value();
            if (g.im == 0) return mpq_to_string(g.re);
            std::string imag = mpq_to_string(abs(g.im)) + "*i";
            if (g.re == 0) return (g.im < 0 ? "-" : "") + imag;
            return mpq_to_string(g.re) + (g.im < 0 ? "-" : "+") + imag;
        }
        case RingKind::prime_field:
            return std::to_string(v.residue_value());
        case RingKind::polynomial: {
            std::string out = "[";
            for (std::size_t k = 0; k < v.poly_coeffs().size(); ++k) {
                if (k) out += ",";
                out += value_to_string(v.poly_coeffs()[k]);
            }
            return out + "]";
        }
    }
    throw InvalidRing("value_to_string: unknown ring kind");
}

RingValue value_from_string(const RingId& ring, std::string_view text) {
    switch (ring.kind()) {
        case RingKind::rational:
            return RingValue(ring, parse_mpq(text));
        case RingKind::gaussian_rational: {
            if (text.empty()) throw ParseError("empty gaussian literal");
            if (text.back() != 'i') {
                return RingValue(ring, GaussianParts{parse_mpq(text), mpq_class(0)});
            }
            std::string_view body = text.substr(0, text.size() - 1);
            if (!body.empty() && body.back() == '*') body.remove_suffix(1);
            // split real and imaginary at the last top-level sign
            std::size_t split = std::string_view::npos;
            for (std::size_t k = body.size(); k-- > 1;) {
                if (body[k] == '+' || body[k] == '-') {
                    split = k;
                    break;
                }
            }
            std::string_view re_text, im_text;
            if (split == std::string_view::npos) {
                re_text = "0";
                im_text = body;
            } else {
                re_text = body.substr(0, split);
                im_text = body.substr(split);
            }
            mpq_class im;
            if (im_text.empty() || im_text == "+") im = 1;
            else if (im_text == "-") im = -1;
            else im = parse_mpq(im_text);
            return RingValue(ring, GaussianParts{parse_mpq(re_text), std::move(im)});
        }
        case RingKind::prime_field: {
            std::string_view t = text;
            bool neg = false;
            if (!t.empty() && (t.front() == '+' || t.front() == '-')) {
                neg = t.front() == '-';
                t.remove_prefix(1);
            }
            if (t.empty() || t.find_first_not_of("0123456789") != std::string_view::npos) {
                throw ParseError("bad residue literal: " + std::string(text));
            }
            mpz_class z{std::string(t)};
            mpz_class p{static_cast<unsigned long>(ring.modulus())};
            mpz_class r{z % p};
            std::uint64_t res = r.get_ui();
            if (neg && res != 0) res = ring.modulus() - res;
            return RingValue(ring, res);
        }
        case RingKind::polynomial: {
            std::string_view t = text;
            if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
                throw ParseError("polynomial literal must be bracketed: " + std::string(text));
            }
            std::string_view inner = t.substr(1, t.size() - 2);
            RingValue::PolyCoeffs coeffs;
            int depth = 0;
            std::size_t start = 0;
            if (!inner.empty()) {
                for (std::size_t k = 0; k <= inner.size(); ++k) {
                    if (k == inner.size() || (inner[k] == ',' && depth == 0)) {
                        coeffs.push_back(value_from_string(ring.base(), inner.substr(start, k - start)));
                        start = k + 1;
                    } else if (inner[k] == '[') {
                        ++depth;
                    } else if (inner[k] == ']') {
                        --depth;
                    }
                }
            }
            return make_polynomial(ring, std::move(coeffs));
        }
    }
    throw InvalidRing("value_from_string: unknown ring kind");
}

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(RingId id) : id_(std::move(id)) {
    switch (id_.kind()) {
        case RingKind::rational:
        case RingKind::gaussian_rational:
            break;
        case RingKind::prime_field: {
            std::uint64_t p = id_.modulus();
            if (p == 2) throw TwoNotInvertible("2 is not invertible in prime-field(2)");
            if (!is_small_prime(p)) throw InvalidRing("modulus is not prime: " + std::to_string(p));
            if (p > (std::uint64_t{1} << 31)) throw InvalidRing("modulus too large");
            break;
        }
        case RingKind::polynomial: {
            if (id_.involution_sign() != 1 && id_.involution_sign() != -1) {
                throw InvalidRing("polynomial involution sign must be +1 or -1");
            }
            Ring base(id_.base());  // validates recursively, including invertibility of 2
            break;
        }
    }
}

RingValue Ring::add(const RingValue& a, const RingValue& b) const { return a + b; }
RingValue Ring::neg(const RingValue& a) const { return -a; }
RingValue Ring::mul(const RingValue& a, const RingValue& b) const { return a * b; }
RingValue Ring::star(const RingValue& a) const { return jring::star(a); }
bool Ring::eq(const RingValue& a, const RingValue& b) const { return a == b; }
RingValue Ring::inverse(const RingValue& a) const { return jring::inverse(a); }

RingValue Ring::skew_generator() const {
    if (id_.kind() == RingKind::gaussian_rational) return make_gaussian(0, 1);
    throw SkewGeneratorUnavailable("no rank-one skew generator for " + id_.to_string());
}

RingValue Ring::skew_coefficient(const RingValue& s) const {
    if (s.ring() != id_) throw RingMismatch("skew_coefficient: wrong ring");
    if (id_.kind() == RingKind::gaussian_rational) {
        const auto& g = s.gaussian_value();
        if (g.re != 0) throw NotSkew("value has a nonzero fixed part");
        return make_gaussian(g.im, 0);
    }
    if (id_.trivial_involution()) {
        if (!s.is_zero()) throw NotSkew("nonzero skew value in a ring with trivial involution");
        return jring::zero(id_);
    }
    throw SkewGeneratorUnavailable("no rank-one skew generator for " + id_.to_string());
}

int Ring::fixed_rank() const { return id_.trivial_involution() ? 1 : 2; }

std::vector<RingValue> Ring::fixed_coords(const RingValue& v) const {
    if (v.ring() != id_) throw RingMismatch("fixed_coords: wrong ring");
    if (id_.trivial_involution()) return {v};
    if (id_.kind() == RingKind::gaussian_rational) {
        const auto& g = v.gaussian_value();
        return {make_gaussian(g.re, 0), make_gaussian(g.im, 0)};
    }
    throw UnsupportedRing("fixed coordinates unsupported for " + id_.to_string());
}

RingValue Ring::from_fixed_coords(const std::vector<RingValue>& coords) const {
    if (static_cast<int>(coords.size()) != fixed_rank()) {
        throw Error("wrong number of fixed coordinates");
    }
    if (id_.trivial_involution()) return coords[0];
    if (id_.kind() == RingKind::gaussian_rational) {
        return coords[0] + skew_generator() * coords[1];
    }
    throw UnsupportedRing("fixed coordinates unsupported for " + id_.to_string());
}

Ring make_ring(const RingId& id) { return Ring(id); }

}  // namespace jring
