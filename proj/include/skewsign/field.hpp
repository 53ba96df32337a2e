#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>

#include "skewsign/errors.hpp"

namespace skewsign {

enum class FieldKind {
    prime_field, // GF(p), p prime
    rationals,   // arbitrary-precision Q
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

/// Identifies the field scalars live in: GF(p) for a prime p < 2^31, or the
/// rationals. Scalars carry their FieldSpec and arithmetic never mixes specs.
class FieldSpec {
public:
    static FieldSpec gf(std::uint32_t p) {
        if (p > 0x7fffffffu || !is_prime(p)) {
            throw InvalidFieldError("gf modulus must be a prime in [2, 2^31): got " +
                                    std::to_string(p));
        }
        return FieldSpec(FieldKind::prime_field, p);
    }

    static FieldSpec rationals() { return FieldSpec(FieldKind::rationals, 0); }

    FieldKind kind() const { return kind_; }

    bool is_prime_field() const { return kind_ == FieldKind::prime_field; }

    std::uint32_t prime() const {
        if (!is_prime_field()) throw FieldMismatchError("field has no prime modulus");
        return p_;
    }

    /// p for GF(p), 0 for the rationals.
    std::uint32_t characteristic() const { return p_; }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

    /// The designator used in files and on the command line: "gf <p>" or "q".
    std::string to_string() const {
        return is_prime_field() ? "gf " + std::to_string(p_) : std::string("q");
    }

private:
    FieldSpec(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    FieldKind kind_;
    std::uint32_t p_;
};

/// Element of GF(p) in canonical form: a residue in [0, p).
class Fp {
public:
    Fp(long long n, const FieldSpec& f) : spec_(require_prime(f)), v_(reduce(n, f.prime())) {}

    const FieldSpec& field() const { return spec_; }
    std::uint32_t residue() const { return v_; }

    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return with_value(v_ == 0 ? 0 : p() - v_); }

    friend Fp operator+(const Fp& a, const Fp& b) {
        a.check_same_field(b);
        std::uint64_t s = std::uint64_t(a.v_) + b.v_;
        if (s >= a.p()) s -= a.p();
        return a.with_value(static_cast<std::uint32_t>(s));
    }

    friend Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }

    friend Fp operator*(const Fp& a, const Fp& b) {
        a.check_same_field(b);
        std::uint64_t prod = std::uint64_t(a.v_) * b.v_ % a.p();
        return a.with_value(static_cast<std::uint32_t>(prod));
    }

    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp inverse() const {
        if (v_ == 0) throw DivisionByZeroError("inverse of zero in " + spec_.to_string());
        // extended Euclid; p prime guarantees gcd 1
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p(), new_r = v_;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        return with_value(static_cast<std::uint32_t>(t < 0 ? t + p() : t));
    }

    friend bool operator==(const Fp&, const Fp&) = default;

    std::string to_string() const { return std::to_string(v_); }

private:
    static const FieldSpec& require_prime(const FieldSpec& f) {
        if (!f.is_prime_field()) {
            throw FieldMismatchError("Fp scalar requires a prime field");
        }
        return f;
    }

    static std::uint32_t reduce(long long n, std::uint32_t p) {
        long long r = n % static_cast<long long>(p);
        if (r < 0) r += p;
        return static_cast<std::uint32_t>(r);
    }

    std::uint32_t p() const { return spec_.characteristic(); }

    Fp with_value(std::uint32_t v) const {
        Fp out = *this;
        out.v_ = v;
        return out;
    }

    void check_same_field(const Fp& other) const {
        if (spec_ != other.spec_) {
            throw FieldMismatchError("scalars from " + spec_.to_string() + " and " +
                                     other.spec_.to_string() + " cannot be combined");
        }
    }

    FieldSpec spec_;
    std::uint32_t v_;
};

/// Arbitrary-precision rational in canonical form: reduced fraction with
/// positive denominator. Backed by boost::multiprecision.
class Rational {
public:
    using BigInt = boost::multiprecision::cpp_int;

    Rational() : v_(0) {}
    explicit Rational(long long n) : v_(n) {}

    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    Rational(BigInt num, BigInt den) {
        if (den == 0) throw DivisionByZeroError("rational with zero denominator");
        // division normalizes: gcd reduced, denominator positive
        v_ = boost::multiprecision::cpp_rational(std::move(num)) /
             boost::multiprecision::cpp_rational(std::move(den));
    }

    FieldSpec field() const { return FieldSpec::rationals(); }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }

    Rational operator-() const { return Rational(-v_); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZeroError("rational division by zero");
        return Rational(a.v_ / b.v_);
    }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZeroError("inverse of rational zero");
        return Rational(1) / *this;
    }

    friend bool operator==(const Rational&, const Rational&) = default;

    std::string to_string() const {
        std::string s = numerator().str();
        if (denominator() != 1) s += "/" + denominator().str();
        return s;
    }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

    boost::multiprecision::cpp_rational v_;
};

/// Exact field scalar: what the matrix algorithms are generic over.
template <class F>
concept ScalarType = std::copyable<F> && requires(const F& a, const F& b) {
    { a + b } -> std::same_as<F>;
    { a - b } -> std::same_as<F>;
    { a * b } -> std::same_as<F>;
    { a / b } -> std::same_as<F>;
    { -a } -> std::same_as<F>;
    { a.inverse() } -> std::same_as<F>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.field() } -> std::convertible_to<FieldSpec>;
    { a == b } -> std::convertible_to<bool>;
    { a.to_string() } -> std::convertible_to<std::string>;
};

/// Canonical image of an integer in the given field; in GF(p), -1 maps to p-1.
template <ScalarType F>
F from_integer(long long n, const FieldSpec& f);

template <>
inline Fp from_integer<Fp>(long long n, const FieldSpec& f) {
    return Fp(n, f);
}

template <>
inline Rational from_integer<Rational>(long long n, const FieldSpec& f) {
    if (f.kind() != FieldKind::rationals) {
        throw FieldMismatchError("rational scalar requested for " + f.to_string());
    }
    return Rational(n);
}

} // namespace skewsign
