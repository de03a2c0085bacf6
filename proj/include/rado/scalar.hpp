#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "rado/errors.hpp"

namespace rado {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (the backend canonicalizes on construction).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// num/den with the sign moved into the numerator; den must be nonzero.
Rational make_rational(BigInt num, BigInt den);

/// Coefficient domain tag: the rationals (modulus == 0) or Z/mZ.
struct Field {
    std::uint64_t modulus = 0;

    static Field rationals() { return Field{0}; }
    static Field mod(std::uint64_t m);

    bool is_rational() const { return modulus == 0; }
    bool is_mod() const { return modulus != 0; }
    /// True for Q and for Z/pZ with p prime.
    bool is_field() const;

    friend bool operator==(const Field&, const Field&) = default;

    std::string to_string() const; // "Q" or "F<m>"
    static Field parse(const std::string& s);
};

/// Exact field/ring element: a rational or a residue in [0, m).
/// All arithmetic is exact; mixing fields throws FieldMismatch.
class Scalar {
public:
    Scalar() : field_(Field::rationals()), rat_(0) {}

    static Scalar rational(Rational v) { return Scalar(std::move(v)); }
    static Scalar mod(std::int64_t v, std::uint64_t m);
    /// Integer embedded into the given field (reduced mod m if modular).
    static Scalar from_int(std::int64_t v, const Field& f);
    static Scalar zero(const Field& f) { return from_int(0, f); }
    static Scalar one(const Field& f) { return from_int(1, f); }

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Value accessors; calling the wrong one throws FieldMismatch.
    const Rational& rat() const;
    std::uint64_t residue() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws on zero or on a non-unit residue.
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /// Total order within one field (numeric for Q, residue order for mod);
    /// used for deterministic sets of scalars.
    bool operator<(const Scalar& o) const;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    explicit Scalar(Rational v) : field_(Field::rationals()), rat_(std::move(v)) {}
    Scalar(std::uint64_t r, Field f) : field_(f), rat_(0), residue_(r) {}

    void check_same_field(const Scalar& o) const;

    Field field_;
    Rational rat_;              // valid when rational
    std::uint64_t residue_ = 0; // valid when modular
};

} // namespace rado
