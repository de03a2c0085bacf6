#include "rado/scalar.hpp"

#include <ostream>

#include "rado/numeric.hpp"

namespace rado {

Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw Error("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

Field Field::mod(std::uint64_t m) {
    if (m < 2) throw InputError("modulus must be >= 2");
    return Field{m};
}

bool Field::is_field() const {
    return is_rational() || is_prime_u64(modulus);
}

std::string Field::to_string() const {
    return is_rational() ? "Q" : "F" + std::to_string(modulus);
}

Field Field::parse(const std::string& s) {
    if (s == "Q" || s == "q") return rationals();
    if ((s.size() > 1) && (s[0] == 'F' || s[0] == 'f')) {
        std::uint64_t m = 0;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw InputError("bad field spec: " + s);
            m = m * 10 + static_cast<std::uint64_t>(s[i] - '0');
        }
        return mod(m);
    }
    throw InputError("bad field spec: " + s + " (expected Q or F<m>)");
}

Scalar Scalar::mod(std::int64_t v, std::uint64_t m) {
    Field f = Field::mod(m);
    std::int64_t r = v % static_cast<std::int64_t>(m);
    if (r < 0) r += static_cast<std::int64_t>(m);
    return Scalar(static_cast<std::uint64_t>(r), f);
}

Scalar Scalar::from_int(std::int64_t v, const Field& f) {
    if (f.is_rational()) return rational(Rational(v));
    return mod(v, f.modulus);
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? rat_ == 0 : residue_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? rat_ == 1 : residue_ == 1 % field_.modulus;
}

const Rational& Scalar::rat() const {
    if (!field_.is_rational()) throw FieldMismatch("rat() on a modular scalar");
    return rat_;
}

std::uint64_t Scalar::residue() const {
    if (!field_.is_mod()) throw FieldMismatch("residue() on a rational scalar");
    return residue_;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw FieldMismatch("scalars over " + field_.to_string() + " and " + o.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rational()) return rational(rat_ + o.rat_);
    std::uint64_t m = field_.modulus;
    std::uint64_t r = residue_ + o.residue_; // both < m <= 2^63, no overflow
    if (r >= m) r -= m;
    return Scalar(r, field_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rational()) return rational(rat_ - o.rat_);
    std::uint64_t m = field_.modulus;
    std::uint64_t r = residue_ >= o.residue_ ? residue_ - o.residue_ : residue_ + m - o.residue_;
    return Scalar(r, field_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rational()) return rational(rat_ * o.rat_);
    return Scalar(mulmod(residue_, o.residue_, field_.modulus), field_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    if (field_.is_rational()) return rational(-rat_);
    return Scalar(residue_ == 0 ? 0 : field_.modulus - residue_, field_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    if (field_.is_rational()) return rational(Rational(1) / rat_);
    if (gcd_u64(residue_, field_.modulus) != 1)
        throw CompositeModulus("residue " + std::to_string(residue_) + " is not a unit mod " +
                               std::to_string(field_.modulus));
    return Scalar(invmod(residue_, field_.modulus), field_);
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return field_.is_rational() ? rat_ == o.rat_ : residue_ == o.residue_;
}

bool Scalar::operator<(const Scalar& o) const {
    check_same_field(o);
    return field_.is_rational() ? rat_ < o.rat_ : residue_ < o.residue_;
}

std::string Scalar::to_string() const {
    if (field_.is_rational()) return rat_.str();
    return std::to_string(residue_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
}

} // namespace rado
