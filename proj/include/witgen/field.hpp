#ifndef WITGEN_FIELD_HPP
#define WITGEN_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <optional>
#include <string>

#include "witgen/errors.hpp"

namespace witgen {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational p/q with q > 0 and gcd(|p|, q) = 1. Zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& r);
    Rational& operator-=(const Rational& r);
    Rational& operator*=(const Rational& r);
    Rational& operator/=(const Rational& r);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    bool operator==(const Rational& r) const { return num_ == r.num_ && den_ == r.den_; }
    bool operator!=(const Rational& r) const { return !(*this == r); }
    std::strong_ordering operator<=>(const Rational& r) const;

    Rational inverse() const;
    Rational abs() const { return num_ < 0 ? -*this : *this; }

    /// Exact square root if this is a square of a rational.
    std::optional<Rational> exact_sqrt() const;

    std::string str() const;
    static Rational parse(const std::string& text);

private:
    BigInt num_;
    BigInt den_;
};

/// Decomposition sqrt(d) = scale * sqrt(radicand) with radicand a square-free
/// integer. radicand == 1 means d was a perfect rational square.
struct SqrtDecomposition {
    BigInt radicand;
    Rational scale;
};

/// sqrt of a nonzero rational pulled apart into square-free radicand and
/// rational scale.
SqrtDecomposition decompose_sqrt(const Rational& d);

/// An exact scalar a + b*sqrt(m), m a square-free integer (possibly negative).
/// Pure rationals carry m == 0 and b == 0; all elements mixed in one
/// computation must agree on m.
class FieldElement {
public:
    FieldElement() : m_(0) {}
    FieldElement(long long n) : a_(n), m_(0) {}
    FieldElement(Rational r) : a_(std::move(r)), m_(0) {}
    FieldElement(Rational a, Rational b, BigInt m);

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt_part() const { return b_; }
    const BigInt& radicand() const { return m_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return m_ == 0; }

    /// The rational value; throws if a sqrt part is present.
    const Rational& as_rational() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& r);
    FieldElement& operator-=(const FieldElement& r);
    FieldElement& operator*=(const FieldElement& r);
    FieldElement& operator/=(const FieldElement& r);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    bool operator==(const FieldElement& r) const {
        return a_ == r.a_ && b_ == r.b_ && m_ == r.m_;
    }
    bool operator!=(const FieldElement& r) const { return !(*this == r); }

    /// Conjugate a - b*sqrt(m).
    FieldElement conj() const;

    FieldElement inverse() const;

    /// Total order used for reproducible eigenvalue sorting: rationals by
    /// value first, then extension elements lexicographically by (a, b).
    static bool canonical_less(const FieldElement& x, const FieldElement& y);

    std::string str() const;
    static FieldElement parse(const std::string& text);

private:
    Rational a_;
    Rational b_;
    BigInt m_;
};

/// Radicand shared by two operands, or a mismatch error.
BigInt merge_radicands(const BigInt& x, const BigInt& y);

/// Exact square root of v inside Q(sqrt(m)) (m == 0 means plain Q).
/// Returns nullopt when no such element exists.
std::optional<FieldElement> exact_sqrt_in_extension(const FieldElement& v, const BigInt& m);

}  // namespace witgen

#endif
