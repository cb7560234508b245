#include "witgen/field.hpp"

#include <cctype>
#include <sstream>

namespace witgen {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "PARSE_ERROR";
        case ErrorCode::NotMultilinear: return "NOT_MULTILINEAR";
        case ErrorCode::ZeroPolynomial: return "ZERO_POLY";
        case ErrorCode::DimTooSmall: return "DIM_TOO_SMALL";
        case ErrorCode::NonzeroTrace: return "NONZERO_TRACE";
        case ErrorCode::NotSupported: return "NOT_SUPPORTED";
        case ErrorCode::RadicandMismatch: return "RADICAND_MISMATCH";
        case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
        case ErrorCode::SingularMatrix: return "SINGULAR_MATRIX";
        case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
        case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
        case ErrorCode::ArityMismatch: return "ARITY_MISMATCH";
        case ErrorCode::NotProper: return "NOT_PROPER";
        case ErrorCode::InternalError: return "INTERNAL_ERROR";
    }
    return "UNKNOWN";
}

// ---------------------------------------------------------------- Rational

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) raise(ErrorCode::DivisionByZero, "rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& r) {
    *this = Rational(num_ * r.den_ + r.num_ * den_, den_ * r.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& r) {
    *this = Rational(num_ * r.den_ - r.num_ * den_, den_ * r.den_);
    return *this;
}

Rational& Rational::operator*=(const Rational& r) {
    *this = Rational(num_ * r.num_, den_ * r.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& r) {
    if (r.is_zero()) raise(ErrorCode::DivisionByZero, "rational division by zero");
    *this = Rational(num_ * r.den_, den_ * r.num_);
    return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& r) const {
    BigInt lhs = num_ * r.den_;
    BigInt rhs = r.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::inverse() const {
    if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero");
    return Rational(den_, num_);
}

namespace {

std::optional<BigInt> integer_sqrt_exact(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

}  // namespace

std::optional<Rational> Rational::exact_sqrt() const {
    auto rn = integer_sqrt_exact(num_);
    if (!rn) return std::nullopt;
    auto rd = integer_sqrt_exact(den_);
    if (!rd) return std::nullopt;
    return Rational(*rn, *rd);
}

std::string Rational::str() const {
    std::ostringstream os;
    os << num_;
    if (den_ != 1) os << '/' << den_;
    return os.str();
}

namespace {

// Parses an optionally signed integer starting at pos; advances pos.
BigInt parse_integer(const std::string& s, size_t& pos) {
    size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        neg = s[pos] == '-';
        ++pos;
    }
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        raise(ErrorCode::ParseError, "expected integer at position " + std::to_string(start) +
                                         " in scalar '" + s + "'");
    BigInt v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + (s[pos] - '0');
        ++pos;
    }
    return neg ? BigInt(-v) : v;
}

Rational parse_rational_at(const std::string& s, size_t& pos) {
    BigInt num = parse_integer(s, pos);
    BigInt den = 1;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        den = parse_integer(s, pos);
        if (den <= 0) raise(ErrorCode::ParseError, "denominator must be positive in '" + s + "'");
    }
    return Rational(num, den);
}

std::string strip_ws(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    std::string s = strip_ws(text);
    size_t pos = 0;
    Rational r = parse_rational_at(s, pos);
    if (pos != s.size()) raise(ErrorCode::ParseError, "trailing characters in rational '" + text + "'");
    return r;
}

// ------------------------------------------------------- SqrtDecomposition

SqrtDecomposition decompose_sqrt(const Rational& d) {
    if (d.is_zero()) raise(ErrorCode::DivisionByZero, "sqrt decomposition of zero");
    // sqrt(p/q) = sqrt(p*q) / q
    BigInt n = d.num() * d.den();
    bool negative = n < 0;
    BigInt a = negative ? BigInt(-n) : n;
    BigInt square = 1;
    BigInt squarefree = 1;
    for (BigInt f = 2; f * f <= a; ++f) {
        if (a % f != 0) continue;
        int e = 0;
        while (a % f == 0) {
            a /= f;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) square *= f;
        if (e % 2) squarefree *= f;
    }
    // leftover a is prime (or 1); a perfect-square leftover was absorbed above
    squarefree *= a;
    Rational scale(square, d.den());
    BigInt m = negative ? BigInt(-squarefree) : squarefree;
    return {m, scale};
}

// ------------------------------------------------------------ FieldElement

FieldElement::FieldElement(Rational a, Rational b, BigInt m)
    : a_(std::move(a)), b_(std::move(b)), m_(std::move(m)) {
    if (b_.is_zero()) {
        m_ = 0;
    } else if (m_ == 0 || m_ == 1) {
        raise(ErrorCode::InternalError, "invalid radicand for extension element");
    }
}

const Rational& FieldElement::as_rational() const {
    if (!is_rational()) raise(ErrorCode::RadicandMismatch, "element is not rational: " + str());
    return a_;
}

BigInt merge_radicands(const BigInt& x, const BigInt& y) {
    if (x == 0) return y;
    if (y == 0) return x;
    if (x != y)
        raise(ErrorCode::RadicandMismatch,
              "mixed radicands sqrt(" + x.str() + ") and sqrt(" + y.str() + ")");
    return x;
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& r) {
    BigInt m = merge_radicands(m_, r.m_);
    a_ += r.a_;
    b_ += r.b_;
    m_ = b_.is_zero() ? BigInt(0) : m;
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& r) {
    BigInt m = merge_radicands(m_, r.m_);
    a_ -= r.a_;
    b_ -= r.b_;
    m_ = b_.is_zero() ? BigInt(0) : m;
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& r) {
    BigInt m = merge_radicands(m_, r.m_);
    Rational a = a_ * r.a_ + b_ * r.b_ * Rational(m);
    Rational b = a_ * r.b_ + b_ * r.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    m_ = b_.is_zero() ? BigInt(0) : m;
    return *this;
}

FieldElement FieldElement::conj() const {
    if (is_rational()) return *this;
    return FieldElement(a_, -b_, m_);
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero");
    if (is_rational()) return FieldElement(a_.inverse());
    // (a + b sqrt(m))^-1 = (a - b sqrt(m)) / (a^2 - b^2 m); the norm is
    // nonzero because m is square-free, hence not a rational square.
    Rational norm = a_ * a_ - b_ * b_ * Rational(m_);
    if (norm.is_zero()) raise(ErrorCode::InternalError, "zero norm for nonzero element");
    Rational inv = norm.inverse();
    return FieldElement(a_ * inv, -b_ * inv, m_);
}

FieldElement& FieldElement::operator/=(const FieldElement& r) {
    return *this *= r.inverse();
}

bool FieldElement::canonical_less(const FieldElement& x, const FieldElement& y) {
    bool xr = x.is_rational();
    bool yr = y.is_rational();
    if (xr != yr) return xr;
    if (xr) return x.a_ < y.a_;
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
}

std::string FieldElement::str() const {
    if (is_rational()) return a_.str();
    std::ostringstream os;
    os << a_.str();
    os << (b_ < Rational(0) ? '-' : '+');
    os << b_.abs().str() << "*sqrt(" << m_ << ')';
    return os.str();
}

FieldElement FieldElement::parse(const std::string& text) {
    std::string s = strip_ws(text);
    if (s.empty()) raise(ErrorCode::ParseError, "empty scalar");
    size_t pos = 0;

    // Either "a", "a+b*sqrt(m)", "a-b*sqrt(m)", or "b*sqrt(m)".
    auto parse_sqrt_tail = [&](const Rational& b) -> FieldElement {
        if (s.compare(pos, 5, "sqrt(") != 0)
            raise(ErrorCode::ParseError, "expected sqrt( in scalar '" + text + "'");
        pos += 5;
        BigInt m = parse_integer(s, pos);
        if (pos >= s.size() || s[pos] != ')')
            raise(ErrorCode::ParseError, "expected ) in scalar '" + text + "'");
        ++pos;
        if (pos != s.size()) raise(ErrorCode::ParseError, "trailing characters in scalar '" + text + "'");
        if (m == 0 || m == 1) raise(ErrorCode::ParseError, "radicand must not be 0 or 1");
        return FieldElement(Rational(0), b, m);
    };

    Rational first = parse_rational_at(s, pos);
    if (pos == s.size()) return FieldElement(first);
    if (s[pos] == '*') {
        ++pos;
        return parse_sqrt_tail(first);
    }
    if (s[pos] != '+' && s[pos] != '-')
        raise(ErrorCode::ParseError, "unexpected character in scalar '" + text + "'");
    bool neg = s[pos] == '-';
    ++pos;
    Rational b = parse_rational_at(s, pos);
    if (neg) b = -b;
    if (pos >= s.size() || s[pos] != '*')
        raise(ErrorCode::ParseError, "expected * before sqrt in scalar '" + text + "'");
    ++pos;
    FieldElement tail = parse_sqrt_tail(b);
    return FieldElement(first, tail.sqrt_part(), tail.radicand());
}

std::optional<FieldElement> exact_sqrt_in_extension(const FieldElement& v, const BigInt& m) {
    if (v.is_zero()) return FieldElement(0);
    if (v.is_rational()) {
        const Rational& r = v.rational_part();
        if (auto s = r.exact_sqrt()) return FieldElement(*s);
        if (m != 0) {
            // b^2 * m = r
            Rational q = r / Rational(m);
            if (auto b = q.exact_sqrt()) return FieldElement(Rational(0), *b, m);
        }
        return std::nullopt;
    }
    if (v.radicand() != m) return std::nullopt;
    // (x + y sqrt(m))^2 = v  =>  x^2 = (a +- sqrt(a^2 - b^2 m)) / 2, y = b/(2x)
    const Rational& a = v.rational_part();
    const Rational& b = v.sqrt_part();
    Rational norm = a * a - b * b * Rational(m);
    auto s = norm.exact_sqrt();
    if (!s) return std::nullopt;
    for (const Rational& cand : {(a + *s) / Rational(2), (a - *s) / Rational(2)}) {
        auto x = cand.exact_sqrt();
        if (!x || x->is_zero()) continue;
        Rational y = b / (Rational(2) * *x);
        FieldElement root(*x, y, m);
        if (root * root == v) return root;
    }
    return std::nullopt;
}

}  // namespace witgen
