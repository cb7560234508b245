#include "witgen/poly1v.hpp"

#include <sstream>

namespace witgen {

namespace {

void trim(std::vector<FieldElement>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

Polynomial1V::Polynomial1V(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) {
    trim(coeffs_);
}

Polynomial1V Polynomial1V::constant(FieldElement c) {
    return Polynomial1V({std::move(c)});
}

Polynomial1V Polynomial1V::linear_root(const FieldElement& r) {
    return Polynomial1V({-r, FieldElement(1)});
}

const FieldElement& Polynomial1V::leading() const {
    if (is_zero()) raise(ErrorCode::InternalError, "leading coefficient of zero polynomial");
    return coeffs_.back();
}

FieldElement Polynomial1V::coeff(size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : FieldElement(0);
}

FieldElement Polynomial1V::eval(const FieldElement& x) const {
    FieldElement acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial1V Polynomial1V::derivative() const {
    std::vector<FieldElement> out;
    for (size_t k = 1; k < coeffs_.size(); ++k)
        out.push_back(coeffs_[k] * FieldElement(static_cast<long long>(k)));
    return Polynomial1V(std::move(out));
}

Polynomial1V Polynomial1V::operator*(const Polynomial1V& r) const {
    if (is_zero() || r.is_zero()) return Polynomial1V();
    std::vector<FieldElement> out(coeffs_.size() + r.coeffs_.size() - 1, FieldElement(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < r.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * r.coeffs_[j];
    return Polynomial1V(std::move(out));
}

Polynomial1V Polynomial1V::operator+(const Polynomial1V& r) const {
    std::vector<FieldElement> out(std::max(coeffs_.size(), r.coeffs_.size()), FieldElement(0));
    for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + r.coeff(i);
    return Polynomial1V(std::move(out));
}

Polynomial1V Polynomial1V::operator-(const Polynomial1V& r) const {
    std::vector<FieldElement> out(std::max(coeffs_.size(), r.coeffs_.size()), FieldElement(0));
    for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - r.coeff(i);
    return Polynomial1V(std::move(out));
}

Polynomial1V Polynomial1V::scaled(const FieldElement& c) const {
    std::vector<FieldElement> out = coeffs_;
    for (auto& x : out) x *= c;
    return Polynomial1V(std::move(out));
}

std::pair<Polynomial1V, Polynomial1V> Polynomial1V::divmod(const Polynomial1V& divisor) const {
    if (divisor.is_zero()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
    std::vector<FieldElement> rem = coeffs_;
    int dq = static_cast<int>(rem.size()) - divisor.degree() - 1;
    if (dq < 0) return {Polynomial1V(), *this};
    std::vector<FieldElement> quot(static_cast<size_t>(dq) + 1, FieldElement(0));
    FieldElement lead_inv = divisor.leading().inverse();
    for (int k = dq; k >= 0; --k) {
        FieldElement c = rem[k + divisor.degree()] * lead_inv;
        quot[k] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= divisor.degree(); ++j)
            rem[k + j] -= c * divisor.coeffs_[j];
    }
    trim(rem);
    return {Polynomial1V(std::move(quot)), Polynomial1V(std::move(rem))};
}

Polynomial1V Polynomial1V::gcd(Polynomial1V a, Polynomial1V b) {
    while (!b.is_zero()) {
        Polynomial1V r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Polynomial1V Polynomial1V::monic() const {
    if (is_zero()) raise(ErrorCode::InternalError, "monic of zero polynomial");
    return scaled(leading().inverse());
}

Polynomial1V Polynomial1V::conj() const {
    std::vector<FieldElement> out = coeffs_;
    for (auto& c : out) c = c.conj();
    return Polynomial1V(std::move(out));
}

bool Polynomial1V::has_rational_coeffs() const {
    for (const auto& c : coeffs_)
        if (!c.is_rational()) return false;
    return true;
}

std::string Polynomial1V::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        os << '(' << coeffs_[k].str() << ')';
        if (k > 0) os << "*x^" << k;
        first = false;
    }
    return os.str();
}

}  // namespace witgen
