#ifndef WITGEN_POLY1V_HPP
#define WITGEN_POLY1V_HPP

#include <utility>
#include <vector>

#include "witgen/field.hpp"

namespace witgen {

/// Univariate polynomial over FieldElement, coefficients lowest degree first.
/// The leading coefficient is nonzero unless the polynomial is zero.
class Polynomial1V {
public:
    Polynomial1V() = default;
    explicit Polynomial1V(std::vector<FieldElement> coeffs);

    static Polynomial1V constant(FieldElement c);
    /// x - r
    static Polynomial1V linear_root(const FieldElement& r);

    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const FieldElement& leading() const;
    FieldElement coeff(size_t k) const;

    FieldElement eval(const FieldElement& x) const;
    Polynomial1V derivative() const;

    Polynomial1V operator*(const Polynomial1V& r) const;
    Polynomial1V operator+(const Polynomial1V& r) const;
    Polynomial1V operator-(const Polynomial1V& r) const;
    Polynomial1V scaled(const FieldElement& c) const;
    bool operator==(const Polynomial1V& r) const { return coeffs_ == r.coeffs_; }

    /// Euclidean division; requires a nonzero divisor.
    std::pair<Polynomial1V, Polynomial1V> divmod(const Polynomial1V& divisor) const;

    /// Monic gcd.
    static Polynomial1V gcd(Polynomial1V a, Polynomial1V b);

    Polynomial1V monic() const;
    /// Coefficient-wise sqrt(m)-conjugation.
    Polynomial1V conj() const;
    bool has_rational_coeffs() const;

    std::string str() const;

private:
    std::vector<FieldElement> coeffs_;
};

}  // namespace witgen

#endif
