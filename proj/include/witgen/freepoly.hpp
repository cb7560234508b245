#ifndef WITGEN_FREEPOLY_HPP
#define WITGEN_FREEPOLY_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "witgen/matrix.hpp"

namespace witgen {

/// Expression tree for polynomials in noncommuting x1..x4 with rational
/// coefficients. Brackets denote commutators.
struct Expr {
    enum class Kind { Scalar, Var, Add, Sub, Mul, Neg, Bracket };
    Kind kind;
    Rational scalar;                 // Kind::Scalar
    int var = 0;                     // Kind::Var, 1-based
    std::shared_ptr<const Expr> lhs;
    std::shared_ptr<const Expr> rhs;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Recursive-descent parse of the expression grammar:
///   expr := term (('+'|'-') term)*
///   term := factor ('*' factor)*
///   factor := rational | var | '[' expr ',' expr ']' | '(' expr ')' | '-' factor
ExprPtr parse_expr(const std::string& text);

Matrix eval_expr(const ExprPtr& ast, const std::vector<Matrix>& args);

/// Multilinear polynomial as a coefficient map from permutation words
/// (digit strings like "1234", lexicographically ordered) to scalars.
class MultilinearPoly {
public:
    MultilinearPoly() : arity_(0) {}
    MultilinearPoly(int arity, std::map<std::string, FieldElement> coeffs);

    int arity() const { return arity_; }
    const std::map<std::string, FieldElement>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    FieldElement coeff(const std::string& word) const;
    FieldElement coeff_sum() const;

    MultilinearPoly operator+(const MultilinearPoly& r) const;
    MultilinearPoly operator-(const MultilinearPoly& r) const;
    MultilinearPoly scaled(const FieldElement& c) const;
    bool operator==(const MultilinearPoly& r) const {
        return arity_ == r.arity_ && coeffs_ == r.coeffs_;
    }

    /// Sets variable `slot` (1-based) to the identity: drops the index from
    /// every word, sums collisions, and renumbers the remaining variables
    /// order-preservingly to 1..arity-1.
    MultilinearPoly substitute_identity(int slot) const;

    Matrix evaluate(const std::vector<Matrix>& args) const;

    /// Canonical text, words in lexicographic order; reparses to the same
    /// coefficient map. Coefficients must be rational.
    std::string print() const;

    /// 24-vector (m! in general) of coefficients over all permutation words
    /// in lexicographic order.
    std::vector<FieldElement> dense_coeffs() const;

    static std::vector<std::string> all_words(int arity);

private:
    int arity_;
    std::map<std::string, FieldElement> coeffs_;
};

/// Expands an expression into its multilinear coefficient map. Throws
/// NotMultilinear when a monomial repeats or omits a variable or the
/// arities are mixed; an everywhere-cancelling input yields the zero
/// polynomial with the syntactic arity.
MultilinearPoly expand(const ExprPtr& ast);

MultilinearPoly parse_poly(const std::string& text);

}  // namespace witgen

#endif
