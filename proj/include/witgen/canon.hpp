#ifndef WITGEN_CANON_HPP
#define WITGEN_CANON_HPP

#include <map>
#include <variant>

#include "witgen/matrix.hpp"

namespace witgen {

/// Matrix supported on the diagonal and one adjacent off-diagonal.
struct BidiagonalTarget {
    enum class Orientation { Upper, Lower };
    Orientation orientation = Orientation::Upper;
    Vector diag;  // d_1..d_n
    Vector off;   // n-1 entries: (i,i+1) if upper, (i+1,i) if lower

    size_t dim() const { return diag.size(); }
    Matrix to_matrix() const;
    FieldElement diag_sum() const;
};

/// Similarity certificate: conjugate(P, D) = P D P^{-1} = T, exactly.
struct Canonicalization {
    Matrix p;
    Matrix t;
};

/// Irreducible obstruction to splitting the spectrum over Q extended by a
/// single square root.
struct SplitFailure {
    Polynomial1V factor;
};

using JordanResult = std::variant<Canonicalization, SplitFailure>;

/// Conjugates a trace-zero matrix to one with an exactly zero diagonal.
/// Always succeeds over the base field.
Canonicalization zero_diagonalize(const Matrix& d);

/// All rational roots of a monic rational polynomial, with multiplicities.
std::map<Rational, int> rational_roots(const Polynomial1V& p);

/// Exact Jordan form (upper, blocks ordered by eigenvalue then decreasing
/// size) when the spectrum splits over the base field or one quadratic
/// extension of it.
JordanResult jordanize(const Matrix& d);

struct BidiagonalResult {
    Canonicalization canon;
    BidiagonalTarget target;
};

/// Identity conjugation for upper orientation; per-block reversal for lower.
BidiagonalResult to_bidiagonal(const Matrix& jordan, BidiagonalTarget::Orientation orientation);

}  // namespace witgen

#endif
