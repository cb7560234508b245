#ifndef WITGEN_WITNESS_HPP
#define WITGEN_WITNESS_HPP

#include <optional>

#include "witgen/canon.hpp"
#include "witgen/decompose.hpp"
#include "witgen/freepoly.hpp"

namespace witgen {

/// Witness certificate: evaluate(f, witnesses) = d, exactly.
struct WitnessReport {
    std::vector<Matrix> witnesses;
    std::vector<std::string> branch;
    std::optional<Matrix> conjugator;
    std::optional<BigInt> radicand;
    bool verified = false;
};

/// Diagonal of [A,B] in the generalized product construction: nonzero
/// entries summing to zero with sum d_i/u_i = 0 and u_i + lambda*u_{i+1}
/// nonzero.
struct USelection {
    Vector u;
};

/// Upper shift matrix sum e_{i,i+1} (the nilpotent Jordan block).
Matrix shift_matrix(size_t n);

/// B lower-bidiagonal with [shift, B] equal to the upper-bidiagonal target.
Matrix bidiag_bracket_solve(const BidiagonalTarget& t);

/// Trace-zero lower-bidiagonal D' with [shift, D'] equal to the
/// upper-bidiagonal target.
Matrix outer_bracket_solve(const BidiagonalTarget& t);

/// (B, C) with [[shift,B],[shift,C]] equal to the lower-bidiagonal target.
std::pair<Matrix, Matrix> inner_product_solve(const BidiagonalTarget& t);

struct TripleWitness {
    Matrix a, b, c;
};

/// [A,B][A,C] - [A,C][A,B] = t (lower bidiagonal).
TripleWitness product_difference_construct(const BidiagonalTarget& t);

/// [A,[[A,B],[A,C]]] = t (upper bidiagonal).
TripleWitness triple_bracket_construct(const BidiagonalTarget& t);

/// (A, A^2, B, C) witnessing the special central-like polynomial scaled by c
/// against the upper-bidiagonal target.
std::vector<Matrix> special_poly_witnesses(const BidiagonalTarget& t, const FieldElement& c);

/// Deterministic u-selection for the generalized product construction; may
/// adjoin one square root. `seed` drives the candidate pool order.
USelection select_u(const Vector& d, const FieldElement& lambda, uint64_t seed);

/// [A,B][A,C] + lambda [A,C][A,B] = t (upper bidiagonal), lambda != -1.
TripleWitness weighted_product_construct(const FieldElement& lambda, const BidiagonalTarget& t,
                               uint64_t seed);

/// X with gamma * ad_S^k(X) = Z and zero diagonal; S has pairwise distinct
/// diagonal entries, Z has a zero diagonal.
Matrix ad_pow_solve(const Matrix& s, size_t k, const FieldElement& gamma, const Matrix& z);

/// Witnesses for the arity-4 Lie branch z_i != 0.
std::vector<Matrix> lie4_witnesses(int i, const FieldElement& z, const Matrix& d);

/// Witnesses for the arity-3 Lie branch (w1, w2) != 0.
std::vector<Matrix> lie3_witnesses(const FieldElement& w1, const FieldElement& w2,
                                   const Matrix& d);

/// (X, Y) with gamma [X, Y] = d.
std::pair<Matrix, Matrix> two_var_witnesses(const FieldElement& gamma, const Matrix& d);

/// End-to-end synthesis: classify, construct per branch, conjugate back,
/// verify. Requires n >= 3; trace(d) = 0 except on the surjective branch.
WitnessReport synthesize(const MultilinearPoly& f, const Matrix& d, uint64_t seed = 1);

bool verify(const MultilinearPoly& f, const std::vector<Matrix>& witnesses, const Matrix& d);

}  // namespace witgen

#endif
