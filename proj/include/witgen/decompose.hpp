#ifndef WITGEN_DECOMPOSE_HPP
#define WITGEN_DECOMPOSE_HPP

#include <array>
#include <memory>
#include <vector>

#include "witgen/freepoly.hpp"

namespace witgen {

/// Coordinates of a proper degree-4 multilinear polynomial in the fixed
/// basis: three left-normed brackets and six commutator products.
struct ProperDecomposition {
    FieldElement z1, z2, z3;
    FieldElement c1234, c1324, c1423, c2314, c2413, c3412;

    std::array<FieldElement, 9> as_array() const {
        return {z1, z2, z3, c1234, c1324, c1423, c2314, c2413, c3412};
    }
};

/// One of the six two-repeated-slot substitution layouts together with the
/// coefficients of [A,B][A,C] and [A,C][A,B] it produces.
struct PatternPair {
    int pattern;  // index into pattern_layouts()
    FieldElement alpha;
    FieldElement beta;
};

/// Slot layouts (A,A,B,C), (A,B,A,C), (A,B,C,A), (B,A,A,C), (B,A,C,A),
/// (B,C,A,A) as strings over {A,B,C}.
const std::array<std::string, 6>& pattern_layouts();

struct SynthesisPlan {
    enum class Tag {
        Zero,
        Surjective,
        PartialReduction,
        Lie4,
        Lie3,
        Commutator2,
        ProductCase,
        SpecialCentralLike,
    };

    Tag tag = Tag::Zero;
    FieldElement scalar;   // Surjective: coeff sum; Lie4: z_i; Commutator2: gamma;
                           // SpecialCentralLike: c1234 scale
    int slot = 0;          // PartialReduction: eliminated slot; Lie4: i in {1,2,3}
    MultilinearPoly reduced;              // PartialReduction
    std::shared_ptr<SynthesisPlan> inner; // PartialReduction
    FieldElement w1, w2;                  // Lie3
    int pattern = -1;                     // ProductCase
    FieldElement alpha, beta, lambda;     // ProductCase

    std::vector<std::string> tag_trace() const;
};

const char* plan_tag_name(SynthesisPlan::Tag tag);

/// The fixed generators of the proper multilinear subspace: 9 for arity 4,
/// 2 for arity 3, 1 for arity 2, in the coordinate order used throughout.
std::vector<MultilinearPoly> proper_generators(int arity = 4);

bool is_proper(const MultilinearPoly& f);

/// Exact coordinates of a proper arity-4 polynomial in the generator basis.
ProperDecomposition proper_decompose(const MultilinearPoly& f);

/// Rebuilds the polynomial from its coordinates (test oracle companion).
MultilinearPoly reconstruct(const ProperDecomposition& d);

/// The six (alpha, beta) pairs of the repeated-slot substitutions, valid
/// when z1 = z2 = z3 = 0.
std::array<PatternPair, 6> pattern_pairs(const ProperDecomposition& d);

/// Full classification tree over nonzero multilinear polynomials of
/// arity <= 4 (the zero polynomial classifies as Tag::Zero).
SynthesisPlan classify(const MultilinearPoly& f);

}  // namespace witgen

#endif
