#include <doctest.h>

#include <random>

#include "witgen/decompose.hpp"
#include "witgen/witness.hpp"

using namespace witgen;

namespace {

const char* kSpecialText =
    "[x1,x2]*[x3,x4]+[x3,x4]*[x1,x2]+[x2,x3]*[x1,x4]+[x1,x4]*[x2,x3]"
    "-[x1,x3]*[x2,x4]-[x2,x4]*[x1,x3]";

Matrix rand_matrix(std::mt19937_64& rng, size_t n) {
    std::uniform_int_distribution<long long> d(-4, 4);
    Matrix m(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m.at(i, j) = FieldElement(d(rng));
    return m;
}

}  // namespace

TEST_CASE("generator families and ranks") {
    CHECK(proper_generators(4).size() == 9);
    CHECK(proper_generators(3).size() == 2);
    CHECK(proper_generators(2).size() == 1);
    for (int m = 2; m <= 4; ++m) {
        std::vector<Vector> rows;
        for (const auto& g : proper_generators(m)) {
            CHECK(g.coeff_sum().is_zero());
            rows.push_back(g.dense_coeffs());
        }
        size_t expected = m == 4 ? 9 : (m == 3 ? 2 : 1);
        CHECK(rank_of_rows(rows) == expected);
    }
}

TEST_CASE("properness") {
    CHECK(is_proper(parse_poly("[x1,x2]")));
    CHECK(is_proper(parse_poly(kSpecialText)));
    CHECK(!is_proper(parse_poly("x1*x2")));
    CHECK(!is_proper(parse_poly("x1*x2*x3 - x3*x2*x1")));
}

TEST_CASE("decompose/reconstruct round trip") {
    // each generator decomposes to a unit coordinate vector
    auto gens = proper_generators(4);
    for (size_t k = 0; k < gens.size(); ++k) {
        ProperDecomposition d = proper_decompose(gens[k]);
        auto arr = d.as_array();
        for (size_t j = 0; j < 9; ++j)
            CHECK(arr[j] == (j == k ? FieldElement(1) : FieldElement(0)));
        CHECK(reconstruct(d) == gens[k]);
    }
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long long> dist(-5, 5);
    for (int trial = 0; trial < 25; ++trial) {
        MultilinearPoly f(4, {});
        for (const auto& g : gens) f = f + g.scaled(FieldElement(dist(rng)));
        if (f.is_zero()) continue;
        CHECK(reconstruct(proper_decompose(f)) == f);
    }
    CHECK_THROWS_AS(proper_decompose(parse_poly("x1*x2*x3*x4")), Error);
}

TEST_CASE("the special polynomial sits on the all-patterns-zero line") {
    ProperDecomposition d = proper_decompose(parse_poly(kSpecialText));
    CHECK(d.z1.is_zero());
    CHECK(d.c1234 == FieldElement(1));
    CHECK(d.c1324 == FieldElement(-1));
    CHECK(d.c1423 == FieldElement(1));
    CHECK(d.c2314 == FieldElement(1));
    CHECK(d.c2413 == FieldElement(-1));
    CHECK(d.c3412 == FieldElement(1));
    for (const auto& p : pattern_pairs(d)) {
        CHECK(p.alpha.is_zero());
        CHECK(p.beta.is_zero());
    }
}

TEST_CASE("pattern pairs match direct substitution") {
    // For a bracket-free proper f and each repeated-slot layout,
    // f under the substitution equals alpha [A,B][A,C] + beta [A,C][A,B].
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long long> dist(-3, 3);
    auto gens = proper_generators(4);
    for (int trial = 0; trial < 10; ++trial) {
        MultilinearPoly f(4, {});
        for (size_t k = 3; k < 9; ++k) f = f + gens[k].scaled(FieldElement(dist(rng)));
        if (f.is_zero()) continue;
        ProperDecomposition d = proper_decompose(f);
        Matrix a = rand_matrix(rng, 3), b = rand_matrix(rng, 3), c = rand_matrix(rng, 3);
        Matrix ab = commutator(a, b), ac = commutator(a, c);
        for (const auto& p : pattern_pairs(d)) {
            const std::string& layout = pattern_layouts()[static_cast<size_t>(p.pattern)];
            std::vector<Matrix> args;
            for (char ch : layout) args.push_back(ch == 'A' ? a : (ch == 'B' ? b : c));
            CHECK(f.evaluate(args) == (ab * ac).scaled(p.alpha) + (ac * ab).scaled(p.beta));
        }
    }
}

TEST_CASE("classification tree") {
    SynthesisPlan p = classify(parse_poly("x1*x2*x3*x4"));
    CHECK(p.tag == SynthesisPlan::Tag::Surjective);
    CHECK(p.scalar == FieldElement(1));

    p = classify(parse_poly("[[[x2,x1],x3],x4]"));
    CHECK(p.tag == SynthesisPlan::Tag::Lie4);
    CHECK(p.slot == 1);
    CHECK(p.scalar == FieldElement(1));

    p = classify(parse_poly("[[x1,x2],x3]"));
    CHECK(p.tag == SynthesisPlan::Tag::Lie3);
    CHECK((!p.w1.is_zero() || !p.w2.is_zero()));

    p = classify(parse_poly("3*[x1,x2]"));
    CHECK(p.tag == SynthesisPlan::Tag::Commutator2);
    CHECK(p.scalar == FieldElement(3));

    p = classify(parse_poly(kSpecialText));
    CHECK(p.tag == SynthesisPlan::Tag::SpecialCentralLike);
    CHECK(p.scalar == FieldElement(1));

    p = classify(parse_poly("[x1,x2]*[x3,x4]+[x3,x4]*[x1,x2]"));
    CHECK(p.tag == SynthesisPlan::Tag::ProductCase);
    CHECK(!p.alpha.is_zero());

    p = classify(parse_poly("x1*x2*x3 - x3*x2*x1"));
    CHECK(p.tag == SynthesisPlan::Tag::PartialReduction);
    CHECK(p.slot == 1);
    REQUIRE(p.inner);
    CHECK(p.inner->tag == SynthesisPlan::Tag::Commutator2);

    CHECK(classify(MultilinearPoly(4, {})).tag == SynthesisPlan::Tag::Zero);
}

TEST_CASE("product-case parameters reproduce the polynomial under substitution") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long long> dist(-3, 3);
    auto gens = proper_generators(4);
    int checked = 0;
    for (int trial = 0; trial < 40 && checked < 10; ++trial) {
        MultilinearPoly f(4, {});
        for (size_t k = 3; k < 9; ++k) f = f + gens[k].scaled(FieldElement(dist(rng)));
        if (f.is_zero()) continue;
        SynthesisPlan p = classify(f);
        if (p.tag != SynthesisPlan::Tag::ProductCase) continue;
        ++checked;
        const std::string& layout = pattern_layouts()[static_cast<size_t>(p.pattern)];
        Matrix a = rand_matrix(rng, 3), b = rand_matrix(rng, 3), c = rand_matrix(rng, 3);
        std::vector<Matrix> args;
        for (char ch : layout) args.push_back(ch == 'A' ? a : (ch == 'B' ? b : c));
        Matrix ab = commutator(a, b), ac = commutator(a, c);
        CHECK(f.evaluate(args) == (ab * ac).scaled(p.alpha) + (ac * ab).scaled(p.beta));
        if (!p.alpha.is_zero()) CHECK(p.lambda == p.beta / p.alpha);
    }
    CHECK(checked == 10);
}
