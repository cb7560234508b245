#include <doctest.h>

#include <random>

#include "witgen/matrix.hpp"

using namespace witgen;

namespace {
Matrix from_rows(const std::vector<std::vector<long long>>& rows) {
    Matrix m(rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows.size(); ++j) m.at(i, j) = FieldElement(rows[i][j]);
    return m;
}
}  // namespace

TEST_CASE("constructors and basic ops") {
    Matrix i3 = Matrix::identity(3);
    CHECK(i3 * i3 == i3);
    CHECK(Matrix::unit(3, 1, 2) * Matrix::unit(3, 2, 3) == Matrix::unit(3, 1, 3));
    CHECK((Matrix::unit(3, 1, 2) * Matrix::unit(3, 1, 3)).is_zero());
    Matrix d = Matrix::diagonal({FieldElement(1), FieldElement(2), FieldElement(-3)});
    CHECK(d.trace().is_zero());
    CHECK(d.is_diagonal());
    CHECK(d.transpose() == d);
}

TEST_CASE("exact inverse") {
    Matrix m = from_rows({{2, 1, 0}, {1, 1, 0}, {0, 3, 1}});
    CHECK(m * m.inverse() == Matrix::identity(3));
    CHECK(m.inverse() * m == Matrix::identity(3));
    CHECK_THROWS_AS(from_rows({{1, 2}, {2, 4}}).inverse(), Error);
}

TEST_CASE("characteristic polynomial of a companion matrix") {
    // companion of x^3 - 4x + 1
    Matrix c = from_rows({{0, 0, -1}, {1, 0, 4}, {0, 1, 0}});
    Polynomial1V p = c.char_poly();
    CHECK(p == Polynomial1V({FieldElement(1), FieldElement(-4), FieldElement(0), FieldElement(1)}));
    CHECK(Matrix::identity(2).char_poly() ==
          Polynomial1V({FieldElement(1), FieldElement(-2), FieldElement(1)}));
}

TEST_CASE("kernel basis is deterministic") {
    Matrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 0, 0}});
    auto k = m.kernel_basis();
    REQUIRE(k.size() == 2);
    for (const auto& v : k) {
        Vector mv = m.apply(v);
        for (const auto& e : mv) CHECK(e.is_zero());
    }
    CHECK(k == m.kernel_basis());
    CHECK(Matrix::identity(3).kernel_basis().empty());
}

TEST_CASE("linear solve on non-square systems") {
    std::vector<Vector> rows = {{FieldElement(1), FieldElement(1)},
                                {FieldElement(1), FieldElement(-1)},
                                {FieldElement(2), FieldElement(0)}};
    auto x = solve_linear(rows, {FieldElement(3), FieldElement(1), FieldElement(4)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == FieldElement(2));
    CHECK((*x)[1] == FieldElement(1));
    CHECK(!solve_linear(rows, {FieldElement(3), FieldElement(1), FieldElement(5)}).has_value());
    // underdetermined: free variables are zero
    auto y = solve_linear({{FieldElement(0), FieldElement(1)}}, {FieldElement(7)});
    REQUIRE(y.has_value());
    CHECK((*y)[0].is_zero());
    CHECK((*y)[1] == FieldElement(7));
}

TEST_CASE("rank") {
    CHECK(rank_of_rows({{FieldElement(1), FieldElement(2)},
                        {FieldElement(2), FieldElement(4)}}) == 1);
    CHECK(rank_of_rows({{FieldElement(1), FieldElement(0)},
                        {FieldElement(0), FieldElement(1)}}) == 2);
    CHECK(rank_of_rows({}) == 0);
}

TEST_CASE("commutator and conjugation") {
    Matrix x = from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    Matrix y = from_rows({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
    CHECK(commutator(x, y) == from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
    CHECK(commutator(x, y).trace().is_zero());
    Matrix p = from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
    CHECK(conjugate(p, x).char_poly() == x.char_poly());
    CHECK(conjugate(p, conjugate(p.inverse(), x)) == x);
}
