#include <doctest.h>

#include "witgen/json_io.hpp"

using namespace witgen;

TEST_CASE("matrix JSON round trip") {
    Matrix m(2);
    m.at(0, 0) = FieldElement::parse("1/2");
    m.at(0, 1) = FieldElement::parse("1+2*sqrt(3)");
    m.at(1, 0) = FieldElement(-4);
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    CHECK_THROWS_AS(matrix_from_json(json::array()), Error);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[[\"1\",\"2\"],[\"3\"]]")), Error);
}

TEST_CASE("polynomial JSON round trip") {
    MultilinearPoly f = parse_poly("[x1,x2]*[x3,x4]+2*[x3,x4]*[x1,x2]");
    CHECK(poly_from_json(poly_to_json(f)) == f);
    CHECK_THROWS_AS(poly_from_json(json::parse("{\"12\":\"1\",\"123\":\"1\"}")), Error);
    CHECK_THROWS_AS(poly_from_json(json::object()), Error);
}

TEST_CASE("report JSON shape") {
    MultilinearPoly f = parse_poly("[x1,x2]");
    Matrix d = Matrix::diagonal({FieldElement(1), FieldElement(-1), FieldElement(0)});
    WitnessReport rep = synthesize(f, d);
    json j = report_to_json(rep);
    CHECK(j["verified"] == true);
    CHECK(j["witnesses"].size() == 2);
    auto ws = matrices_from_json(j["witnesses"]);
    CHECK(verify(f, ws, d));
}

TEST_CASE("decomposition and plan JSON") {
    MultilinearPoly f = parse_poly("[x1,x2]*[x3,x4]+[x3,x4]*[x1,x2]");
    json dj = decomposition_to_json(proper_decompose(f));
    CHECK(dj["c1234"] == "1");
    CHECK(dj["c3412"] == "1");
    CHECK(dj["z1"] == "0");
    json pj = plan_to_json(classify(f));
    CHECK(pj.contains("branch"));
    CHECK(pj.contains("lambda"));
}
