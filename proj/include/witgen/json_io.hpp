#ifndef WITGEN_JSON_IO_HPP
#define WITGEN_JSON_IO_HPP

#include <json.hpp>

#include "witgen/decompose.hpp"
#include "witgen/witness.hpp"

namespace witgen {

using nlohmann::json;

/// Matrix wire format: array of n rows, each an array of n scalar strings.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/// Polynomial JSON alternative: object mapping word strings ("1234") to
/// rational scalar strings.
MultilinearPoly poly_from_json(const json& j);
json poly_to_json(const MultilinearPoly& f);

json decomposition_to_json(const ProperDecomposition& d);
json plan_to_json(const SynthesisPlan& plan);
json report_to_json(const WitnessReport& report);

std::vector<Matrix> matrices_from_json(const json& j);

}  // namespace witgen

#endif
