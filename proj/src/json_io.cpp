#include "witgen/json_io.hpp"

namespace witgen {

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        raise(ErrorCode::ParseError, "matrix JSON must be a non-empty array of rows");
    size_t n = j.size();
    Matrix m(n);
    for (size_t i = 0; i < n; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != n)
            raise(ErrorCode::ParseError, "matrix JSON must be square");
        for (size_t k = 0; k < n; ++k) {
            if (!row[k].is_string())
                raise(ErrorCode::ParseError, "matrix entries must be scalar strings");
            m.at(i, k) = FieldElement::parse(row[k].get<std::string>());
        }
    }
    return m;
}

MultilinearPoly poly_from_json(const json& j) {
    if (!j.is_object()) raise(ErrorCode::ParseError, "polynomial JSON must be an object");
    int arity = -1;
    std::map<std::string, FieldElement> coeffs;
    for (const auto& [word, value] : j.items()) {
        if (!value.is_string())
            raise(ErrorCode::ParseError, "polynomial coefficients must be scalar strings");
        FieldElement c = FieldElement::parse(value.get<std::string>());
        if (!c.is_rational())
            raise(ErrorCode::NotSupported, "polynomial coefficients must be rational");
        if (arity == -1)
            arity = static_cast<int>(word.size());
        else if (arity != static_cast<int>(word.size()))
            raise(ErrorCode::NotMultilinear, "mixed word lengths in polynomial JSON");
        coeffs.emplace(word, c);
    }
    if (arity == -1) raise(ErrorCode::ZeroPolynomial, "empty polynomial JSON");
    return MultilinearPoly(arity, std::move(coeffs));
}

json poly_to_json(const MultilinearPoly& f) {
    json out = json::object();
    for (const auto& [w, c] : f.coeffs()) out[w] = c.str();
    return out;
}

json decomposition_to_json(const ProperDecomposition& d) {
    return json{{"z1", d.z1.str()},       {"z2", d.z2.str()},       {"z3", d.z3.str()},
                {"c1234", d.c1234.str()}, {"c1324", d.c1324.str()}, {"c1423", d.c1423.str()},
                {"c2314", d.c2314.str()}, {"c2413", d.c2413.str()}, {"c3412", d.c3412.str()}};
}

json plan_to_json(const SynthesisPlan& plan) {
    json out;
    out["branch"] = plan.tag_trace();
    switch (plan.tag) {
        case SynthesisPlan::Tag::Surjective:
            out["coeff_sum"] = plan.scalar.str();
            break;
        case SynthesisPlan::Tag::Lie4:
            out["z"] = plan.scalar.str();
            break;
        case SynthesisPlan::Tag::Lie3:
            out["w1"] = plan.w1.str();
            out["w2"] = plan.w2.str();
            break;
        case SynthesisPlan::Tag::Commutator2:
            out["gamma"] = plan.scalar.str();
            break;
        case SynthesisPlan::Tag::SpecialCentralLike:
            out["scale"] = plan.scalar.str();
            break;
        case SynthesisPlan::Tag::ProductCase:
            out["pattern"] = pattern_layouts()[static_cast<size_t>(plan.pattern)];
            out["alpha"] = plan.alpha.str();
            out["beta"] = plan.beta.str();
            out["lambda"] = plan.lambda.str();
            break;
        default:
            break;
    }
    return out;
}

json report_to_json(const WitnessReport& report) {
    json ws = json::array();
    for (const auto& w : report.witnesses) ws.push_back(matrix_to_json(w));
    json out;
    out["branch"] = report.branch;
    out["witnesses"] = ws;
    out["conjugator"] = report.conjugator ? matrix_to_json(*report.conjugator) : json(nullptr);
    out["radicand"] = report.radicand ? json(report.radicand->str()) : json(nullptr);
    out["verified"] = report.verified;
    return out;
}

std::vector<Matrix> matrices_from_json(const json& j) {
    if (!j.is_array()) raise(ErrorCode::ParseError, "expected a JSON array of matrices");
    std::vector<Matrix> out;
    for (const auto& m : j) out.push_back(matrix_from_json(m));
    return out;
}

}  // namespace witgen
