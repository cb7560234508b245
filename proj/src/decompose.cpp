#include "witgen/decompose.hpp"

namespace witgen {

const std::array<std::string, 6>& pattern_layouts() {
    static const std::array<std::string, 6> layouts = {"AABC", "ABAC", "ABCA",
                                                       "BAAC", "BACA", "BCAA"};
    return layouts;
}

const char* plan_tag_name(SynthesisPlan::Tag tag) {
    switch (tag) {
        case SynthesisPlan::Tag::Zero: return "Zero";
        case SynthesisPlan::Tag::Surjective: return "Surjective";
        case SynthesisPlan::Tag::PartialReduction: return "PartialReduction";
        case SynthesisPlan::Tag::Lie4: return "Lie4";
        case SynthesisPlan::Tag::Lie3: return "Lie3";
        case SynthesisPlan::Tag::Commutator2: return "Commutator2";
        case SynthesisPlan::Tag::ProductCase: return "ProductCase";
        case SynthesisPlan::Tag::SpecialCentralLike: return "SpecialCentralLike";
    }
    return "Unknown";
}

std::vector<std::string> SynthesisPlan::tag_trace() const {
    std::vector<std::string> out;
    const SynthesisPlan* p = this;
    while (p) {
        std::string t = plan_tag_name(p->tag);
        if (p->tag == Tag::PartialReduction)
            t += "(slot " + std::to_string(p->slot) + ")";
        else if (p->tag == Tag::Lie4)
            t += "(z" + std::to_string(p->slot) + ")";
        else if (p->tag == Tag::ProductCase)
            t += "(" + pattern_layouts()[static_cast<size_t>(p->pattern)] + ")";
        out.push_back(std::move(t));
        p = p->inner.get();
    }
    return out;
}

std::vector<MultilinearPoly> proper_generators(int arity) {
    auto make = [](const char* s) { return parse_poly(s); };
    switch (arity) {
        case 4:
            return {
                make("[[[x2,x1],x3],x4]"), make("[[[x3,x1],x2],x4]"), make("[[[x4,x1],x2],x3]"),
                make("[x1,x2]*[x3,x4]"),   make("[x1,x3]*[x2,x4]"),   make("[x1,x4]*[x2,x3]"),
                make("[x2,x3]*[x1,x4]"),   make("[x2,x4]*[x1,x3]"),   make("[x3,x4]*[x1,x2]"),
            };
        case 3:
            return {make("[[x2,x1],x3]"), make("[[x3,x1],x2]")};
        case 2:
            return {make("[x1,x2]")};
        default:
            raise(ErrorCode::ArityMismatch, "no proper generators for arity " + std::to_string(arity));
    }
}

bool is_proper(const MultilinearPoly& f) {
    if (!f.coeff_sum().is_zero()) return false;
    for (int i = 1; i <= f.arity(); ++i)
        if (!f.substitute_identity(i).is_zero()) return false;
    return true;
}

namespace {

// Coordinates of f in the span of the arity-m generators, exact.
std::vector<FieldElement> generator_coords(const MultilinearPoly& f) {
    auto gens = proper_generators(f.arity());
    std::vector<Vector> columns;
    for (const auto& g : gens) columns.push_back(g.dense_coeffs());
    size_t nwords = columns[0].size();
    std::vector<Vector> rows(nwords, Vector(columns.size()));
    for (size_t r = 0; r < nwords; ++r)
        for (size_t c = 0; c < columns.size(); ++c) rows[r][c] = columns[c][r];
    auto sol = solve_linear(rows, f.dense_coeffs());
    if (!sol)
        raise(ErrorCode::InternalError,
              "proper polynomial not in the generator span (internal inconsistency)");
    return *sol;
}

}  // namespace

ProperDecomposition proper_decompose(const MultilinearPoly& f) {
    if (f.arity() != 4) raise(ErrorCode::ArityMismatch, "proper_decompose expects arity 4");
    if (!is_proper(f)) raise(ErrorCode::NotProper, "polynomial is not proper");
    auto x = generator_coords(f);
    return ProperDecomposition{x[0], x[1], x[2], x[3], x[4], x[5], x[6], x[7], x[8]};
}

MultilinearPoly reconstruct(const ProperDecomposition& d) {
    auto gens = proper_generators(4);
    auto coords = d.as_array();
    MultilinearPoly acc(4, {});
    for (size_t i = 0; i < gens.size(); ++i) acc = acc + gens[i].scaled(coords[i]);
    return acc;
}

std::array<PatternPair, 6> pattern_pairs(const ProperDecomposition& d) {
    return {{
        {0, d.c1324 + d.c2314, d.c1423 + d.c2413},
        {1, d.c1234 - d.c2314, d.c3412 - d.c1423},
        {2, -d.c1234 - d.c2413, -d.c1324 - d.c3412},
        {3, -d.c1234 - d.c1324, -d.c2413 - d.c3412},
        {4, d.c1234 - d.c1423, d.c3412 - d.c2314},
        {5, d.c1324 + d.c1423, d.c2314 + d.c2413},
    }};
}

SynthesisPlan classify(const MultilinearPoly& f) {
    SynthesisPlan plan;
    if (f.is_zero()) {
        plan.tag = SynthesisPlan::Tag::Zero;
        return plan;
    }
    FieldElement s = f.coeff_sum();
    if (!s.is_zero()) {
        plan.tag = SynthesisPlan::Tag::Surjective;
        plan.scalar = s;
        return plan;
    }
    for (int i = 1; i <= f.arity(); ++i) {
        MultilinearPoly g = f.substitute_identity(i);
        if (!g.is_zero()) {
            plan.tag = SynthesisPlan::Tag::PartialReduction;
            plan.slot = i;
            plan.reduced = g;
            plan.inner = std::make_shared<SynthesisPlan>(classify(g));
            return plan;
        }
    }
    // f is proper from here on.
    if (f.arity() == 2) {
        plan.tag = SynthesisPlan::Tag::Commutator2;
        plan.scalar = f.coeff("12");
        return plan;
    }
    if (f.arity() == 3) {
        auto x = generator_coords(f);
        plan.tag = SynthesisPlan::Tag::Lie3;
        plan.w1 = x[0];
        plan.w2 = x[1];
        return plan;
    }
    if (f.arity() != 4)
        raise(ErrorCode::InternalError, "proper polynomial of unexpected arity");
    ProperDecomposition d = proper_decompose(f);
    auto zs = std::array{d.z1, d.z2, d.z3};
    for (int i = 0; i < 3; ++i) {
        if (!zs[static_cast<size_t>(i)].is_zero()) {
            plan.tag = SynthesisPlan::Tag::Lie4;
            plan.slot = i + 1;
            plan.scalar = zs[static_cast<size_t>(i)];
            return plan;
        }
    }
    auto pairs = pattern_pairs(d);
    bool any_nonzero = false;
    for (const auto& p : pairs)
        if (!p.alpha.is_zero() || !p.beta.is_zero()) any_nonzero = true;
    if (!any_nonzero) {
        plan.tag = SynthesisPlan::Tag::SpecialCentralLike;
        plan.scalar = d.c1234;
        return plan;
    }
    plan.tag = SynthesisPlan::Tag::ProductCase;
    // Preference: beta = -alpha != 0 (lambda = -1, fully rational path),
    // else alpha != 0 (lambda = beta/alpha), else beta != 0.
    for (const auto& p : pairs) {
        if (!p.alpha.is_zero() && p.beta == -p.alpha) {
            plan.pattern = p.pattern;
            plan.alpha = p.alpha;
            plan.beta = p.beta;
            plan.lambda = FieldElement(-1);
            return plan;
        }
    }
    for (const auto& p : pairs) {
        if (!p.alpha.is_zero()) {
            plan.pattern = p.pattern;
            plan.alpha = p.alpha;
            plan.beta = p.beta;
            plan.lambda = p.beta / p.alpha;
            return plan;
        }
    }
    for (const auto& p : pairs) {
        if (!p.beta.is_zero()) {
            plan.pattern = p.pattern;
            plan.alpha = p.alpha;
            plan.beta = p.beta;
            plan.lambda = FieldElement(0);  // roles of B and C swap downstream
            return plan;
        }
    }
    raise(ErrorCode::InternalError, "unreachable pattern selection");
}

}  // namespace witgen
