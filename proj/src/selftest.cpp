#include "witgen/selftest.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "witgen/witness.hpp"

namespace witgen {

bool SelftestReport::all_pass() const {
    for (const auto& c : criteria)
        if (!c.pass) return false;
    return true;
}

std::string SelftestReport::text() const {
    std::ostringstream os;
    for (const auto& c : criteria)
        os << (c.pass ? "PASS" : "FAIL") << ' ' << c.name << ": " << c.detail << '\n';
    return os.str();
}

namespace {

struct Gen {
    std::mt19937_64 rng;

    explicit Gen(uint64_t seed) : rng(seed) {}

    long long uniform(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(rng);
    }

    FieldElement scalar(long long lo, long long hi) { return FieldElement(uniform(lo, hi)); }

    FieldElement nonzero_scalar(long long bound) {
        for (;;) {
            FieldElement v = scalar(-bound, bound);
            if (!v.is_zero()) return v;
        }
    }

    Matrix matrix(size_t n, long long bound) {
        Matrix m(n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m.at(i, j) = scalar(-bound, bound);
        return m;
    }

    Matrix trace_zero_matrix(size_t n, long long bound) {
        Matrix m = matrix(n, bound);
        FieldElement s(0);
        for (size_t i = 0; i + 1 < n; ++i) s += m.at(i, i);
        m.at(n - 1, n - 1) = -s;
        return m;
    }

    Matrix zero_diag_matrix(size_t n, long long bound) {
        Matrix m = matrix(n, bound);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement(0);
        return m;
    }

    /// Unit lower times unit upper triangular: integer entries, determinant 1.
    Matrix invertible(size_t n, long long bound) {
        Matrix l = Matrix::identity(n), u = Matrix::identity(n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (i > j) l.at(i, j) = scalar(-bound, bound);
                if (i < j) u.at(i, j) = scalar(-bound, bound);
            }
        return l * u;
    }

    BidiagonalTarget bidiag(size_t n, BidiagonalTarget::Orientation o, long long bound) {
        BidiagonalTarget t;
        t.orientation = o;
        FieldElement s(0);
        for (size_t i = 0; i + 1 < n; ++i) {
            t.diag.push_back(scalar(-bound, bound));
            s += t.diag.back();
        }
        t.diag.push_back(-s);
        for (size_t i = 0; i + 1 < n; ++i) t.off.push_back(scalar(-bound, bound));
        return t;
    }

    MultilinearPoly coeff_map(int arity, long long bound) {
        std::map<std::string, FieldElement> c;
        for (const auto& w : MultilinearPoly::all_words(arity)) {
            FieldElement v = scalar(-bound, bound);
            if (!v.is_zero()) c.emplace(w, v);
        }
        return MultilinearPoly(arity, std::move(c));
    }

    MultilinearPoly proper_poly(long long bound) {
        auto gens = proper_generators(4);
        MultilinearPoly acc(4, {});
        for (const auto& g : gens) acc = acc + g.scaled(scalar(-bound, bound));
        return acc;
    }
};

bool plan_uses_product_branch(const SynthesisPlan& plan) {
    if (plan.tag == SynthesisPlan::Tag::ProductCase ||
        plan.tag == SynthesisPlan::Tag::SpecialCentralLike)
        return true;
    if (plan.inner) return plan_uses_product_branch(*plan.inner);
    return false;
}

Matrix ad_power(const Matrix& s, const Matrix& x, size_t k) {
    Matrix acc = x;
    for (size_t i = 0; i < k; ++i) acc = commutator(s, acc);
    return acc;
}

std::string counts(int pass, int total) {
    return std::to_string(pass) + "/" + std::to_string(total);
}

// 1. master round-trip over mixed polynomial sources and targets
CriterionResult master_round_trip(const SelftestConfig& cfg) {
    Gen gen(cfg.seed * 1001);
    auto start = std::chrono::steady_clock::now();
    int total = cfg.trials * 5 / 2;
    int pass = 0, run = 0;
    std::vector<MultilinearPoly> named;
    named.push_back(parse_poly(
        "[x1,x2]*[x3,x4]+[x3,x4]*[x1,x2]+[x2,x3]*[x1,x4]+[x1,x4]*[x2,x3]"
        "-[x1,x3]*[x2,x4]-[x2,x4]*[x1,x3]"));
    for (const auto& g : proper_generators(4)) named.push_back(g);

    for (int i = 0; i < total; ++i) {
        size_t n = cfg.nmin + static_cast<size_t>(gen.uniform(0, static_cast<long long>(cfg.nmax - cfg.nmin)));
        MultilinearPoly f;
        switch (i % 3) {
            case 0: f = gen.coeff_map(4, 5); break;
            case 1: f = gen.proper_poly(5); break;
            default: f = named[static_cast<size_t>(i / 3) % named.size()]; break;
        }
        if (f.is_zero()) {
            ++pass;  // nothing to synthesize; regenerating would break determinism
            ++run;
            continue;
        }
        SynthesisPlan plan = classify(f);
        Matrix d(n);
        if (plan.tag == SynthesisPlan::Tag::Surjective) {
            d = gen.matrix(n, 9);
        } else if (plan_uses_product_branch(plan)) {
            // upper bidiagonal is triangular, so the spectrum is rational
            Matrix t = gen.bidiag(n, BidiagonalTarget::Orientation::Upper, 9).to_matrix();
            Matrix p = gen.invertible(n, 2);
            d = p * t * p.inverse();
        } else {
            d = gen.trace_zero_matrix(n, 9);
        }
        WitnessReport rep = synthesize(f, d, cfg.seed + static_cast<uint64_t>(i));
        if (rep.verified && verify(f, rep.witnesses, d)) ++pass;
        ++run;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    bool ok = pass == run && ms < 120000;
    return {"criterion 1 master round-trip", ok,
            counts(pass, run) + " verified, " + std::to_string(ms) + " ms"};
}

// 2. bracket solver on random upper-bidiagonal trace-zero targets
CriterionResult bracket_suite(const SelftestConfig& cfg) {
    Gen gen(cfg.seed * 1002);
    int pass = 0, total = cfg.trials;
    for (int i = 0; i < total; ++i) {
        size_t n = 2 + static_cast<size_t>(gen.uniform(0, 6));  // n <= 8
        BidiagonalTarget t = gen.bidiag(n, BidiagonalTarget::Orientation::Upper, 9);
        Matrix b = bidiag_bracket_solve(t);
        if (commutator(shift_matrix(n), b) == t.to_matrix()) ++pass;
    }
    return {"criterion 2 bracket solver", pass == total, counts(pass, total)};
}

// 3. generalized product construction plus the printed-system regression
CriterionResult product_suite(const SelftestConfig& cfg) {
    Gen gen(cfg.seed * 1003);
    int pass = 0, total = 0;
    int per_case = cfg.trials / 4;
    for (size_t n = 3; n <= 5; ++n) {
        std::vector<FieldElement> lambdas = {
            FieldElement(0), FieldElement(1), FieldElement(-2),
            FieldElement(Rational(1, static_cast<long long>(n - 1))),
            FieldElement(Rational(5, 3))};
        for (const auto& lambda : lambdas) {
            for (int i = 0; i < per_case; ++i) {
                BidiagonalTarget t = gen.bidiag(n, BidiagonalTarget::Orientation::Upper, 9);
                TripleWitness w = weighted_product_construct(lambda, t, cfg.seed + static_cast<uint64_t>(i));
                Matrix ab = commutator(w.a, w.b), ac = commutator(w.a, w.c);
                Matrix val = ab * ac + (ac * ab).scaled(lambda);
                if (val == t.to_matrix()) ++pass;
                ++total;
            }
        }
    }

    // The printed fixed-diagonal systems are consistent exactly when the
    // last diagonal entry of the target vanishes.
    int reg_pass = 0, reg_total = 0;
    for (int i = 0; i < 20; ++i) {
        for (bool zero_last : {false, true}) {
            size_t n = 3 + static_cast<size_t>(gen.uniform(0, 2));
            FieldElement lambda = FieldElement(Rational(gen.uniform(-3, 3), 2));
            if (lambda == FieldElement(-1) ||
                lambda == FieldElement(Rational(1, static_cast<long long>(n - 1))))
                lambda = FieldElement(0);
            Vector d(n);
            FieldElement s(0);
            if (zero_last) {
                for (size_t k = 1; k + 1 < n; ++k) {
                    d[k] = gen.scalar(-9, 9);
                    s += d[k];
                }
                d[0] = -s;
                d[n - 1] = FieldElement(0);
            } else {
                for (size_t k = 0; k + 1 < n; ++k) {
                    d[k] = gen.scalar(-9, 9);
                    s += d[k];
                }
                d[n - 1] = -s;
                if (d[n - 1].is_zero()) {
                    d[0] += FieldElement(1);
                    d[n - 1] -= FieldElement(1);
                }
            }
            // unknowns b_1..b_{n-1}; b_n = -(b_1+...+b_{n-1})
            std::vector<Vector> rows;
            Vector rhs;
            FieldElement one_plus = FieldElement(1) + lambda;
            for (size_t k = 0; k + 1 < n; ++k) {
                Vector row(n - 1, FieldElement(0));
                row[k] = one_plus;
                rows.push_back(row);
                rhs.push_back(d[k]);
            }
            Vector last(n - 1, FieldElement(0));
            for (size_t k = 0; k + 1 < n; ++k)
                last[k] = FieldElement(static_cast<long long>(n - 1)) * one_plus;
            rows.push_back(last);
            rhs.push_back(d[n - 1]);
            bool consistent = solve_linear(rows, rhs).has_value();
            if (consistent == zero_last) ++reg_pass;
            ++reg_total;
        }
    }
    bool ok = pass == total && reg_pass == reg_total;
    return {"criterion 3 generalized product construction", ok,
            counts(pass, total) + " exact, regression " + counts(reg_pass, reg_total)};
}

// 4. commutator-difference / triple-bracket / special-polynomial identities
CriterionResult chain_suite(const SelftestConfig& cfg) {
    Gen gen(cfg.seed * 1004);
    int per = cfg.trials / 2;
    int pass = 0, total = 0;
    for (int i = 0; i < per; ++i) {
        size_t n = 3 + static_cast<size_t>(gen.uniform(0, 2));
        BidiagonalTarget t = gen.bidiag(n, BidiagonalTarget::Orientation::Lower, 9);
        TripleWitness w = product_difference_construct(t);
        Matrix ab = commutator(w.a, w.b), ac = commutator(w.a, w.c);
        if (ab * ac - ac * ab == t.to_matrix()) ++pass;
        ++total;
    }
    for (int i = 0; i < per; ++i) {
        size_t n = 3 + static_cast<size_t>(gen.uniform(0, 2));
        BidiagonalTarget t = gen.bidiag(n, BidiagonalTarget::Orientation::Upper, 9);
        TripleWitness w = triple_bracket_construct(t);
        Matrix inner = commutator(commutator(w.a, w.b), commutator(w.a, w.c));
        if (commutator(w.a, inner) == t.to_matrix()) ++pass;
        ++total;
    }
    MultilinearPoly special = parse_poly(
        "[x1,x2]*[x3,x4]+[x3,x4]*[x1,x2]+[x2,x3]*[x1,x4]+[x1,x4]*[x2,x3]"
        "-[x1,x3]*[x2,x4]-[x2,x4]*[x1,x3]");
    for (int i = 0; i < per; ++i) {
        size_t n = 3 + static_cast<size_t>(gen.uniform(0, 1));
        Matrix a = gen.matrix(n, 5), b = gen.matrix(n, 5), c = gen.matrix(n, 5);
        Matrix lhs = special.evaluate({a, a * a, b, c});
        Matrix rhs = commutator(a, commutator(commutator(a, b), commutator(a, c)));
        if (lhs == rhs) ++pass;
        ++total;
    }
    for (int i = 0; i < per / 4; ++i) {
        size_t n = 3 + static_cast<size_t>(gen.uniform(0, 2));
        BidiagonalTarget t = gen.bidiag(n, BidiagonalTarget::Orientation::Upper, 9);
        FieldElement c = gen.nonzero_scalar(5);
        auto ws = special_poly_witnesses(t, c);
        if (special.scaled(c).evaluate(ws) == t.to_matrix()) ++pass;
        ++total;
    }
    return {"criterion 4 bracket chain identities", pass == total, counts(pass, total)};
}

// 5. proper-subspace dimensions, reconstruction, all-pairs-zero equivalence
CriterionResult decomposition_suite(const SelftestConfig& cfg) {
    Gen gen(cfg.seed * 1005);
    bool ranks_ok = true;
    const int expected_rank[] = {0, 0, 1, 2, 9};  // derangement numbers
    for (int m = 2; m <= 4; ++m) {
        std::vector<Vector> rows;
        for (const auto& g : proper_generators(m)) rows.push_back(g.dense_coeffs());
        if (rank_of_rows(rows) != static_cast<size_t>(expected_rank[m])) ranks_ok = false;
    }
    int pass = 0, total = cfg.trials;
    for (int i = 0; i < total; ++i) {
        MultilinearPoly f = gen.proper_poly(5);
        if (f.is_zero()) {
            ++pass;
            continue;
        }
        ProperDecomposition d = proper_decompose(f);
        if (reconstruct(d) == f) ++pass;
    }
    // the six pattern pairs vanish simultaneously exactly on the line
    // c1234 = c2314 = c3412 = c1423 = -c1324 = -c2413
    bool equiv_ok = true;
    {
        // rows: 12 linear forms in (c1234, c1324, c1423, c2314, c2413, c3412)
        auto forms_of = [](const ProperDecomposition& d) {
            auto pairs = pattern_pairs(d);
            Vector v;
            for (const auto& p : pairs) {
                v.push_back(p.alpha);
                v.push_back(p.beta);
            }
            return v;
        };
        std::vector<Vector> rows(12, Vector(6, FieldElement(0)));
        for (int j = 0; j < 6; ++j) {
            ProperDecomposition d{};
            FieldElement* slots[6] = {&d.c1234, &d.c1324, &d.c1423, &d.c2314, &d.c2413, &d.c3412};
            *slots[j] = FieldElement(1);
            Vector col = forms_of(d);
            for (int r = 0; r < 12; ++r) rows[static_cast<size_t>(r)][static_cast<size_t>(j)] = col[static_cast<size_t>(r)];
        }
        if (rank_of_rows(rows) != 5) equiv_ok = false;
        ProperDecomposition case1{};
        case1.c1234 = case1.c2314 = case1.c3412 = case1.c1423 = FieldElement(1);
        case1.c1324 = case1.c2413 = FieldElement(-1);
        for (const auto& p : pattern_pairs(case1))
            if (!p.alpha.is_zero() || !p.beta.is_zero()) equiv_ok = false;
    }
    bool ok = ranks_ok && pass == total && equiv_ok;
    return {"criterion 5 decomposition", ok,
            counts(pass, total) + " reconstructed, ranks " + (ranks_ok ? "ok" : "bad") +
                ", pattern kernel " + (equiv_ok ? "ok" : "bad")};
}

// 6. Lie-branch constructions and frozen sign constants
CriterionResult lie_suite(const SelftestConfig& cfg) {
    Gen gen(cfg.seed * 1006);
    int per = cfg.trials / 2;
    int pass = 0, total = 0;
    auto gens4 = proper_generators(4);
    auto gens3 = proper_generators(3);
    for (int which = 0; which < 3; ++which) {
        for (int i = 0; i < per; ++i) {
            size_t n = cfg.nmin + static_cast<size_t>(gen.uniform(0, static_cast<long long>(cfg.nmax - cfg.nmin)));
            Matrix d = gen.zero_diag_matrix(n, 9);
            FieldElement z = gen.nonzero_scalar(5);
            MultilinearPoly f = gens4[static_cast<size_t>(which)].scaled(z);
            auto ws = lie4_witnesses(which + 1, z, d);
            if (f.evaluate(ws) == d) ++pass;
            ++total;
        }
    }
    for (int which = 0; which < 2; ++which) {
        for (int i = 0; i < per; ++i) {
            size_t n = cfg.nmin + static_cast<size_t>(gen.uniform(0, static_cast<long long>(cfg.nmax - cfg.nmin)));
            Matrix d = gen.zero_diag_matrix(n, 9);
            FieldElement w = gen.nonzero_scalar(5);
            MultilinearPoly f = gens3[static_cast<size_t>(which)].scaled(w);
            auto ws = lie3_witnesses(which == 0 ? w : FieldElement(0),
                                     which == 0 ? FieldElement(0) : w, d);
            if (f.evaluate(ws) == d) ++pass;
            ++total;
        }
    }
    // frozen signs: g(S,...,X,...) = -z ad_S^3(X) and +w ad_S^2(X)
    bool signs_ok = true;
    for (int i = 0; i < 10; ++i) {
        size_t n = 3 + static_cast<size_t>(gen.uniform(0, 2));
        Matrix s(n);
        for (size_t k = 0; k < n; ++k) s.at(k, k) = FieldElement(static_cast<long long>(k + 1));
        Matrix x = gen.matrix(n, 9);
        if (gens4[0].evaluate({s, x, s, s}) != -ad_power(s, x, 3)) signs_ok = false;
        if (gens4[1].evaluate({s, s, x, s}) != -ad_power(s, x, 3)) signs_ok = false;
        if (gens4[2].evaluate({s, s, s, x}) != -ad_power(s, x, 3)) signs_ok = false;
        if (gens3[0].evaluate({s, x, s}) != ad_power(s, x, 2)) signs_ok = false;
        if (gens3[1].evaluate({s, s, x}) != ad_power(s, x, 2)) signs_ok = false;
    }
    return {"criterion 6 Lie branches", pass == total && signs_ok,
            counts(pass, total) + ", signs " + (signs_ok ? "ok" : "bad")};
}

// 7. canonicalization
CriterionResult canon_suite(const SelftestConfig& cfg) {
    Gen gen(cfg.seed * 1007);
    int pass = 0, total = 0;
    for (int i = 0; i < cfg.trials; ++i) {
        size_t n = 2 + static_cast<size_t>(gen.uniform(0, 4));  // n <= 6
        Matrix d = gen.trace_zero_matrix(n, 9);
        Canonicalization c = zero_diagonalize(d);
        bool ok = conjugate(c.p, d) == c.t;
        for (size_t k = 0; k < n; ++k)
            if (!c.t.at(k, k).is_zero()) ok = false;
        if (ok) ++pass;
        ++total;
    }
    int jpass = 0, jtotal = 0;
    for (int i = 0; i < cfg.trials / 4; ++i) {
        // assemble from a known rational or quadratic spectrum
        size_t n = 3 + static_cast<size_t>(gen.uniform(0, 2));
        Matrix j(n);
        size_t pos = 0;
        bool used_quad = false;
        while (pos < n) {
            if (!used_quad && n - pos >= 2 && gen.uniform(0, 2) == 0) {
                // companion of x^2 - m, m square-free
                long long ms[] = {2, 3, 5, -1};
                long long m = ms[gen.uniform(0, 3)];
                j.at(pos, pos + 1) = FieldElement(1);
                j.at(pos + 1, pos) = FieldElement(m);
                used_quad = true;
                pos += 2;
            } else {
                size_t block = 1 + static_cast<size_t>(gen.uniform(0, static_cast<long long>(std::min<size_t>(2, n - pos) - 1)));
                FieldElement lambda = gen.scalar(-3, 3);
                for (size_t k = 0; k < block; ++k) {
                    j.at(pos + k, pos + k) = lambda;
                    if (k + 1 < block) j.at(pos + k, pos + k + 1) = FieldElement(1);
                }
                pos += block;
            }
        }
        Matrix q = gen.invertible(n, 2);
        Matrix d = q * j * q.inverse();
        JordanResult jr = jordanize(d);
        bool ok = false;
        if (std::holds_alternative<Canonicalization>(jr)) {
            const auto& c = std::get<Canonicalization>(jr);
            ok = conjugate(c.p, d) == c.t && c.t.char_poly() == d.char_poly();
        }
        if (ok) ++jpass;
        ++jtotal;
    }
    bool ok = pass == total && jpass == jtotal;
    return {"criterion 7 canonicalization", ok,
            counts(pass, total) + " zero-diagonal, " + counts(jpass, jtotal) + " Jordan"};
}

// 8. negative controls
CriterionResult negative_controls(const SelftestConfig& cfg) {
    Gen gen(cfg.seed * 1008);
    bool n2_rejected = false;
    MultilinearPoly central = parse_poly("[x1,x2]*[x3,x4]+[x3,x4]*[x1,x2]");
    try {
        synthesize(central, Matrix(2).scaled(FieldElement(0)), cfg.seed);
    } catch (const Error& e) {
        n2_rejected = e.code() == ErrorCode::DimTooSmall;
    }
    int central_pass = 0, central_total = cfg.trials;
    for (int i = 0; i < central_total; ++i) {
        std::vector<Matrix> args;
        for (int k = 0; k < 4; ++k) args.push_back(gen.matrix(2, 9));
        Matrix v = central.evaluate(args);
        if (v.is_diagonal() && v.at(0, 0) == v.at(1, 1)) ++central_pass;
    }
    bool zero_rejected = false;
    try {
        synthesize(MultilinearPoly(2, {}), Matrix(3), cfg.seed);
    } catch (const Error& e) {
        zero_rejected = e.code() == ErrorCode::ZeroPolynomial;
    }
    bool ok = n2_rejected && central_pass == central_total && zero_rejected;
    return {"criterion 8 negative controls", ok,
            std::string("n=2 ") + (n2_rejected ? "rejected" : "ACCEPTED") + ", central " +
                counts(central_pass, central_total) + ", zero poly " +
                (zero_rejected ? "rejected" : "ACCEPTED")};
}

// 9. plain commutator baseline, rational witnesses only
CriterionResult commutator_baseline(const SelftestConfig& cfg) {
    Gen gen(cfg.seed * 1009);
    int pass = 0, total = cfg.trials;
    for (int i = 0; i < total; ++i) {
        size_t n = 2 + static_cast<size_t>(gen.uniform(0, 4));  // n in 2..6
        Matrix d = gen.trace_zero_matrix(n, 9);
        auto [x, y] = two_var_witnesses(FieldElement(1), d);
        bool ok = commutator(x, y) == d;
        for (size_t a = 0; a < n && ok; ++a)
            for (size_t b = 0; b < n && ok; ++b)
                if (!x.at(a, b).is_rational() || !y.at(a, b).is_rational()) ok = false;
        if (ok) ++pass;
    }
    return {"criterion 9 commutator baseline", pass == total, counts(pass, total)};
}

SelftestReport run_criteria(const SelftestConfig& cfg) {
    using Runner = CriterionResult (*)(const SelftestConfig&);
    const Runner runners[] = {master_round_trip, bracket_suite,      product_suite,
                              chain_suite, decomposition_suite, lie_suite,
                              canon_suite,       negative_controls, commutator_baseline};
    SelftestReport rep;
    int k = 0;
    for (Runner r : runners) {
        ++k;
        try {
            rep.criteria.push_back(r(cfg));
        } catch (const std::exception& e) {
            rep.criteria.push_back({"criterion " + std::to_string(k), false,
                                    std::string("exception: ") + e.what()});
        }
    }
    return rep;
}

}  // namespace

SelftestReport run_selftest(const SelftestConfig& cfg) {
    SelftestReport rep = run_criteria(cfg);
    if (cfg.check_determinism) {
        // timing is not part of the compared payload
        auto strip_time = [](SelftestReport r) {
            for (auto& c : r.criteria) {
                size_t at = c.detail.find(" ms");
                if (at != std::string::npos) {
                    size_t comma = c.detail.rfind(", ", at);
                    if (comma != std::string::npos) c.detail.erase(comma);
                }
            }
            return r;
        };
        SelftestReport again = run_criteria(cfg);
        bool same = strip_time(rep).text() == strip_time(again).text();
        rep.criteria.push_back({"criterion 10 determinism", same,
                                same ? "byte-identical rerun" : "reports differ"});
    }
    return rep;
}

}  // namespace witgen
