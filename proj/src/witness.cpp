#include "witgen/witness.hpp"

#include <random>

namespace witgen {

Matrix shift_matrix(size_t n) {
    if (n < 2) raise(ErrorCode::DimTooSmall, "shift matrix needs n >= 2");
    Matrix a(n);
    for (size_t i = 0; i + 1 < n; ++i) a.at(i, i + 1) = FieldElement(1);
    return a;
}

namespace {

void require_upper(const BidiagonalTarget& t) {
    if (t.orientation != BidiagonalTarget::Orientation::Upper)
        raise(ErrorCode::InternalError, "expected an upper-bidiagonal target");
}

void require_trace_zero(const BidiagonalTarget& t) {
    if (!t.diag_sum().is_zero())
        raise(ErrorCode::NonzeroTrace, "bidiagonal target has nonzero trace");
}

BidiagonalTarget scale_target(const BidiagonalTarget& t, const FieldElement& c) {
    BidiagonalTarget out = t;
    for (auto& x : out.diag) x *= c;
    for (auto& x : out.off) x *= c;
    return out;
}

}  // namespace

Matrix bidiag_bracket_solve(const BidiagonalTarget& t) {
    require_upper(t);
    require_trace_zero(t);
    size_t n = t.dim();
    Matrix b(n);
    FieldElement acc(0);
    for (size_t i = 0; i + 1 < n; ++i) {
        acc += t.diag[i];
        b.at(i + 1, i) = acc;  // b_{i+1,i} = a_{1,1} + ... + a_{i,i}
    }
    acc = FieldElement(0);
    for (size_t i = 1; i < n; ++i) {
        acc += t.off[i - 1];
        b.at(i, i) = acc;  // b_{i,i} = a_{1,2} + ... + a_{i-1,i}, b_{1,1} = 0
    }
    return b;
}

Matrix outer_bracket_solve(const BidiagonalTarget& t) {
    Matrix b = bidiag_bracket_solve(t);
    size_t n = t.dim();
    // adding a scalar matrix leaves the bracket unchanged; zero the trace
    FieldElement shift = b.trace() / FieldElement(static_cast<long long>(n));
    for (size_t i = 0; i < n; ++i) b.at(i, i) -= shift;
    return b;
}

std::pair<Matrix, Matrix> inner_product_solve(const BidiagonalTarget& t) {
    if (t.orientation != BidiagonalTarget::Orientation::Lower)
        raise(ErrorCode::InternalError, "expected a lower-bidiagonal target");
    require_trace_zero(t);
    size_t n = t.dim();
    if (n < 3) raise(ErrorCode::DimTooSmall, "inner product construction needs n >= 3");
    FieldElement nm2(static_cast<long long>(n - 2));

    // superdiagonal of [A,B]: forward recursion with the last entry pinned
    Vector c_off(n - 1, FieldElement(0));
    c_off[0] = t.diag[0];
    for (size_t i = 2; i + 1 < n; ++i) c_off[i - 1] = c_off[i - 2] + t.diag[i - 1];
    c_off[n - 2] = t.diag[n - 1] / nm2;
    // consistency is forced by the zero trace of the target; assert it
    if (-(nm2 * c_off[n - 2]) - c_off[n - 3] != t.diag[n - 2])
        raise(ErrorCode::InternalError, "inner superdiagonal system inconsistent");

    // diagonal of [A,B]: telescoped subdiagonal equations, free constant
    // fixed so the diagonal sums to zero
    Vector c_diag(n, FieldElement(0));
    for (size_t i = 1; i + 1 < n; ++i) c_diag[i] = c_diag[i - 1] + t.off[i - 1];
    c_diag[n - 1] = c_diag[n - 2] - t.off[n - 2] / nm2;
    FieldElement mean(0);
    for (const auto& x : c_diag) mean += x;
    mean /= FieldElement(static_cast<long long>(n));
    for (auto& x : c_diag) x -= mean;

    BidiagonalTarget ab{BidiagonalTarget::Orientation::Upper, c_diag, c_off};
    Matrix b = bidiag_bracket_solve(ab);
    Matrix c(n);
    for (size_t i = 3; i <= n; ++i)
        c.at(i - 1, i - 3) = FieldElement(static_cast<long long>(i - 2));
    return {b, c};
}

TripleWitness product_difference_construct(const BidiagonalTarget& t) {
    auto [b, c] = inner_product_solve(t);
    return {shift_matrix(t.dim()), b, c};
}

TripleWitness triple_bracket_construct(const BidiagonalTarget& t) {
    require_upper(t);
    require_trace_zero(t);
    size_t n = t.dim();
    if (n < 3) raise(ErrorCode::DimTooSmall, "triple bracket construction needs n >= 3");
    Matrix dprime = outer_bracket_solve(t);
    BidiagonalTarget lower;
    lower.orientation = BidiagonalTarget::Orientation::Lower;
    for (size_t i = 0; i < n; ++i) lower.diag.push_back(dprime.at(i, i));
    for (size_t i = 0; i + 1 < n; ++i) lower.off.push_back(dprime.at(i + 1, i));
    auto [b, c] = inner_product_solve(lower);
    return {shift_matrix(n), b, c};
}

std::vector<Matrix> special_poly_witnesses(const BidiagonalTarget& t, const FieldElement& c) {
    if (c.is_zero()) raise(ErrorCode::InternalError, "zero scale in special construction");
    TripleWitness w = triple_bracket_construct(scale_target(t, c.inverse()));
    return {w.a, w.a * w.a, w.b, w.c};
}

// ---------------------------------------------------------------- select_u

namespace {

using PairSet = std::vector<std::pair<size_t, size_t>>;

PairSet adjacent_pairs(size_t n) {
    PairSet p;
    for (size_t i = 0; i + 1 < n; ++i) p.emplace_back(i, i + 1);
    return p;
}

bool u_valid(const Vector& u, const Vector& d, const FieldElement& lambda,
             const PairSet& pairs) {
    FieldElement sum(0), dsum(0);
    for (const auto& x : u) {
        if (x.is_zero()) return false;
        sum += x;
    }
    if (!sum.is_zero()) return false;
    for (const auto& [i, j] : pairs)
        if ((u[i] + lambda * u[j]).is_zero()) return false;
    for (size_t i = 0; i < u.size(); ++i) dsum += d[i] / u[i];
    return dsum.is_zero();
}

BigInt context_radicand(const Vector& d, const FieldElement& lambda) {
    BigInt m = lambda.radicand();
    for (const auto& x : d) m = merge_radicands(m, x.radicand());
    return m;
}

USelection select_u_for_pairs(const Vector& d, const FieldElement& lambda, uint64_t seed,
                              const PairSet& pairs) {
    size_t n = d.size();
    if (n < 3) raise(ErrorCode::DimTooSmall, "u-selection needs n >= 3");
    {
        FieldElement s(0);
        for (const auto& x : d) s += x;
        if (!s.is_zero()) raise(ErrorCode::NonzeroTrace, "u-selection needs a trace-zero diagonal");
    }
    BigInt m0 = context_radicand(d, lambda);

    // fast path: the fixed diagonal (1, ..., 1, -(n-1)); consistent exactly
    // when d_n = 0
    {
        Vector u(n, FieldElement(1));
        u[n - 1] = FieldElement(-static_cast<long long>(n - 1));
        if (u_valid(u, d, lambda, pairs)) return {u};
    }

    bool d_zero = true;
    for (const auto& x : d)
        if (!x.is_zero()) d_zero = false;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> mag(1, 8);
    std::uniform_int_distribution<int> sign(0, 1);
    auto draw = [&]() {
        int v = mag(rng);
        return FieldElement(sign(rng) ? v : -v);
    };

    if (d_zero) {
        // only the linear constraints matter
        {
            Vector u(n);
            for (size_t i = 0; i + 1 < n; ++i) u[i] = FieldElement(static_cast<long long>(i + 1));
            u[n - 1] = FieldElement(-static_cast<long long>(n * (n - 1) / 2));
            if (u_valid(u, d, lambda, pairs)) return {u};
        }
        for (int attempt = 0; attempt < 64; ++attempt) {
            Vector u(n);
            FieldElement sum(0);
            for (size_t i = 0; i + 1 < n; ++i) {
                u[i] = draw();
                sum += u[i];
            }
            u[n - 1] = -sum;
            if (u_valid(u, d, lambda, pairs)) return {u};
        }
        raise(ErrorCode::InternalError, "u-selection pool exhausted (zero diagonal)");
    }

    // two solve slots at the first two nonzero target entries; the remaining
    // slots come from the seeded pool
    size_t p = 0;
    while (d[p].is_zero()) ++p;
    size_t q = p + 1;
    while (d[q].is_zero()) ++q;

    // phase 0: rational (in-field) solutions; phase 1: adjoin one sqrt
    for (int phase = 0; phase < 2; ++phase) {
        if (phase == 1 && m0 != 0) break;
        std::mt19937_64 pool_rng(seed ^ (phase ? 0x9e3779b97f4a7c15ULL : 0ULL));
        std::mt19937_64 saved = rng;
        rng = pool_rng;
        for (int attempt = 0; attempt < 64; ++attempt) {
            Vector u(n, FieldElement(0));
            FieldElement t_sum(0), r_sum(0);
            for (size_t i = 0; i < n; ++i) {
                if (i == p || i == q) continue;
                u[i] = draw();
                t_sum += u[i];
                r_sum += d[i] / u[i];
            }
            const FieldElement& dp = d[p];
            const FieldElement& dq = d[q];
            std::vector<FieldElement> up_candidates;
            if (r_sum.is_zero()) {
                if (dp == dq) {
                    if (!t_sum.is_zero()) continue;
                    up_candidates.push_back(FieldElement(1));
                    up_candidates.push_back(FieldElement(2));
                } else {
                    up_candidates.push_back(-(dp * t_sum) / (dp - dq));
                }
            } else {
                // r u^2 + (r t + dp - dq) u + dp t = 0
                FieldElement bq = r_sum * t_sum + dp - dq;
                FieldElement disc = bq * bq - FieldElement(4) * r_sum * dp * t_sum;
                std::optional<FieldElement> root = exact_sqrt_in_extension(disc, m0);
                if (!root && phase == 1 && disc.is_rational() && !disc.is_zero()) {
                    SqrtDecomposition sd = decompose_sqrt(disc.as_rational());
                    if (sd.radicand != 1)
                        root = FieldElement(Rational(0), sd.scale, sd.radicand);
                }
                if (!root) continue;
                FieldElement inv2r = (FieldElement(2) * r_sum).inverse();
                up_candidates.push_back((-bq + *root) * inv2r);
                up_candidates.push_back((-bq - *root) * inv2r);
            }
            for (const auto& up : up_candidates) {
                if (up.is_zero()) continue;
                u[p] = up;
                u[q] = -t_sum - up;
                if (u_valid(u, d, lambda, pairs)) {
                    rng = saved;
                    return {u};
                }
            }
        }
        rng = saved;
    }
    raise(ErrorCode::InternalError, "u-selection pool exhausted");
}

/// C with [shift, C] = m, for any m whose lower-diagonal sums (including the
/// trace) all vanish.
Matrix bracket_realize(const Matrix& m) {
    size_t n = m.dim();
    Matrix c(n);
    for (size_t i = 0; i + 1 < n; ++i)
        for (size_t j = 0; j < n; ++j)
            c.at(i + 1, j) = m.at(i, j) + (j > 0 ? c.at(i, j - 1) : FieldElement(0));
    for (size_t j = 0; j < n; ++j) {
        FieldElement lhs = j > 0 ? -c.at(n - 1, j - 1) : FieldElement(0);
        if (lhs != m.at(n - 1, j))
            raise(ErrorCode::InternalError, "bracket target not realizable");
    }
    return c;
}

/// Unitriangular g with g t g^{-1} supported, above the diagonal, only on
/// positions whose two diagonal entries coincide. The diagonal is unchanged.
std::pair<Matrix, Matrix> upper_clean(const Matrix& t) {
    size_t n = t.dim();
    Matrix g = Matrix::identity(n);
    Matrix cur = t;
    for (size_t span = 1; span < n; ++span)
        for (size_t i = 0; i + span < n; ++i) {
            size_t j = i + span;
            if (cur.at(i, j).is_zero() || cur.at(i, i) == cur.at(j, j)) continue;
            Matrix g1 = Matrix::identity(n);
            g1.at(i, j) = -cur.at(i, j) / (cur.at(j, j) - cur.at(i, i));
            cur = conjugate(g1, cur);
            g = g1 * g;
        }
    return {g, cur};
}

/// Fallback for targets where no u satisfies every adjacent-pair condition
/// (possible for n = 3): move the off-diagonal support onto equal-diagonal
/// pairs by a similarity, then only those pairs constrain u.
TripleWitness weighted_product_fallback(const FieldElement& lambda, const BidiagonalTarget& t,
                              uint64_t seed) {
    size_t n = t.dim();
    auto [g, tp] = upper_clean(t.to_matrix());
    PairSet pairs;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (!tp.at(i, j).is_zero()) pairs.emplace_back(i, j);
    USelection sel = select_u_for_pairs(t.diag, lambda, seed, pairs);

    FieldElement one_plus = FieldElement(1) + lambda;
    Matrix m(n);
    for (size_t i = 0; i < n; ++i) {
        m.at(i, i) = tp.at(i, i) / (one_plus * sel.u[i]);
        for (size_t j = i + 1; j < n; ++j)
            if (!tp.at(i, j).is_zero())
                m.at(i, j) = tp.at(i, j) / (sel.u[i] + lambda * sel.u[j]);
    }
    BidiagonalTarget ab_target{BidiagonalTarget::Orientation::Upper, sel.u,
                               Vector(n - 1, FieldElement(0))};
    Matrix a = shift_matrix(n);
    Matrix b = bidiag_bracket_solve(ab_target);
    Matrix c = bracket_realize(m);
    Matrix du = Matrix::diagonal(sel.u);
    if (du * m + (m * du).scaled(lambda) != tp)
        raise(ErrorCode::InternalError, "fallback product mismatch");
    Matrix g_inv = g.inverse();
    return {g_inv * a * g, g_inv * b * g, g_inv * c * g};
}

}  // namespace

USelection select_u(const Vector& d, const FieldElement& lambda, uint64_t seed) {
    return select_u_for_pairs(d, lambda, seed, adjacent_pairs(d.size()));
}

TripleWitness weighted_product_construct(const FieldElement& lambda, const BidiagonalTarget& t,
                               uint64_t seed) {
    if (lambda == FieldElement(-1))
        raise(ErrorCode::InternalError, "lambda = -1 belongs to the commutator-difference case");
    require_upper(t);
    require_trace_zero(t);
    size_t n = t.dim();
    if (n < 3) raise(ErrorCode::DimTooSmall, "product construction needs n >= 3");

    USelection sel;
    try {
        sel = select_u(t.diag, lambda, seed);
    } catch (const Error&) {
        return weighted_product_fallback(lambda, t, seed);
    }
    BidiagonalTarget ab_target{BidiagonalTarget::Orientation::Upper, sel.u,
                               Vector(n - 1, FieldElement(0))};
    Matrix b = bidiag_bracket_solve(ab_target);

    FieldElement one_plus = FieldElement(1) + lambda;
    Vector ac_diag(n), ac_off(n - 1);
    for (size_t i = 0; i < n; ++i) ac_diag[i] = t.diag[i] / (one_plus * sel.u[i]);
    for (size_t i = 0; i + 1 < n; ++i) ac_off[i] = t.off[i] / (sel.u[i] + lambda * sel.u[i + 1]);
    BidiagonalTarget ac_target{BidiagonalTarget::Orientation::Upper, ac_diag, ac_off};
    Matrix c = bidiag_bracket_solve(ac_target);
    return {shift_matrix(n), b, c};
}

// ------------------------------------------------------------- Lie branches

Matrix ad_pow_solve(const Matrix& s, size_t k, const FieldElement& gamma, const Matrix& z) {
    if (gamma.is_zero()) raise(ErrorCode::InternalError, "zero scale in ad-power solve");
    size_t n = s.dim();
    if (!s.is_diagonal()) raise(ErrorCode::InternalError, "S must be diagonal");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (s.at(i, i) == s.at(j, j))
                raise(ErrorCode::InternalError, "S must have distinct diagonal entries");
    Matrix x(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) {
                if (!z.at(i, i).is_zero())
                    raise(ErrorCode::InternalError, "ad-power target must have a zero diagonal");
                continue;
            }
            FieldElement diff = s.at(i, i) - s.at(j, j);
            FieldElement denom = gamma;
            for (size_t e = 0; e < k; ++e) denom *= diff;
            x.at(i, j) = z.at(i, j) / denom;
        }
    return x;
}

namespace {

Matrix distinct_diag(size_t n) {
    Vector d(n);
    for (size_t i = 0; i < n; ++i) d[i] = FieldElement(static_cast<long long>(i + 1));
    return Matrix::diagonal(d);
}

std::vector<Matrix> conjugate_all(const Matrix& p_inv, const Matrix& p,
                                  const std::vector<Matrix>& ws) {
    std::vector<Matrix> out;
    out.reserve(ws.size());
    for (const auto& w : ws) out.push_back(p_inv * w * p);
    return out;
}

}  // namespace

std::vector<Matrix> lie4_witnesses(int i, const FieldElement& z, const Matrix& d) {
    if (i < 1 || i > 3) raise(ErrorCode::IndexOutOfRange, "Lie branch index must be 1..3");
    if (z.is_zero()) raise(ErrorCode::InternalError, "zero Lie coefficient");
    Canonicalization zd = zero_diagonalize(d);
    size_t n = d.dim();
    Matrix s = distinct_diag(n);
    // the surviving term of the left-normed bracket is -z * ad_S^3(X)
    Matrix x = ad_pow_solve(s, 3, -z, zd.t);
    std::vector<Matrix> ws(4, s);
    ws[static_cast<size_t>(i)] = x;  // layouts (S,X,S,S), (S,S,X,S), (S,S,S,X)
    Matrix p_inv = zd.p.inverse();
    return conjugate_all(p_inv, zd.p, ws);
}

std::vector<Matrix> lie3_witnesses(const FieldElement& w1, const FieldElement& w2,
                                   const Matrix& d) {
    if (w1.is_zero() && w2.is_zero()) raise(ErrorCode::InternalError, "zero Lie coefficients");
    Canonicalization zd = zero_diagonalize(d);
    size_t n = d.dim();
    Matrix s = distinct_diag(n);
    std::vector<Matrix> ws(3, s);
    if (!w1.is_zero()) {
        // g(S,X,S) = w1 * ad_S^2(X)
        ws[1] = ad_pow_solve(s, 2, w1, zd.t);
    } else {
        // g(S,S,X) = w2 * ad_S^2(X)
        ws[2] = ad_pow_solve(s, 2, w2, zd.t);
    }
    Matrix p_inv = zd.p.inverse();
    return conjugate_all(p_inv, zd.p, ws);
}

std::pair<Matrix, Matrix> two_var_witnesses(const FieldElement& gamma, const Matrix& d) {
    if (gamma.is_zero()) raise(ErrorCode::InternalError, "zero commutator coefficient");
    Canonicalization zd = zero_diagonalize(d);
    Matrix s = distinct_diag(d.dim());
    Matrix y = ad_pow_solve(s, 1, gamma, zd.t);
    Matrix p_inv = zd.p.inverse();
    return {p_inv * s * zd.p, p_inv * y * zd.p};
}

// --------------------------------------------------------------- synthesize

namespace {

struct BranchResult {
    std::vector<Matrix> witnesses;
    std::optional<Matrix> conjugator;
};

void require_trace_zero_target(const Matrix& d) {
    if (!d.trace().is_zero())
        raise(ErrorCode::NonzeroTrace, "target must have trace zero on this branch");
}

Canonicalization jordanize_or_throw(const Matrix& d) {
    JordanResult jr = jordanize(d);
    if (std::holds_alternative<SplitFailure>(jr))
        raise(ErrorCode::NotSupported,
              "target spectrum does not split over Q with one square root; blocking factor " +
                  std::get<SplitFailure>(jr).factor.str());
    return std::get<Canonicalization>(jr);
}

BranchResult run_plan(const SynthesisPlan& plan, const MultilinearPoly& f, const Matrix& d,
                      uint64_t seed) {
    size_t n = d.dim();
    switch (plan.tag) {
        case SynthesisPlan::Tag::Zero:
            raise(ErrorCode::ZeroPolynomial, "the zero polynomial has no witnesses");

        case SynthesisPlan::Tag::Surjective: {
            std::vector<Matrix> ws(static_cast<size_t>(f.arity()), Matrix::identity(n));
            ws[0] = d.scaled(plan.scalar.inverse());
            return {ws, std::nullopt};
        }

        case SynthesisPlan::Tag::PartialReduction: {
            BranchResult inner = run_plan(*plan.inner, plan.reduced, d, seed);
            std::vector<Matrix> ws;
            for (int j = 1; j <= f.arity(); ++j) {
                if (j == plan.slot)
                    ws.push_back(Matrix::identity(n));
                else if (j < plan.slot)
                    ws.push_back(inner.witnesses[static_cast<size_t>(j - 1)]);
                else
                    ws.push_back(inner.witnesses[static_cast<size_t>(j - 2)]);
            }
            return {ws, inner.conjugator};
        }

        case SynthesisPlan::Tag::Lie4:
            require_trace_zero_target(d);
            return {lie4_witnesses(plan.slot, plan.scalar, d), zero_diagonalize(d).p};

        case SynthesisPlan::Tag::Lie3:
            require_trace_zero_target(d);
            return {lie3_witnesses(plan.w1, plan.w2, d), zero_diagonalize(d).p};

        case SynthesisPlan::Tag::Commutator2: {
            require_trace_zero_target(d);
            auto [x, y] = two_var_witnesses(plan.scalar, d);
            return {{x, y}, zero_diagonalize(d).p};
        }

        case SynthesisPlan::Tag::SpecialCentralLike: {
            require_trace_zero_target(d);
            Canonicalization jc = jordanize_or_throw(d);
            BidiagonalResult br = to_bidiagonal(jc.t, BidiagonalTarget::Orientation::Upper);
            Matrix p_total = br.canon.p * jc.p;
            std::vector<Matrix> ws = special_poly_witnesses(br.target, plan.scalar);
            return {conjugate_all(p_total.inverse(), p_total, ws), p_total};
        }

        case SynthesisPlan::Tag::ProductCase: {
            require_trace_zero_target(d);
            Canonicalization jc = jordanize_or_throw(d);
            TripleWitness tw{Matrix(n), Matrix(n), Matrix(n)};
            Matrix p_total(n);
            if (plan.lambda == FieldElement(-1)) {
                BidiagonalResult br = to_bidiagonal(jc.t, BidiagonalTarget::Orientation::Lower);
                p_total = br.canon.p * jc.p;
                tw = product_difference_construct(scale_target(br.target, plan.alpha.inverse()));
            } else if (!plan.alpha.is_zero()) {
                BidiagonalResult br = to_bidiagonal(jc.t, BidiagonalTarget::Orientation::Upper);
                p_total = br.canon.p * jc.p;
                tw = weighted_product_construct(plan.lambda,
                                      scale_target(br.target, plan.alpha.inverse()), seed);
            } else {
                // alpha = 0, beta != 0: swap the roles of B and C (lambda' = 0)
                BidiagonalResult br = to_bidiagonal(jc.t, BidiagonalTarget::Orientation::Upper);
                p_total = br.canon.p * jc.p;
                TripleWitness sw =
                    weighted_product_construct(FieldElement(0),
                                     scale_target(br.target, plan.beta.inverse()), seed);
                tw = {sw.a, sw.c, sw.b};
            }
            const std::string& layout = pattern_layouts()[static_cast<size_t>(plan.pattern)];
            std::vector<Matrix> ws;
            for (char c : layout)
                ws.push_back(c == 'A' ? tw.a : (c == 'B' ? tw.b : tw.c));
            return {conjugate_all(p_total.inverse(), p_total, ws), p_total};
        }
    }
    raise(ErrorCode::InternalError, "bad synthesis plan");
}

}  // namespace

WitnessReport synthesize(const MultilinearPoly& f, const Matrix& d, uint64_t seed) {
    if (d.dim() < 3)
        raise(ErrorCode::DimTooSmall, "synthesis requires n >= 3 (2x2 matrices admit central polynomials)");
    SynthesisPlan plan = classify(f);
    if (plan.tag == SynthesisPlan::Tag::Zero)
        raise(ErrorCode::ZeroPolynomial, "the zero polynomial has no witnesses");

    BranchResult br = run_plan(plan, f, d, seed);
    WitnessReport report;
    report.witnesses = br.witnesses;
    report.branch = plan.tag_trace();
    report.conjugator = br.conjugator;
    BigInt radicand = 0;
    for (const auto& w : report.witnesses)
        for (size_t i = 0; i < w.dim(); ++i)
            for (size_t j = 0; j < w.dim(); ++j)
                radicand = merge_radicands(radicand, w.at(i, j).radicand());
    if (radicand != 0) report.radicand = radicand;
    report.verified = verify(f, report.witnesses, d);
    return report;
}

bool verify(const MultilinearPoly& f, const std::vector<Matrix>& witnesses, const Matrix& d) {
    return f.evaluate(witnesses) == d;
}

}  // namespace witgen
