#include "witgen/canon.hpp"

#include <algorithm>

namespace witgen {

Matrix BidiagonalTarget::to_matrix() const {
    size_t n = diag.size();
    Matrix m(n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = diag[i];
    for (size_t i = 0; i + 1 < n; ++i) {
        if (orientation == Orientation::Upper)
            m.at(i, i + 1) = off[i];
        else
            m.at(i + 1, i) = off[i];
    }
    return m;
}

FieldElement BidiagonalTarget::diag_sum() const {
    FieldElement s(0);
    for (const auto& d : diag) s += d;
    return s;
}

// --------------------------------------------------------- zero_diagonalize

namespace {

// Incremental independence tester over FieldElement row vectors.
class SpanTracker {
public:
    // Returns true (and absorbs the vector) when v is independent of the
    // current span.
    bool try_add(Vector v) {
        for (const auto& [lead, row] : rows_) {
            if (!v[lead].is_zero()) {
                FieldElement f = v[lead];
                for (size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
            }
        }
        size_t lead = 0;
        while (lead < v.size() && v[lead].is_zero()) ++lead;
        if (lead == v.size()) return false;
        FieldElement inv = v[lead].inverse();
        for (auto& x : v) x *= inv;
        rows_.emplace_back(lead, std::move(v));
        return true;
    }

private:
    std::vector<std::pair<size_t, Vector>> rows_;
};

// Basis matrix whose first two columns are v and Dv, completed with standard
// basis vectors in index order.
Matrix complete_basis(const Vector& v, const Vector& w) {
    size_t n = v.size();
    std::vector<Vector> cols;
    SpanTracker span;
    if (!span.try_add(v)) raise(ErrorCode::InternalError, "zero pivot vector");
    cols.push_back(v);
    if (!span.try_add(w)) raise(ErrorCode::InternalError, "Dv parallel to v");
    cols.push_back(w);
    for (size_t k = 0; k < n && cols.size() < n; ++k) {
        Vector e(n, FieldElement(0));
        e[k] = FieldElement(1);
        if (span.try_add(e)) cols.push_back(std::move(e));
    }
    Matrix q(n);
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) q.at(i, j) = cols[j][i];
    return q;
}

// Q with zero diagonal of Q^{-1} D Q; recursion on the trailing block.
Matrix zero_diag_basis(const Matrix& d) {
    size_t n = d.dim();
    if (n <= 1 || d.is_zero()) return Matrix::identity(n);
    Vector v(n, FieldElement(0));
    if (d.is_diagonal()) {
        size_t i = 0, j = 0;
        bool found = false;
        for (i = 0; i < n && !found; ++i)
            for (j = i + 1; j < n && !found; ++j)
                if (d.at(i, i) != d.at(j, j)) found = true;
        if (!found)
            raise(ErrorCode::InternalError, "nonzero trace-zero diagonal with equal entries");
        v[i - 1] = FieldElement(1);  // loops advanced past the hit
        v[j - 1] = FieldElement(1);
    } else {
        size_t i = 0;
        for (; i < n; ++i) {
            bool off_nonzero = false;
            for (size_t r = 0; r < n; ++r)
                if (r != i && !d.at(r, i).is_zero()) off_nonzero = true;
            if (off_nonzero) break;
        }
        v[i] = FieldElement(1);
    }
    Vector w = d.apply(v);
    Matrix q1 = complete_basis(v, w);
    Matrix m = q1.inverse() * d * q1;
    Matrix sub(n - 1);
    for (size_t i = 0; i < n - 1; ++i)
        for (size_t j = 0; j < n - 1; ++j) sub.at(i, j) = m.at(i + 1, j + 1);
    Matrix qs = zero_diag_basis(sub);
    Matrix r = Matrix::identity(n);
    for (size_t i = 0; i < n - 1; ++i)
        for (size_t j = 0; j < n - 1; ++j) r.at(i + 1, j + 1) = qs.at(i, j);
    return q1 * r;
}

}  // namespace

Canonicalization zero_diagonalize(const Matrix& d) {
    if (!d.trace().is_zero()) raise(ErrorCode::NonzeroTrace, "zero_diagonalize needs trace 0");
    Matrix q = zero_diag_basis(d);
    Matrix p = q.inverse();
    Matrix t = p * d * q;
    for (size_t i = 0; i < t.dim(); ++i)
        if (!t.at(i, i).is_zero())
            raise(ErrorCode::InternalError, "zero_diagonalize left a nonzero diagonal entry");
    return {p, t};
}

// ------------------------------------------------------------ root finding

namespace {

std::vector<BigInt> signed_divisors(BigInt t) {
    if (t < 0) t = -t;
    std::vector<BigInt> out;
    for (BigInt f = 1; f * f <= t; ++f) {
        if (t % f != 0) continue;
        out.push_back(f);
        BigInt g = t / f;
        if (g != f) out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    std::vector<BigInt> all;
    for (const auto& x : out) {
        all.push_back(x);
        all.push_back(-x);
    }
    return all;
}

BigInt lcm_of_denominators(const Polynomial1V& p) {
    BigInt l = 1;
    for (const auto& c : p.coeffs())
        l = boost::multiprecision::lcm(l, c.as_rational().den());
    return l;
}

// Monic integer polynomial h with h(y) = L^deg * p(y/L); roots scale by L.
std::vector<BigInt> to_monic_integer(const Polynomial1V& p, BigInt& scale_out) {
    BigInt l = lcm_of_denominators(p);
    int deg = p.degree();
    std::vector<BigInt> h(static_cast<size_t>(deg) + 1);
    BigInt pw = 1;
    for (int k = deg; k >= 0; --k) {
        Rational c = p.coeff(static_cast<size_t>(k)).as_rational() * Rational(pw);
        if (c.den() != 1) raise(ErrorCode::InternalError, "integer scaling failed");
        h[static_cast<size_t>(k)] = c.num();
        pw *= l;
    }
    scale_out = l;
    return h;
}

BigInt eval_int_poly(const std::vector<BigInt>& h, const BigInt& x) {
    BigInt acc = 0;
    for (auto it = h.rbegin(); it != h.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

std::map<Rational, int> rational_roots(const Polynomial1V& p) {
    if (p.is_zero()) raise(ErrorCode::InternalError, "roots of the zero polynomial");
    if (!p.has_rational_coeffs())
        raise(ErrorCode::InternalError, "rational_roots needs rational coefficients");
    std::map<Rational, int> out;
    Polynomial1V g = p.monic();
    // strip zero roots
    while (!g.is_zero() && g.degree() >= 1 && g.coeff(0).is_zero()) {
        ++out[Rational(0)];
        std::vector<FieldElement> c(g.coeffs().begin() + 1, g.coeffs().end());
        g = Polynomial1V(std::move(c));
    }
    if (g.degree() < 1) return out;
    BigInt scale;
    std::vector<BigInt> h = to_monic_integer(g, scale);
    for (const BigInt& r : signed_divisors(h[0])) {
        Rational cand(r, scale);
        while (g.degree() >= 1 && g.eval(FieldElement(cand)).is_zero()) {
            ++out[cand];
            g = g.divmod(Polynomial1V::linear_root(FieldElement(cand))).first;
        }
    }
    return out;
}

namespace {

// Monic quadratic rational factors of a monic rational polynomial without
// rational roots, found through divisor pairs of h(1) and h(-1).
std::vector<std::pair<Rational, Rational>> quadratic_factors(Polynomial1V g) {
    std::vector<std::pair<Rational, Rational>> out;
    while (g.degree() >= 2) {
        if (g.degree() == 2) {
            out.emplace_back(g.coeff(1).as_rational(), g.coeff(0).as_rational());
            break;
        }
        BigInt scale;
        std::vector<BigInt> h = to_monic_integer(g, scale);
        BigInt h1 = eval_int_poly(h, 1);
        BigInt hm1 = eval_int_poly(h, -1);
        if (h1 == 0 || hm1 == 0) break;  // rational root: caller removed none? bail out
        bool found = false;
        for (const BigInt& d1 : signed_divisors(h1)) {
            for (const BigInt& d2 : signed_divisors(hm1)) {
                // factor y^2 + U y + V has 1+U+V = d1, 1-U+V = d2
                BigInt two_u = d1 - d2;
                BigInt two_v = d1 + d2 - 2;
                if (two_u % 2 != 0 || two_v % 2 != 0) continue;
                BigInt u = two_u / 2, v = two_v / 2;
                if (v == 0) continue;
                if (h[0] % v != 0) continue;
                Rational uq(u, scale), vq(v, scale * scale);
                Polynomial1V q({FieldElement(vq), FieldElement(uq), FieldElement(1)});
                auto [quot, rem] = g.divmod(q);
                if (rem.is_zero()) {
                    out.emplace_back(uq, vq);
                    g = quot;
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) break;
    }
    return out;
}

struct Spectrum {
    std::vector<FieldElement> roots;  // with multiplicity
};

// Roots of a monic polynomial over Q or Q(sqrt(m0)), allowing at most one
// quadratic extension overall. Failure carries the undeflated remainder.
std::variant<Spectrum, SplitFailure> find_spectrum(const Polynomial1V& p, BigInt radicand) {
    Polynomial1V g = p.monic();
    Polynomial1V base = g.has_rational_coeffs() ? g : (g * g.conj()).monic();
    if (!base.has_rational_coeffs())
        raise(ErrorCode::InternalError, "norm polynomial is not rational");

    // Candidate roots in Q and in quadratic extensions, from the square-free
    // part of the rational base polynomial.
    Polynomial1V sf = base.divmod(Polynomial1V::gcd(base, base.derivative())).first;
    std::vector<FieldElement> candidates;
    Polynomial1V rest = sf;
    for (const auto& [r, mult] : rational_roots(sf)) {
        candidates.push_back(FieldElement(r));
        rest = rest.divmod(Polynomial1V::linear_root(FieldElement(r))).first;
    }
    for (const auto& [u, v] : quadratic_factors(rest)) {
        Rational disc = u * u - Rational(4) * v;
        if (disc.is_zero() || disc.exact_sqrt()) continue;  // would be a rational root
        SqrtDecomposition s = decompose_sqrt(disc);
        if (radicand != 0 && s.radicand != radicand) continue;
        Rational half_s = s.scale / Rational(2);
        Rational a = -u / Rational(2);
        candidates.push_back(FieldElement(a, half_s, s.radicand));
        candidates.push_back(FieldElement(a, -half_s, s.radicand));
    }
    std::sort(candidates.begin(), candidates.end(), FieldElement::canonical_less);

    Spectrum sp;
    for (const auto& cand : candidates) {
        if (!cand.is_rational() && radicand != 0 && cand.radicand() != radicand) continue;
        while (g.degree() >= 1 && g.eval(cand).is_zero()) {
            if (!cand.is_rational()) radicand = cand.radicand();
            sp.roots.push_back(cand);
            g = g.divmod(Polynomial1V::linear_root(cand)).first;
        }
    }
    if (g.degree() >= 1) return SplitFailure{g};
    std::sort(sp.roots.begin(), sp.roots.end(), FieldElement::canonical_less);
    return sp;
}

Matrix matrix_power(const Matrix& m, size_t k) {
    Matrix acc = Matrix::identity(m.dim());
    for (size_t i = 0; i < k; ++i) acc = acc * m;
    return acc;
}

}  // namespace

JordanResult jordanize(const Matrix& d) {
    size_t n = d.dim();
    BigInt radicand = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            radicand = merge_radicands(radicand, d.at(i, j).radicand());

    auto sp_or_fail = find_spectrum(d.char_poly(), radicand);
    if (std::holds_alternative<SplitFailure>(sp_or_fail))
        return std::get<SplitFailure>(sp_or_fail);
    const auto& roots = std::get<Spectrum>(sp_or_fail).roots;

    // Group into (eigenvalue, algebraic multiplicity), already sorted.
    std::vector<std::pair<FieldElement, size_t>> eigs;
    for (const auto& r : roots) {
        if (!eigs.empty() && eigs.back().first == r)
            ++eigs.back().second;
        else
            eigs.emplace_back(r, 1);
    }

    std::vector<Vector> columns;
    std::vector<std::pair<FieldElement, size_t>> blocks;  // (eigenvalue, size)
    for (const auto& [lambda, amult] : eigs) {
        Matrix nmat = d - Matrix::identity(n).scaled(lambda);
        // kernel filtration up to the algebraic multiplicity
        std::vector<std::vector<Vector>> kernels;  // kernels[j] = ker N^{j+1}
        size_t s = 0;
        for (size_t j = 1; j <= amult; ++j) {
            kernels.push_back(matrix_power(nmat, j).kernel_basis());
            s = j;
            if (kernels.back().size() == amult) break;
        }
        if (kernels.back().size() != amult)
            raise(ErrorCode::InternalError, "generalized eigenspace dimension mismatch");

        struct Chain {
            std::vector<Vector> elems;  // [N^{len-1}v, ..., Nv, v]
        };
        std::vector<Chain> chains;
        for (size_t j = s; j >= 1; --j) {
            SpanTracker span;
            if (j >= 2)
                for (const auto& v : kernels[j - 2]) span.try_add(v);
            // height-j elements of the chains already built (all longer than j)
            for (const auto& ch : chains)
                if (ch.elems.size() > j) span.try_add(ch.elems[j - 1]);
            for (const auto& v : kernels[j - 1]) {
                if (!span.try_add(v)) continue;
                Chain ch;
                Vector cur = v;
                std::vector<Vector> rev;
                rev.push_back(cur);
                for (size_t k = 1; k < j; ++k) {
                    cur = nmat.apply(cur);
                    rev.push_back(cur);
                }
                ch.elems.assign(rev.rbegin(), rev.rend());
                chains.push_back(std::move(ch));
            }
        }
        std::stable_sort(chains.begin(), chains.end(),
                         [](const Chain& a, const Chain& b) {
                             return a.elems.size() > b.elems.size();
                         });
        size_t total = 0;
        for (const auto& ch : chains) {
            blocks.emplace_back(lambda, ch.elems.size());
            for (const auto& v : ch.elems) columns.push_back(v);
            total += ch.elems.size();
        }
        if (total != amult)
            raise(ErrorCode::InternalError, "Jordan chain count mismatch");
    }
    if (columns.size() != n) raise(ErrorCode::InternalError, "Jordan basis incomplete");

    Matrix q(n);
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) q.at(i, j) = columns[j][i];
    Matrix p = q.inverse();
    Matrix t = p * d * q;

    // Expected Jordan matrix from the block list; mismatch is a bug.
    Matrix expect(n);
    size_t pos = 0;
    for (const auto& [lambda, size] : blocks) {
        for (size_t k = 0; k < size; ++k) {
            expect.at(pos + k, pos + k) = lambda;
            if (k + 1 < size) expect.at(pos + k, pos + k + 1) = FieldElement(1);
        }
        pos += size;
    }
    if (t != expect) raise(ErrorCode::InternalError, "Jordan assembly produced a wrong form");
    return Canonicalization{p, t};
}

BidiagonalResult to_bidiagonal(const Matrix& jordan, BidiagonalTarget::Orientation orientation) {
    size_t n = jordan.dim();
    // validate Jordan shape
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const FieldElement& e = jordan.at(i, j);
            if (j == i + 1) {
                if (!e.is_zero() && e != FieldElement(1))
                    raise(ErrorCode::InternalError, "not a Jordan matrix");
            } else if (!e.is_zero()) {
                raise(ErrorCode::InternalError, "not a Jordan matrix");
            }
        }

    BidiagonalTarget target;
    target.orientation = orientation;
    if (orientation == BidiagonalTarget::Orientation::Upper) {
        for (size_t i = 0; i < n; ++i) target.diag.push_back(jordan.at(i, i));
        for (size_t i = 0; i + 1 < n; ++i) target.off.push_back(jordan.at(i, i + 1));
        return {Canonicalization{Matrix::identity(n), jordan}, target};
    }

    // block boundaries from the superdiagonal
    std::vector<std::pair<size_t, size_t>> spans;  // [start, end)
    size_t start = 0;
    for (size_t i = 0; i < n; ++i) {
        bool linked = i + 1 < n && !jordan.at(i, i + 1).is_zero();
        if (!linked) {
            spans.emplace_back(start, i + 1);
            start = i + 1;
        }
    }
    Matrix rev(n);
    for (const auto& [a, b] : spans)
        for (size_t k = a; k < b; ++k) rev.at(k, a + b - 1 - k) = FieldElement(1);
    Matrix t = rev * jordan * rev;  // rev is an involution
    for (size_t i = 0; i < n; ++i) target.diag.push_back(t.at(i, i));
    for (size_t i = 0; i + 1 < n; ++i) target.off.push_back(t.at(i + 1, i));
    if (t != target.to_matrix())
        raise(ErrorCode::InternalError, "block reversal did not produce a lower bidiagonal");
    return {Canonicalization{rev, t}, target};
}

}  // namespace witgen
