#include "witgen/freepoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace witgen {

// ------------------------------------------------------------------ parser

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != s_.size())
            raise(ErrorCode::ParseError,
                  "unexpected character '" + std::string(1, s_[pos_]) + "' at position " +
                      std::to_string(pos_));
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c))
            raise(ErrorCode::ParseError,
                  "expected '" + std::string(1, c) + "' at position " + std::to_string(pos_));
    }

    static ExprPtr node(Expr e) { return std::make_shared<Expr>(std::move(e)); }

    ExprPtr expr() {
        ExprPtr left = term();
        for (;;) {
            if (eat('+'))
                left = node({Expr::Kind::Add, {}, 0, left, term()});
            else if (eat('-'))
                left = node({Expr::Kind::Sub, {}, 0, left, term()});
            else
                return left;
        }
    }

    ExprPtr term() {
        ExprPtr left = factor();
        while (eat('*')) left = node({Expr::Kind::Mul, {}, 0, left, factor()});
        return left;
    }

    ExprPtr factor() {
        skip_ws();
        if (pos_ >= s_.size())
            raise(ErrorCode::ParseError, "unexpected end of input at position " + std::to_string(pos_));
        char c = s_[pos_];
        if (c == '-') {
            ++pos_;
            return node({Expr::Kind::Neg, {}, 0, factor(), nullptr});
        }
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            expect(')');
            return e;
        }
        if (c == '[') {
            ++pos_;
            ExprPtr a = expr();
            expect(',');
            ExprPtr b = expr();
            expect(']');
            return node({Expr::Kind::Bracket, {}, 0, a, b});
        }
        if (c == 'x') {
            ++pos_;
            if (pos_ >= s_.size() || s_[pos_] < '1' || s_[pos_] > '4')
                raise(ErrorCode::ParseError,
                      "expected variable x1..x4 at position " + std::to_string(pos_ - 1));
            int var = s_[pos_] - '0';
            ++pos_;
            return node({Expr::Kind::Var, {}, var, nullptr, nullptr});
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                num = num * 10 + (s_[pos_++] - '0');
            BigInt den = 1;
            if (eat('/')) {
                skip_ws();
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    raise(ErrorCode::ParseError,
                          "expected denominator at position " + std::to_string(pos_));
                den = 0;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    den = den * 10 + (s_[pos_++] - '0');
                if (den == 0) raise(ErrorCode::ParseError, "zero denominator");
            }
            return node({Expr::Kind::Scalar, Rational(num, den), 0, nullptr, nullptr});
        }
        raise(ErrorCode::ParseError,
              "unexpected character '" + std::string(1, c) + "' at position " + std::to_string(pos_));
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(const std::string& text) {
    return Parser(text).parse();
}

Matrix eval_expr(const ExprPtr& ast, const std::vector<Matrix>& args) {
    if (args.empty()) raise(ErrorCode::ArityMismatch, "no arguments");
    size_t n = args[0].dim();
    for (const auto& a : args)
        if (a.dim() != n) raise(ErrorCode::DimensionMismatch, "argument dimensions differ");
    switch (ast->kind) {
        case Expr::Kind::Scalar:
            return Matrix::identity(n).scaled(FieldElement(ast->scalar));
        case Expr::Kind::Var:
            if (ast->var > static_cast<int>(args.size()))
                raise(ErrorCode::ArityMismatch, "variable index exceeds argument count");
            return args[static_cast<size_t>(ast->var - 1)];
        case Expr::Kind::Add:
            return eval_expr(ast->lhs, args) + eval_expr(ast->rhs, args);
        case Expr::Kind::Sub:
            return eval_expr(ast->lhs, args) - eval_expr(ast->rhs, args);
        case Expr::Kind::Mul:
            return eval_expr(ast->lhs, args) * eval_expr(ast->rhs, args);
        case Expr::Kind::Neg:
            return -eval_expr(ast->lhs, args);
        case Expr::Kind::Bracket:
            return commutator(eval_expr(ast->lhs, args), eval_expr(ast->rhs, args));
    }
    raise(ErrorCode::InternalError, "bad expression node");
}

// --------------------------------------------------------------- expansion

namespace {

// Free-algebra series: arbitrary words (digit strings, possibly empty) over
// x1..x4 with rational coefficients. Only used transiently by expand().
using FreeSeries = std::map<std::string, Rational>;

void add_term(FreeSeries& s, const std::string& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = s.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) s.erase(it);
    }
}

FreeSeries expand_free(const ExprPtr& ast, std::set<int>& vars_seen) {
    FreeSeries out;
    switch (ast->kind) {
        case Expr::Kind::Scalar:
            add_term(out, "", ast->scalar);
            return out;
        case Expr::Kind::Var:
            vars_seen.insert(ast->var);
            add_term(out, std::string(1, static_cast<char>('0' + ast->var)), Rational(1));
            return out;
        case Expr::Kind::Add: {
            out = expand_free(ast->lhs, vars_seen);
            for (const auto& [w, c] : expand_free(ast->rhs, vars_seen)) add_term(out, w, c);
            return out;
        }
        case Expr::Kind::Sub: {
            out = expand_free(ast->lhs, vars_seen);
            for (const auto& [w, c] : expand_free(ast->rhs, vars_seen)) add_term(out, w, -c);
            return out;
        }
        case Expr::Kind::Neg: {
            for (const auto& [w, c] : expand_free(ast->lhs, vars_seen)) add_term(out, w, -c);
            return out;
        }
        case Expr::Kind::Mul: {
            FreeSeries a = expand_free(ast->lhs, vars_seen);
            FreeSeries b = expand_free(ast->rhs, vars_seen);
            for (const auto& [wa, ca] : a)
                for (const auto& [wb, cb] : b) add_term(out, wa + wb, ca * cb);
            return out;
        }
        case Expr::Kind::Bracket: {
            FreeSeries a = expand_free(ast->lhs, vars_seen);
            FreeSeries b = expand_free(ast->rhs, vars_seen);
            for (const auto& [wa, ca] : a)
                for (const auto& [wb, cb] : b) {
                    add_term(out, wa + wb, ca * cb);
                    add_term(out, wb + wa, -(ca * cb));
                }
            return out;
        }
    }
    raise(ErrorCode::InternalError, "bad expression node");
}

bool word_is_permutation(const std::string& w, int m) {
    if (static_cast<int>(w.size()) != m) return false;
    std::vector<bool> seen(static_cast<size_t>(m), false);
    for (char c : w) {
        int v = c - '0';
        if (v < 1 || v > m || seen[static_cast<size_t>(v - 1)]) return false;
        seen[static_cast<size_t>(v - 1)] = true;
    }
    return true;
}

}  // namespace

MultilinearPoly expand(const ExprPtr& ast) {
    std::set<int> vars_seen;
    FreeSeries s = expand_free(ast, vars_seen);
    int m = static_cast<int>(vars_seen.size());
    if (!vars_seen.empty() && (*vars_seen.begin() != 1 || *vars_seen.rbegin() != m))
        raise(ErrorCode::NotMultilinear,
              "variables must be x1..xm without gaps");
    if (s.empty()) return MultilinearPoly(m, {});
    std::map<std::string, FieldElement> coeffs;
    for (const auto& [w, c] : s) {
        if (!word_is_permutation(w, m))
            raise(ErrorCode::NotMultilinear,
                  "monomial '" + (w.empty() ? std::string("1") : w) +
                      "' is not a permutation of the " + std::to_string(m) + " variables");
        coeffs.emplace(w, FieldElement(c));
    }
    return MultilinearPoly(m, std::move(coeffs));
}

MultilinearPoly parse_poly(const std::string& text) {
    return expand(parse_expr(text));
}

// --------------------------------------------------------- MultilinearPoly

MultilinearPoly::MultilinearPoly(int arity, std::map<std::string, FieldElement> coeffs)
    : arity_(arity), coeffs_(std::move(coeffs)) {
    if (arity_ < 0 || arity_ > 4)
        raise(ErrorCode::NotMultilinear, "arity must be between 0 and 4");
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (!word_is_permutation(it->first, arity_))
            raise(ErrorCode::NotMultilinear, "word '" + it->first + "' is not a permutation");
        it = it->second.is_zero() ? coeffs_.erase(it) : std::next(it);
    }
}

FieldElement MultilinearPoly::coeff(const std::string& word) const {
    auto it = coeffs_.find(word);
    return it == coeffs_.end() ? FieldElement(0) : it->second;
}

FieldElement MultilinearPoly::coeff_sum() const {
    FieldElement s(0);
    for (const auto& [w, c] : coeffs_) s += c;
    return s;
}

MultilinearPoly MultilinearPoly::operator+(const MultilinearPoly& r) const {
    if (arity_ != r.arity_) raise(ErrorCode::ArityMismatch, "arity mismatch in poly sum");
    std::map<std::string, FieldElement> out = coeffs_;
    for (const auto& [w, c] : r.coeffs_) {
        auto [it, fresh] = out.emplace(w, c);
        if (!fresh) it->second += c;
    }
    return MultilinearPoly(arity_, std::move(out));
}

MultilinearPoly MultilinearPoly::operator-(const MultilinearPoly& r) const {
    return *this + r.scaled(FieldElement(-1));
}

MultilinearPoly MultilinearPoly::scaled(const FieldElement& c) const {
    std::map<std::string, FieldElement> out;
    for (const auto& [w, v] : coeffs_) out.emplace(w, v * c);
    return MultilinearPoly(arity_, std::move(out));
}

MultilinearPoly MultilinearPoly::substitute_identity(int slot) const {
    if (slot < 1 || slot > arity_) raise(ErrorCode::IndexOutOfRange, "bad substitution slot");
    std::map<std::string, FieldElement> out;
    char drop = static_cast<char>('0' + slot);
    for (const auto& [w, c] : coeffs_) {
        std::string nw;
        for (char ch : w) {
            if (ch == drop) continue;
            nw.push_back(ch > drop ? static_cast<char>(ch - 1) : ch);
        }
        auto [it, fresh] = out.emplace(nw, c);
        if (!fresh) it->second += c;
    }
    return MultilinearPoly(arity_ - 1, std::move(out));
}

Matrix MultilinearPoly::evaluate(const std::vector<Matrix>& args) const {
    if (static_cast<int>(args.size()) != arity_)
        raise(ErrorCode::ArityMismatch, "argument count does not match arity");
    if (args.empty()) raise(ErrorCode::ArityMismatch, "no arguments");
    size_t n = args[0].dim();
    for (const auto& a : args)
        if (a.dim() != n) raise(ErrorCode::DimensionMismatch, "argument dimensions differ");
    Matrix acc(n);
    for (const auto& [w, c] : coeffs_) {
        Matrix prod = args[static_cast<size_t>(w[0] - '1')];
        for (size_t k = 1; k < w.size(); ++k)
            prod = prod * args[static_cast<size_t>(w[k] - '1')];
        acc = acc + prod.scaled(c);
    }
    return acc;
}

std::string MultilinearPoly::print() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : coeffs_) {
        if (!c.is_rational())
            raise(ErrorCode::NotSupported, "cannot print polynomial with extension coefficients");
        const Rational& r = c.as_rational();
        Rational a = r.abs();
        if (first) {
            if (r < Rational(0)) os << '-';
            first = false;
        } else {
            os << (r < Rational(0) ? " - " : " + ");
        }
        if (a != Rational(1)) os << a.str() << '*';
        for (size_t k = 0; k < w.size(); ++k) {
            if (k) os << '*';
            os << 'x' << w[k];
        }
    }
    return os.str();
}

std::vector<std::string> MultilinearPoly::all_words(int arity) {
    std::string base;
    for (int i = 1; i <= arity; ++i) base.push_back(static_cast<char>('0' + i));
    std::vector<std::string> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

std::vector<FieldElement> MultilinearPoly::dense_coeffs() const {
    std::vector<FieldElement> out;
    for (const auto& w : all_words(arity_)) out.push_back(coeff(w));
    return out;
}

}  // namespace witgen
