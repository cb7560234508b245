#ifndef WITGEN_MATRIX_HPP
#define WITGEN_MATRIX_HPP

#include <optional>
#include <vector>

#include "witgen/field.hpp"
#include "witgen/poly1v.hpp"

namespace witgen {

using Vector = std::vector<FieldElement>;

/// Exact dense square matrix over FieldElement.
class Matrix {
public:
    Matrix() : n_(0) {}
    explicit Matrix(size_t n) : n_(n), e_(n * n) {}

    static Matrix identity(size_t n);
    /// Standard matrix unit e_{i,j}, 1-based indices.
    static Matrix unit(size_t n, size_t i, size_t j);
    static Matrix diagonal(const Vector& d);

    size_t dim() const { return n_; }
    FieldElement& at(size_t i, size_t j) { return e_[i * n_ + j]; }
    const FieldElement& at(size_t i, size_t j) const { return e_[i * n_ + j]; }

    bool is_zero() const;
    bool is_diagonal() const;
    bool operator==(const Matrix& r) const { return n_ == r.n_ && e_ == r.e_; }
    bool operator!=(const Matrix& r) const { return !(*this == r); }

    Matrix operator+(const Matrix& r) const;
    Matrix operator-(const Matrix& r) const;
    Matrix operator*(const Matrix& r) const;
    Matrix operator-() const;
    Matrix scaled(const FieldElement& c) const;

    FieldElement trace() const;
    Matrix transpose() const;

    /// Exact inverse by Gauss-Jordan elimination, first-nonzero pivoting.
    Matrix inverse() const;

    Vector apply(const Vector& v) const;

    /// Monic characteristic polynomial via Faddeev-LeVerrier.
    Polynomial1V char_poly() const;

    /// Exact null space basis; deterministic (first-nonzero pivots, free
    /// columns in index order, free coordinate set to 1).
    std::vector<Vector> kernel_basis() const;

    std::string str() const;

private:
    size_t n_;
    std::vector<FieldElement> e_;
};

Matrix commutator(const Matrix& x, const Matrix& y);

/// P X P^{-1}.
Matrix conjugate(const Matrix& p, const Matrix& x);

/// Exact solution of a (possibly non-square) linear system rows x cols;
/// free variables are set to zero. Returns nullopt when inconsistent.
std::optional<Vector> solve_linear(const std::vector<Vector>& rows, const Vector& rhs);

/// Rank of a list of row vectors, exact.
size_t rank_of_rows(std::vector<Vector> rows);

}  // namespace witgen

#endif
