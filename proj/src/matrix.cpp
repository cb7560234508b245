#include "witgen/matrix.hpp"

#include <sstream>

namespace witgen {

Matrix Matrix::identity(size_t n) {
    Matrix m(n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement(1);
    return m;
}

Matrix Matrix::unit(size_t n, size_t i, size_t j) {
    if (i < 1 || i > n || j < 1 || j > n)
        raise(ErrorCode::IndexOutOfRange, "matrix unit index out of range");
    Matrix m(n);
    m.at(i - 1, j - 1) = FieldElement(1);
    return m;
}

Matrix Matrix::diagonal(const Vector& d) {
    Matrix m(d.size());
    for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_diagonal() const {
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

namespace {

void check_dims(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) raise(ErrorCode::DimensionMismatch, "matrix dimension mismatch");
}

}  // namespace

Matrix Matrix::operator+(const Matrix& r) const {
    check_dims(*this, r);
    Matrix out(n_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] + r.e_[k];
    return out;
}

Matrix Matrix::operator-(const Matrix& r) const {
    check_dims(*this, r);
    Matrix out(n_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] - r.e_[k];
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(n_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = -e_[k];
    return out;
}

Matrix Matrix::operator*(const Matrix& r) const {
    check_dims(*this, r);
    Matrix out(n_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t k = 0; k < n_; ++k) {
            const FieldElement& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < n_; ++j) {
                const FieldElement& bkj = r.at(k, j);
                if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

Matrix Matrix::scaled(const FieldElement& c) const {
    Matrix out(n_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] * c;
    return out;
}

FieldElement Matrix::trace() const {
    FieldElement t(0);
    for (size_t i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

Matrix Matrix::transpose() const {
    Matrix out(n_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Matrix Matrix::inverse() const {
    Matrix a = *this;
    Matrix inv = identity(n_);
    for (size_t col = 0; col < n_; ++col) {
        size_t piv = col;
        while (piv < n_ && a.at(piv, col).is_zero()) ++piv;
        if (piv == n_) raise(ErrorCode::SingularMatrix, "singular matrix");
        if (piv != col) {
            for (size_t j = 0; j < n_; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        }
        FieldElement d = a.at(col, col).inverse();
        for (size_t j = 0; j < n_; ++j) {
            a.at(col, j) *= d;
            inv.at(col, j) *= d;
        }
        for (size_t i = 0; i < n_; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            FieldElement f = a.at(i, col);
            for (size_t j = 0; j < n_; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != n_) raise(ErrorCode::DimensionMismatch, "vector dimension mismatch");
    Vector out(n_, FieldElement(0));
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j)
            if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

Polynomial1V Matrix::char_poly() const {
    // Faddeev-LeVerrier; exact in characteristic 0.
    size_t n = n_;
    std::vector<FieldElement> c(n + 1, FieldElement(0));
    c[n] = FieldElement(1);
    Matrix m = identity(n);
    for (size_t k = 1; k <= n; ++k) {
        m = *this * m;
        FieldElement ck = -(m.trace() / FieldElement(static_cast<long long>(k)));
        c[n - k] = ck;
        for (size_t i = 0; i < n; ++i) m.at(i, i) += ck;
    }
    return Polynomial1V(std::move(c));
}

std::vector<Vector> Matrix::kernel_basis() const {
    // Reduced row echelon form with deterministic pivoting.
    Matrix a = *this;
    size_t n = n_;
    std::vector<long> pivot_row_of_col(n, -1);
    size_t row = 0;
    for (size_t col = 0; col < n && row < n; ++col) {
        size_t piv = row;
        while (piv < n && a.at(piv, col).is_zero()) ++piv;
        if (piv == n) continue;
        if (piv != row)
            for (size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(row, j));
        FieldElement d = a.at(row, col).inverse();
        for (size_t j = 0; j < n; ++j) a.at(row, j) *= d;
        for (size_t i = 0; i < n; ++i) {
            if (i == row || a.at(i, col).is_zero()) continue;
            FieldElement f = a.at(i, col);
            for (size_t j = 0; j < n; ++j) a.at(i, j) -= f * a.at(row, j);
        }
        pivot_row_of_col[col] = static_cast<long>(row);
        ++row;
    }
    std::vector<Vector> basis;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (pivot_row_of_col[free_col] != -1) continue;
        Vector v(n, FieldElement(0));
        v[free_col] = FieldElement(1);
        for (size_t col = 0; col < n; ++col) {
            long r = pivot_row_of_col[col];
            if (r >= 0) v[col] = -a.at(static_cast<size_t>(r), free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < n_; ++i) {
        os << '[';
        for (size_t j = 0; j < n_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        os << "]\n";
    }
    return os.str();
}

Matrix commutator(const Matrix& x, const Matrix& y) {
    return x * y - y * x;
}

Matrix conjugate(const Matrix& p, const Matrix& x) {
    return p * x * p.inverse();
}

std::optional<Vector> solve_linear(const std::vector<Vector>& rows, const Vector& rhs) {
    size_t nrows = rows.size();
    if (rhs.size() != nrows) raise(ErrorCode::DimensionMismatch, "rhs size mismatch");
    size_t ncols = nrows ? rows[0].size() : 0;
    std::vector<Vector> a = rows;
    Vector b = rhs;
    std::vector<long> pivot_row_of_col(ncols, -1);
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < nrows; ++col) {
        size_t piv = row;
        while (piv < nrows && a[piv][col].is_zero()) ++piv;
        if (piv == nrows) continue;
        std::swap(a[piv], a[row]);
        std::swap(b[piv], b[row]);
        FieldElement d = a[row][col].inverse();
        for (auto& x : a[row]) x *= d;
        b[row] *= d;
        for (size_t i = 0; i < nrows; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            FieldElement f = a[i][col];
            for (size_t j = 0; j < ncols; ++j) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        pivot_row_of_col[col] = static_cast<long>(row);
        ++row;
    }
    for (size_t i = row; i < nrows; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    Vector x(ncols, FieldElement(0));
    for (size_t col = 0; col < ncols; ++col)
        if (pivot_row_of_col[col] >= 0) x[col] = b[static_cast<size_t>(pivot_row_of_col[col])];
    return x;
}

size_t rank_of_rows(std::vector<Vector> rows) {
    size_t nrows = rows.size();
    size_t ncols = nrows ? rows[0].size() : 0;
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < nrows; ++col) {
        size_t piv = row;
        while (piv < nrows && rows[piv][col].is_zero()) ++piv;
        if (piv == nrows) continue;
        std::swap(rows[piv], rows[row]);
        FieldElement d = rows[row][col].inverse();
        for (auto& x : rows[row]) x *= d;
        for (size_t i = row + 1; i < nrows; ++i) {
            if (rows[i][col].is_zero()) continue;
            FieldElement f = rows[i][col];
            for (size_t j = 0; j < ncols; ++j) rows[i][j] -= f * rows[row][j];
        }
        ++row;
    }
    return row;
}

}  // namespace witgen
