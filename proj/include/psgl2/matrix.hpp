#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "psgl2/gf.hpp"

namespace psgl2 {

using Vector = std::vector<Fq>;

inline bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](Fq x) { return x.code == 0; });
}

/// y += c·x
inline void axpy(const FieldSpec& F, Vector& y, Fq c, const Vector& x) {
    if (c.code == 0) return;
    const std::uint16_t* mc = F.mul_row(c);
    const int q = F.q();
    const std::uint16_t* add = F.add_row(Fq{0});
    for (std::size_t i = 0; i < y.size(); ++i)
        if (x[i].code) y[i].code = add[y[i].code * q + mc[x[i].code]];
}

inline void scale(const FieldSpec& F, Vector& v, Fq c) {
    const std::uint16_t* mc = F.mul_row(c);
    for (auto& x : v) x.code = mc[x.code];
}

inline Vector vec_add(const FieldSpec& F, Vector a, const Vector& b) {
    axpy(F, a, F.one(), b);
    return a;
}

inline Vector vec_sub(const FieldSpec& F, Vector a, const Vector& b) {
    axpy(F, a, F.neg(F.one()), b);
    return a;
}

inline Vector unit_vector(int n, int i) {
    Vector v(n);
    v[i] = Fq{1};
    return v;
}

/// Dense row-major matrix; operators act on column vectors.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<Fq> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Fq{1};
        return m;
    }

    /// Columns given as vectors.
    static Matrix from_columns(int rows, const std::vector<Vector>& cols) {
        Matrix m(rows, static_cast<int>(cols.size()));
        for (int j = 0; j < m.cols; ++j)
            for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        return m;
    }

    Fq& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    Fq operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

    Vector row(int i) const { return Vector(data.begin() + static_cast<std::ptrdiff_t>(i) * cols,
                                            data.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols); }
    Vector column(int j) const {
        Vector v(rows);
        for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
        return v;
    }

    Matrix transpose() const {
        Matrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

inline Vector mat_vec(const FieldSpec& F, const Matrix& A, const Vector& v) {
    Vector out(A.rows);
    const int q = F.q();
    const std::uint16_t* add = F.add_row(Fq{0});
    for (int j = 0; j < A.cols; ++j) {
        if (v[j].code == 0) continue;
        const std::uint16_t* mc = F.mul_row(v[j]);
        for (int i = 0; i < A.rows; ++i) {
            std::uint16_t a = A(i, j).code;
            if (a) out[i].code = add[out[i].code * q + mc[a]];
        }
    }
    return out;
}

inline Matrix mat_mul(const FieldSpec& F, const Matrix& A, const Matrix& B) {
    if (A.cols != B.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    Matrix C(A.rows, B.cols);
    const int q = F.q();
    const std::uint16_t* add = F.add_row(Fq{0});
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            Fq a = A(i, k);
            if (a.code == 0) continue;
            const std::uint16_t* ma = F.mul_row(a);
            Fq* crow = &C.data[static_cast<std::size_t>(i) * C.cols];
            const Fq* brow = &B.data[static_cast<std::size_t>(k) * B.cols];
            for (int j = 0; j < B.cols; ++j)
                if (brow[j].code) crow[j].code = add[crow[j].code * q + ma[brow[j].code]];
        }
    return C;
}

inline Matrix mat_add(const FieldSpec& F, Matrix A, const Matrix& B, Fq c = Fq{1}) {
    const std::uint16_t* mc = F.mul_row(c);
    for (std::size_t i = 0; i < A.data.size(); ++i) A.data[i] = F.add(A.data[i], Fq{mc[B.data[i].code]});
    return A;
}

/**
 * Subspace of F_q^n held as a reduced row-echelon basis.
 *
 * Rows are kept sorted by pivot with every pivot equal to 1 and cleared from
 * every other row, so reduction and coordinate extraction are single passes.
 */
class Subspace {
public:
    Subspace() = default;
    Subspace(FieldPtr field, int ambient) : field_(std::move(field)), n_(ambient) {}

    static Subspace span(FieldPtr field, int ambient, const std::vector<Vector>& vs) {
        Subspace s(std::move(field), ambient);
        for (const auto& v : vs) s.insert(v);
        return s;
    }

    static Subspace full(FieldPtr field, int ambient) {
        Subspace s(std::move(field), ambient);
        for (int i = 0; i < ambient; ++i) s.insert(unit_vector(ambient, i));
        return s;
    }

    int ambient_dim() const { return n_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vector>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }
    const FieldSpec& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }

    /// Reduces v modulo the subspace in place; the result is zero exactly on members.
    void reduce(Vector& v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            Fq c = v[pivots_[k]];
            if (c.code) axpy(*field_, v, field_->neg(c), rows_[k]);
        }
    }

    bool contains(Vector v) const {
        check(v);
        reduce(v);
        return is_zero(v);
    }

    /// Adds v to the span; returns whether the dimension grew.
    bool insert(Vector v) {
        check(v);
        reduce(v);
        int piv = -1;
        for (int i = 0; i < n_; ++i)
            if (v[i].code) { piv = i; break; }
        if (piv < 0) return false;
        scale(*field_, v, field_->inv(v[piv]));
        for (auto& row : rows_) {
            Fq c = row[piv];
            if (c.code) axpy(*field_, row, field_->neg(c), v);
        }
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, piv);
        rows_.insert(rows_.begin() + pos, std::move(v));
        return true;
    }

    /// Coordinates of a member with respect to rows(); read off at the pivots.
    Vector coordinates(const Vector& v) const {
        Vector c(rows_.size());
        for (std::size_t k = 0; k < rows_.size(); ++k) c[k] = v[pivots_[k]];
        return c;
    }

    Vector combine(const Vector& coords) const {
        Vector v(n_);
        for (std::size_t k = 0; k < rows_.size(); ++k) axpy(*field_, v, coords[k], rows_[k]);
        return v;
    }

    bool subset_of(const Subspace& o) const {
        return std::all_of(rows_.begin(), rows_.end(), [&](const Vector& r) { return o.contains(r); });
    }

    /// Columns not carrying a pivot, in increasing order.
    std::vector<int> free_columns() const {
        std::vector<int> out;
        std::size_t k = 0;
        for (int i = 0; i < n_; ++i) {
            if (k < pivots_.size() && pivots_[k] == i) { ++k; continue; }
            out.push_back(i);
        }
        return out;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
    }

private:
    void check(const Vector& v) const {
        if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("Subspace: vector length mismatch");
    }

    FieldPtr field_;
    int n_ = 0;
    std::vector<Vector> rows_;
    std::vector<int> pivots_;
};

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    Subspace s = a;
    for (const auto& r : b.rows()) s.insert(r);
    return s;
}

/// Zassenhaus: rows (u|u) and (w|0); the rows with vanishing left half span the intersection.
inline Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
    const int n = a.ambient_dim();
    Subspace z(a.field_ptr(), 2 * n);
    for (const auto& u : a.rows()) {
        Vector v(2 * n);
        std::copy(u.begin(), u.end(), v.begin());
        std::copy(u.begin(), u.end(), v.begin() + n);
        z.insert(v);
    }
    for (const auto& w : b.rows()) {
        Vector v(2 * n);
        std::copy(w.begin(), w.end(), v.begin());
        z.insert(v);
    }
    Subspace out(a.field_ptr(), n);
    for (std::size_t k = 0; k < z.rows().size(); ++k)
        if (z.pivots()[k] >= n) out.insert(Vector(z.rows()[k].begin() + n, z.rows()[k].end()));
    return out;
}

/// Right kernel {x : A x = 0}.
inline Subspace kernel(FieldPtr field, const Matrix& A) {
    const FieldSpec& F = *field;
    Subspace rs(field, A.cols);
    for (int i = 0; i < A.rows; ++i) rs.insert(A.row(i));
    Subspace out(field, A.cols);
    const auto& piv = rs.pivots();
    for (int fcol : rs.free_columns()) {
        Vector x(A.cols);
        x[fcol] = F.one();
        for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = F.neg(rs.rows()[k][fcol]);
        out.insert(x);
    }
    return out;
}

inline int rank(FieldPtr field, const Matrix& A) {
    Subspace rs(std::move(field), A.cols);
    for (int i = 0; i < A.rows; ++i) rs.insert(A.row(i));
    return rs.dim();
}

/// Gauss-Jordan inverse; nullopt when singular.
inline std::optional<Matrix> inverse(const FieldSpec& F, const Matrix& A) {
    if (A.rows != A.cols) throw std::invalid_argument("inverse: matrix is not square");
    const int n = A.rows;
    std::vector<Vector> aug(n, Vector(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = A(i, j);
        aug[i][n + i] = F.one();
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (aug[i][col].code) { piv = i; break; }
        if (piv < 0) return std::nullopt;
        std::swap(aug[piv], aug[col]);
        scale(F, aug[col], F.inv(aug[col][col]));
        for (int i = 0; i < n; ++i)
            if (i != col && aug[i][col].code) axpy(F, aug[i], F.neg(aug[i][col]), aug[col]);
    }
    Matrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = aug[i][n + j];
    return out;
}

}  // namespace psgl2
