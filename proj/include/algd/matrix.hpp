#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "algd/error.hpp"
#include "algd/scalar.hpp"

namespace algd {

template <class K>
using Vec = std::vector<K>;

template <class K>
Vec<K> zeros(std::size_t n, const Field& f) {
    return Vec<K>(n, K::zero(f));
}

template <class K>
Vec<K> unit_vector(std::size_t n, std::size_t i, const Field& f) {
    Vec<K> v = zeros<K>(n, f);
    v[i] = K::one(f);
    return v;
}

template <class K>
bool is_zero(const Vec<K>& v) {
    return std::all_of(v.begin(), v.end(), [](const K& x) { return x.is_zero(); });
}

template <class K>
Vec<K> operator+(Vec<K> a, const Vec<K>& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sizes differ");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

template <class K>
Vec<K> operator-(Vec<K> a, const Vec<K>& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sizes differ");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

template <class K>
Vec<K> operator*(const K& c, Vec<K> a) {
    for (auto& x : a) x *= c;
    return a;
}

// a += c*b
template <class K>
void axpy(Vec<K>& a, const K& c, const Vec<K>& b) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] += c * b[i];
}

template <class K>
std::string vec_str(const Vec<K>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, const Field& f) : r_(r), c_(c), f_(f), a_(r * c, K::zero(f)) {}

    static Matrix identity(std::size_t n, const Field& f) {
        Matrix m(n, n, f);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K::one(f);
        return m;
    }

    static Matrix from_rows(const std::vector<Vec<K>>& rows, std::size_t cols, const Field& f) {
        Matrix m(rows.size(), cols, f);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_columns(const std::vector<Vec<K>>& cols, std::size_t rows, const Field& f) {
        Matrix m(rows, cols.size(), f);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw Error(ErrorCode::DimensionMismatch, "ragged columns");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    const Field& field() const { return f_; }

    K& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Vec<K> col(std::size_t j) const {
        Vec<K> v;
        v.reserve(r_);
        for (std::size_t i = 0; i < r_; ++i) v.push_back((*this)(i, j));
        return v;
    }
    Vec<K> row(std::size_t i) const { return Vec<K>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }
    void set_col(std::size_t j, const Vec<K>& v) {
        if (v.size() != r_) throw Error(ErrorCode::DimensionMismatch, "column length");
        for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
    }
    void set_row(std::size_t i, const Vec<K>& v) {
        if (v.size() != c_) throw Error(ErrorCode::DimensionMismatch, "row length");
        for (std::size_t j = 0; j < c_; ++j) (*this)(i, j) = v[j];
    }

    Vec<K> apply(const Vec<K>& v) const {
        if (v.size() != c_) throw Error(ErrorCode::DimensionMismatch, "apply: " + std::to_string(r_) + "x" + std::to_string(c_) + " on length " + std::to_string(v.size()));
        Vec<K> out = zeros<K>(r_, f_);
        for (std::size_t j = 0; j < c_; ++j) {
            if (v[j].is_zero()) continue;
            for (std::size_t i = 0; i < r_; ++i) {
                const K& m = (*this)(i, j);
                if (!m.is_zero()) out[i] += m * v[j];
            }
        }
        return out;
    }

    Matrix transpose() const {
        Matrix t(c_, r_, f_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](const K& x) { return x.is_zero(); });
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw Error(ErrorCode::DimensionMismatch, "matrix product " + std::to_string(a.r_) + "x" + std::to_string(a.c_) + " * " + std::to_string(b.r_) + "x" + std::to_string(b.c_));
        Matrix m(a.r_, b.c_, a.f_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const K& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.c_; ++j) {
                    const K& y = b(k, j);
                    if (!y.is_zero()) m(i, j) += x * y;
                }
            }
        return m;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    friend Matrix operator*(const K& c, Matrix a) {
        for (auto& x : a.a_) x *= c;
        return a;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < r_; ++i) {
            if (i) s += ", ";
            s += vec_str(row(i));
        }
        return s + "]";
    }

private:
    std::size_t r_ = 0, c_ = 0;
    Field f_{};
    std::vector<K> a_;
};

template <class K>
struct Echelon {
    Matrix<K> reduced;               // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row
};

// Gauss-Jordan with the pivot in the first nonzero column, taken from the topmost
// available row.
template <class K>
Echelon<K> rref(const Matrix<K>& m) {
    Matrix<K> a = m;
    const std::size_t R = a.rows(), C = a.cols();
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && a(p, c).is_zero()) ++p;
        if (p == R) continue;
        if (p != r)
            for (std::size_t j = 0; j < C; ++j) std::swap(a(p, j), a(r, j));
        K inv = a(r, c).inv();
        for (std::size_t j = c; j < C; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            K f = a(i, c);
            for (std::size_t j = c; j < C; ++j)
                if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    Matrix<K> out(r, C, m.field());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < C; ++j) out(i, j) = a(i, j);
    return {out, piv};
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
    return rref(m).pivots.size();
}

template <class K>
std::vector<Vec<K>> kernel_basis(const Matrix<K>& m) {
    auto e = rref(m);
    const std::size_t C = m.cols();
    std::vector<bool> is_piv(C, false);
    for (auto p : e.pivots) is_piv[p] = true;
    std::vector<Vec<K>> basis;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_piv[f]) continue;
        Vec<K> v = zeros<K>(C, m.field());
        v[f] = K::one(m.field());
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Particular solution of m * X = rhs, free variables set to zero.
template <class K>
Matrix<K> solve_linear(const Matrix<K>& m, const Matrix<K>& rhs) {
    if (m.rows() != rhs.rows()) throw Error(ErrorCode::DimensionMismatch, "solve_linear: row counts differ");
    const std::size_t R = m.rows(), C = m.cols(), B = rhs.cols();
    Matrix<K> aug(R, C + B, m.field());
    for (std::size_t i = 0; i < R; ++i) {
        for (std::size_t j = 0; j < C; ++j) aug(i, j) = m(i, j);
        for (std::size_t j = 0; j < B; ++j) aug(i, C + j) = rhs(i, j);
    }
    auto e = rref(aug);
    Matrix<K> x(C, B, m.field());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] >= C) throw Error(ErrorCode::Inconsistent, "linear system has no solution");
        for (std::size_t j = 0; j < B; ++j) x(e.pivots[i], j) = e.reduced(i, C + j);
    }
    return x;
}

template <class K>
Vec<K> solve_linear(const Matrix<K>& m, const Vec<K>& rhs) {
    return solve_linear(m, Matrix<K>::from_columns({rhs}, rhs.size(), m.field())).col(0);
}

template <class K>
Matrix<K> invert(const Matrix<K>& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "invert: matrix not square");
    const std::size_t n = m.rows();
    Matrix<K> aug(n, 2 * n, m.field());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = K::one(m.field());
    }
    auto e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw Error(ErrorCode::Singular, "matrix is not invertible");
    Matrix<K> inv(n, n, m.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

template <class K>
bool same_column_span(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.rows() != b.rows()) return false;
    Matrix<K> ab(a.rows(), a.cols() + b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) ab(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) ab(i, a.cols() + j) = b(i, j);
    }
    std::size_t r = rank(ab);
    return r == rank(a) && r == rank(b);
}

template <class K>
using SparseVec = std::vector<std::pair<std::size_t, K>>;

template <class K>
SparseVec<K> sparsify(const Vec<K>& v) {
    SparseVec<K> s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.emplace_back(i, v[i]);
    return s;
}

// Incrementally maintained reduced row echelon basis of a subspace of K^dim.
// Rows are kept fully reduced, so the reduced form is the unique RREF of the span
// no matter in which order generators arrive.
template <class K>
class SpanEchelon {
public:
    SpanEchelon() = default;
    SpanEchelon(std::size_t dim, const Field& f) : dim_(dim), f_(f) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    const Field& field() const { return f_; }

    // Returns the reduction of v modulo the span, as a dense vector that is zero
    // on every pivot column.
    Vec<K> reduce(const Vec<K>& v) const {
        if (v.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "SpanEchelon::reduce");
        Vec<K> out = v;
        for (const auto& [p, row] : rows_) {
            if (v[p].is_zero()) continue;
            const K c = v[p];
            for (const auto& [j, x] : row) out[j] -= c * x;
        }
        return out;
    }

    bool contains(const Vec<K>& v) const { return is_zero(reduce(v)); }

    bool add(const Vec<K>& v) {
        Vec<K> r = reduce(v);
        std::size_t p = 0;
        while (p < dim_ && r[p].is_zero()) ++p;
        if (p == dim_) return false;
        K inv = r[p].inv();
        SparseVec<K> nr;
        for (std::size_t j = p; j < dim_; ++j)
            if (!r[j].is_zero()) nr.emplace_back(j, r[j] * inv);
        for (auto& [q, row] : rows_) {
            auto it = std::lower_bound(row.begin(), row.end(), p, [](const auto& e, std::size_t k) { return e.first < k; });
            if (it == row.end() || it->first != p) continue;
            const K c = it->second;
            Vec<K> dense = zeros<K>(dim_, f_);
            for (const auto& [j, x] : row) dense[j] = x;
            for (const auto& [j, x] : nr) dense[j] -= c * x;
            row = sparsify(dense);
        }
        rows_.emplace(p, std::move(nr));
        return true;
    }

    std::vector<std::size_t> pivots() const {
        std::vector<std::size_t> ps;
        for (const auto& kv : rows_) ps.push_back(kv.first);
        return ps;
    }

    std::vector<std::size_t> free_columns() const {
        std::vector<std::size_t> fs;
        for (std::size_t j = 0; j < dim_; ++j)
            if (!rows_.count(j)) fs.push_back(j);
        return fs;
    }

    std::vector<Vec<K>> basis() const {
        std::vector<Vec<K>> b;
        for (const auto& kv : rows_) {
            Vec<K> d = zeros<K>(dim_, f_);
            for (const auto& [j, x] : kv.second) d[j] = x;
            b.push_back(std::move(d));
        }
        return b;
    }

private:
    std::size_t dim_ = 0;
    Field f_{};
    std::map<std::size_t, SparseVec<K>> rows_;
};

}  // namespace algd
