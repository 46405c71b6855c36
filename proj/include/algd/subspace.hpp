#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algd/algebra.hpp"

namespace algd::detail {

// Coordinates relative to a linearly independent family of columns. A square block
// of independent rows is inverted once, so membership tests are a product and a
// comparison.
template <class K>
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(Matrix<K> E) : E_(std::move(E)) {
        if (E_.cols() == 0) return;
        rows_ = rref(E_.transpose()).pivots;
        if (rows_.size() != E_.cols()) throw Error(ErrorCode::Singular, "subspace basis is not independent");
        Matrix<K> sq(E_.cols(), E_.cols(), E_.field());
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < E_.cols(); ++j) sq(i, j) = E_(rows_[i], j);
        inv_ = invert(sq);
    }

    std::size_t dim() const { return E_.cols(); }
    const Matrix<K>& basis() const { return E_; }
    Vec<K> embed(const Vec<K>& x) const { return E_.apply(x); }

    std::optional<Vec<K>> try_coords(const Vec<K>& v) const {
        if (E_.cols() == 0) {
            if (!is_zero(v)) return std::nullopt;
            return Vec<K>{};
        }
        Vec<K> r;
        r.reserve(rows_.size());
        for (auto i : rows_) r.push_back(v[i]);
        Vec<K> x = inv_.apply(r);
        if (E_.apply(x) != v) return std::nullopt;
        return x;
    }

    Vec<K> coords(const Vec<K>& v, const std::string& what) const {
        auto x = try_coords(v);
        if (!x) throw Error(ErrorCode::Inconsistent, what + ": element outside the subspace");
        return *x;
    }

private:
    Matrix<K> E_;
    std::vector<std::size_t> rows_;
    Matrix<K> inv_;
};

template <class K>
Vec<K> flatten(const Matrix<K>& T) {
    Vec<K> v;
    v.reserve(T.rows() * T.cols());
    for (std::size_t r = 0; r < T.rows(); ++r)
        for (std::size_t c = 0; c < T.cols(); ++c) v.push_back(T(r, c));
    return v;
}

template <class K>
Matrix<K> unflatten(const Vec<K>& v, std::size_t n, const Field& f) {
    Matrix<K> T(n, n, f);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) T(r, c) = v[r * n + c];
    return T;
}

template <class K>
bool is_unit_vector(const Vec<K>& v, std::size_t& at) {
    bool found = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (found || !v[i].is_one()) return false;
        found = true;
        at = i;
    }
    return found;
}

// Algebra on the span of the columns of `space`, closed under `mul`.
template <class K, class Mul>
AlgPtr<K> span_algebra(const Subspace<K>& space, Mul&& mul, const Vec<K>& one, std::vector<std::string> names, const std::string& what) {
    const std::size_t m = space.dim();
    const Field f = space.basis().field();
    std::vector<K> consts(m * m * m, K::zero(f));
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
            Vec<K> c = space.coords(mul(space.basis().col(p), space.basis().col(q)), what);
            for (std::size_t r = 0; r < m; ++r) consts[(p * m + q) * m + r] = c[r];
        }
    return make_algebra(Algebra<K>(m, std::move(consts), space.coords(one, what), f, std::move(names)));
}

}  // namespace algd::detail
