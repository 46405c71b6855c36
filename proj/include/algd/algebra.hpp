#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "algd/matrix.hpp"
#include "algd/report.hpp"

namespace algd {

// Finite-dimensional unital associative algebra given by structure constants
// e_i e_j = sum_k c(i,j,k) e_k.
template <class K>
class Algebra {
public:
    Algebra(std::size_t n, std::vector<K> constants, Vec<K> unit, const Field& f, std::vector<std::string> names = {})
        : n_(n), f_(f), c_(std::move(constants)), unit_(std::move(unit)), names_(std::move(names)) {
        if (c_.size() != n_ * n_ * n_ || unit_.size() != n_)
            throw Error(ErrorCode::DimensionMismatch, "structure constants do not match dimension " + std::to_string(n_));
        if (names_.empty())
            for (std::size_t i = 0; i < n_; ++i) names_.push_back("e" + std::to_string(i));
        if (names_.size() != n_) throw Error(ErrorCode::DimensionMismatch, "basis names");
        index();
        check();
    }

    // Build from a multiplication rule on basis indices returning a vector.
    template <class F>
    static Algebra from_rule(std::size_t n, F&& rule, Vec<K> unit, const Field& f, std::vector<std::string> names = {}) {
        std::vector<K> c(n * n * n, K::zero(f));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec<K> v = rule(i, j);
                for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = v[k];
            }
        return Algebra(n, std::move(c), std::move(unit), f, std::move(names));
    }

    std::size_t dim() const { return n_; }
    const Field& field() const { return f_; }
    const K& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
    const std::vector<K>& constants() const { return c_; }
    const Vec<K>& one() const { return unit_; }
    Vec<K> basis(std::size_t i) const { return unit_vector<K>(n_, i, f_); }
    Vec<K> zero() const { return zeros<K>(n_, f_); }
    const std::vector<std::string>& names() const { return names_; }

    Vec<K> mul(const Vec<K>& a, const Vec<K>& b) const {
        if (a.size() != n_ || b.size() != n_) throw Error(ErrorCode::AlgebraMismatch, "element length does not match algebra dimension");
        Vec<K> out = zeros<K>(n_, f_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (b[j].is_zero()) continue;
                K ab = a[i] * b[j];
                for (const auto& [k, x] : sparse_[i * n_ + j]) out[k] += ab * x;
            }
        }
        return out;
    }
    Vec<K> mul(const Vec<K>& a, const Vec<K>& b, const Vec<K>& c) const { return mul(mul(a, b), c); }

    // matrix of x -> a x
    Matrix<K> left_mult(const Vec<K>& a) const {
        Matrix<K> m(n_, n_, f_);
        for (std::size_t j = 0; j < n_; ++j) m.set_col(j, mul(a, basis(j)));
        return m;
    }
    // matrix of x -> x a
    Matrix<K> right_mult(const Vec<K>& a) const {
        Matrix<K> m(n_, n_, f_);
        for (std::size_t j = 0; j < n_; ++j) m.set_col(j, mul(basis(j), a));
        return m;
    }

    bool is_commutative() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k)
                    if (c(i, j, k) != c(j, i, k)) return false;
        return true;
    }

    Algebra opposite() const {
        std::vector<K> d(n_ * n_ * n_, K::zero(f_));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k) d[(i * n_ + j) * n_ + k] = c(j, i, k);
        return Algebra(n_, std::move(d), unit_, f_, names_);
    }

    std::string format(const Vec<K>& v) const {
        std::string s;
        for (std::size_t i = 0; i < n_; ++i) {
            if (v[i].is_zero()) continue;
            std::string coef = v[i].str();
            bool neg = !coef.empty() && coef[0] == '-';
            if (neg) coef = coef.substr(1);
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            if (coef == "1" || coef == "1 mod " + std::to_string(f_.p))
                s += names_[i];
            else
                s += coef + "*" + names_[i];
        }
        return s.empty() ? "0" : s;
    }

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.n_ == b.n_ && a.f_ == b.f_ && a.c_ == b.c_ && a.unit_ == b.unit_;
    }
    friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }

private:
    void index() {
        sparse_.assign(n_ * n_, {});
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k) {
                    const K& x = c(i, j, k);
                    if (!x.is_zero()) sparse_[i * n_ + j].emplace_back(k, x);
                }
    }

    void check() const {
        for (std::size_t i = 0; i < n_; ++i) {
            Vec<K> e = basis(i);
            if (mul(unit_, e) != e || mul(e, unit_) != e)
                throw Error(ErrorCode::NotUnital, "unit fails on basis element " + names_[i]);
        }
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                Vec<K> ij = mul(basis(i), basis(j));
                for (std::size_t k = 0; k < n_; ++k)
                    if (mul(ij, basis(k)) != mul(basis(i), mul(basis(j), basis(k))))
                        throw Error(ErrorCode::NotAssociative, "(" + names_[i] + "," + names_[j] + "," + names_[k] + ")");
            }
    }

    std::size_t n_;
    Field f_;
    std::vector<K> c_;
    Vec<K> unit_;
    std::vector<std::string> names_;
    std::vector<SparseVec<K>> sparse_;
};

template <class K>
using AlgPtr = std::shared_ptr<const Algebra<K>>;

template <class K>
AlgPtr<K> make_algebra(Algebra<K> a) {
    return std::make_shared<const Algebra<K>>(std::move(a));
}

template <class K>
struct Element {
    AlgPtr<K> algebra;
    Vec<K> coeffs;

    friend Element operator*(const Element& a, const Element& b) { return multiply(a, b); }
    friend bool operator==(const Element& a, const Element& b) { return a.coeffs == b.coeffs; }
    std::string str() const { return algebra->format(coeffs); }
};

template <class K>
Element<K> multiply(const Element<K>& a, const Element<K>& b) {
    if (a.algebra != b.algebra && *a.algebra != *b.algebra)
        throw Error(ErrorCode::AlgebraMismatch, "elements of different algebras");
    return {a.algebra, a.algebra->mul(a.coeffs, b.coeffs)};
}

enum class Kind { Hom, AntiHom };

inline const char* kind_name(Kind k) { return k == Kind::Hom ? "hom" : "antihom"; }

template <class K>
struct Morphism {
    AlgPtr<K> src, tgt;
    Matrix<K> map;  // tgt.dim x src.dim
    Kind kind = Kind::Hom;

    Morphism() = default;
    Morphism(AlgPtr<K> s, AlgPtr<K> t, Matrix<K> m, Kind k) : src(std::move(s)), tgt(std::move(t)), map(std::move(m)), kind(k) {
        if (map.rows() != tgt->dim() || map.cols() != src->dim())
            throw Error(ErrorCode::DimensionMismatch, "morphism matrix shape");
    }

    Vec<K> operator()(const Vec<K>& v) const { return map.apply(v); }

    static Morphism identity(AlgPtr<K> a) { return Morphism(a, a, Matrix<K>::identity(a->dim(), a->field()), Kind::Hom); }
};

template <class K>
Report check_morphism(const Morphism<K>& f) {
    Report rep;
    const auto& S = *f.src;
    const auto& T = *f.tgt;
    Vec<K> one = f(S.one());
    if (one != T.one()) rep.add("unit", "1", T.format(one), T.format(T.one()));
    for (std::size_t i = 0; i < S.dim(); ++i)
        for (std::size_t j = 0; j < S.dim(); ++j) {
            Vec<K> lhs = f(S.mul(S.basis(i), S.basis(j)));
            Vec<K> fi = f.map.col(i), fj = f.map.col(j);
            Vec<K> rhs = f.kind == Kind::Hom ? T.mul(fi, fj) : T.mul(fj, fi);
            if (lhs != rhs)
                rep.add(f.kind == Kind::Hom ? "multiplicative" : "anti-multiplicative", "(" + S.names()[i] + "," + S.names()[j] + ")",
                        T.format(lhs), T.format(rhs));
        }
    return rep;
}

// f o g
template <class K>
Morphism<K> compose(const Morphism<K>& f, const Morphism<K>& g) {
    if (g.tgt->dim() != f.src->dim() || (g.tgt != f.src && *g.tgt != *f.src))
        throw Error(ErrorCode::AlgebraMismatch, "compose: target of g is not the source of f");
    Kind k = (f.kind == g.kind) ? Kind::Hom : Kind::AntiHom;
    return Morphism<K>(g.src, f.tgt, f.map * g.map, k);
}

template <class K>
Morphism<K> invert_morphism(const Morphism<K>& f) {
    return Morphism<K>(f.tgt, f.src, invert(f.map), f.kind);
}

// Matrix of the linear map (A -> B), used where only linearity is needed.
template <class K>
bool same_map(const Morphism<K>& a, const Morphism<K>& b) {
    return a.map == b.map && a.kind == b.kind;
}

}  // namespace algd
