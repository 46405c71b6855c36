#pragma once

#include <memory>
#include <string>
#include <utility>

#include "algd/lazy.hpp"
#include "algd/tensor.hpp"

namespace algd {

template <class K>
std::string basis_tuple(const Algebra<K>& A, std::initializer_list<std::size_t> idx) {
    std::string s = "(";
    bool first = true;
    for (auto i : idx) {
        if (!first) s += ",";
        s += A.names()[i];
        first = false;
    }
    return s + ")";
}

// Bimodule actions on the factors of A (x)_L A for a left bialgebroid:
// a.l = t(l) a on the left factor, l.b = s(l) b on the right factor.
template <class K>
BaseAction<K> left_tensor_action(const Morphism<K>& s, const Morphism<K>& t) {
    BaseAction<K> act{s.src, {}, {}};
    const auto& A = *s.tgt;
    for (std::size_t k = 0; k < s.src->dim(); ++k) {
        act.right_on_left.push_back(A.left_mult(t.map.col(k)));
        act.left_on_right.push_back(A.left_mult(s.map.col(k)));
    }
    return act;
}

// For a right bialgebroid: a.r = a s(r) on the left factor, r.b = b t(r) on the right.
template <class K>
BaseAction<K> right_tensor_action(const Morphism<K>& s, const Morphism<K>& t) {
    BaseAction<K> act{s.src, {}, {}};
    const auto& A = *s.tgt;
    for (std::size_t k = 0; k < s.src->dim(); ++k) {
        act.right_on_left.push_back(A.right_mult(s.map.col(k)));
        act.left_on_right.push_back(A.right_mult(t.map.col(k)));
    }
    return act;
}

enum class Side { Left, Right };

// Common data of left and right bialgebroids. The coproduct is a lift into the
// plain tensor square; only its class in the quotient carries meaning.
template <class K>
struct BialgebroidData {
    AlgPtr<K> A, base;
    Morphism<K> s, t;  // s: hom base -> A, t: anti-hom base -> A
    Matrix<K> gamma;   // n^2 x n
    Matrix<K> pi;      // d x n

    std::size_t n() const { return A->dim(); }
    std::size_t d() const { return base->dim(); }
    Vec<K> gamma_lift(const Vec<K>& a) const { return gamma.apply(a); }
    Vec<K> counit(const Vec<K>& a) const { return pi.apply(a); }
};

template <class K>
class LeftBialgebroid : public BialgebroidData<K> {
public:
    LeftBialgebroid(AlgPtr<K> A, AlgPtr<K> L, Morphism<K> s, Morphism<K> t, Matrix<K> gamma, Matrix<K> pi)
        : BialgebroidData<K>{std::move(A), std::move(L), std::move(s), std::move(t), std::move(gamma), std::move(pi)} {
        check_shapes(*this);
        Q_ = std::make_shared<const TensorQuotient<K>>(this->n(), this->n(), action());
    }

    BaseAction<K> action() const { return left_tensor_action(this->s, this->t); }
    const TensorQuotient<K>& Q() const { return *Q_; }
    QuotPtr<K> Qptr() const { return Q_; }
    Vec<K> gamma_class(const Vec<K>& a) const { return Q_->project(this->gamma.apply(a)); }

    const TripleQuotient<K>& triple() const {
        return triple_.get([&] { return TripleQuotient<K>(this->n(), action(), action()); });
    }

    // l . a . l' = s(l) t(l') a
    Vec<K> bimodule(const Vec<K>& l, const Vec<K>& a, const Vec<K>& lp) const {
        return this->A->mul(this->A->mul(this->s(l), this->t(lp)), a);
    }

private:
    static void check_shapes(const BialgebroidData<K>& b) {
        const std::size_t n = b.n(), d = b.d();
        if (b.gamma.rows() != n * n || b.gamma.cols() != n || b.pi.rows() != d || b.pi.cols() != n)
            throw Error(ErrorCode::DimensionMismatch, "bialgebroid coproduct/counit shapes");
        if (b.s.src->dim() != d || b.t.src->dim() != d || b.s.tgt->dim() != n || b.t.tgt->dim() != n)
            throw Error(ErrorCode::DimensionMismatch, "source/target map shapes");
    }

    QuotPtr<K> Q_;
    Lazy<TripleQuotient<K>> triple_;

    template <class>
    friend class RightBialgebroid;
};

template <class K>
class RightBialgebroid : public BialgebroidData<K> {
public:
    RightBialgebroid(AlgPtr<K> A, AlgPtr<K> R, Morphism<K> s, Morphism<K> t, Matrix<K> gamma, Matrix<K> pi)
        : BialgebroidData<K>{std::move(A), std::move(R), std::move(s), std::move(t), std::move(gamma), std::move(pi)} {
        LeftBialgebroid<K>::check_shapes(*this);
        Q_ = std::make_shared<const TensorQuotient<K>>(this->n(), this->n(), action());
    }

    BaseAction<K> action() const { return right_tensor_action(this->s, this->t); }
    const TensorQuotient<K>& Q() const { return *Q_; }
    QuotPtr<K> Qptr() const { return Q_; }
    Vec<K> gamma_class(const Vec<K>& a) const { return Q_->project(this->gamma.apply(a)); }

    const TripleQuotient<K>& triple() const {
        return triple_.get([&] { return TripleQuotient<K>(this->n(), action(), action()); });
    }

    // r . a . r' = a s(r') t(r)
    Vec<K> bimodule(const Vec<K>& r, const Vec<K>& a, const Vec<K>& rp) const {
        return this->A->mul(this->A->mul(a, this->s(rp)), this->t(r));
    }

private:
    QuotPtr<K> Q_;
    Lazy<TripleQuotient<K>> triple_;
};

namespace detail {

template <class K>
void check_source_target(const BialgebroidData<K>& B, Report& rep) {
    Morphism<K> s = B.s, t = B.t;
    s.kind = Kind::Hom;
    t.kind = Kind::AntiHom;
    rep.merge(check_morphism(s), "s");
    rep.merge(check_morphism(t), "t");
    const auto& A = *B.A;
    const auto& L = *B.base;
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j) {
            Vec<K> st = A.mul(B.s.map.col(i), B.t.map.col(j));
            Vec<K> ts = A.mul(B.t.map.col(j), B.s.map.col(i));
            if (st != ts) rep.add("st-commute", basis_tuple(L, {i, j}), A.format(st), A.format(ts));
        }
}

template <class K, class Bgd>
void check_coproduct_common(const Bgd& B, Report& rep) {
    const auto& A = *B.A;
    const auto& Q = B.Q();
    const std::size_t n = A.dim();
    // gamma(1) = 1 (x) 1
    Vec<K> g1 = B.gamma_class(A.one());
    Vec<K> one1 = Q.project(tensor(A.one(), A.one()));
    if (g1 != one1) rep.add("gamma-unit", "1", Q.format(g1, A, A), Q.format(one1, A, A));
    // multiplicativity
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> lhs = B.gamma_class(A.mul(A.basis(i), A.basis(j)));
            Vec<K> rhs = Q.project(tensor_mul(A, A, B.gamma_lift(A.basis(i)), B.gamma_lift(A.basis(j))));
            if (lhs != rhs) rep.add("gamma-multiplicative", basis_tuple(A, {i, j}), Q.format(lhs, A, A), Q.format(rhs, A, A));
        }
    // coassociativity
    const auto& T = B.triple();
    for (std::size_t a = 0; a < n; ++a) {
        Vec<K> g = B.gamma_lift(A.basis(a));
        Vec<K> l = lift_first_leg(B.gamma, g, n);
        Vec<K> r = lift_second_leg(B.gamma, g, n);
        if (!T.same_class(l, r)) rep.add("coassociativity", A.names()[a]);
    }
}

}  // namespace detail

template <class K>
Report verify_left(const LeftBialgebroid<K>& B) {
    Report rep;
    detail::check_source_target(B, rep);
    const auto& A = *B.A;
    const auto& L = *B.base;
    const auto& Q = B.Q();
    const std::size_t n = A.dim(), d = L.dim();
    Matrix<K> I = Matrix<K>::identity(n, A.field());

    for (std::size_t a = 0; a < n; ++a) {
        Vec<K> ga = B.gamma_lift(A.basis(a));
        // image lies in the Takeuchi product
        for (std::size_t k = 0; k < d; ++k) {
            Vec<K> lhs = tensor_apply(A.right_mult(B.t.map.col(k)), I, ga);
            Vec<K> rhs = tensor_apply(I, A.right_mult(B.s.map.col(k)), ga);
            if (!Q.same_class(lhs, rhs)) rep.add("takeuchi", basis_tuple(A, {a}) + " l=" + L.names()[k], Q.format(Q.project(lhs), A, A), Q.format(Q.project(rhs), A, A));
        }
        // bimodule map: gamma(s(l) a) = s(l) a(1) (x) a(2),  gamma(t(l) a) = a(1) (x) t(l) a(2)
        for (std::size_t k = 0; k < d; ++k) {
            Vec<K> sl = B.s.map.col(k), tl = B.t.map.col(k);
            Vec<K> lhs = B.gamma_class(A.mul(sl, A.basis(a)));
            Vec<K> rhs = Q.project(tensor_apply(A.left_mult(sl), I, ga));
            if (lhs != rhs) rep.add("gamma-bimodule-left", basis_tuple(A, {a}) + " l=" + L.names()[k], Q.format(lhs, A, A), Q.format(rhs, A, A));
            lhs = B.gamma_class(A.mul(tl, A.basis(a)));
            rhs = Q.project(tensor_apply(I, A.left_mult(tl), ga));
            if (lhs != rhs) rep.add("gamma-bimodule-right", basis_tuple(A, {a}) + " l=" + L.names()[k], Q.format(lhs, A, A), Q.format(rhs, A, A));
        }
        // counitality: s(pi(a(1))) a(2) = a = t(pi(a(2))) a(1)
        Vec<K> c1 = A.zero(), c2 = A.zero();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const K& x = ga[i * n + j];
                if (x.is_zero()) continue;
                axpy(c1, x, A.mul(B.s(B.counit(A.basis(i))), A.basis(j)));
                axpy(c2, x, A.mul(B.t(B.counit(A.basis(j))), A.basis(i)));
            }
        if (c1 != A.basis(a)) rep.add("counitality-left", A.names()[a], A.format(c1), A.names()[a]);
        if (c2 != A.basis(a)) rep.add("counitality-right", A.names()[a], A.format(c2), A.names()[a]);
    }
    detail::check_coproduct_common<K>(B, rep);

    // counit laws
    Vec<K> p1 = B.counit(A.one());
    if (p1 != L.one()) rep.add("counit-unit", "1", L.format(p1), L.format(L.one()));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vec<K> mid = B.counit(A.mul(A.basis(a), A.basis(b)));
            Vec<K> pb = B.counit(A.basis(b));
            Vec<K> viaS = B.counit(A.mul(A.basis(a), B.s(pb)));
            Vec<K> viaT = B.counit(A.mul(A.basis(a), B.t(pb)));
            if (viaS != mid) rep.add("counit", basis_tuple(A, {a, b}) + " s-form", L.format(viaS), L.format(mid));
            if (viaT != mid) rep.add("counit", basis_tuple(A, {a, b}) + " t-form", L.format(viaT), L.format(mid));
        }
    // counit is an L-L bimodule map: pi(s(l) t(l') a) = l pi(a) l'
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t a = 0; a < n; ++a) {
            Vec<K> l = L.basis(k);
            Vec<K> lhs = B.counit(A.mul(B.s(l), A.basis(a)));
            Vec<K> rhs = L.mul(l, B.counit(A.basis(a)));
            if (lhs != rhs) rep.add("counit-bimodule-left", basis_tuple(A, {a}) + " l=" + L.names()[k], L.format(lhs), L.format(rhs));
            lhs = B.counit(A.mul(B.t(l), A.basis(a)));
            rhs = L.mul(B.counit(A.basis(a)), l);
            if (lhs != rhs) rep.add("counit-bimodule-right", basis_tuple(A, {a}) + " l=" + L.names()[k], L.format(lhs), L.format(rhs));
        }
    return rep;
}

template <class K>
Report verify_right(const RightBialgebroid<K>& B) {
    Report rep;
    detail::check_source_target(B, rep);
    const auto& A = *B.A;
    const auto& R = *B.base;
    const auto& Q = B.Q();
    const std::size_t n = A.dim(), d = R.dim();
    Matrix<K> I = Matrix<K>::identity(n, A.field());

    for (std::size_t a = 0; a < n; ++a) {
        Vec<K> ga = B.gamma_lift(A.basis(a));
        // s(r) a(1) (x) a(2) = a(1) (x) t(r) a(2)
        for (std::size_t k = 0; k < d; ++k) {
            Vec<K> lhs = tensor_apply(A.left_mult(B.s.map.col(k)), I, ga);
            Vec<K> rhs = tensor_apply(I, A.left_mult(B.t.map.col(k)), ga);
            if (!Q.same_class(lhs, rhs)) rep.add("takeuchi-right", basis_tuple(A, {a}) + " r=" + R.names()[k], Q.format(Q.project(lhs), A, A), Q.format(Q.project(rhs), A, A));
        }
        // bimodule map: gamma(a t(r)) = a(1) t(r) (x) a(2),  gamma(a s(r)) = a(1) (x) a(2) s(r)
        for (std::size_t k = 0; k < d; ++k) {
            Vec<K> sr = B.s.map.col(k), tr = B.t.map.col(k);
            Vec<K> lhs = B.gamma_class(A.mul(A.basis(a), tr));
            Vec<K> rhs = Q.project(tensor_apply(A.right_mult(tr), I, ga));
            if (lhs != rhs) rep.add("gamma-bimodule-left", basis_tuple(A, {a}) + " r=" + R.names()[k], Q.format(lhs, A, A), Q.format(rhs, A, A));
            lhs = B.gamma_class(A.mul(A.basis(a), sr));
            rhs = Q.project(tensor_apply(I, A.right_mult(sr), ga));
            if (lhs != rhs) rep.add("gamma-bimodule-right", basis_tuple(A, {a}) + " r=" + R.names()[k], Q.format(lhs, A, A), Q.format(rhs, A, A));
        }
        // counitality: a(1) s(pi(a(2))) = a = a(2) t(pi(a(1)))
        Vec<K> c1 = A.zero(), c2 = A.zero();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const K& x = ga[i * n + j];
                if (x.is_zero()) continue;
                axpy(c1, x, A.mul(A.basis(i), B.s(B.counit(A.basis(j)))));
                axpy(c2, x, A.mul(A.basis(j), B.t(B.counit(A.basis(i)))));
            }
        if (c1 != A.basis(a)) rep.add("counitality-right", A.names()[a], A.format(c1), A.names()[a]);
        if (c2 != A.basis(a)) rep.add("counitality-left", A.names()[a], A.format(c2), A.names()[a]);
    }
    detail::check_coproduct_common<K>(B, rep);

    Vec<K> p1 = B.counit(A.one());
    if (p1 != R.one()) rep.add("counit-unit", "1", R.format(p1), R.format(R.one()));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vec<K> mid = B.counit(A.mul(A.basis(a), A.basis(b)));
            Vec<K> pa = B.counit(A.basis(a));
            Vec<K> viaS = B.counit(A.mul(B.s(pa), A.basis(b)));
            Vec<K> viaT = B.counit(A.mul(B.t(pa), A.basis(b)));
            if (viaS != mid) rep.add("counit", basis_tuple(A, {a, b}) + " s-form", R.format(viaS), R.format(mid));
            if (viaT != mid) rep.add("counit", basis_tuple(A, {a, b}) + " t-form", R.format(viaT), R.format(mid));
        }
    // pi(a s(r') t(r)) = r pi(a) r'
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t a = 0; a < n; ++a) {
            Vec<K> r = R.basis(k);
            Vec<K> lhs = B.counit(A.mul(A.basis(a), B.s(r)));
            Vec<K> rhs = R.mul(B.counit(A.basis(a)), r);
            if (lhs != rhs) rep.add("counit-bimodule-right", basis_tuple(A, {a}) + " r=" + R.names()[k], R.format(lhs), R.format(rhs));
            lhs = B.counit(A.mul(A.basis(a), B.t(r)));
            rhs = R.mul(r, B.counit(A.basis(a)));
            if (lhs != rhs) rep.add("counit-bimodule-left", basis_tuple(A, {a}) + " r=" + R.names()[k], R.format(lhs), R.format(rhs));
        }
    return rep;
}

template <class K>
AlgPtr<K> opposite_ptr(const AlgPtr<K>& A) {
    if (A->is_commutative()) return A;
    return make_algebra(A->opposite());
}

// (A, L^op, t, s, gamma^op, pi)
template <class K>
LeftBialgebroid<K> coopposite(const LeftBialgebroid<K>& B, AlgPtr<K> Lop = nullptr) {
    if (!Lop) Lop = opposite_ptr(B.base);
    const std::size_t n = B.n();
    Matrix<K> g(n * n, n, B.A->field());
    for (std::size_t a = 0; a < n; ++a) g.set_col(a, tensor_flip(B.gamma.col(a), n, n));
    return LeftBialgebroid<K>(B.A, Lop, Morphism<K>(Lop, B.A, B.t.map, Kind::Hom), Morphism<K>(Lop, B.A, B.s.map, Kind::AntiHom), g, B.pi);
}

template <class K>
RightBialgebroid<K> coopposite(const RightBialgebroid<K>& B, AlgPtr<K> Rop = nullptr) {
    if (!Rop) Rop = opposite_ptr(B.base);
    const std::size_t n = B.n();
    Matrix<K> g(n * n, n, B.A->field());
    for (std::size_t a = 0; a < n; ++a) g.set_col(a, tensor_flip(B.gamma.col(a), n, n));
    return RightBialgebroid<K>(B.A, Rop, Morphism<K>(Rop, B.A, B.t.map, Kind::Hom), Morphism<K>(Rop, B.A, B.s.map, Kind::AntiHom), g, B.pi);
}

// (A^op, L, t, s, gamma, pi) as a right bialgebroid
template <class K>
RightBialgebroid<K> opposite(const LeftBialgebroid<K>& B, AlgPtr<K> Aop = nullptr) {
    if (!Aop) Aop = opposite_ptr(B.A);
    return RightBialgebroid<K>(Aop, B.base, Morphism<K>(B.base, Aop, B.t.map, Kind::Hom), Morphism<K>(B.base, Aop, B.s.map, Kind::AntiHom), B.gamma, B.pi);
}

template <class K>
LeftBialgebroid<K> opposite(const RightBialgebroid<K>& B, AlgPtr<K> Aop = nullptr) {
    if (!Aop) Aop = opposite_ptr(B.A);
    return LeftBialgebroid<K>(Aop, B.base, Morphism<K>(B.base, Aop, B.t.map, Kind::Hom), Morphism<K>(B.base, Aop, B.s.map, Kind::AntiHom), B.gamma, B.pi);
}

// Same algebras (as structure constants), same maps, same coproduct class.
template <class K, class Bgd>
bool structurally_equal(const Bgd& X, const Bgd& Y) {
    if (*X.A != *Y.A || *X.base != *Y.base) return false;
    if (X.s.map != Y.s.map || X.t.map != Y.t.map || X.pi != Y.pi) return false;
    for (std::size_t a = 0; a < X.n(); ++a)
        if (!X.Q().same_class(X.gamma.col(a), Y.gamma.col(a))) return false;
    return true;
}

template <class K>
struct BialgebroidMorphism {
    Morphism<K> Phi;  // total
    Morphism<K> phi;  // base
};

template <class K>
Report check_bialgebroid_morphism(const BialgebroidMorphism<K>& m, const LeftBialgebroid<K>& src, const LeftBialgebroid<K>& dst) {
    Report rep;
    Morphism<K> Phi = m.Phi, phi = m.phi;
    Phi.kind = Kind::Hom;
    phi.kind = Kind::Hom;
    Phi.src = src.A;
    Phi.tgt = dst.A;
    phi.src = src.base;
    phi.tgt = dst.base;
    rep.merge(check_morphism(Phi), "Phi");
    rep.merge(check_morphism(phi), "phi");
    const auto& A = *src.A;
    const auto& A2 = *dst.A;
    const auto& L = *src.base;
    if (dst.s.map * phi.map != Phi.map * src.s.map) rep.add("morphism-source", "s'phi vs Phi s", (dst.s.map * phi.map).str(), (Phi.map * src.s.map).str());
    if (dst.t.map * phi.map != Phi.map * src.t.map) rep.add("morphism-target", "t'phi vs Phi t", (dst.t.map * phi.map).str(), (Phi.map * src.t.map).str());
    if (dst.pi * Phi.map != phi.map * src.pi) rep.add("morphism-counit", "pi'Phi vs phi pi", (dst.pi * Phi.map).str(), (phi.map * src.pi).str());
    for (std::size_t a = 0; a < A.dim(); ++a) {
        Vec<K> lhs = dst.gamma_class(Phi(A.basis(a)));
        Vec<K> rhs = dst.Q().project(tensor_apply(Phi.map, Phi.map, src.gamma_lift(A.basis(a))));
        if (lhs != rhs) rep.add("morphism-coproduct", A.names()[a], dst.Q().format(lhs, A2, A2), dst.Q().format(rhs, A2, A2));
    }
    (void)L;
    return rep;
}

template <class K>
Report check_bialgebroid_morphism(const BialgebroidMorphism<K>& m, const RightBialgebroid<K>& src, const RightBialgebroid<K>& dst) {
    auto so = opposite(src);
    auto dop = opposite(dst);
    BialgebroidMorphism<K> mo{Morphism<K>(so.A, dop.A, m.Phi.map, Kind::Hom), Morphism<K>(so.base, dop.base, m.phi.map, Kind::Hom)};
    return check_bialgebroid_morphism(mo, so, dop);
}

}  // namespace algd
