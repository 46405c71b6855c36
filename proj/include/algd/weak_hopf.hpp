#pragma once

#include <string>
#include <vector>

#include "algd/fixtures.hpp"
#include "algd/hopf.hpp"
#include "algd/subspace.hpp"

namespace algd {

// Coproduct given as a lift into the plain tensor square (it need not preserve the
// unit), counit H -> k as a row, and an antipode.
template <class K>
struct WeakHopfAlgebra {
    std::string name;
    AlgPtr<K> H;
    Matrix<K> delta;    // n^2 x n
    Matrix<K> epsilon;  // 1 x n
    Morphism<K> S;
};

template <class K>
Report check_weak_hopf(const WeakHopfAlgebra<K>& w) {
    Report rep;
    const auto& H = *w.H;
    const std::size_t n = H.dim();
    const Field f = H.field();
    if (w.delta.rows() != n * n || w.delta.cols() != n || w.epsilon.rows() != 1 || w.epsilon.cols() != n || w.S.map.rows() != n || w.S.map.cols() != n) {
        rep.add("shape", "delta / epsilon / S");
        return rep;
    }
    auto eps = [&](const Vec<K>& h) { return w.epsilon.apply(h)[0]; };
    Morphism<K> S(w.H, w.H, w.S.map, Kind::AntiHom);
    rep.merge(check_morphism(S), "S");
    if (rank(S.map) != n) rep.add("S-bijective", "rank");

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vec<K> lhs = w.delta.apply(H.mul(H.basis(a), H.basis(b)));
            Vec<K> rhs = tensor_mul(H, H, w.delta.col(a), w.delta.col(b));
            if (lhs != rhs) rep.add("delta-multiplicative", basis_tuple(H, {a, b}));
        }
    for (std::size_t a = 0; a < n; ++a) {
        Vec<K> d = w.delta.col(a);
        if (lift_first_leg(w.delta, d, n) != lift_second_leg(w.delta, d, n)) rep.add("coassociative", H.names()[a]);
        Vec<K> l = H.zero(), r = H.zero();
        for_terms(d, n, [&](std::size_t i, std::size_t j, const K& c) {
            axpy(l, c * eps(H.basis(i)), H.basis(j));
            axpy(r, c * eps(H.basis(j)), H.basis(i));
        });
        if (l != H.basis(a) || r != H.basis(a)) rep.add("counit", H.names()[a], H.format(l) + " ; " + H.format(r), H.names()[a]);
    }

    // weak comultiplicativity of the unit
    const Vec<K> d1 = w.delta.apply(H.one());
    const Vec<K> d2 = lift_first_leg(w.delta, d1, n);
    Vec<K> u1 = zeros<K>(n * n * n, f), u2 = u1;
    for_terms(d1, n, [&](std::size_t i, std::size_t j, const K& c) {
        for_terms(d1, n, [&](std::size_t p, std::size_t q, const K& c2) {
            Vec<K> jp = H.mul(H.basis(j), H.basis(p)), pj = H.mul(H.basis(p), H.basis(j));
            for (std::size_t k = 0; k < n; ++k) {
                u1[(i * n + k) * n + q] += c * c2 * jp[k];  // 1_[1] (x) 1_[2] 1_[1'] (x) 1_[2']
                u2[(i * n + k) * n + q] += c * c2 * pj[k];  // 1_[1] (x) 1_[1'] 1_[2] (x) 1_[2']
            }
        });
    });
    if (u1 != d2) rep.add("weak-unit", "1_[1] (x) 1_[2] 1_[1'] (x) 1_[2']");
    if (u2 != d2) rep.add("weak-unit", "1_[1] (x) 1_[1'] 1_[2] (x) 1_[2']");

    // weak multiplicativity of the counit
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                K mid = eps(H.mul(H.basis(a), H.basis(b), H.basis(c)));
                K l = K::zero(f), r = K::zero(f);
                for_terms(w.delta.col(b), n, [&](std::size_t i, std::size_t j, const K& x) {
                    l += x * eps(H.mul(H.basis(a), H.basis(i))) * eps(H.mul(H.basis(j), H.basis(c)));
                    r += x * eps(H.mul(H.basis(a), H.basis(j))) * eps(H.mul(H.basis(i), H.basis(c)));
                });
                if (l != mid || r != mid) rep.add("weak-counit", basis_tuple(H, {a, b, c}), l.str() + " ; " + r.str(), mid.str());
            }

    // antipode axioms
    for (std::size_t a = 0; a < n; ++a) {
        const Vec<K> h = H.basis(a);
        Vec<K> x1 = H.zero(), x2 = H.zero(), r1 = H.zero(), r2 = H.zero(), x3 = H.zero();
        for_terms(w.delta.col(a), n, [&](std::size_t i, std::size_t j, const K& c) {
            axpy(x1, c, H.mul(H.basis(i), S(H.basis(j))));
            axpy(x2, c, H.mul(S(H.basis(i)), H.basis(j)));
            for_terms(w.delta.col(j), n, [&](std::size_t p, std::size_t q, const K& c2) {
                axpy(x3, c * c2, H.mul(S(H.basis(i)), H.basis(p), S(H.basis(q))));
            });
        });
        for_terms(d1, n, [&](std::size_t i, std::size_t j, const K& c) {
            axpy(r1, c * eps(H.mul(H.basis(i), h)), H.basis(j));
            axpy(r2, c * eps(H.mul(h, H.basis(j))), H.basis(i));
        });
        if (x1 != r1) rep.add("antipode-1", H.names()[a], H.format(x1), H.format(r1));
        if (x2 != r2) rep.add("antipode-2", H.names()[a], H.format(x2), H.format(r2));
        if (x3 != S(h)) rep.add("antipode-3", H.names()[a], H.format(x3), H.format(S(h)));
    }
    return rep;
}

template <class K>
void validate_weak_hopf(const WeakHopfAlgebra<K>& w) {
    Report rep = check_weak_hopf(w);
    if (!rep.ok()) throw Error(ErrorCode::AxiomViolation, w.name + ": not a weak Hopf algebra\n" + rep.text());
}

namespace detail {

// Projections onto the target and source subalgebras:
//   target h -> eps(1_[1] h) 1_[2],  source h -> 1_[1] eps(h 1_[2]).
template <class K>
Matrix<K> wha_projection(const WeakHopfAlgebra<K>& w, bool target) {
    const auto& H = *w.H;
    const std::size_t n = H.dim();
    Matrix<K> P(n, n, H.field());
    const Vec<K> d1 = w.delta.apply(H.one());
    for (std::size_t a = 0; a < n; ++a) {
        Vec<K> col = H.zero();
        for_terms(d1, n, [&](std::size_t i, std::size_t j, const K& c) {
            if (target)
                axpy(col, c * w.epsilon.apply(H.mul(H.basis(i), H.basis(a)))[0], H.basis(j));
            else
                axpy(col, c * w.epsilon.apply(H.mul(H.basis(a), H.basis(j)))[0], H.basis(i));
        });
        P.set_col(a, col);
    }
    return P;
}

// The image of P as a subalgebra of H, basis chosen greedily among the columns.
template <class K>
std::pair<AlgPtr<K>, Subspace<K>> image_subalgebra(const Algebra<K>& H, const Matrix<K>& P, const std::string& prefix) {
    SpanEchelon<K> span(H.dim(), H.field());
    std::vector<Vec<K>> cols;
    for (std::size_t a = 0; a < P.cols(); ++a)
        if (span.add(P.col(a))) cols.push_back(P.col(a));
    Subspace<K> space(Matrix<K>::from_columns(cols, H.dim(), H.field()));
    std::vector<std::string> names;
    for (std::size_t p = 0; p < cols.size(); ++p) {
        std::size_t at = 0;
        names.push_back(is_unit_vector(cols[p], at) ? H.names()[at] : prefix + std::to_string(p));
    }
    auto alg = span_algebra(space, [&](const Vec<K>& x, const Vec<K>& y) { return H.mul(x, y); }, H.one(), names, prefix + " subalgebra");
    return {alg, space};
}

}  // namespace detail

// Left bialgebroid over L = image of the target projection with s = inclusion,
// t = S^-1 on L; right bialgebroid over R = image of the source projection with
// s = inclusion, t = S^-1 on R. Both coproducts are Delta read in the quotients.
template <class K>
SymmetrizedHopfAlgebroid<K> wha_to_hopf_algebroid(const WeakHopfAlgebra<K>& w) {
    validate_weak_hopf(w);
    const auto& H = *w.H;
    const std::size_t n = H.dim();
    const Matrix<K> Sinv = invert(w.S.map);
    const Matrix<K> PL = detail::wha_projection(w, true), PR = detail::wha_projection(w, false);
    auto [L, Lspace] = detail::image_subalgebra(H, PL, "l");
    auto [R, Rspace] = detail::image_subalgebra(H, PR, "r");

    Matrix<K> piL(L->dim(), n, H.field()), piR(R->dim(), n, H.field());
    for (std::size_t a = 0; a < n; ++a) {
        piL.set_col(a, Lspace.coords(PL.col(a), "target projection"));
        piR.set_col(a, Rspace.coords(PR.col(a), "source projection"));
    }
    LeftBialgebroid<K> left(w.H, L, Morphism<K>(L, w.H, Lspace.basis(), Kind::Hom), Morphism<K>(L, w.H, Sinv * Lspace.basis(), Kind::AntiHom), w.delta, piL);
    RightBialgebroid<K> right(w.H, R, Morphism<K>(R, w.H, Rspace.basis(), Kind::Hom), Morphism<K>(R, w.H, Sinv * Rspace.basis(), Kind::AntiHom), w.delta, piR);
    auto T = make_symmetrized(std::move(left), std::move(right), w.S);
    Report rep = verify_symmetrized(T);
    if (!rep.ok()) throw Error(ErrorCode::AxiomViolation, w.name + ": weak Hopf algebra did not give a Hopf algebroid\n" + rep.text());
    return T;
}

// A finite groupoid algebra as a weak Hopf algebra: Delta(g) = g (x) g, eps(g) = 1, S(g) = g^-1.
template <class K>
WeakHopfAlgebra<K> groupoid_wha(const Groupoid& G, const Field& f, const std::string& name = "groupoid-wha") {
    GroupoidStructure st = check_groupoid(G);
    auto H = groupoid_algebra<K>(G, st, f);
    const std::size_t m = G.arrows.size();
    Matrix<K> delta(m * m, m, f), eps(1, m, f), S(m, m, f);
    for (std::size_t a = 0; a < m; ++a) {
        delta(a * m + a, a) = K::one(f);
        eps(0, a) = K::one(f);
        S(st.inverse[a], a) = K::one(f);
    }
    return {name, H, delta, eps, Morphism<K>(H, H, S, Kind::AntiHom)};
}

template <class K>
WeakHopfAlgebra<K> make_wha_pair2(const Field& f) {
    return groupoid_wha<K>(pair_groupoid2(), f, "wha-pair2");
}

}  // namespace algd
