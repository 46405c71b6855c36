#pragma once

#include <string>
#include <utility>
#include <vector>

#include "algd/bialgebroid.hpp"

namespace algd {

// The four base-valued duals of a bialgebroid.
//   LowerRight  A_*  : maps A_L -> L_L,  phi(t_L(l) a) = phi(a) l
//   LowerLeft   _*A  : maps _LA -> _LL,  phi(s_L(l) a) = l phi(a)
//   UpperRight  A^*  : maps A^R -> R^R,  phi(a s_R(r)) = phi(a) r
//   UpperLeft   ^*A  : maps ^RA -> ^RR,  phi(a t_R(r)) = r phi(a)
enum class DualKind { LowerRight, LowerLeft, UpperRight, UpperLeft };

inline const char* dual_kind_name(DualKind k) {
    switch (k) {
        case DualKind::LowerRight: return "A_*";
        case DualKind::LowerLeft: return "_*A";
        case DualKind::UpperRight: return "A^*";
        case DualKind::UpperLeft: return "^*A";
    }
    return "?";
}

inline bool is_lower(DualKind k) { return k == DualKind::LowerRight || k == DualKind::LowerLeft; }

// A dual ring realized inside Hom_k(A, base). Carrier elements are coordinate vectors with
// respect to `functionals`, each a (base dim) x (A dim) matrix.
template <class K>
struct DualRing {
    DualKind which;
    BialgebroidData<K> bgd;
    AlgPtr<K> carrier;
    std::vector<Matrix<K>> functionals;
    Matrix<K> flat;  // (d*n) x m, column p = functionals[p] flattened row-major

    std::size_t dim() const { return functionals.size(); }
    std::size_t n() const { return bgd.n(); }
    std::size_t d() const { return bgd.d(); }

    Matrix<K> functional(const Vec<K>& phi) const {
        Vec<K> v = flat.apply(phi);
        Matrix<K> F(d(), n(), bgd.A->field());
        for (std::size_t r = 0; r < d(); ++r)
            for (std::size_t c = 0; c < n(); ++c) F(r, c) = v[r * n() + c];
        return F;
    }
    Vec<K> eval(const Vec<K>& phi, const Vec<K>& a) const { return functional(phi).apply(a); }

    // Coordinates of a functional given as a matrix; throws Inconsistent when outside the dual.
    Vec<K> coordinates(const Matrix<K>& F) const {
        Vec<K> v;
        v.reserve(d() * n());
        for (std::size_t r = 0; r < d(); ++r)
            for (std::size_t c = 0; c < n(); ++c) v.push_back(F(r, c));
        return solve_linear(flat, v);
    }
};

namespace detail {

// Linear constraints on the flattened d x n matrix of a functional.
template <class K>
Matrix<K> dual_constraints(const BialgebroidData<K>& B, DualKind which) {
    const auto& A = *B.A;
    const auto& L = *B.base;
    const std::size_t n = A.dim(), d = L.dim();
    std::vector<Vec<K>> rows;
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t a = 0; a < n; ++a) {
            // phi(x) - (combination of phi(a)) = 0, one row per output coordinate
            Vec<K> x;
            switch (which) {
                case DualKind::LowerRight: x = A.mul(B.t.map.col(k), A.basis(a)); break;
                case DualKind::LowerLeft: x = A.mul(B.s.map.col(k), A.basis(a)); break;
                case DualKind::UpperRight: x = A.mul(A.basis(a), B.s.map.col(k)); break;
                case DualKind::UpperLeft: x = A.mul(A.basis(a), B.t.map.col(k)); break;
            }
            // right-hand side: phi(a) l (right regular) or l phi(a) (left regular)
            const bool right = which == DualKind::LowerRight || which == DualKind::UpperRight;
            Matrix<K> Mk = right ? L.right_mult(L.basis(k)) : L.left_mult(L.basis(k));
            for (std::size_t r = 0; r < d; ++r) {
                Vec<K> row = zeros<K>(d * n, A.field());
                for (std::size_t c = 0; c < n; ++c) row[r * n + c] += x[c];
                for (std::size_t q = 0; q < d; ++q) row[q * n + a] -= Mk(r, q);
                if (!algd::is_zero(row)) rows.push_back(row);
            }
        }
    if (rows.empty()) return Matrix<K>(1, d * n, A.field());
    return Matrix<K>::from_rows(rows, d * n, A.field());
}

}  // namespace detail

// Realizes one of the four duals with the product transposed from the coproduct:
//   A_*: (phi psi)(a) = psi(s_L(phi(a(1))) a(2))     _*A: (phi psi)(a) = psi(t_L(phi(a(2))) a(1))
//   A^*: (phi psi)(a) = phi(a(2) t_R(psi(a(1))))     ^*A: (phi psi)(a) = phi(a(1) s_R(psi(a(2))))
template <class K>
DualRing<K> build_dual_ring(const BialgebroidData<K>& B, DualKind which) {
    const auto& A = *B.A;
    const std::size_t n = A.dim(), d = B.d();
    const Field f = A.field();
    DualRing<K> D{which, B, nullptr, {}, Matrix<K>(d * n, 0, f)};
    auto kb = kernel_basis(detail::dual_constraints(B, which));
    for (const auto& v : kb) {
        Matrix<K> F(d, n, f);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < n; ++c) F(r, c) = v[r * n + c];
        D.functionals.push_back(F);
    }
    const std::size_t m = kb.size();
    D.flat = Matrix<K>::from_columns(kb, d * n, f);

    auto product = [&](const Matrix<K>& P, const Matrix<K>& R) {
        Matrix<K> out(d, n, f);
        for (std::size_t a = 0; a < n; ++a) {
            Vec<K> val = zeros<K>(d, f);
            const Vec<K> g = B.gamma.col(a);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const K& c = g[i * n + j];
                    if (c.is_zero()) continue;
                    Vec<K> x;
                    switch (which) {
                        case DualKind::LowerRight: x = R.apply(A.mul(B.s(P.col(i)), A.basis(j))); break;
                        case DualKind::LowerLeft: x = R.apply(A.mul(B.t(P.col(j)), A.basis(i))); break;
                        case DualKind::UpperRight: x = P.apply(A.mul(A.basis(j), B.t(R.col(i)))); break;
                        case DualKind::UpperLeft: x = P.apply(A.mul(A.basis(i), B.s(R.col(j)))); break;
                    }
                    axpy(val, c, x);
                }
            out.set_col(a, val);
        }
        return out;
    };
    std::vector<std::string> names;
    for (std::size_t p = 0; p < m; ++p) names.push_back(std::string(is_lower(which) ? "f" : "g") + std::to_string(p));
    std::vector<K> consts(m * m * m, K::zero(f));
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
            Vec<K> c = D.coordinates(product(D.functionals[p], D.functionals[q]));
            for (std::size_t r = 0; r < m; ++r) consts[(p * m + q) * m + r] = c[r];
        }
    Vec<K> unit = D.coordinates(B.pi);
    D.carrier = make_algebra(Algebra<K>(m, std::move(consts), std::move(unit), f, names));
    return D;
}

// The A-action on the dual:  a -> phi  (A_*),  a -> phi (_*A) : (.)(b) = phi(b a)
//                            phi <- a  (A^*),  phi <- a (^*A) : (.)(b) = phi(a b)
template <class K>
Vec<K> act_on_dual(const DualRing<K>& D, const Vec<K>& a, const Vec<K>& phi) {
    const auto& A = *D.bgd.A;
    Matrix<K> F = D.functional(phi);
    Matrix<K> M = is_lower(D.which) ? A.right_mult(a) : A.left_mult(a);
    return D.coordinates(F * M);
}

// The dual acting on A:
//   a <- phi_*   = s_L(phi(a(1))) a(2)        a <- _*phi  = t_L(phi(a(2))) a(1)
//   phi^* -> a   = a(2) t_R(phi(a(1)))        ^*phi -> a  = a(1) s_R(phi(a(2)))
template <class K>
Vec<K> act_on_total(const DualRing<K>& D, const Vec<K>& phi, const Vec<K>& a) {
    const auto& B = D.bgd;
    const auto& A = *B.A;
    const std::size_t n = A.dim();
    Matrix<K> F = D.functional(phi);
    Vec<K> g = B.gamma.apply(a);
    Vec<K> out = A.zero();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const K& c = g[i * n + j];
            if (c.is_zero()) continue;
            Vec<K> x;
            switch (D.which) {
                case DualKind::LowerRight: x = A.mul(B.s(F.col(i)), A.basis(j)); break;
                case DualKind::LowerLeft: x = A.mul(B.t(F.col(j)), A.basis(i)); break;
                case DualKind::UpperRight: x = A.mul(A.basis(j), B.t(F.col(i))); break;
                case DualKind::UpperLeft: x = A.mul(A.basis(i), B.s(F.col(j))); break;
            }
            axpy(out, c, x);
        }
    return out;
}

// Module laws for both actions, exhaustively on basis elements.
template <class K>
Report check_dual_actions(const DualRing<K>& D) {
    Report rep;
    const auto& A = *D.bgd.A;
    const auto& C = *D.carrier;
    const std::size_t n = A.dim(), m = C.dim();
    const bool lower = is_lower(D.which);
    for (std::size_t a = 0; a < n; ++a) {
        if (act_on_total(D, C.one(), A.basis(a)) != A.basis(a)) rep.add("dual-action-unit", A.names()[a]);
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = 0; q < m; ++q) {
                Vec<K> pq = C.mul(C.basis(p), C.basis(q));
                Vec<K> lhs = act_on_total(D, pq, A.basis(a));
                // right modules for the lower duals, left modules for the upper ones
                Vec<K> rhs = lower ? act_on_total(D, C.basis(q), act_on_total(D, C.basis(p), A.basis(a)))
                                   : act_on_total(D, C.basis(p), act_on_total(D, C.basis(q), A.basis(a)));
                if (lhs != rhs) rep.add("dual-action-module", basis_tuple(A, {a}) + " " + basis_tuple(C, {p, q}), A.format(lhs), A.format(rhs));
            }
    }
    for (std::size_t p = 0; p < m; ++p) {
        if (act_on_dual(D, A.one(), C.basis(p)) != C.basis(p)) rep.add("total-action-unit", C.names()[p]);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                Vec<K> ab = A.mul(A.basis(a), A.basis(b));
                Vec<K> lhs = act_on_dual(D, ab, C.basis(p));
                Vec<K> rhs = lower ? act_on_dual(D, A.basis(a), act_on_dual(D, A.basis(b), C.basis(p)))
                                   : act_on_dual(D, A.basis(b), act_on_dual(D, A.basis(a), C.basis(p)));
                if (lhs != rhs) rep.add("total-action-module", basis_tuple(A, {a, b}) + " " + C.names()[p]);
            }
    }
    return rep;
}

// Generators b_i of the base module together with dual functionals beta_i:
//   A_*: a = sum t_L(beta_i(a)) b_i     _*A: a = sum s_L(beta_i(a)) b_i
//   A^*: a = sum b_i s_R(beta_i(a))     ^*A: a = sum b_i t_R(beta_i(a))
template <class K>
struct DualBasis {
    DualKind side;
    std::vector<Vec<K>> generators;
    std::vector<Vec<K>> functionals;  // carrier coordinates
};

namespace detail {

template <class K>
Vec<K> dual_basis_term(const DualRing<K>& D, const Vec<K>& b, const Vec<K>& l) {
    const auto& B = D.bgd;
    const auto& A = *B.A;
    switch (D.which) {
        case DualKind::LowerRight: return A.mul(B.t(l), b);
        case DualKind::LowerLeft: return A.mul(B.s(l), b);
        case DualKind::UpperRight: return A.mul(b, B.s(l));
        case DualKind::UpperLeft: return A.mul(b, B.t(l));
    }
    return {};
}

}  // namespace detail

template <class K>
DualBasis<K> find_dual_basis(const DualRing<K>& D, std::vector<Vec<K>> gens = {}) {
    const auto& A = *D.bgd.A;
    const std::size_t n = A.dim(), m = D.dim(), d = D.d();
    const Field f = A.field();
    if (gens.empty())
        for (std::size_t i = 0; i < n; ++i) gens.push_back(A.basis(i));
    const std::size_t g = gens.size();
    // unknowns (i, p): coordinate p of beta_i; equations (a, c): coefficient c of the sum at a
    Matrix<K> M(n * n, g * m, f);
    Vec<K> rhs = zeros<K>(n * n, f);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t c = 0; c < n; ++c) rhs[a * n + c] = a == c ? K::one(f) : K::zero(f);
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t p = 0; p < m; ++p) {
                Vec<K> l = zeros<K>(d, f);
                for (std::size_t r = 0; r < d; ++r) l[r] = D.functionals[p](r, a);
                if (algd::is_zero(l)) continue;
                Vec<K> v = detail::dual_basis_term(D, gens[i], l);
                for (std::size_t c = 0; c < n; ++c) M(a * n + c, i * m + p) = v[c];
            }
    }
    Vec<K> x;
    try {
        x = solve_linear(M, rhs);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Inconsistent)
            throw Error(ErrorCode::NotProjective, std::string(dual_kind_name(D.which)) + ": no dual basis for the given generators");
        throw;
    }
    DualBasis<K> db{D.which, gens, {}};
    for (std::size_t i = 0; i < g; ++i) db.functionals.push_back(Vec<K>(x.begin() + i * m, x.begin() + (i + 1) * m));
    return db;
}

template <class K>
Report check_dual_basis(const DualRing<K>& D, const DualBasis<K>& db) {
    Report rep;
    const auto& A = *D.bgd.A;
    for (std::size_t a = 0; a < A.dim(); ++a) {
        Vec<K> s = A.zero();
        for (std::size_t i = 0; i < db.generators.size(); ++i) s = s + detail::dual_basis_term(D, db.generators[i], D.eval(db.functionals[i], A.basis(a)));
        if (s != A.basis(a)) rep.add("dual-basis", A.names()[a], A.format(s), A.names()[a]);
    }
    return rep;
}

// Data of a bialgebroid carried by a dual ring, ready to be wrapped as Left/Right.
template <class K>
struct DualBialgebroidData {
    AlgPtr<K> carrier, base;
    Matrix<K> s, t, gamma, pi;
};

// The four constructions:
//   A_*  right over L: s(l)(a) = pi_L(a s_L(l)),  t(l)(a) = l pi_L(a),  gamma(phi) = b_i -> phi (x) beta_i
//   _*A  right over L: s(l)(a) = pi_L(a) l,       t(l)(a) = pi_L(a t_L(l)), gamma(phi) = beta_i (x) b_i -> phi
//   A^*  left over R:  s(r)(a) = r pi_R(a),       t(r)(a) = pi_R(s_R(r) a), gamma(phi) = phi <- b_i (x) beta_i
//   ^*A  left over R:  s(r)(a) = pi_R(t_R(r) a),  t(r)(a) = pi_R(a) r,      gamma(phi) = beta_i (x) phi <- b_i
// and the counit is evaluation at 1 in all four.
template <class K>
DualBialgebroidData<K> dual_bialgebroid_data(const DualRing<K>& D, const DualBasis<K>& db) {
    const auto& B = D.bgd;
    const auto& A = *B.A;
    const auto& L = *B.base;
    const std::size_t n = A.dim(), d = L.dim(), m = D.dim();
    const Field f = A.field();
    DualBialgebroidData<K> out{D.carrier, B.base, Matrix<K>(m, d, f), Matrix<K>(m, d, f), Matrix<K>(m * m, m, f), Matrix<K>(d, m, f)};
    for (std::size_t k = 0; k < d; ++k) {
        const Vec<K> l = L.basis(k);
        Matrix<K> Fs(d, n, f), Ft(d, n, f);
        for (std::size_t a = 0; a < n; ++a) {
            const Vec<K> ea = A.basis(a);
            const Vec<K> pa = B.counit(ea);
            switch (D.which) {
                case DualKind::LowerRight:
                    Fs.set_col(a, B.counit(A.mul(ea, B.s(l))));
                    Ft.set_col(a, L.mul(l, pa));
                    break;
                case DualKind::LowerLeft:
                    Fs.set_col(a, L.mul(pa, l));
                    Ft.set_col(a, B.counit(A.mul(ea, B.t(l))));
                    break;
                case DualKind::UpperRight:
                    Fs.set_col(a, L.mul(l, pa));
                    Ft.set_col(a, B.counit(A.mul(B.s(l), ea)));
                    break;
                case DualKind::UpperLeft:
                    Fs.set_col(a, B.counit(A.mul(B.t(l), ea)));
                    Ft.set_col(a, L.mul(pa, l));
                    break;
            }
        }
        out.s.set_col(k, D.coordinates(Fs));
        out.t.set_col(k, D.coordinates(Ft));
    }
    for (std::size_t p = 0; p < m; ++p) {
        const Vec<K> phi = D.carrier->basis(p);
        Vec<K> g = zeros<K>(m * m, f);
        for (std::size_t i = 0; i < db.generators.size(); ++i) {
            Vec<K> moved = act_on_dual(D, db.generators[i], phi);
            switch (D.which) {
                case DualKind::LowerRight:
                case DualKind::UpperRight: g = g + tensor(moved, db.functionals[i]); break;
                case DualKind::LowerLeft:
                case DualKind::UpperLeft: g = g + tensor(db.functionals[i], moved); break;
            }
        }
        out.gamma.set_col(p, g);
        out.pi.set_col(p, D.eval(phi, A.one()));
    }
    return out;
}

template <class K>
RightBialgebroid<K> dual_right_bialgebroid(const DualRing<K>& D, const DualBasis<K>& db) {
    if (!is_lower(D.which)) throw Error(ErrorCode::AlgebraMismatch, "the R-duals carry left bialgebroid structures");
    auto x = dual_bialgebroid_data(D, db);
    return RightBialgebroid<K>(x.carrier, x.base, Morphism<K>(x.base, x.carrier, x.s, Kind::Hom), Morphism<K>(x.base, x.carrier, x.t, Kind::AntiHom), x.gamma, x.pi);
}

template <class K>
LeftBialgebroid<K> dual_left_bialgebroid(const DualRing<K>& D, const DualBasis<K>& db) {
    if (is_lower(D.which)) throw Error(ErrorCode::AlgebraMismatch, "the L-duals carry right bialgebroid structures");
    auto x = dual_bialgebroid_data(D, db);
    return LeftBialgebroid<K>(x.carrier, x.base, Morphism<K>(x.base, x.carrier, x.s, Kind::Hom), Morphism<K>(x.base, x.carrier, x.t, Kind::AntiHom), x.gamma, x.pi);
}

}  // namespace algd
