#pragma once

#include <string>
#include <utility>
#include <vector>

#include "algd/integrals.hpp"

namespace algd {

// The four dual bialgebroids with the dual bases read off from l:
//   A^*_L :  b_i (x) beta_i = l^(1) (x) l_R^-1(l^(2))      ^*A_L : l^(2) (x) _Rl^-1(l^(1))
//   A_*R  :  l_(1) (x) l_L^-1(l_(2))                       _*A_R : l_(2) (x) _Ll^-1(l_(1))
template <class K>
struct DualStructures {
    LeftBialgebroid<K> upper_right;   // A^*_L over R
    LeftBialgebroid<K> upper_left;    // ^*A_L over R
    RightBialgebroid<K> lower_right;  // A_*R over L
    RightBialgebroid<K> lower_left;   // _*A_R over L
    DualBasis<K> basis_ur, basis_ul, basis_lr, basis_ll;
};

namespace detail {

// Dual basis from a plain tensor x = sum c_ij e_i (x) e_j: generators on one leg and the
// inverse pairing map applied to the other.
template <class K>
DualBasis<K> integral_dual_basis(DualKind side, const Vec<K>& x, std::size_t n, bool generator_first, const Matrix<K>& inv) {
    DualBasis<K> db{side, {}, {}};
    const Field f = inv.field();
    std::vector<Vec<K>> by_gen(n);
    for_terms(x, n, [&](std::size_t i, std::size_t j, const K& c) {
        const std::size_t g = generator_first ? i : j, o = generator_first ? j : i;
        Vec<K> v = c * inv.col(o);
        if (by_gen[g].empty())
            by_gen[g] = v;
        else
            by_gen[g] = by_gen[g] + v;
    });
    for (std::size_t g = 0; g < n; ++g)
        if (!by_gen[g].empty()) {
            db.generators.push_back(unit_vector<K>(n, g, f));
            db.functionals.push_back(by_gen[g]);
        }
    return db;
}

}  // namespace detail

template <class K>
DualStructures<K> dual_structures_from_integral(const NondegenerateIntegral<K>& nd) {
    const auto& T = nd.T;
    const auto& F = *nd.frame;
    const std::size_t n = nd.A().dim();
    const Vec<K> gR = T.right.gamma.apply(nd.ell);
    const Vec<K> gL = T.left.gamma.apply(nd.ell);
    auto ur = detail::integral_dual_basis(DualKind::UpperRight, gR, n, true, nd.ellR_inv);
    auto ul = detail::integral_dual_basis(DualKind::UpperLeft, gR, n, false, nd.Rell_inv);
    auto lr = detail::integral_dual_basis(DualKind::LowerRight, gL, n, true, nd.ellL_inv);
    auto ll = detail::integral_dual_basis(DualKind::LowerLeft, gL, n, false, nd.Lell_inv);
    return DualStructures<K>{dual_left_bialgebroid(F.upper_right, ur), dual_left_bialgebroid(F.upper_left, ul),
                             dual_right_bialgebroid(F.lower_right, lr), dual_right_bialgebroid(F.lower_left, ll),
                             ur, ul, lr, ll};
}

// The same four structures from the default dual bases of the dual rings.
template <class K>
DualStructures<K> dual_structures_generic(const DualFrame<K>& F) {
    auto ur = find_dual_basis(F.upper_right);
    auto ul = find_dual_basis(F.upper_left);
    auto lr = find_dual_basis(F.lower_right);
    auto ll = find_dual_basis(F.lower_left);
    return DualStructures<K>{dual_left_bialgebroid(F.upper_right, ur), dual_left_bialgebroid(F.upper_left, ul),
                             dual_right_bialgebroid(F.lower_right, lr), dual_right_bialgebroid(F.lower_left, ll),
                             ur, ul, lr, ll};
}

template <class K>
Report verify_dual_structures(const DualStructures<K>& D) {
    Report rep;
    rep.merge(verify_left(D.upper_right), "A^*");
    rep.merge(verify_left(D.upper_left), "^*A");
    rep.merge(verify_right(D.lower_right), "A_*");
    rep.merge(verify_right(D.lower_left), "_*A");
    return rep;
}

template <class K>
Report compare_dual_structures(const DualStructures<K>& X, const DualStructures<K>& Y) {
    Report rep;
    if (!structurally_equal<K>(X.upper_right, Y.upper_right)) rep.add("dual-structures-differ", "A^*");
    if (!structurally_equal<K>(X.upper_left, Y.upper_left)) rep.add("dual-structures-differ", "^*A");
    if (!structurally_equal<K>(X.lower_right, Y.lower_right)) rep.add("dual-structures-differ", "A_*");
    if (!structurally_equal<K>(X.lower_left, Y.lower_left)) rep.add("dual-structures-differ", "_*A");
    return rep;
}

// (B_R)^op_cop as a left bialgebroid.
template <class K>
LeftBialgebroid<K> op_cop(const RightBialgebroid<K>& B) {
    return coopposite(opposite(B));
}

// The square of isomorphisms between A^*_L, ^*A_L, (A_*R)^op_cop and (_*A_R)^op_cop.
template <class K>
struct DualIsomorphisms {
    LeftBialgebroid<K> lower_right_opcop, lower_left_opcop;
    BialgebroidMorphism<K> left;    // (l_R^-1 l_L, nu): (A_*R)^op_cop -> A^*_L
    BialgebroidMorphism<K> right;   // (_Rl^-1 _Ll, mu): (_*A_R)^op_cop -> ^*A_L
    BialgebroidMorphism<K> bottom;  // (_Rl^-1 xi^-1 l_R, theta_R^-1): A^*_L -> ^*A_L
    BialgebroidMorphism<K> top;     // (_Ll^-1 xi^-1 l_L, id): (A_*R)^op_cop -> (_*A_R)^op_cop
};

template <class K>
DualIsomorphisms<K> dual_isomorphisms(const NondegenerateIntegral<K>& nd, const DualStructures<K>& D) {
    const auto& T = nd.T;
    auto lr = op_cop(D.lower_right);
    auto ll = op_cop(D.lower_left);
    auto mk = [](const LeftBialgebroid<K>& s, const LeftBialgebroid<K>& t, Matrix<K> Phi, Matrix<K> phi) {
        return BialgebroidMorphism<K>{Morphism<K>(s.A, t.A, std::move(Phi), Kind::Hom), Morphism<K>(s.base, t.base, std::move(phi), Kind::Hom)};
    };
    const std::size_t d = T.left.d();
    const Field f = nd.A().field();
    auto left = mk(lr, D.upper_right, nd.ellR_inv * nd.ellL, T.nu.map);
    auto right = mk(ll, D.upper_left, nd.Rell_inv * nd.Lell, T.mu.map);
    auto bottom = mk(D.upper_right, D.upper_left, nd.Rell_inv * nd.xi_inv * nd.ellR, invert(T.thetaR.map));
    auto top = mk(lr, ll, nd.Lell_inv * nd.xi_inv * nd.ellL, Matrix<K>::identity(d, f));
    return DualIsomorphisms<K>{std::move(lr), std::move(ll), std::move(left), std::move(right), std::move(bottom), std::move(top)};
}

template <class K>
Report check_dual_isomorphisms(const DualStructures<K>& D, const DualIsomorphisms<K>& I) {
    Report rep;
    rep.merge(check_bialgebroid_morphism(I.left, I.lower_right_opcop, D.upper_right), "left");
    rep.merge(check_bialgebroid_morphism(I.right, I.lower_left_opcop, D.upper_left), "right");
    rep.merge(check_bialgebroid_morphism(I.bottom, D.upper_right, D.upper_left), "bottom");
    rep.merge(check_bialgebroid_morphism(I.top, I.lower_right_opcop, I.lower_left_opcop), "top");
    for (const auto* m : {&I.left, &I.right, &I.bottom, &I.top})
        if (rank(m->Phi.map) != m->Phi.map.rows() || m->Phi.map.rows() != m->Phi.map.cols()) rep.add("not-bijective", "total map");
    if (I.bottom.Phi.map * I.left.Phi.map != I.right.Phi.map * I.top.Phi.map) rep.add("square-total", "bottom.left vs right.top");
    if (I.bottom.phi.map * I.left.phi.map != I.right.phi.map * I.top.phi.map) rep.add("square-base", "bottom.left vs right.top");
    return rep;
}

// The l-dependent dual Hopf algebroid on A_*, with the sibling antipodes on the other duals.
template <class K>
struct DualHopfBundle {
    SymmetrizedHopfAlgebroid<K> T;  // (A_*L^l, A_*R, S_*)
    DualStructures<K> structures;
    DualIsomorphisms<K> isos;
    Matrix<K> S_star;
    Matrix<K> S_lower_left, S_upper_right, S_upper_left;  // _*S, S^*, ^*S
};

template <class K>
DualHopfBundle<K> dual_hopf_algebroid(const NondegenerateIntegral<K>& nd) {
    const auto& T = nd.T;
    const auto& F = *nd.frame;
    const auto& A = nd.A();
    const auto& D = F.lower_right;
    const std::size_t n = A.dim(), d = T.left.d(), e = T.right.d(), m = D.dim();
    const Field f = A.field();
    auto structures = dual_structures_from_integral(nd);
    auto isos = dual_isomorphisms(nd, structures);
    const auto& AR = structures.lower_right;
    AlgPtr<K> R = T.right.base;

    const Matrix<K> muinv = invert(T.mu.map);
    const Matrix<K> Flam = F.upper_right.functional(nd.lambda_star);
    Matrix<K> s(m, e, f), t(m, e, f), pi(e, m, f), g(m * m, m, f);
    for (std::size_t r = 0; r < e; ++r) {
        const Vec<K> er = R->basis(r);
        const Vec<K> kr = nd.kappa_inv.apply(er);
        Matrix<K> Fs(d, n, f), Ft(d, n, f);
        for (std::size_t a = 0; a < n; ++a) {
            // s_*L(r)(a) = mu^-1(r) pi_L(a),  t_*L(r)(a) = pi_L(a t_R(kappa^-1(r)))
            Fs.set_col(a, T.left.base->mul(muinv.apply(er), T.left.counit(A.basis(a))));
            Ft.set_col(a, T.left.counit(A.mul(A.basis(a), T.right.t(kr))));
        }
        s.set_col(r, D.coordinates(Fs));
        t.set_col(r, D.coordinates(Ft));
    }
    // gamma_*L(phi) = xi^-2(l_(2)) -> phi (x) l_L^-1(l_(1)),  pi_*L(phi) = lambda*(l <- phi)
    const Matrix<K> xi2inv = nd.xi_inv * nd.xi_inv;
    const Vec<K> gl = T.left.gamma.apply(nd.ell);
    for (std::size_t p = 0; p < m; ++p) {
        const Vec<K> phi = D.carrier->basis(p);
        Vec<K> col = zeros<K>(m * m, f);
        for_terms(gl, n, [&](std::size_t i, std::size_t j, const K& c) {
            Vec<K> moved = act_on_dual(D, xi2inv.col(j), phi);
            axpy(col, c, tensor(moved, nd.ellL_inv.col(i)));
        });
        g.set_col(p, col);
        pi.set_col(p, Flam.apply(act_on_total(D, phi, nd.ell)));
    }
    LeftBialgebroid<K> left(D.carrier, R, Morphism<K>(R, D.carrier, s, Kind::Hom), Morphism<K>(R, D.carrier, t, Kind::AntiHom), g, pi);
    Matrix<K> S_star = nd.ellL_inv * nd.xi.map * nd.ellL;
    auto TT = make_symmetrized(std::move(left), AR, Morphism<K>(D.carrier, D.carrier, S_star, Kind::AntiHom));
    Matrix<K> Sll = nd.Lell_inv * nd.xi.map * nd.Lell;
    Matrix<K> Sur = nd.ellR_inv * nd.xi.map * nd.ellR;
    Matrix<K> Sul = nd.Rell_inv * nd.xi.map * nd.Rell;
    return DualHopfBundle<K>{std::move(TT), std::move(structures), std::move(isos), std::move(S_star), std::move(Sll), std::move(Sur), std::move(Sul)};
}

// Everything promised about the dual bundle: axioms, the arrow form of S_*, the sibling
// antipodes, and their intertwining by the isomorphism square.
template <class K>
Report check_dual_bundle(const NondegenerateIntegral<K>& nd, const DualHopfBundle<K>& B) {
    Report rep;
    const auto& F = *nd.frame;
    const auto& D = F.lower_right;
    const auto& A = nd.A();
    rep.merge(verify_symmetrized(B.T), "dual");
    rep.merge(verify_hopf(B.T.hopf()), "dual-hopf");
    rep.merge(verify_dual_structures(B.structures), "dual-structures");
    rep.merge(check_dual_isomorphisms(B.structures, B.isos), "dual-isomorphisms");
    // S_*(phi)(a) = [(l <- phi) -> l_L^-1(1)](a)
    const Vec<K> unit_pre = nd.ellL_inv.apply(A.one());
    for (std::size_t p = 0; p < D.dim(); ++p) {
        const Vec<K> phi = D.carrier->basis(p);
        Vec<K> arr = act_on_dual(D, act_on_total(D, phi, nd.ell), unit_pre);
        if (arr != B.S_star.apply(phi)) rep.add("dual-antipode-arrow-form", D.carrier->names()[p], D.carrier->format(arr), D.carrier->format(B.S_star.apply(phi)));
    }
    const auto& S = B.structures;
    const auto& I = B.isos;
    rep.merge(verify_hopf(HopfAlgebroid<K>(I.lower_left_opcop, Morphism<K>(I.lower_left_opcop.A, I.lower_left_opcop.A, B.S_lower_left, Kind::AntiHom))), "antipode-lower-left");
    rep.merge(verify_hopf(HopfAlgebroid<K>(S.upper_right, Morphism<K>(S.upper_right.A, S.upper_right.A, B.S_upper_right, Kind::AntiHom))), "antipode-upper-right");
    rep.merge(verify_hopf(HopfAlgebroid<K>(S.upper_left, Morphism<K>(S.upper_left.A, S.upper_left.A, B.S_upper_left, Kind::AntiHom))), "antipode-upper-left");
    if (I.left.Phi.map * B.S_star != B.S_upper_right * I.left.Phi.map) rep.add("intertwine", "left");
    if (I.right.Phi.map * B.S_lower_left != B.S_upper_left * I.right.Phi.map) rep.add("intertwine", "right");
    if (I.bottom.Phi.map * B.S_upper_right != B.S_upper_left * I.bottom.Phi.map) rep.add("intertwine", "bottom");
    if (I.top.Phi.map * B.S_star != B.S_lower_left * I.top.Phi.map) rep.add("intertwine", "top");
    return rep;
}

// l_L^-1(1_A) = mu^-1 o lambda*, certified as a two-sided non-degenerate integral of the bundle.
template <class K>
NondegenerateIntegral<K> dual_integral(const NondegenerateIntegral<K>& nd, const DualHopfBundle<K>& B) {
    const auto& F = *nd.frame;
    const Vec<K> ell_star = nd.ellL_inv.apply(nd.A().one());
    if (F.lower_right.functional(ell_star) != invert(nd.T.mu.map) * F.upper_right.functional(nd.lambda_star))
        throw Error(ErrorCode::AxiomViolation, "l_L^-1(1) differs from mu^-1 o lambda*");
    if (!detail::is_right_integral(B.T, ell_star)) throw Error(ErrorCode::NotAnIntegral, "dual integral is not a right integral");
    if (B.T.S(ell_star) != ell_star) throw Error(ErrorCode::AxiomViolation, "S_* does not fix the dual integral");
    return check_nondegenerate(B.T, dual_frame(B.T), ell_star);
}

template <class K>
struct DoubleDualCertificate {
    Matrix<K> iota;             // A -> ^*(A_*)
    Matrix<K> double_antipode;  // antipode of ^*(A_*)_L
    Matrix<K> pulled_back;      // iota^-1 o double_antipode o iota
    Report report;
};

// iota(a)(phi_*) = phi_*(a) intertwines (A_L, xi) with (^*(A_*)_L, ^*S) for the dual integral.
template <class K>
DoubleDualCertificate<K> double_dual(const NondegenerateIntegral<K>& nd, const DualHopfBundle<K>&, const NondegenerateIntegral<K>& nd_dual) {
    const auto& A = nd.A();
    const auto& D = nd.frame->lower_right;
    const auto& DD = nd_dual.frame->upper_left;
    const std::size_t n = A.dim(), d = nd.T.left.d(), m = D.dim();
    const Field f = A.field();
    Matrix<K> iota(DD.dim(), n, f);
    for (std::size_t a = 0; a < n; ++a) {
        Matrix<K> G(d, m, f);
        for (std::size_t p = 0; p < m; ++p) G.set_col(p, D.eval(D.carrier->basis(p), A.basis(a)));
        iota.set_col(a, DD.coordinates(G));
    }
    auto dd = dual_structures_from_integral(nd_dual);
    Matrix<K> dS = nd_dual.Rell_inv * nd_dual.xi.map * nd_dual.Rell;
    DoubleDualCertificate<K> cert{iota, dS, Matrix<K>(n, n, f), {}};
    if (iota.rows() != n || rank(iota) != n) {
        cert.report.add("iota-bijective", "iota", std::to_string(rank(iota)), std::to_string(n));
        return cert;
    }
    cert.pulled_back = invert(iota) * dS * iota;
    BialgebroidMorphism<K> m_iota{Morphism<K>(nd.T.left.A, dd.upper_left.A, iota, Kind::Hom),
                                  Morphism<K>(nd.T.left.base, dd.upper_left.base, Matrix<K>::identity(d, f), Kind::Hom)};
    cert.report.merge(check_bialgebroid_morphism(m_iota, nd.T.left, dd.upper_left), "iota");
    if (iota * nd.xi.map != dS * iota) cert.report.add("iota-intertwines-xi", "iota xi vs ^*S iota", (iota * nd.xi.map).str(), (dS * iota).str());
    return cert;
}

}  // namespace algd
