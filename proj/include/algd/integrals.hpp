#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "algd/dual.hpp"
#include "algd/hopf.hpp"

namespace algd {

// The four base-valued duals of a symmetrized Hopf algebroid, built once and shared.
template <class K>
struct DualFrame {
    DualRing<K> upper_right;  // A^*
    DualRing<K> upper_left;   // ^*A
    DualRing<K> lower_right;  // A_*
    DualRing<K> lower_left;   // _*A
};

template <class K>
std::shared_ptr<const DualFrame<K>> dual_frame(const SymmetrizedHopfAlgebroid<K>& T) {
    return std::make_shared<const DualFrame<K>>(DualFrame<K>{
        build_dual_ring<K>(T.right, DualKind::UpperRight), build_dual_ring<K>(T.right, DualKind::UpperLeft),
        build_dual_ring<K>(T.left, DualKind::LowerRight), build_dual_ring<K>(T.left, DualKind::LowerLeft)});
}

template <class K>
struct IntegralSpace {
    Side side;
    std::vector<Vec<K>> basis;
};

// Left: a l = s_L pi_L(a) l.  Right: l a = l s_R pi_R(a).
template <class K>
IntegralSpace<K> integral_space(const SymmetrizedHopfAlgebroid<K>& T, Side side) {
    const auto& A = *T.left.A;
    const std::size_t n = A.dim();
    std::vector<Vec<K>> rows;
    for (std::size_t a = 0; a < n; ++a) {
        Matrix<K> M = side == Side::Left
                          ? A.left_mult(A.basis(a)) - A.left_mult(T.left.s(T.left.counit(A.basis(a))))
                          : A.right_mult(A.basis(a)) - A.right_mult(T.right.s(T.right.counit(A.basis(a))));
        for (std::size_t r = 0; r < n; ++r) rows.push_back(M.row(r));
    }
    return {side, kernel_basis(Matrix<K>::from_rows(rows, n, A.field()))};
}

struct Characterizations {
    std::array<bool, 5> holds{};  // i) .. v)
    bool all_agree() const {
        for (bool b : holds)
            if (b != holds[0]) return false;
        return true;
    }
    bool integral() const { return holds[0]; }
};

namespace detail {

template <class K>
bool is_left_integral_t(const SymmetrizedHopfAlgebroid<K>& T, const Vec<K>& ell, bool target) {
    const auto& A = *T.left.A;
    for (std::size_t a = 0; a < A.dim(); ++a) {
        Vec<K> base = T.left.counit(A.basis(a));
        Vec<K> emb = target ? T.left.t(base) : T.left.s(base);
        if (A.mul(A.basis(a), ell) != A.mul(emb, ell)) return false;
    }
    return true;
}

template <class K>
bool is_right_integral(const SymmetrizedHopfAlgebroid<K>& T, const Vec<K>& u) {
    const auto& A = *T.left.A;
    for (std::size_t a = 0; a < A.dim(); ++a)
        if (A.mul(u, A.basis(a)) != A.mul(u, T.right.s(T.right.counit(A.basis(a))))) return false;
    return true;
}

template <class K>
Characterizations characterize(const SymmetrizedHopfAlgebroid<K>& T, const Matrix<K>& S, const Matrix<K>& Sinv, const Vec<K>& ell) {
    const auto& A = *T.left.A;
    Characterizations c;
    c.holds[0] = is_left_integral_t(T, ell, false);
    c.holds[1] = is_left_integral_t(T, ell, true);
    c.holds[2] = is_right_integral(T, S.apply(ell));
    c.holds[3] = is_right_integral(T, Sinv.apply(ell));
    const auto& Q = T.right.Q();
    const Vec<K> g = T.right.gamma.apply(ell);
    bool v = true;
    for (std::size_t a = 0; a < A.dim() && v; ++a)
        v = Q.same_class(mul_leg(A, g, 0, S.apply(A.basis(a)), MulSide::Left), mul_leg(A, g, 1, A.basis(a), MulSide::Left));
    c.holds[4] = v;
    return c;
}

template <class K>
Matrix<K> columns_of(std::size_t rows, std::size_t cols, const Field& f, const std::function<Vec<K>(std::size_t)>& col) {
    Matrix<K> M(rows, cols, f);
    for (std::size_t j = 0; j < cols; ++j) M.set_col(j, col(j));
    return M;
}

}  // namespace detail

template <class K>
Characterizations integral_characterizations(const SymmetrizedHopfAlgebroid<K>& T, const Vec<K>& ell) {
    return detail::characterize(T, T.S.map, T.Sinv.map, ell);
}

// A certified non-degenerate left integral with everything derived from it. The antipode
// matrices are copied so that fault injection can corrupt them without touching T.
template <class K>
struct NondegenerateIntegral {
    SymmetrizedHopfAlgebroid<K> T;
    std::shared_ptr<const DualFrame<K>> frame;
    Vec<K> ell;
    Matrix<K> ellR, Rell, ellL, Lell;  // A^*, ^*A, A_*, _*A -> A
    Matrix<K> ellR_inv, Rell_inv, ellL_inv, Lell_inv;
    Vec<K> lambda_star, star_lambda;  // coordinates in A^* and ^*A
    Morphism<K> xi;                   // anti-automorphism of A
    Matrix<K> xi_inv;
    Morphism<K> kappa;  // automorphism of R
    Matrix<K> kappa_inv;
    Matrix<K> S, Sinv;

    const Algebra<K>& A() const { return *T.left.A; }
};

// phi^* -> l, ^*phi -> l, l <- phi_*, l <- _*phi as n x m matrices.
template <class K>
Matrix<K> pairing_matrix(const DualRing<K>& D, const Vec<K>& ell) {
    const Field f = D.bgd.A->field();
    return detail::columns_of<K>(D.n(), D.dim(), f, [&](std::size_t p) { return act_on_total(D, D.carrier->basis(p), ell); });
}

template <class K>
NondegenerateIntegral<K> check_nondegenerate(const SymmetrizedHopfAlgebroid<K>& T, std::shared_ptr<const DualFrame<K>> frame,
                                             const Vec<K>& ell) {
    const auto& A = *T.left.A;
    const auto& R = *T.right.base;
    const std::size_t n = A.dim(), e = R.dim();
    const Field f = A.field();
    if (!integral_characterizations(T, ell).integral()) throw Error(ErrorCode::NotAnIntegral, "not a left integral: " + A.format(ell));

    auto bijective = [&](const Matrix<K>& M, const char* name) {
        if (M.cols() != n || rank(M) != n)
            throw Error(ErrorCode::Degenerate, std::string(name) + " is not bijective for " + A.format(ell) + " (rank " +
                                                   std::to_string(rank(M)) + ", dimensions " + std::to_string(M.rows()) + "x" +
                                                   std::to_string(M.cols()) + ")");
        return invert(M);
    };
    const auto& F = *frame;
    Matrix<K> ellR = pairing_matrix(F.upper_right, ell);
    Matrix<K> ellR_inv = bijective(ellR, "l_R");
    Matrix<K> Rell = pairing_matrix(F.upper_left, ell);
    Matrix<K> ellL = pairing_matrix(F.lower_right, ell);
    Matrix<K> Lell = pairing_matrix(F.lower_left, ell);
    // A^R is finitely generated projective here, so l_R alone decides; the rest must follow.
    Matrix<K> Rell_inv = bijective(Rell, "_Rl");
    Matrix<K> ellL_inv = bijective(ellL, "l_L");
    Matrix<K> Lell_inv = bijective(Lell, "_Ll");

    Vec<K> lam = ellR_inv.apply(A.one());
    Vec<K> slam = Rell_inv.apply(A.one());
    const Matrix<K> Flam = F.upper_right.functional(lam);
    const Matrix<K> Fslam = F.upper_left.functional(slam);
    if (Fslam != Flam * T.S.map)
        throw Error(ErrorCode::AxiomViolation, "*lambda differs from lambda* composed with S");

    // xi(a) = S((lambda* <- l) -> a)
    Vec<K> lam_l = act_on_dual(F.upper_right, ell, lam);
    Matrix<K> xi = detail::columns_of<K>(n, n, f, [&](std::size_t a) {
        return T.S(act_on_total(F.upper_right, lam_l, A.basis(a)));
    });
    // xi^-1(a) = S^-1((*lambda <- l) -> a)
    Vec<K> slam_l = act_on_dual(F.upper_left, ell, slam);
    Matrix<K> xi_inv = detail::columns_of<K>(n, n, f, [&](std::size_t a) {
        return T.Sinv(act_on_total(F.upper_left, slam_l, A.basis(a)));
    });
    // kappa(r) = lambda*(l t_R(r)), kappa^-1(r) = *lambda(l s_R(r))
    Matrix<K> kappa = detail::columns_of<K>(e, e, f, [&](std::size_t r) { return Flam.apply(A.mul(ell, T.right.t(R.basis(r)))); });
    Matrix<K> kappa_inv = detail::columns_of<K>(e, e, f, [&](std::size_t r) { return Fslam.apply(A.mul(ell, T.right.s(R.basis(r)))); });

    return NondegenerateIntegral<K>{T,
                                    std::move(frame),
                                    ell,
                                    std::move(ellR),
                                    std::move(Rell),
                                    std::move(ellL),
                                    std::move(Lell),
                                    std::move(ellR_inv),
                                    std::move(Rell_inv),
                                    std::move(ellL_inv),
                                    std::move(Lell_inv),
                                    std::move(lam),
                                    std::move(slam),
                                    Morphism<K>(T.left.A, T.left.A, std::move(xi), Kind::AntiHom),
                                    std::move(xi_inv),
                                    Morphism<K>(T.right.base, T.right.base, std::move(kappa), Kind::Hom),
                                    std::move(kappa_inv),
                                    T.S.map,
                                    T.Sinv.map};
}

template <class K>
NondegenerateIntegral<K> check_nondegenerate(const SymmetrizedHopfAlgebroid<K>& T, const Vec<K>& ell) {
    return check_nondegenerate(T, dual_frame(T), ell);
}

// Tries the integral basis and then every combination with coefficients in {-1, 0, 1}
// (first nonzero coefficient 1) while the space has dimension at most max_full_dim.
template <class K>
std::vector<Vec<K>> find_nondegenerate_integrals(const SymmetrizedHopfAlgebroid<K>& T, std::shared_ptr<const DualFrame<K>> frame,
                                                 std::size_t max_full_dim = 6) {
    const auto& A = *T.left.A;
    const Field f = A.field();
    const auto space = integral_space(T, Side::Left).basis;
    const std::size_t k = space.size();
    std::vector<std::vector<int>> combos;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<int> c(k, 0);
        c[i] = 1;
        combos.push_back(c);
    }
    if (k <= max_full_dim) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < k; ++i) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<int> c(k);
            std::size_t x = code, nz = 0;
            for (std::size_t i = 0; i < k; ++i, x /= 3) {
                c[i] = static_cast<int>(x % 3) - 1;
                nz += c[i] != 0;
            }
            if (nz < 2) continue;
            std::size_t first = 0;
            while (c[first] == 0) ++first;
            if (c[first] == 1) combos.push_back(c);
        }
    }
    std::vector<Vec<K>> found;
    for (const auto& c : combos) {
        Vec<K> ell = A.zero();
        for (std::size_t i = 0; i < k; ++i)
            if (c[i] != 0) axpy(ell, K::from_int(c[i], f), space[i]);
        try {
            check_nondegenerate(T, frame, ell);
            found.push_back(ell);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Degenerate) throw;
        }
    }
    return found;
}

// Frobenius map psi: A -> base and quasibasis u_i (x) v_i for the extension embed: base -> A.
template <class K>
struct FrobeniusSystem {
    std::string tag;
    Morphism<K> embed;
    Matrix<K> psi;  // d x n
    Vec<K> quasibasis;  // n^2 lift
};

template <class K>
Report check_frobenius_system(const FrobeniusSystem<K>& fs) {
    Report rep;
    const auto& A = *fs.embed.tgt;
    const auto& B = *fs.embed.src;
    const std::size_t n = A.dim();
    for (std::size_t m = 0; m < n; ++m) {
        const Vec<K> em = A.basis(m);
        Vec<K> left = A.zero(), right = A.zero();
        for_terms(fs.quasibasis, n, [&](std::size_t i, std::size_t j, const K& c) {
            const Vec<K> u = A.basis(i), v = A.basis(j);
            axpy(left, c, A.mul(fs.embed(fs.psi.apply(A.mul(em, u))), v));
            axpy(right, c, A.mul(u, fs.embed(fs.psi.apply(A.mul(v, em)))));
        });
        if (left != em) rep.add("quasibasis-left", A.names()[m], A.format(left), A.names()[m]);
        if (right != em) rep.add("quasibasis-right", A.names()[m], A.format(right), A.names()[m]);
        for (std::size_t x = 0; x < B.dim(); ++x)
            for (std::size_t y = 0; y < B.dim(); ++y) {
                Vec<K> lhs = fs.psi.apply(A.mul(fs.embed(B.basis(x)), em, fs.embed(B.basis(y))));
                Vec<K> pm = fs.psi.apply(em);
                Vec<K> rhs = fs.embed.kind == Kind::Hom ? B.mul(B.basis(x), pm, B.basis(y)) : B.mul(B.basis(y), pm, B.basis(x));
                if (lhs != rhs) rep.add("bimodule", basis_tuple(B, {x}) + " " + A.names()[m] + " " + basis_tuple(B, {y}), B.format(lhs), B.format(rhs));
            }
    }
    return rep;
}

// The systems for s_R, t_R, t_L, s_L in this order.
template <class K>
std::vector<FrobeniusSystem<K>> frobenius_systems(const NondegenerateIntegral<K>& nd) {
    const auto& T = nd.T;
    const std::size_t n = nd.A().dim();
    const Matrix<K> Flam = nd.frame->upper_right.functional(nd.lambda_star);
    const Matrix<K> Fslam = nd.frame->upper_left.functional(nd.star_lambda);
    const Vec<K> g = T.right.gamma.apply(nd.ell);
    const Matrix<K> I = Matrix<K>::identity(n, nd.A().field());
    const Vec<K> q1 = tensor_apply(I, nd.S, g);                     // l^(1) (x) S(l^(2))
    const Vec<K> q2 = tensor_apply(I, nd.Sinv, tensor_flip(g, n, n));  // l^(2) (x) S^-1(l^(1))
    return {
        {"s_R", T.right.s, Flam, q1},
        {"t_R", T.right.t, Fslam, q2},
        {"t_L", T.left.t, invert(T.mu.map) * Flam, q1},
        {"s_L", T.left.s, invert(T.nu.map) * Fslam, q2},
    };
}

// The unique antipode making l two-sided: (A_L, xi).
template <class K>
HopfAlgebroid<K> xi_hopf(const NondegenerateIntegral<K>& nd) {
    return HopfAlgebroid<K>(nd.T.left, nd.xi);
}

// Checks (A_L, xi) and compares xi with the closed form S'(a) = S(a <- l_L^-1(S^-1(l))).
template <class K>
Report two_sided_report(const NondegenerateIntegral<K>& nd) {
    Report rep;
    const auto& A = nd.A();
    const std::size_t n = A.dim();
    HopfAlgebroid<K> H = xi_hopf(nd);
    rep.merge(verify_hopf(H), "xi-hopf");
    if (nd.xi(nd.ell) != nd.ell) rep.add("xi-fixes-integral", A.format(nd.ell), A.format(nd.xi(nd.ell)), A.format(nd.ell));
    const Vec<K> phi = nd.ellL_inv.apply(nd.Sinv.apply(nd.ell));
    for (std::size_t a = 0; a < n; ++a) {
        Vec<K> closed = nd.S.apply(act_on_total(nd.frame->lower_right, phi, A.basis(a)));
        if (closed != nd.xi(A.basis(a))) rep.add("closed-form", A.names()[a], A.format(closed), A.format(nd.xi(A.basis(a))));
    }
    return rep;
}

template <class K>
HopfAlgebroid<K> two_sided_antipode(const NondegenerateIntegral<K>& nd) {
    Report rep = two_sided_report(nd);
    if (!rep.ok()) throw Error(ErrorCode::AxiomViolation, "two-sided antipode:\n" + rep.text());
    return xi_hopf(nd);
}

// Deliberate corruptions used to show that each identity check can fail.
enum class Fault { None, AntipodeSign, LambdaShift, StarLambdaShift, XiSign, XiInverseSign, KappaSign, RightInverseScale, LeftInverseScale };

inline const char* fault_name(Fault f) {
    switch (f) {
        case Fault::None: return "none";
        case Fault::AntipodeSign: return "antipode-sign";
        case Fault::LambdaShift: return "lambda-shift";
        case Fault::StarLambdaShift: return "star-lambda-shift";
        case Fault::XiSign: return "xi-sign";
        case Fault::XiInverseSign: return "xi-inverse-sign";
        case Fault::KappaSign: return "kappa-sign";
        case Fault::RightInverseScale: return "right-inverse-scale";
        case Fault::LeftInverseScale: return "left-inverse-scale";
    }
    return "?";
}

inline const std::vector<Fault>& all_faults() {
    static const std::vector<Fault> v{Fault::AntipodeSign, Fault::LambdaShift, Fault::StarLambdaShift, Fault::XiSign, Fault::XiInverseSign,
                                         Fault::KappaSign, Fault::RightInverseScale, Fault::LeftInverseScale};
    return v;
}

template <class K>
NondegenerateIntegral<K> inject_fault(NondegenerateIntegral<K> nd, Fault fault) {
    const Field f = nd.A().field();
    const K two = K::from_int(2, f), minus = K::from_int(-1, f);
    switch (fault) {
        case Fault::None: break;
        case Fault::AntipodeSign:
            nd.S = minus * nd.S;
            nd.Sinv = minus * nd.Sinv;
            break;
        case Fault::LambdaShift:
            nd.lambda_star = nd.lambda_star + nd.frame->upper_right.coordinates(nd.T.right.pi);
            break;
        case Fault::StarLambdaShift:
            nd.star_lambda = nd.star_lambda + nd.frame->upper_left.coordinates(nd.T.right.pi);
            break;
        case Fault::XiSign:
            nd.xi.map = minus * nd.xi.map;
            nd.xi_inv = minus * nd.xi_inv;
            break;
        case Fault::XiInverseSign: nd.xi_inv = minus * nd.xi_inv; break;
        case Fault::KappaSign: nd.kappa.map = minus * nd.kappa.map; break;
        case Fault::RightInverseScale: nd.ellR_inv = two * nd.ellR_inv; break;
        case Fault::LeftInverseScale: nd.Lell_inv = two * nd.Lell_inv; break;
    }
    return nd;
}

// Every identity of the non-degenerate integral theory, exhaustively over basis tuples.
// Stored data (S, lambda*, *lambda, xi, the inverses) is taken from nd as is.
template <class K>
Report identity_suite(const NondegenerateIntegral<K>& nd) {
    Report rep;
    const auto& T = nd.T;
    const auto& A = nd.A();
    const auto& R = *T.right.base;
    const auto& F = *nd.frame;
    const std::size_t n = A.dim();
    const Matrix<K> Flam = F.upper_right.functional(nd.lambda_star);
    const Matrix<K> Fslam = F.upper_left.functional(nd.star_lambda);
    auto S = [&](const Vec<K>& x) { return nd.S.apply(x); };
    auto xi = [&](const Vec<K>& x) { return nd.xi.map.apply(x); };
    auto xinv = [&](const Vec<K>& x) { return nd.xi_inv.apply(x); };

    // five characterizations on the integral space and on every basis element
    std::vector<Vec<K>> probes = integral_space(T, Side::Left).basis;
    for (std::size_t a = 0; a < n; ++a) probes.push_back(A.basis(a));
    for (const auto& x : probes) {
        Characterizations c = detail::characterize(T, nd.S, nd.Sinv, x);
        if (!c.all_agree()) {
            std::string pattern;
            for (bool b : c.holds) pattern += b ? '1' : '0';
            rep.add("characterizations", A.format(x), pattern, "all equal");
        }
    }

    for (std::size_t a = 0; a < n; ++a) {
        const Vec<K> ea = A.basis(a);
        const std::string w = A.names()[a];
        // lambda* -> a = s_R(lambda*(a)),  *lambda -> a = t_R(*lambda(a))
        if (act_on_total(F.upper_right, nd.lambda_star, ea) != T.right.s(Flam.apply(ea))) rep.add("lambda-action-s", w);
        if (act_on_total(F.upper_left, nd.star_lambda, ea) != T.right.t(Fslam.apply(ea))) rep.add("lambda-action-t", w);
        // l_R^-1(a) = lambda* <- S(a)
        if (nd.ellR_inv.apply(ea) != act_on_dual(F.upper_right, S(ea), nd.lambda_star)) rep.add("ellR-inverse-form", w);
        for (std::size_t r = 0; r < R.dim(); ++r) {
            const Vec<K> er = R.basis(r);
            if (Flam.apply(A.mul(T.right.s(er), ea)) != R.mul(er, Flam.apply(ea))) rep.add("lambda-bimodule", basis_tuple(R, {r}) + " " + w);
            if (Fslam.apply(A.mul(T.right.t(er), ea)) != R.mul(Fslam.apply(ea), er)) rep.add("star-lambda-bimodule", basis_tuple(R, {r}) + " " + w);
        }
        // xi through the arrow form: xi(a) = l <- (a -> l_L^-1(1))
        Vec<K> arr = act_on_total(F.lower_right, act_on_dual(F.lower_right, ea, nd.ellL_inv.apply(A.one())), nd.ell);
        if (arr != xi(ea)) rep.add("xi-arrow-form", w, A.format(arr), A.format(xi(ea)));
        if (xinv(xi(ea)) != ea || xi(xinv(ea)) != ea) rep.add("xi-inverse", w);
        for (std::size_t b = 0; b < n; ++b) {
            const Vec<K> eb = A.basis(b);
            const std::string wb = basis_tuple(A, {a, b});
            if (xi(A.mul(ea, eb)) != A.mul(xi(eb), xi(ea))) rep.add("xi-anti", wb);
            // the four arrow relations
            Vec<K> upper_l = act_on_total(F.upper_right, nd.ellR_inv.apply(eb), ea);
            Vec<K> upper_r = act_on_total(F.upper_left, nd.Rell_inv.apply(ea), eb);
            if (upper_l != upper_r) rep.add("arrow-relation-upper", wb, A.format(upper_l), A.format(upper_r));
            Vec<K> lower_l = act_on_total(F.lower_right, nd.ellL_inv.apply(eb), ea);
            Vec<K> lower_r = act_on_total(F.lower_left, nd.Lell_inv.apply(ea), eb);
            if (lower_l != lower_r) rep.add("arrow-relation-lower", wb, A.format(lower_l), A.format(lower_r));
            if (upper_l != lower_l) rep.add("arrow-relation-right", wb, A.format(upper_l), A.format(lower_l));
            Vec<K> left_l = act_on_total(F.upper_left, nd.Rell_inv.apply(eb), ea);
            Vec<K> left_r = act_on_total(F.lower_left, nd.Lell_inv.apply(eb), ea);
            if (left_l != left_r) rep.add("arrow-relation-left", wb, A.format(left_l), A.format(left_r));
        }
    }

    // l s_R(lambda*(l')) = l' = l t_R(*lambda(l'))
    for (const auto& lp : integral_space(T, Side::Left).basis) {
        if (A.mul(nd.ell, T.right.s(Flam.apply(lp))) != lp) rep.add("integral-reproduces-s", A.format(lp));
        if (A.mul(nd.ell, T.right.t(Fslam.apply(lp))) != lp) rep.add("integral-reproduces-t", A.format(lp));
    }

    // kappa multiplicative with the stated inverse
    for (std::size_t r = 0; r < R.dim(); ++r) {
        if (nd.kappa_inv.apply(nd.kappa(R.basis(r))) != R.basis(r)) rep.add("kappa-inverse", R.names()[r]);
        for (std::size_t q = 0; q < R.dim(); ++q)
            if (nd.kappa(R.mul(R.basis(r), R.basis(q))) != R.mul(nd.kappa(R.basis(r)), nd.kappa(R.basis(q))))
                rep.add("kappa-mult", basis_tuple(R, {r, q}));
    }

    // l <- phi_* = xi(_Rl(mu o phi_* o S))  and  l <- _*(nu^-1 o l_R^-1(a) o S) = xi^-1(a)
    for (std::size_t p = 0; p < F.lower_right.dim(); ++p) {
        const Vec<K> phi = F.lower_right.carrier->basis(p);
        Matrix<K> G = T.mu.map * F.lower_right.functional(phi) * nd.S;
        Vec<K> lhs = act_on_total(F.lower_right, phi, nd.ell);
        Vec<K> rhs = xi(nd.Rell.apply(F.upper_left.coordinates(G)));
        if (lhs != rhs) rep.add("ellL-twist", F.lower_right.carrier->names()[p], A.format(lhs), A.format(rhs));
    }
    const Matrix<K> nuinv = invert(T.nu.map);
    for (std::size_t a = 0; a < n; ++a) {
        Matrix<K> G = nuinv * F.upper_right.functional(nd.ellR_inv.apply(A.basis(a))) * nd.S;
        Vec<K> lhs = act_on_total(F.lower_left, F.lower_left.coordinates(G), nd.ell);
        if (lhs != xinv(A.basis(a))) rep.add("xi-inverse-form", A.names()[a], A.format(lhs), A.format(xinv(A.basis(a))));
    }

    // xi^-1(l^(2)) (x) S^-1(l^(1)) = l_(1) (x) l_(2) = S(l^(2)) (x) xi(l^(1))  in A_L (x)_L A
    {
        const Vec<K> gr = tensor_flip(T.right.gamma.apply(nd.ell), n, n);
        const Vec<K> gl = T.left.gamma.apply(nd.ell);
        const auto& Q = T.left.Q();
        Vec<K> first = tensor_apply(nd.xi_inv, nd.Sinv, gr);
        Vec<K> last = tensor_apply(nd.S, nd.xi.map, gr);
        if (!Q.same_class(first, gl)) rep.add("integral-coproduct-left", A.format(nd.ell), Q.format(Q.project(first), A, A), Q.format(Q.project(gl), A, A));
        if (!Q.same_class(last, gl)) rep.add("integral-coproduct-right", A.format(nd.ell), Q.format(Q.project(last), A, A), Q.format(Q.project(gl), A, A));
    }

    // l_L(a -> phi_*) = l_L(phi_*) xi(a),  _Ll(a -> _*phi) = _Ll(_*phi) xi^-1(a)
    for (std::size_t a = 0; a < n; ++a) {
        const Vec<K> ea = A.basis(a);
        for (std::size_t p = 0; p < F.lower_right.dim(); ++p) {
            const Vec<K> phi = F.lower_right.carrier->basis(p);
            if (nd.ellL.apply(act_on_dual(F.lower_right, ea, phi)) != A.mul(nd.ellL.apply(phi), xi(ea)))
                rep.add("ellL-twist-all", A.names()[a] + " " + F.lower_right.carrier->names()[p]);
        }
        for (std::size_t p = 0; p < F.lower_left.dim(); ++p) {
            const Vec<K> phi = F.lower_left.carrier->basis(p);
            if (nd.Lell.apply(act_on_dual(F.lower_left, ea, phi)) != A.mul(nd.Lell.apply(phi), xinv(ea)))
                rep.add("Lell-twist-all", A.names()[a] + " " + F.lower_left.carrier->names()[p]);
        }
    }

    // the integral stays non-degenerate after switching to the antipode xi
    try {
        HopfAlgebroid<K> H(T.left, nd.xi);
        auto T2 = symmetrize(H);
        check_nondegenerate(T2, dual_frame(T2), nd.ell);
    } catch (const Error& e) {
        rep.add("xi-nondegenerate", A.format(nd.ell), e.what(), "non-degenerate");
    }
    return rep;
}

}  // namespace algd
