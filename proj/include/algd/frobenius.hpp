#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "algd/hopf.hpp"
#include "algd/subspace.hpp"

namespace algd {

// N -> M with an N-N bimodule map psi: M -> N and a quasibasis sum u_i (x) v_i,
// stored as a vector of M (x) M.
template <class K>
struct FrobeniusExtension {
    std::string name;
    AlgPtr<K> N, M;
    Morphism<K> inclusion;
    Matrix<K> psi;  // dim N x dim M
    Vec<K> quasibasis;
};

namespace detail {

template <class K>
BaseAction<K> extension_action(const FrobeniusExtension<K>& fe) {
    BaseAction<K> act{fe.N, {}, {}};
    for (std::size_t k = 0; k < fe.N->dim(); ++k) {
        Vec<K> x = fe.inclusion.map.col(k);
        act.right_on_left.push_back(fe.M->right_mult(x));
        act.left_on_right.push_back(fe.M->left_mult(x));
    }
    return act;
}

}  // namespace detail

template <class K>
Report check_frobenius(const FrobeniusExtension<K>& fe) {
    Report rep;
    const auto& N = *fe.N;
    const auto& M = *fe.M;
    const std::size_t n = M.dim(), d = N.dim();
    if (fe.psi.rows() != d || fe.psi.cols() != n || fe.quasibasis.size() != n * n) {
        rep.add("shape", "psi / quasibasis");
        return rep;
    }
    rep.merge(check_morphism(fe.inclusion), "inclusion");
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t m = 0; m < n; ++m) {
                Vec<K> lhs = fe.psi.apply(M.mul(fe.inclusion(N.basis(x)), M.basis(m), fe.inclusion(N.basis(y))));
                Vec<K> rhs = N.mul(N.basis(x), fe.psi.apply(M.basis(m)), N.basis(y));
                if (lhs != rhs) rep.add("psi-bimodule", "(" + N.names()[x] + "," + M.names()[m] + "," + N.names()[y] + ")", N.format(lhs), N.format(rhs));
            }
    Matrix<K> P = fe.inclusion.map * fe.psi;
    for (std::size_t m = 0; m < n; ++m) {
        Vec<K> l = M.zero(), r = M.zero();
        for_terms(fe.quasibasis, n, [&](std::size_t i, std::size_t j, const K& c) {
            axpy(l, c, M.mul(P.apply(M.mul(M.basis(m), M.basis(i))), M.basis(j)));
            axpy(r, c, M.mul(M.basis(i), P.apply(M.mul(M.basis(j), M.basis(m)))));
        });
        if (l != M.basis(m)) rep.add("quasibasis-left", M.names()[m], M.format(l), M.names()[m]);
        if (r != M.basis(m)) rep.add("quasibasis-right", M.names()[m], M.format(r), M.names()[m]);
    }
    return rep;
}

// A = End(_N M _N) under composition, B = (M (x)_N M)^N, the two convolution
// products, the Fourier maps and both antipodes, plus the centralizer C_M(N) with
// its Nakayama automorphism.
template <class K>
struct EndoRingData {
    FrobeniusExtension<K> fe;
    std::vector<std::pair<Vec<K>, Vec<K>>> qb;  // quasibasis terms, coefficient folded into u
    Matrix<K> P;                                // m -> i(psi(m))
    QuotPtr<K> QN;                              // M (x)_N M

    detail::Subspace<K> A_space;  // flattened endomorphism matrices
    AlgPtr<K> A, A_conv;
    detail::Subspace<K> B_space;  // classes of QN
    AlgPtr<K> B, B_conv;

    Matrix<K> F, Fdot, Finv, Fdotinv;
    Morphism<K> S_A, S_B;

    detail::Subspace<K> C_space;
    AlgPtr<K> C;
    Matrix<K> lambda, rho;  // C -> A, left and right multiplication
    Morphism<K> nakayama;

    const Algebra<K>& Malg() const { return *fe.M; }
    std::size_t nM() const { return fe.M->dim(); }

    Matrix<K> endo(const Vec<K>& a) const { return detail::unflatten(A_space.embed(a), nM(), fe.M->field()); }
    Vec<K> from_endo(const Matrix<K>& T, const std::string& what = "End(M)") const { return A_space.coords(detail::flatten(T), what); }
    std::optional<Vec<K>> try_from_endo(const Matrix<K>& T) const { return A_space.try_coords(detail::flatten(T)); }

    Vec<K> psiM(const Vec<K>& m) const { return P.apply(m); }

    Vec<K> b_lift(const Vec<K>& b) const { return QN->section(B_space.embed(b)); }
    Vec<K> from_tensor(const Vec<K>& x, const std::string& what = "B") const { return B_space.coords(QN->project(x), what); }

    Vec<K> c_embed(const Vec<K>& c) const { return C_space.embed(c); }
    Vec<K> to_c(const Vec<K>& m, const std::string& what = "C_M(N)") const { return C_space.coords(m, what); }

    // Builds an endomorphism column by column: T e_k = f(e_k).
    template <class Fn>
    Matrix<K> endo_from(Fn&& fn) const {
        const auto& M = Malg();
        Matrix<K> T(nM(), nM(), M.field());
        for (std::size_t k = 0; k < nM(); ++k) T.set_col(k, fn(M.basis(k)));
        return T;
    }
};

namespace detail {

template <class K>
Vec<K> endo_conv(const EndoRingData<K>& E, const Matrix<K>& Ta, const Matrix<K>& Tb) {
    const auto& M = E.Malg();
    Matrix<K> T(E.nM(), E.nM(), M.field());
    for (const auto& [u, v] : E.qb) T = T + M.left_mult(Ta.apply(u)) * Tb * M.left_mult(v);
    return flatten(T);
}

template <class K>
Vec<K> b_product(const EndoRingData<K>& E, const Vec<K>& x, const Vec<K>& y) {
    // (b1 (x) b2)(b1' (x) b2') = b1' b1 (x) b2 b2'
    return E.QN->project(tensor_mul_ordered(E.Malg(), x, y, true, false));
}

template <class K>
Vec<K> b_conv(const EndoRingData<K>& E, const Vec<K>& x, const Vec<K>& y) {
    const auto& M = E.Malg();
    const std::size_t n = E.nM();
    Vec<K> out = zeros<K>(n * n, M.field());
    for_terms(x, n, [&](std::size_t p, std::size_t q, const K& c) {
        for_terms(y, n, [&](std::size_t r, std::size_t s, const K& c2) {
            Vec<K> left = M.mul(M.basis(p), E.psiM(M.mul(M.basis(q), M.basis(r))));
            axpy(out, c * c2, tensor(left, M.basis(s)));
        });
    });
    return E.QN->project(out);
}

}  // namespace detail

template <class K>
EndoRingData<K> build_endo_data(const FrobeniusExtension<K>& fe) {
    Report rep = check_frobenius(fe);
    if (!rep.ok()) throw Error(ErrorCode::NotFrobenius, fe.name + "\n" + rep.text());

    EndoRingData<K> E;
    E.fe = fe;
    const auto& M = *fe.M;
    const auto& N = *fe.N;
    const std::size_t n = M.dim();
    const Field f = M.field();
    E.P = fe.inclusion.map * fe.psi;
    for_terms(fe.quasibasis, n, [&](std::size_t i, std::size_t j, const K& c) { E.qb.emplace_back(c * M.basis(i), M.basis(j)); });
    E.QN = std::make_shared<const TensorQuotient<K>>(n, n, detail::extension_action(fe));

    // A: T commutes with left and right multiplication by i(N).
    {
        std::vector<Vec<K>> rows;
        for (std::size_t k = 0; k < N.dim(); ++k) {
            Vec<K> x = fe.inclusion(N.basis(k));
            for (const Matrix<K>& X : {M.left_mult(x), M.right_mult(x)})
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c) {
                        Vec<K> row = zeros<K>(n * n, f);
                        for (std::size_t k2 = 0; k2 < n; ++k2) {
                            row[r * n + k2] += X(k2, c);
                            row[k2 * n + c] -= X(r, k2);
                        }
                        if (!is_zero(row)) rows.push_back(std::move(row));
                    }
        }
        auto kb = kernel_basis(Matrix<K>::from_rows(rows, n * n, f));
        E.A_space = detail::Subspace<K>(Matrix<K>::from_columns(kb, n * n, f));
        std::vector<std::string> names;
        for (std::size_t p = 0; p < kb.size(); ++p) {
            std::size_t at = 0;
            if (detail::is_unit_vector(kb[p], at))
                names.push_back("E[" + M.names()[at / n] + "," + M.names()[at % n] + "]");
            else
                names.push_back("a" + std::to_string(p));
        }
        auto compose_flat = [&](const Vec<K>& x, const Vec<K>& y) { return detail::flatten(detail::unflatten(x, n, f) * detail::unflatten(y, n, f)); };
        E.A = detail::span_algebra(E.A_space, compose_flat, detail::flatten(Matrix<K>::identity(n, f)), names, "End(_N M_N) composition");
        auto conv_flat = [&](const Vec<K>& x, const Vec<K>& y) { return detail::endo_conv(E, detail::unflatten(x, n, f), detail::unflatten(y, n, f)); };
        E.A_conv = detail::span_algebra(E.A_space, conv_flat, detail::flatten(E.P), names, "End(_N M_N) convolution");
    }

    // B: classes q with i(x) q = q i(x).
    {
        const auto& Q = *E.QN;
        const std::size_t m = Q.dim();
        std::vector<Vec<K>> rows;
        for (std::size_t k = 0; k < N.dim(); ++k) {
            Vec<K> x = fe.inclusion(N.basis(k));
            Matrix<K> D(m, m, f);
            for (std::size_t j = 0; j < m; ++j) {
                Vec<K> s = Q.section(unit_vector<K>(m, j, f));
                D.set_col(j, Q.project(mul_leg(M, s, 0, x, MulSide::Left) - mul_leg(M, s, 1, x, MulSide::Right)));
            }
            for (std::size_t r = 0; r < m; ++r)
                if (!is_zero(D.row(r))) rows.push_back(D.row(r));
        }
        auto kb = kernel_basis(Matrix<K>::from_rows(rows, m, f));
        E.B_space = detail::Subspace<K>(Matrix<K>::from_columns(kb, m, f));
        std::vector<std::string> names;
        for (std::size_t p = 0; p < kb.size(); ++p) names.push_back("b" + std::to_string(p));
        auto prod = [&](const Vec<K>& x, const Vec<K>& y) { return detail::b_product(E, Q.section(x), Q.section(y)); };
        E.B = detail::span_algebra(E.B_space, prod, Q.project(tensor(M.one(), M.one())), names, "(M (x)_N M)^N product");
        auto conv = [&](const Vec<K>& x, const Vec<K>& y) { return detail::b_conv(E, Q.section(x), Q.section(y)); };
        E.B_conv = detail::span_algebra(E.B_space, conv, Q.project(fe.quasibasis), names, "(M (x)_N M)^N convolution");
    }

    const std::size_t a = E.A->dim(), b = E.B->dim();
    if (a != b) throw Error(ErrorCode::NotFrobenius, fe.name + ": End(_N M_N) and (M (x)_N M)^N differ in dimension");

    // Fourier transforms F(alpha) = u_i (x) alpha(v_i), Fdot(alpha) = alpha(u_i) (x) v_i.
    E.F = Matrix<K>(b, a, f);
    E.Fdot = Matrix<K>(b, a, f);
    for (std::size_t p = 0; p < a; ++p) {
        Matrix<K> T = E.endo(E.A->basis(p));
        Vec<K> x = zeros<K>(n * n, f), y = x;
        for (const auto& [u, v] : E.qb) {
            axpy(x, K::one(f), tensor(u, T.apply(v)));
            axpy(y, K::one(f), tensor(T.apply(u), v));
        }
        E.F.set_col(p, E.from_tensor(x, "F"));
        E.Fdot.set_col(p, E.from_tensor(y, "Fdot"));
    }
    // Inverses from their closed forms: F^-1(b) = psi(. b1) b2, Fdot^-1(b) = b1 psi(b2 .).
    E.Finv = Matrix<K>(a, b, f);
    E.Fdotinv = Matrix<K>(a, b, f);
    for (std::size_t p = 0; p < b; ++p) {
        Vec<K> x = E.b_lift(E.B->basis(p));
        E.Finv.set_col(p, E.from_endo(E.endo_from([&](const Vec<K>& m) {
            Vec<K> r = M.zero();
            for_terms(x, n, [&](std::size_t i, std::size_t j, const K& c) { axpy(r, c, M.mul(E.psiM(M.mul(m, M.basis(i))), M.basis(j))); });
            return r;
        }), "F^-1"));
        E.Fdotinv.set_col(p, E.from_endo(E.endo_from([&](const Vec<K>& m) {
            Vec<K> r = M.zero();
            for_terms(x, n, [&](std::size_t i, std::size_t j, const K& c) { axpy(r, c, M.mul(M.basis(i), E.psiM(M.mul(M.basis(j), m)))); });
            return r;
        }), "Fdot^-1"));
    }
    E.S_A = Morphism<K>(E.A, E.A, E.Fdotinv * E.F, Kind::AntiHom);
    E.S_B = Morphism<K>(E.B, E.B, E.Fdot * E.Finv, Kind::AntiHom);

    // Centralizer C_M(N).
    {
        std::vector<Vec<K>> rows;
        for (std::size_t k = 0; k < N.dim(); ++k) {
            Vec<K> x = fe.inclusion(N.basis(k));
            Matrix<K> D = M.right_mult(x) + (-K::one(f)) * M.left_mult(x);
            for (std::size_t r = 0; r < n; ++r)
                if (!is_zero(D.row(r))) rows.push_back(D.row(r));
        }
        auto kb = kernel_basis(Matrix<K>::from_rows(rows, n, f));
        E.C_space = detail::Subspace<K>(Matrix<K>::from_columns(kb, n, f));
        std::vector<std::string> names;
        for (std::size_t p = 0; p < kb.size(); ++p) {
            std::size_t at = 0;
            names.push_back(detail::is_unit_vector(kb[p], at) ? M.names()[at] : "c" + std::to_string(p));
        }
        E.C = detail::span_algebra(E.C_space, [&](const Vec<K>& x, const Vec<K>& y) { return M.mul(x, y); }, M.one(), names, "C_M(N)");
    }
    const std::size_t d = E.C->dim();
    E.lambda = Matrix<K>(a, d, f);
    E.rho = Matrix<K>(a, d, f);
    Matrix<K> nu(d, d, f);
    for (std::size_t k = 0; k < d; ++k) {
        Vec<K> c = E.c_embed(E.C->basis(k));
        E.lambda.set_col(k, E.from_endo(M.left_mult(c), "lambda"));
        E.rho.set_col(k, E.from_endo(M.right_mult(c), "rho"));
        Vec<K> r = M.zero();
        for (const auto& [u, v] : E.qb) axpy(r, K::one(f), M.mul(E.psiM(M.mul(u, c)), v));
        nu.set_col(k, E.to_c(r, "nakayama"));
    }
    E.nakayama = Morphism<K>(E.C, E.C, nu, Kind::Hom);
    return E;
}

// S_A(alpha) = u_i psi(alpha(v_i) .) and S_A^-1(alpha) = psi(. alpha(u_i)) v_i, evaluated directly.
template <class K>
Matrix<K> antipode_closed_form(const EndoRingData<K>& E, bool inverse) {
    const auto& M = E.Malg();
    const std::size_t a = E.A->dim();
    Matrix<K> S(a, a, M.field());
    for (std::size_t p = 0; p < a; ++p) {
        Matrix<K> T = E.endo(E.A->basis(p));
        S.set_col(p, E.from_endo(E.endo_from([&](const Vec<K>& m) {
            Vec<K> r = M.zero();
            for (const auto& [u, v] : E.qb) {
                if (inverse)
                    axpy(r, K::one(M.field()), M.mul(E.psiM(M.mul(m, T.apply(u))), v));
                else
                    axpy(r, K::one(M.field()), M.mul(u, E.psiM(M.mul(T.apply(v), m))));
            }
            return r;
        })));
    }
    return S;
}

// S_B(b) = psi(u_i b1) b2 (x) v_i and S_B^-1(b) = u_i (x) b1 psi(b2 v_i).
template <class K>
Matrix<K> b_antipode_closed_form(const EndoRingData<K>& E, bool inverse) {
    const auto& M = E.Malg();
    const std::size_t n = E.nM(), b = E.B->dim();
    const Field f = M.field();
    Matrix<K> S(b, b, f);
    for (std::size_t p = 0; p < b; ++p) {
        Vec<K> x = E.b_lift(E.B->basis(p));
        Vec<K> out = zeros<K>(n * n, f);
        for_terms(x, n, [&](std::size_t i, std::size_t j, const K& c) {
            for (const auto& [u, v] : E.qb) {
                if (inverse)
                    axpy(out, c, tensor(u, M.mul(M.basis(i), E.psiM(M.mul(M.basis(j), v)))));
                else
                    axpy(out, c, tensor(M.mul(E.psiM(M.mul(u, M.basis(i))), M.basis(j)), v));
            }
        });
        S.set_col(p, E.from_tensor(out, "S_B"));
    }
    return S;
}

// Fourier intertwining laws, antipode closed forms, the transposition identity and
// the Nakayama identities.
template <class K>
Report check_endo_data(const EndoRingData<K>& E) {
    Report rep;
    const auto& A = *E.A;
    const auto& Ac = *E.A_conv;
    const auto& B = *E.B;
    const auto& Bc = *E.B_conv;
    const auto& M = E.Malg();
    const auto& C = *E.C;
    const std::size_t a = A.dim(), n = E.nM(), d = C.dim();
    const Field f = M.field();

    if (Ac.one() != E.from_endo(E.P)) rep.add("convolution-unit-A", "psi", A.format(Ac.one()), "psi");
    if (Bc.one() != E.from_tensor(E.fe.quasibasis)) rep.add("convolution-unit-B", "u_i (x) v_i", B.format(Bc.one()), "u_i (x) v_i");

    const Matrix<K> I = Matrix<K>::identity(a, f);
    if (E.Finv * E.F != I || E.F * E.Finv != I) rep.add("fourier-inverse", "F");
    if (E.Fdotinv * E.Fdot != I || E.Fdot * E.Fdotinv != I) rep.add("fourier-inverse", "Fdot");

    for (std::size_t p = 0; p < a; ++p)
        for (std::size_t q = 0; q < a; ++q) {
            const Vec<K> x = A.basis(p), y = A.basis(q);
            const std::string w = basis_tuple(A, {p, q});
            Vec<K> cv = Ac.mul(x, y), cp = A.mul(x, y);
            Vec<K> Fx = E.F.apply(x), Fy = E.F.apply(y), Dx = E.Fdot.apply(x), Dy = E.Fdot.apply(y);
            if (E.F.apply(cv) != B.mul(Fx, Fy)) rep.add("fourier-F-convolution", w);
            if (E.Fdot.apply(cv) != B.mul(Dy, Dx)) rep.add("fourier-Fdot-convolution", w);
            if (E.F.apply(cp) != Bc.mul(Fy, Fx)) rep.add("fourier-F-composition", w);
            if (E.Fdot.apply(cp) != Bc.mul(Dx, Dy)) rep.add("fourier-Fdot-composition", w);
        }

    rep.merge(check_morphism(E.S_A), "S_A");
    rep.merge(check_morphism(E.S_B), "S_B");
    if (antipode_closed_form(E, false) != E.S_A.map) rep.add("S_A-closed-form", "Fdot^-1 F");
    Matrix<K> SAinv = antipode_closed_form(E, true);
    if (SAinv * E.S_A.map != I || E.S_A.map * SAinv != I) rep.add("S_A-inverse-closed-form", "S_A^-1 S_A");
    if (b_antipode_closed_form(E, false) != E.S_B.map) rep.add("S_B-closed-form", "Fdot F^-1");
    Matrix<K> SBinv = b_antipode_closed_form(E, true);
    if (SBinv * E.S_B.map != I || E.S_B.map * SBinv != I) rep.add("S_B-inverse-closed-form", "S_B^-1 S_B");

    // psi(m S_A(alpha)(m')) = psi(alpha(m) m')
    for (std::size_t p = 0; p < a; ++p) {
        Matrix<K> T = E.endo(A.basis(p)), ST = E.endo(E.S_A(A.basis(p)));
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t mp = 0; mp < n; ++mp) {
                Vec<K> l = E.fe.psi.apply(M.mul(M.basis(m), ST.apply(M.basis(mp))));
                Vec<K> r = E.fe.psi.apply(M.mul(T.apply(M.basis(m)), M.basis(mp)));
                if (l != r) rep.add("transposition", A.names()[p] + " m=" + M.names()[m] + " m'=" + M.names()[mp], vec_str(l), vec_str(r));
            }
    }

    rep.merge(check_morphism(E.nakayama), "nakayama");
    if (rank(E.nakayama.map) != d) rep.add("nakayama", "bijective");
    for (std::size_t k = 0; k < d; ++k) {
        Vec<K> c = E.c_embed(C.basis(k)), nc = E.c_embed(E.nakayama(C.basis(k)));
        for (std::size_t m = 0; m < n; ++m) {
            Vec<K> l = E.fe.psi.apply(M.mul(M.basis(m), c));
            Vec<K> r = E.fe.psi.apply(M.mul(nc, M.basis(m)));
            if (l != r) rep.add("nakayama-psi", C.names()[k] + " m=" + M.names()[m], vec_str(l), vec_str(r));
        }
        Vec<K> l = zeros<K>(n * n, f), r = l;
        for (const auto& [u, v] : E.qb) {
            axpy(l, K::one(f), tensor(M.mul(u, c), v));
            axpy(r, K::one(f), tensor(u, M.mul(nc, v)));
        }
        if (!E.QN->same_class(l, r)) rep.add("nakayama-quasibasis", C.names()[k]);
    }
    if (rank(E.nakayama.map) == d) {
        if (E.S_A.map * E.lambda != E.rho * invert(E.nakayama.map)) rep.add("S_A-lambda", "S_A lambda = rho nu^-1");
    }
    if (E.S_A.map * E.rho != E.lambda) rep.add("S_A-rho", "S_A rho = lambda");
    return rep;
}

template <class K>
struct D2Quasibases {
    std::vector<Vec<K>> betas, gammas;  // in A
    std::vector<Vec<K>> bs, cs;         // in B
};

// The four depth two conditions on the quasibases, with b_i = F(gamma_i), c_i = Fdot(beta_i):
//   i)   b_i1 (x) b_i2 beta_i(m) = m (x) 1
//   ii)  gamma_i(m) c_i1 (x) c_i2 = 1 (x) m
//   iii) gamma_i(m) beta_i(m') = psi(m m')
//   iv)  b_i1 (x) b_i2 c_i1 (x) c_i2 = u_k (x) 1 (x) v_k
template <class K>
Report check_d2_conditions(const EndoRingData<K>& E, const D2Quasibases<K>& qb) {
    Report rep;
    const auto& M = E.Malg();
    const std::size_t n = E.nM(), len = qb.betas.size();
    const Field f = M.field();
    const auto& Q = *E.QN;
    if (qb.gammas.size() != len || qb.bs.size() != len || qb.cs.size() != len) {
        rep.add("d2-shape", "family lengths differ");
        return rep;
    }
    for (std::size_t i = 0; i < len; ++i) {
        if (E.F.apply(qb.gammas[i]) != qb.bs[i]) rep.add("d2-b-is-F-gamma", std::to_string(i));
        if (E.Fdot.apply(qb.betas[i]) != qb.cs[i]) rep.add("d2-c-is-Fdot-beta", std::to_string(i));
    }
    std::vector<Matrix<K>> Tb, Tg;
    std::vector<Vec<K>> bl, cl;
    for (std::size_t i = 0; i < len; ++i) {
        Tb.push_back(E.endo(qb.betas[i]));
        Tg.push_back(E.endo(qb.gammas[i]));
        bl.push_back(E.b_lift(qb.bs[i]));
        cl.push_back(E.b_lift(qb.cs[i]));
    }
    for (std::size_t m = 0; m < n; ++m) {
        const Vec<K> em = M.basis(m);
        Vec<K> c1 = zeros<K>(n * n, f), c2 = c1;
        for (std::size_t i = 0; i < len; ++i) {
            axpy(c1, K::one(f), mul_leg(M, bl[i], 1, Tb[i].apply(em), MulSide::Right));
            axpy(c2, K::one(f), mul_leg(M, cl[i], 0, Tg[i].apply(em), MulSide::Left));
        }
        if (!Q.same_class(c1, tensor(em, M.one()))) rep.add("d2-i", M.names()[m], Q.format(Q.project(c1), M, M), M.names()[m] + "(x)1");
        if (!Q.same_class(c2, tensor(M.one(), em))) rep.add("d2-ii", M.names()[m], Q.format(Q.project(c2), M, M), "1(x)" + M.names()[m]);
        for (std::size_t mp = 0; mp < n; ++mp) {
            Vec<K> l = M.zero();
            for (std::size_t i = 0; i < len; ++i) axpy(l, K::one(f), M.mul(Tg[i].apply(em), Tb[i].apply(M.basis(mp))));
            Vec<K> r = E.psiM(M.mul(em, M.basis(mp)));
            if (l != r) rep.add("d2-iii", "(" + M.names()[m] + "," + M.names()[mp] + ")", M.format(l), M.format(r));
        }
    }
    auto act = detail::extension_action(E.fe);
    TripleQuotient<K> T3(n, act, act);
    Vec<K> l = zeros<K>(n * n * n, f), r = l;
    for (std::size_t i = 0; i < len; ++i)
        for_terms(bl[i], n, [&](std::size_t p, std::size_t q, const K& x) {
            for_terms(cl[i], n, [&](std::size_t s, std::size_t t, const K& y) {
                Vec<K> mid = M.mul(M.basis(q), M.basis(s));
                for (std::size_t k = 0; k < n; ++k)
                    if (!mid[k].is_zero()) l[(p * n + k) * n + t] += x * y * mid[k];
            });
        });
    for (const auto& [u, v] : E.qb)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t t = 0; t < n; ++t) r[(p * n + k) * n + t] += u[p] * M.one()[k] * v[t];
    if (!T3.same_class(l, r)) rep.add("d2-iv", "b_i (x) c_i");
    return rep;
}

// Solves condition i) for X = sum b_i (x) beta_i in B (x) A, then splits X into a
// minimal sum of simple tensors by a rank factorization.
template <class K>
D2Quasibases<K> find_d2_quasibases(const EndoRingData<K>& E) {
    const auto& M = E.Malg();
    const auto& Q = *E.QN;
    const std::size_t n = E.nM(), na = E.A->dim(), nb = E.B->dim(), q = Q.dim();
    const Field f = M.field();
    std::vector<Vec<K>> bl(nb);
    std::vector<Matrix<K>> Ta(na);
    for (std::size_t p = 0; p < nb; ++p) bl[p] = E.b_lift(E.B->basis(p));
    for (std::size_t p = 0; p < na; ++p) Ta[p] = E.endo(E.A->basis(p));

    Matrix<K> sys(n * q, nb * na, f);
    Vec<K> rhs = zeros<K>(n * q, f);
    for (std::size_t m = 0; m < n; ++m) {
        Vec<K> t = Q.project(tensor(M.basis(m), M.one()));
        for (std::size_t k = 0; k < q; ++k) rhs[m * q + k] = t[k];
        for (std::size_t p = 0; p < nb; ++p)
            for (std::size_t s = 0; s < na; ++s) {
                Vec<K> v = Q.project(mul_leg(M, bl[p], 1, Ta[s].apply(M.basis(m)), MulSide::Right));
                for (std::size_t k = 0; k < q; ++k) sys(m * q + k, p * na + s) = v[k];
            }
    }
    Vec<K> x;
    try {
        x = solve_linear(sys, rhs);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::Inconsistent) throw;
        throw Error(ErrorCode::NotD2, E.fe.name + ": no quasibasis solves b_i (x) b_i beta_i(m) = m (x) 1");
    }
    Matrix<K> X(nb, na, f);
    for (std::size_t p = 0; p < nb; ++p)
        for (std::size_t s = 0; s < na; ++s) X(p, s) = x[p * na + s];
    auto ech = rref(X);
    D2Quasibases<K> qb;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
        qb.bs.push_back(X.col(ech.pivots[i]));
        qb.betas.push_back(ech.reduced.row(i));
        qb.gammas.push_back(E.Finv.apply(qb.bs.back()));
        qb.cs.push_back(E.Fdot.apply(qb.betas.back()));
    }
    Report rep = check_d2_conditions(E, qb);
    if (!rep.ok()) throw Error(ErrorCode::AxiomViolation, E.fe.name + ": quasibasis conditions disagree\n" + rep.text());
    return qb;
}

// The endomorphism-ring Hopf algebroid over L = C_M(N), R = L^op, with
// theta = nu^-1 : L -> R^op and iota = id : R -> L^op.
template <class K>
struct D2HopfAlgebroid {
    EndoRingData<K> endo;
    D2Quasibases<K> qb;
    SymmetrizedHopfAlgebroid<K> hopf;
    Morphism<K> nu;     // on L
    Morphism<K> theta;  // L -> R
    Morphism<K> iota;   // R -> L
};

template <class K>
D2HopfAlgebroid<K> d2_hopf_algebroid(const EndoRingData<K>& E, const D2Quasibases<K>& qb) {
    const auto& A = *E.A;
    const auto& Ac = *E.A_conv;
    const auto& M = E.Malg();
    const std::size_t na = A.dim(), d = E.C->dim();
    const Field f = M.field();
    AlgPtr<K> L = E.C;
    AlgPtr<K> R = opposite_ptr(L);
    const Matrix<K> nuinv = invert(E.nakayama.map);

    Morphism<K> sL(L, E.A, E.lambda, Kind::Hom);
    Morphism<K> tL(L, E.A, E.rho, Kind::AntiHom);
    Morphism<K> sR(R, E.A, E.rho, Kind::Hom);
    Morphism<K> tR(R, E.A, E.lambda * E.nakayama.map, Kind::AntiHom);

    Matrix<K> piL(d, na, f), piR(d, na, f);
    Matrix<K> gL(na * na, na, f), gR(na * na, na, f);
    std::vector<Vec<K>> Sb, Sg;
    for (std::size_t i = 0; i < qb.betas.size(); ++i) {
        Sb.push_back(E.S_A(qb.betas[i]));
        Sg.push_back(E.S_A(qb.gammas[i]));
    }
    for (std::size_t p = 0; p < na; ++p) {
        const Vec<K> x = A.basis(p);
        Matrix<K> T = E.endo(x);
        piL.set_col(p, E.to_c(T.apply(M.one()), "pi_L"));
        Vec<K> r = M.zero();
        for (const auto& [u, v] : E.qb) axpy(r, K::one(f), M.mul(u, E.psiM(T.apply(v))));
        piR.set_col(p, E.to_c(r, "pi_R"));
        Vec<K> gl = zeros<K>(na * na, f), gr = gl;
        for (std::size_t i = 0; i < qb.betas.size(); ++i) {
            axpy(gl, K::one(f), tensor(qb.gammas[i], Ac.mul(qb.betas[i], x)));
            axpy(gr, K::one(f), tensor(Ac.mul(x, Sb[i]), Sg[i]));
        }
        gL.set_col(p, gl);
        gR.set_col(p, gr);
    }
    LeftBialgebroid<K> left(E.A, L, sL, tL, gL, piL);
    RightBialgebroid<K> right(E.A, R, sR, tR, gR, piR);
    auto H = make_symmetrized(std::move(left), std::move(right), E.S_A);
    return {E, qb, std::move(H), E.nakayama, Morphism<K>(L, R, nuinv, Kind::AntiHom), Morphism<K>(R, L, Matrix<K>::identity(d, f), Kind::AntiHom)};
}

template <class K>
D2HopfAlgebroid<K> d2_hopf_algebroid(const FrobeniusExtension<K>& fe) {
    auto E = build_endo_data(fe);
    auto qb = find_d2_quasibases(E);
    return d2_hopf_algebroid(E, qb);
}

// Replaces the Nakayama automorphism (and theta with it) by the identity.
template <class K>
D2HopfAlgebroid<K> with_trivial_nakayama(D2HopfAlgebroid<K> D) {
    D.nu = Morphism<K>::identity(D.nu.src);
    D.theta.map = Matrix<K>::identity(D.theta.map.rows(), D.theta.map.field());
    return D;
}

namespace detail {

// Alternative expressions for the two coproducts, one simple tensor per quasibasis index.
template <class K>
std::vector<Vec<K>> coproduct_variants(const D2HopfAlgebroid<K>& D, Side side, const Vec<K>& x) {
    const auto& E = D.endo;
    const auto& A = *E.A;
    const auto& Ac = *E.A_conv;
    const auto& M = E.Malg();
    const std::size_t na = A.dim(), n = E.nM(), len = D.qb.betas.size();
    const Field f = M.field();
    const Matrix<K> Ta = E.endo(x);
    std::vector<Vec<K>> out(4, zeros<K>(na * na, f));
    for (std::size_t i = 0; i < len; ++i) {
        const Vec<K>& beta = D.qb.betas[i];
        const Vec<K>& gamma = D.qb.gammas[i];
        const Vec<K> bl = E.b_lift(D.qb.bs[i]), cl = E.b_lift(D.qb.cs[i]);
        const Matrix<K> Tb = E.endo(beta), Tg = E.endo(gamma);
        auto sum_over = [&](const Vec<K>& lift, auto&& term) {
            return E.from_endo(E.endo_from([&](const Vec<K>& m) {
                Vec<K> r = M.zero();
                for_terms(lift, n, [&](std::size_t p, std::size_t q, const K& c) { axpy(r, c, term(m, M.basis(p), M.basis(q))); });
                return r;
            }), "coproduct leg");
        };
        if (side == Side::Left) {
            // gamma_i (x) c_i1 alpha(c_i2 .)
            Vec<K> l1 = sum_over(cl, [&](const Vec<K>& m, const Vec<K>& p, const Vec<K>& q) { return M.mul(p, Ta.apply(M.mul(q, m))); });
            axpy(out[0], K::one(f), tensor(gamma, l1));
            // alpha(. b_i1) b_i2 (x) beta_i
            Vec<K> l2 = sum_over(bl, [&](const Vec<K>& m, const Vec<K>& p, const Vec<K>& q) { return M.mul(Ta.apply(M.mul(m, p)), q); });
            axpy(out[1], K::one(f), tensor(l2, beta));
            axpy(out[2], K::one(f), tensor(gamma, Ac.mul(beta, x)));
            axpy(out[3], K::one(f), tensor(Ac.mul(x, gamma), beta));
        } else {
            // alpha(. c_i1) c_i2 (x) psi(. gamma_i(u_k)) v_k
            Vec<K> f1 = sum_over(cl, [&](const Vec<K>& m, const Vec<K>& p, const Vec<K>& q) { return M.mul(Ta.apply(M.mul(m, p)), q); });
            Vec<K> s1 = E.from_endo(E.endo_from([&](const Vec<K>& m) {
                Vec<K> r = M.zero();
                for (const auto& [u, v] : E.qb) axpy(r, K::one(f), M.mul(E.psiM(M.mul(m, Tg.apply(u))), v));
                return r;
            }));
            axpy(out[0], K::one(f), tensor(f1, s1));
            // u_k psi(beta_i(v_k) .) (x) b_i1 alpha(b_i2 .)
            Vec<K> f2 = E.from_endo(E.endo_from([&](const Vec<K>& m) {
                Vec<K> r = M.zero();
                for (const auto& [u, v] : E.qb) axpy(r, K::one(f), M.mul(u, E.psiM(M.mul(Tb.apply(v), m))));
                return r;
            }));
            Vec<K> s2 = sum_over(bl, [&](const Vec<K>& m, const Vec<K>& p, const Vec<K>& q) { return M.mul(p, Ta.apply(M.mul(q, m))); });
            axpy(out[1], K::one(f), tensor(f2, s2));
            Vec<K> Sb = E.S_A(beta), Sg = E.S_A(gamma);
            axpy(out[2], K::one(f), tensor(Ac.mul(x, Sb), Sg));
            axpy(out[3], K::one(f), tensor(Sb, Ac.mul(Sg, x)));
        }
    }
    return out;
}

}  // namespace detail

// Intertwining of the antipode with both coproducts and counits, the antipode table on
// the four base maps, the twisted bimodule laws, the coproduct variants and the
// characterizing properties of gamma_L and gamma_R on M.
template <class K>
Report d2_identity_suite(const D2HopfAlgebroid<K>& D) {
    Report rep;
    const auto& E = D.endo;
    const auto& H = D.hopf;
    const auto& BL = H.left;
    const auto& BR = H.right;
    const auto& A = *BL.A;
    const auto& L = *BL.base;
    const auto& R = *BR.base;
    const auto& M = E.Malg();
    const auto& QL = BL.Q();
    const auto& QR = BR.Q();
    const std::size_t na = A.dim(), n = E.nM(), d = L.dim();
    const Field f = A.field();
    const Matrix<K>& S = E.S_A.map;

    for (std::size_t p = 0; p < na; ++p) {
        const Vec<K> x = A.basis(p);
        Vec<K> lhs = BL.gamma_lift(E.S_A(x));
        Vec<K> rhs = tensor_flip(tensor_apply(S, S, BR.gamma_lift(x)), na, na);
        if (!QL.same_class(lhs, rhs)) rep.add("gammaL-antipode", A.names()[p], QL.format(QL.project(lhs), A, A), QL.format(QL.project(rhs), A, A));
        lhs = BR.gamma_lift(E.S_A(x));
        rhs = tensor_flip(tensor_apply(S, S, BL.gamma_lift(x)), na, na);
        if (!QR.same_class(lhs, rhs)) rep.add("gammaR-antipode", A.names()[p], QR.format(QR.project(lhs), A, A), QR.format(QR.project(rhs), A, A));
    }
    if (BL.pi * S != D.iota.map * BR.pi) rep.add("piL-antipode", "pi_L S = iota pi_R");
    if (BR.pi * S != D.theta.map * BL.pi) rep.add("piR-antipode", "pi_R S = theta pi_L");
    if (S * BR.s.map != BL.s.map * D.iota.map) rep.add("antipode-sR", "S s_R = s_L iota");
    if (S * BR.t.map != BL.t.map * D.iota.map) rep.add("antipode-tR", "S t_R = t_L iota");
    if (S * BL.s.map != BR.s.map * D.theta.map) rep.add("antipode-sL", "S s_L = s_R theta");
    if (S * BL.t.map != BR.t.map * D.theta.map) rep.add("antipode-tL", "S t_L = t_R theta");

    // base-map table
    const Matrix<K> nuinv = invert(D.nu.map);
    if (S * BL.s.map != BL.t.map * nuinv) rep.add("table-S-sL", "S s_L = t_L nu^-1");
    if (S * BL.t.map != BL.s.map) rep.add("table-S-tL", "S t_L = s_L");
    if (S * BR.s.map != BR.t.map * nuinv) rep.add("table-S-sR", "S s_R = t_R nu^-1");
    if (S * BR.t.map != BR.s.map) rep.add("table-S-tR", "S t_R = s_R");
    if (BL.t.map * D.iota.map != BR.s.map) rep.add("table-tL-iota", "t_L iota = s_R");
    if (BR.t.map * D.theta.map != BL.s.map) rep.add("table-tR-theta", "t_R theta = s_L");

    if (!same_column_span(BL.s.map, BR.t.map)) rep.add("subring", "s_L(L) = t_R(R)");
    if (!same_column_span(BL.t.map, BR.s.map)) rep.add("subring", "t_L(L) = s_R(R)");

    // S(l1.a.l2) = theta(l2).S(a).theta(l1) and S(r1.a.r2) = iota(r2).S(a).iota(r1)
    for (std::size_t p = 0; p < na; ++p) {
        const Vec<K> x = A.basis(p), Sx = E.S_A(x);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Vec<K> lhs = E.S_A(A.mul(BL.s(L.basis(i)), BL.t(L.basis(j)), x));
                Vec<K> rhs = A.mul(Sx, BR.t(D.theta(L.basis(j))), BR.s(D.theta(L.basis(i))));
                if (lhs != rhs) rep.add("twisted-bimodule-L", A.names()[p] + " l=" + L.names()[i] + " l'=" + L.names()[j], A.format(lhs), A.format(rhs));
                lhs = E.S_A(A.mul(x, BR.t(R.basis(i)), BR.s(R.basis(j))));
                rhs = A.mul(BL.s(D.iota(R.basis(j))), BL.t(D.iota(R.basis(i))), Sx);
                if (lhs != rhs) rep.add("twisted-bimodule-R", A.names()[p] + " r=" + R.names()[i] + " r'=" + R.names()[j], A.format(lhs), A.format(rhs));
            }
    }

    for (std::size_t p = 0; p < na; ++p) {
        const Vec<K> x = A.basis(p);
        auto vl = detail::coproduct_variants(D, Side::Left, x);
        auto vr = detail::coproduct_variants(D, Side::Right, x);
        const Vec<K> gl = BL.gamma_lift(x), gr = BR.gamma_lift(x);
        for (std::size_t k = 0; k < 4; ++k) {
            if (!QL.same_class(vl[k], gl)) rep.add("gammaL-form-" + std::to_string(k + 1), A.names()[p], QL.format(QL.project(vl[k]), A, A), QL.format(QL.project(gl), A, A));
            if (!QR.same_class(vr[k], gr)) rep.add("gammaR-form-" + std::to_string(k + 1), A.names()[p], QR.format(QR.project(vr[k]), A, A), QR.format(QR.project(gr), A, A));
        }

        // alpha(m m') = alpha_(1)(m) alpha_(2)(m')   and   alpha(m) u_i (x) v_i = alpha^(1)(m u_i) (x) alpha^(2)(v_i)
        const Matrix<K> Ta = E.endo(x);
        std::vector<std::tuple<Matrix<K>, Matrix<K>, K>> tl, tr;
        for_terms(gl, na, [&](std::size_t i, std::size_t j, const K& c) { tl.emplace_back(E.endo(A.basis(i)), E.endo(A.basis(j)), c); });
        for_terms(gr, na, [&](std::size_t i, std::size_t j, const K& c) { tr.emplace_back(E.endo(A.basis(i)), E.endo(A.basis(j)), c); });
        for (std::size_t m = 0; m < n; ++m) {
            const Vec<K> em = M.basis(m);
            for (std::size_t mp = 0; mp < n; ++mp) {
                Vec<K> r = M.zero();
                for (const auto& [X, Y, c] : tl) axpy(r, c, M.mul(X.apply(em), Y.apply(M.basis(mp))));
                Vec<K> l = Ta.apply(M.mul(em, M.basis(mp)));
                if (l != r) rep.add("gammaL-on-M", A.names()[p] + " (" + M.names()[m] + "," + M.names()[mp] + ")", M.format(l), M.format(r));
            }
            Vec<K> l = zeros<K>(n * n, f), r = l;
            for (const auto& [u, v] : E.qb) {
                axpy(l, K::one(f), tensor(M.mul(Ta.apply(em), u), v));
                for (const auto& [X, Y, c] : tr) axpy(r, c, tensor(X.apply(M.mul(em, u)), Y.apply(v)));
            }
            if (!E.QN->same_class(l, r)) rep.add("gammaR-on-M", A.names()[p] + " m=" + M.names()[m]);
        }
    }
    return rep;
}

// Everything a D2 result should pass: both bialgebroid suites, the Hopf axioms and
// the symmetrized axioms.
template <class K>
Report verify_d2(const D2HopfAlgebroid<K>& D) {
    Report rep;
    rep.merge(verify_left(D.hopf.left), "left");
    rep.merge(verify_right(D.hopf.right), "right");
    rep.merge(verify_hopf(D.hopf.hopf()), "hopf");
    rep.merge(verify_symmetrized(D.hopf), "symmetrized");
    return rep;
}

// ---- extensions used as fixtures ----

template <class K>
AlgPtr<K> matrix_algebra(std::size_t k, const Field& f) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    Vec<K> one = zeros<K>(k * k, f);
    for (std::size_t i = 0; i < k; ++i) one[i * k + i] = K::one(f);
    return make_algebra(Algebra<K>::from_rule(
        k * k,
        [&](std::size_t a, std::size_t b) {
            Vec<K> v = zeros<K>(k * k, f);
            if (a % k == b / k) v[(a / k) * k + b % k] = K::one(f);
            return v;
        },
        one, f, names));
}

namespace detail {

template <class K>
FrobeniusExtension<K> over_ground_field(std::string name, AlgPtr<K> M, Matrix<K> psi, Vec<K> qb) {
    const Field f = M->field();
    auto N = make_algebra(Algebra<K>(1, {K::one(f)}, {K::one(f)}, f, {"1"}));
    Matrix<K> inc(M->dim(), 1, f);
    inc.set_col(0, M->one());
    return {std::move(name), N, M, Morphism<K>(N, M, inc, Kind::Hom), std::move(psi), std::move(qb)};
}

// psi(m) = tr(diag(w) m) on M_2 with quasibasis e_ij (x) w_j^-1 e_ji.
template <class K>
FrobeniusExtension<K> weighted_m2(std::string name, long long w1, long long w2, const Field& f) {
    auto M = matrix_algebra<K>(2, f);
    const K w[2] = {K::from_int(w1, f), K::from_int(w2, f)};
    if (w[0].is_zero() || w[1].is_zero()) throw Error(ErrorCode::NotFrobenius, name + ": weight vanishes in this field");
    Matrix<K> psi(1, 4, f);
    psi(0, 0) = w[0];
    psi(0, 3) = w[1];
    Vec<K> qb = zeros<K>(16, f);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) qb[(i * 2 + j) * 4 + (j * 2 + i)] = w[j].inv();
    return over_ground_field(std::move(name), M, psi, qb);
}

}  // namespace detail

// k in M_2(k) with the trace form.
template <class K>
FrobeniusExtension<K> make_m2tr(const Field& f) {
    return detail::weighted_m2<K>("m2tr", 1, 1, f);
}

// k in M_2(k) with psi(m) = tr(d m), d = diag(1, 2); its Nakayama automorphism is
// conjugation by d^-1.
template <class K>
FrobeniusExtension<K> make_weighted_trace(const Field& f) {
    return detail::weighted_m2<K>("m2-weighted", 1, 2, f);
}

// k in kZ_2 with psi the coefficient of 1.
template <class K>
FrobeniusExtension<K> make_kz2ext(const Field& f) {
    auto M = make_algebra(Algebra<K>::from_rule(
        2, [&](std::size_t i, std::size_t j) { return unit_vector<K>(2, (i + j) % 2, f); }, unit_vector<K>(2, 0, f), f, {"1", "t"}));
    Matrix<K> psi(1, 2, f);
    psi(0, 0) = K::one(f);
    Vec<K> qb = zeros<K>(4, f);
    qb[0] = K::one(f);
    qb[3] = K::one(f);
    return detail::over_ground_field<K>("kz2ext", M, psi, qb);
}

// Diagonal matrices inside M_2 with the diagonal-part expectation: the ground ring is
// not central here, so the tensor products over N are proper quotients.
template <class K>
FrobeniusExtension<K> make_diagonal_m2(const Field& f) {
    auto M = matrix_algebra<K>(2, f);
    auto N = make_algebra(Algebra<K>::from_rule(
        2, [&](std::size_t i, std::size_t j) { return i == j ? unit_vector<K>(2, i, f) : zeros<K>(2, f); },
        Vec<K>{K::one(f), K::one(f)}, f, {"d1", "d2"}));
    Matrix<K> inc(4, 2, f);
    inc(0, 0) = K::one(f);
    inc(3, 1) = K::one(f);
    Matrix<K> psi(2, 4, f);
    psi(0, 0) = K::one(f);
    psi(1, 3) = K::one(f);
    Vec<K> qb = zeros<K>(16, f);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) qb[(i * 2 + j) * 4 + (j * 2 + i)] = K::one(f);
    return {"m2-diagonal", N, M, Morphism<K>(N, M, inc, Kind::Hom), psi, qb};
}

template <class K>
std::vector<FrobeniusExtension<K>> make_frobenius_fixtures(const Field& f) {
    return {make_m2tr<K>(f), make_kz2ext<K>(f), make_weighted_trace<K>(f)};
}

}  // namespace algd
