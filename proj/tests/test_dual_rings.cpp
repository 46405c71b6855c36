#include "doctest.h"

#include <optional>
#include <string>

#include "algd/dual.hpp"
#include "algd/fixtures.hpp"
#include "algd/hopf.hpp"

using namespace algd;
using Q = Rational;

namespace {

const Field QQ{};

constexpr DualKind kLower[] = {DualKind::LowerRight, DualKind::LowerLeft};
constexpr DualKind kUpper[] = {DualKind::UpperRight, DualKind::UpperLeft};

template <class K>
const BialgebroidData<K>& side_for(const SymmetrizedHopfAlgebroid<K>& T, DualKind k) {
    if (is_lower(k)) return T.left;
    return T.right;
}

// The product on a dual evaluated at g with gamma(g) = c g (x) g, where the sum collapses to one term.
template <class K>
Vec<K> grouplike_product(const DualRing<K>& D, const Vec<K>& phi, const Vec<K>& psi, const Vec<K>& g, const K& c) {
    const auto& B = D.bgd;
    const auto& A = *B.A;
    const Vec<K> pg = D.eval(phi, c * g), qg = D.eval(psi, c * g);
    switch (D.which) {
        case DualKind::LowerRight: return D.eval(psi, A.mul(B.s(pg), g));
        case DualKind::LowerLeft: return D.eval(psi, A.mul(B.t(pg), g));
        case DualKind::UpperRight: return D.eval(phi, A.mul(g, B.t(qg)));
        case DualKind::UpperLeft: return D.eval(phi, A.mul(g, B.s(qg)));
    }
    return {};
}

// The scalar c when gamma(e_a) = c e_a (x) e_a, nothing otherwise.
template <class K>
std::optional<K> grouplike_scalar(const BialgebroidData<K>& B, std::size_t a) {
    const std::size_t n = B.n();
    const Vec<K> g = B.gamma.col(a);
    Vec<K> rest = g;
    rest[a * n + a] = K::zero(B.A->field());
    if (!algd::is_zero(rest) || g[a * n + a].is_zero()) return std::nullopt;
    return g[a * n + a];
}

// Checks the defining linearity of every functional directly on basis elements.
template <class K>
bool functionals_are_linear(const DualRing<K>& D) {
    const auto& B = D.bgd;
    const auto& A = *B.A;
    const auto& L = *B.base;
    for (const auto& F : D.functionals)
        for (std::size_t l = 0; l < L.dim(); ++l)
            for (std::size_t a = 0; a < A.dim(); ++a) {
                const Vec<K> el = L.basis(l), ea = A.basis(a);
                Vec<K> lhs, rhs;
                switch (D.which) {
                    case DualKind::LowerRight: lhs = F.apply(A.mul(B.t(el), ea)), rhs = L.mul(F.apply(ea), el); break;
                    case DualKind::LowerLeft: lhs = F.apply(A.mul(B.s(el), ea)), rhs = L.mul(el, F.apply(ea)); break;
                    case DualKind::UpperRight: lhs = F.apply(A.mul(ea, B.s(el))), rhs = L.mul(F.apply(ea), el); break;
                    case DualKind::UpperLeft: lhs = F.apply(A.mul(ea, B.t(el))), rhs = L.mul(el, F.apply(ea)); break;
                }
                if (lhs != rhs) return false;
            }
    return true;
}

template <class K>
void check_all_duals(const HopfFixture<K>& fx, std::size_t expected_dim) {
    auto T = symmetrize(fx.hopf);
    for (DualKind k : kLower) {
        CAPTURE(std::string(dual_kind_name(k)));
        auto D = build_dual_ring<K>(T.left, k);
        CHECK(D.dim() == expected_dim);
        CHECK(functionals_are_linear(D));
        CHECK(D.eval(D.carrier->one(), T.left.A->one()) == T.left.counit(T.left.A->one()));
        Report act = check_dual_actions(D);
        CHECK_MESSAGE(act.ok(), act.text());
        auto db = find_dual_basis(D);
        CHECK(check_dual_basis(D, db).ok());
        Report r = verify_right(dual_right_bialgebroid(D, db));
        CHECK_MESSAGE(r.ok(), r.text());
    }
    for (DualKind k : kUpper) {
        CAPTURE(std::string(dual_kind_name(k)));
        auto D = build_dual_ring<K>(T.right, k);
        CHECK(D.dim() == expected_dim);
        CHECK(functionals_are_linear(D));
        Report act = check_dual_actions(D);
        CHECK_MESSAGE(act.ok(), act.text());
        auto db = find_dual_basis(D);
        CHECK(check_dual_basis(D, db).ok());
        Report r = verify_left(dual_left_bialgebroid(D, db));
        CHECK_MESSAGE(r.ok(), r.text());
    }
}

}  // namespace

TEST_CASE("dimensions of the four duals") {
    // kZ2 over k: Hom_k(kZ2, k) has dimension 2
    check_all_duals(make_kz2<Q>(QQ), 2);
    // the pair groupoid algebra is M2 over k^2, and e_x A is two dimensional for each object x
    check_all_duals(make_pair2<Q>(QQ), 4);
    // L (x) L^op is free of rank 3 over L = T2 on either side, so each dual is L^3
    check_all_duals(make_enveloping<Q>(upper_triangular2<Q>(QQ)), 9);
}

TEST_CASE("duals over a finite field") {
    check_all_duals(make_kz2<ModP>(Field{2}), 2);
    check_all_duals(make_quantum_torus<ModP>(3, 2, Field{7}), 9);
}

TEST_CASE("products on group-like elements") {
    for (const auto& fx : {make_kz2<Q>(QQ), make_pair2<Q>(QQ)}) {
        CAPTURE(fx.name);
        auto T = symmetrize(fx.hopf);
        for (DualKind k : {DualKind::LowerRight, DualKind::LowerLeft, DualKind::UpperRight, DualKind::UpperLeft}) {
            CAPTURE(std::string(dual_kind_name(k)));
            auto D = build_dual_ring<Q>(side_for(T, k), k);
            const auto& A = *D.bgd.A;
            const auto& C = *D.carrier;
            for (std::size_t a = 0; a < A.dim(); ++a) {
                auto c = grouplike_scalar(D.bgd, a);
                REQUIRE(c.has_value());
                for (std::size_t p = 0; p < C.dim(); ++p)
                    for (std::size_t q = 0; q < C.dim(); ++q)
                        CHECK(D.eval(C.mul(C.basis(p), C.basis(q)), A.basis(a)) == grouplike_product(D, C.basis(p), C.basis(q), A.basis(a), *c));
            }
        }
    }
}

TEST_CASE("the dual of kZ2 is the algebra of functions on Z2") {
    auto fx = make_kz2<Q>(QQ);
    auto D = build_dual_ring<Q>(fx.hopf.left, DualKind::LowerRight);
    const auto& C = *D.carrier;
    CHECK(C.is_commutative());
    // delta_1 and delta_t as functionals, found through their values
    Matrix<Q> d1(1, 2, QQ), dt(1, 2, QQ);
    d1(0, 0) = Q::one();
    dt(0, 1) = Q::one();
    const Vec<Q> x = D.coordinates(d1), y = D.coordinates(dt);
    CHECK(C.mul(x, x) == x);
    CHECK(C.mul(y, y) == y);
    CHECK(algd::is_zero(C.mul(x, y)));
    CHECK(x + y == C.one());
}

TEST_CASE("actions of the total ring on its dual") {
    auto fx = make_enveloping<Q>(upper_triangular2<Q>(QQ));
    auto D = build_dual_ring<Q>(fx.hopf.left, DualKind::LowerRight);
    const auto& A = *D.bgd.A;
    // (a -> phi)(b) = phi(b a)
    for (std::size_t p = 0; p < D.dim(); ++p)
        for (std::size_t a = 0; a < A.dim(); ++a) {
            Vec<Q> moved = act_on_dual(D, A.basis(a), D.carrier->basis(p));
            for (std::size_t b = 0; b < A.dim(); ++b) CHECK(D.eval(moved, A.basis(b)) == D.eval(D.carrier->basis(p), A.mul(A.basis(b), A.basis(a))));
        }
}

TEST_CASE("dual bases: wrong generators and corrupted functionals") {
    auto fx = make_kz2<Q>(QQ);
    auto D = build_dual_ring<Q>(fx.hopf.left, DualKind::LowerRight);
    try {
        find_dual_basis(D, {D.bgd.A->one()});
        FAIL("expected NotProjective");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotProjective);
    }
    auto db = find_dual_basis(D);
    db.functionals[0] = db.functionals[0] + db.functionals[0];
    Report r = check_dual_basis(D, db);
    CHECK(r.has("dual-basis"));
}

TEST_CASE("side mismatches and non-functionals") {
    auto fx = make_kz2<Q>(QQ);
    auto T = symmetrize(fx.hopf);
    auto D = build_dual_ring<Q>(T.left, DualKind::LowerRight);
    auto db = find_dual_basis(D);
    CHECK_THROWS_AS(dual_left_bialgebroid(D, db), Error);
    auto U = build_dual_ring<Q>(T.right, DualKind::UpperRight);
    CHECK_THROWS_AS(dual_right_bialgebroid(U, find_dual_basis(U)), Error);

    auto env = make_enveloping<Q>(upper_triangular2<Q>(QQ));
    auto E = build_dual_ring<Q>(env.hopf.left, DualKind::LowerRight);
    // rank of the full Hom_k(A, L) exceeds the dual, so some matrix unit is not L-linear
    bool rejected = false;
    for (std::size_t r = 0; r < E.d() && !rejected; ++r)
        for (std::size_t c = 0; c < E.n() && !rejected; ++c) {
            Matrix<Q> F(E.d(), E.n(), QQ);
            F(r, c) = Q::one();
            try {
                E.coordinates(F);
            } catch (const Error& e) {
                rejected = e.code() == ErrorCode::Inconsistent;
            }
        }
    CHECK(rejected);
}
