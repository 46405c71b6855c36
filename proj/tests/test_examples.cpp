#include "doctest.h"

#include <string>
#include <vector>

#include "algd/duality.hpp"
#include "algd/frobenius.hpp"
#include "algd/weak_hopf.hpp"

using namespace algd;
using Q = Rational;

namespace {

const Field QQ{};

template <class K>
void fully_verified(const HopfFixture<K>& fx) {
    CAPTURE(fx.name);
    Report l = verify_left(fx.hopf.left);
    CHECK_MESSAGE(l.ok(), l.text());
    Report h = verify_hopf(fx.hopf);
    CHECK_MESSAGE(h.ok(), h.text());
    auto T = symmetrize(fx.hopf);
    Report s = verify_symmetrized(T);
    CHECK_MESSAGE(s.ok(), s.text());
    CHECK(verify_right(T.right).ok());
}

// Functions on the arrows of G: pointwise product, Delta(d_g) = sum over h k = g of d_h (x) d_k,
// eps(d_g) = [g is an identity], S(d_g) = d_(g^-1).
WeakHopfAlgebra<Q> function_wha(const Groupoid& G) {
    GroupoidStructure st = check_groupoid(G);
    const std::size_t m = G.arrows.size();
    std::vector<std::string> names;
    for (const auto& n : G.names) names.push_back("d_" + n);
    auto H = make_algebra(Algebra<Q>::from_rule(
        m, [&](std::size_t i, std::size_t j) { return i == j ? unit_vector<Q>(m, i, QQ) : zeros<Q>(m, QQ); }, Vec<Q>(m, Q::one()), QQ, names));
    Matrix<Q> delta(m * m, m, QQ), eps(1, m, QQ), S(m, m, QQ);
    for (std::size_t h = 0; h < m; ++h)
        for (std::size_t k = 0; k < m; ++k)
            if (G.comp[h][k] >= 0) delta(h * m + k, G.comp[h][k]) = Q::one();
    for (auto id : st.identity) eps(0, id) = Q::one();
    for (std::size_t g = 0; g < m; ++g) S(st.inverse[g], g) = Q::one();
    return {"functions-on-pair2", H, delta, eps, Morphism<Q>(H, H, S, Kind::AntiHom)};
}

}  // namespace

TEST_CASE("every Hopf algebroid factory returns a verified object") {
    fully_verified(make_kz2<Q>(QQ));
    fully_verified(make_kz2<Q>(QQ, false));
    fully_verified(make_kz2<ModP>(Field{3}));
    fully_verified(make_pair2<Q>(QQ));
    fully_verified(make_quantum_torus<Q>(2, -1, QQ));
    fully_verified(make_quantum_torus<ModP>(3, 2, Field{7}));
    fully_verified(make_quantum_torus<ModP>(3, 4, Field{7}));
    fully_verified(make_enveloping<Q>(upper_triangular2<Q>(QQ)));
}

TEST_CASE("kZ2 in characteristic two") {
    CHECK_THROWS_AS(make_kz2<ModP>(Field{2}, true, true), Error);
    try {
        make_kz2<ModP>(Field{2}, true, true);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CharTwo);
    }
    // -t = t, so the twisted antipode collapses to the identity and nothing is left to fail
    auto fx = make_kz2<ModP>(Field{2});
    CHECK(fx.hopf.S.map == Matrix<ModP>::identity(2, Field{2}));
    CHECK(verify_hopf(fx.hopf).ok());
}

TEST_CASE("groupoid factory on small tables") {
    auto z2 = make_groupoid<Q>(cyclic_group2(), QQ);
    CHECK(z2.hopf.left.base->dim() == 1);
    CHECK(z2.hopf.S.map == Matrix<Q>::identity(2, QQ));
    CHECK(structurally_equal(symmetrize(z2.hopf), symmetrize(make_kz2<Q>(QQ, false).hopf)));

    // two objects with only identities: base and total ring coincide
    auto triv = make_groupoid<Q>(two_trivial_groups(), QQ);
    CHECK(triv.hopf.left.base->dim() == triv.hopf.left.A->dim());
    CHECK(triv.hopf.S.map == Matrix<Q>::identity(2, QQ));
    CHECK(rank(triv.hopf.left.s.map) == 2);
    fully_verified(triv);

    Groupoid broken = pair_groupoid2();
    broken.comp[2][3] = 0;  // a b is id1, not id0
    try {
        make_groupoid<Q>(broken, QQ);
        FAIL("expected NotAGroupoid");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAGroupoid);
    }
}

TEST_CASE("the weak Hopf adapter reproduces the pair groupoid") {
    auto w = make_wha_pair2<Q>(QQ);
    CHECK(check_weak_hopf(w).ok());
    auto T = wha_to_hopf_algebroid(w);
    CHECK(verify_symmetrized(T).ok());
    CHECK(verify_hopf(T.hopf()).ok());
    CHECK(structurally_equal(T, symmetrize(make_pair2<Q>(QQ).hopf)));
}

TEST_CASE("a Hopf algebra seen as a weak Hopf algebra has trivial base") {
    auto w = groupoid_wha<Q>(cyclic_group2(), QQ, "kz2-wha");
    auto T = wha_to_hopf_algebroid(w);
    CHECK(T.left.base->dim() == 1);
    CHECK(T.right.base->dim() == 1);
    CHECK(structurally_equal(T, symmetrize(make_kz2<Q>(QQ, false).hopf)));
}

TEST_CASE("a corrupted counit is rejected") {
    auto w = make_wha_pair2<Q>(QQ);
    w.epsilon(0, 2) = Q::zero();
    CHECK_FALSE(check_weak_hopf(w).ok());
    try {
        wha_to_hopf_algebroid(w);
        FAIL("expected AxiomViolation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AxiomViolation);
    }
}

TEST_CASE("the dual of the pair groupoid is the Hopf algebroid of its function algebra") {
    const Groupoid G = pair_groupoid2();
    auto fun = function_wha(G);
    REQUIRE(check_weak_hopf(fun).ok());
    auto W = wha_to_hopf_algebroid(fun);

    auto T = symmetrize(make_pair2<Q>(QQ).hopf);
    auto F = dual_frame(T);
    auto nd = check_nondegenerate(T, F, find_nondegenerate_integrals(T, F).front());
    auto B = dual_hopf_algebroid(nd);

    // d_g goes to the functional g -> target(g), zero on the other arrows
    const auto& D = F->lower_right;
    const std::size_t m = G.arrows.size();
    Matrix<Q> Phi(m, m, QQ);
    for (std::size_t g = 0; g < m; ++g) {
        Matrix<Q> Fg(G.objects, m, QQ);
        Fg(G.arrows[g].second, g) = Q::one();
        Phi.set_col(g, D.coordinates(Fg));
    }
    REQUIRE(rank(Phi) == m);
    const Matrix<Q> id2 = Matrix<Q>::identity(2, QQ);
    BialgebroidMorphism<Q> left{Morphism<Q>(W.left.A, B.T.left.A, Phi, Kind::Hom), Morphism<Q>(W.left.base, B.T.left.base, id2, Kind::Hom)};
    BialgebroidMorphism<Q> right{Morphism<Q>(W.right.A, B.T.right.A, Phi, Kind::Hom), Morphism<Q>(W.right.base, B.T.right.base, id2, Kind::Hom)};
    Report rl = check_bialgebroid_morphism(left, W.left, B.T.left);
    Report rr = check_bialgebroid_morphism(right, W.right, B.T.right);
    CHECK_MESSAGE(rl.ok(), rl.text());
    CHECK_MESSAGE(rr.ok(), rr.text());
    CHECK(Phi * W.S.map == B.S_star * Phi);

    // swapping the objects on the base alone does not commute with the structure
    Matrix<Q> swap(2, 2, QQ);
    swap(0, 1) = swap(1, 0) = Q::one();
    left.phi.map = swap;
    CHECK_FALSE(check_bialgebroid_morphism(left, W.left, B.T.left).ok());
}

TEST_CASE("quantum torus factory") {
    auto qt2 = make_quantum_torus<Q>(2, -1, QQ);
    CHECK(qt2.hopf.left.A->dim() == 4);
    CHECK(qt2.hopf.left.base->dim() == 2);
    CHECK_FALSE(qt2.hopf.left.A->is_commutative());
    CHECK(check_torus_section(qt2, 2).ok());
    auto qt3 = make_quantum_torus<ModP>(3, 2, Field{7});
    CHECK(qt3.hopf.left.A->dim() == 9);
    CHECK(check_torus_section(qt3, 3).ok());

    auto trivial = make_quantum_torus<Q>(1, 1, QQ);
    CHECK(trivial.hopf.left.A->dim() == 1);
    CHECK(trivial.hopf.left.base->dim() == 1);
    fully_verified(trivial);

    auto refused = [](auto make) {
        try {
            make();
            return false;
        } catch (const Error& e) {
            return e.code() == ErrorCode::NotPrimitiveRoot;
        }
    };
    // 1 has order one, 2 is not a root of unity in Q, and 3 has order six mod 7
    CHECK(refused([] { return make_quantum_torus<Q>(2, 1, QQ); }));
    CHECK(refused([] { return make_quantum_torus<Q>(2, 2, QQ); }));
    CHECK(refused([] { return make_quantum_torus<ModP>(3, 1, Field{7}); }));
    CHECK(refused([] { return make_quantum_torus<ModP>(3, 3, Field{7}); }));
}

TEST_CASE("Frobenius extension fixtures") {
    auto all = make_frobenius_fixtures<Q>(QQ);
    REQUIRE(all.size() == 3);
    CHECK(all[0].name == "m2tr");
    CHECK(all[1].name == "kz2ext");
    for (const auto& fe : all) CHECK(check_frobenius(fe).ok());
    // psi is the trace on M2 and the coefficient of 1 on kZ2
    const auto& m2 = all[0];
    CHECK(m2.psi.apply(m2.M->one()) == Vec<Q>{Q::from_int(2)});
    const auto& kz = all[1];
    CHECK(kz.psi.apply(kz.M->one()) == Vec<Q>{Q::one()});
    CHECK(kz.psi.apply(kz.M->basis(1)) == Vec<Q>{Q::zero()});
}
