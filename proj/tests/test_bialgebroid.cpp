#include "doctest.h"

#include "algd/fixtures.hpp"

using namespace algd;
using Q = Rational;

namespace {

const Field QQ{};

LeftBialgebroid<Q> kz2_left() { return make_kz2<Q>(QQ).hopf.left; }

LeftBialgebroid<Q> with_counit(const LeftBialgebroid<Q>& B, Matrix<Q> pi) { return LeftBialgebroid<Q>(B.A, B.base, B.s, B.t, B.gamma, std::move(pi)); }
LeftBialgebroid<Q> with_gamma(const LeftBialgebroid<Q>& B, Matrix<Q> g) { return LeftBialgebroid<Q>(B.A, B.base, B.s, B.t, std::move(g), B.pi); }

}  // namespace

TEST_CASE("kZ2 over the ground field is a bialgebra") {
    auto B = kz2_left();
    CHECK(B.Q().dim() == 4);
    CHECK(verify_left(B).ok());
    CHECK(verify_right(opposite(B)).ok());
    CHECK(verify_left(coopposite(B)).ok());
}

TEST_CASE("enveloping bialgebroid over T2") {
    auto fx = make_enveloping<Q>(upper_triangular2<Q>(QQ));
    const auto& B = fx.hopf.left;
    // A (x)_L A = L (x) (L^op (x)_L L) (x) L^op has dimension 3 * 3 * 3
    CHECK(B.n() == 9);
    CHECK(B.Q().dim() == 27);
    Report r = verify_left(B);
    CHECK_MESSAGE(r.ok(), r.text());
    CHECK(verify_right(opposite(B)).ok());
    CHECK(verify_left(coopposite(B)).ok());
    CHECK(verify_right(coopposite(opposite(B))).ok());
}

TEST_CASE("bimodule structure on the total ring") {
    auto fx = make_enveloping<Q>(upper_triangular2<Q>(QQ));
    const auto& B = fx.hopf.left;
    const auto& A = *B.A;
    const auto& L = *B.base;
    for (std::size_t l = 0; l < L.dim(); ++l)
        for (std::size_t lp = 0; lp < L.dim(); ++lp)
            for (std::size_t a = 0; a < A.dim(); ++a)
                CHECK(B.bimodule(L.basis(l), A.basis(a), L.basis(lp)) == A.mul(B.s(L.basis(l)), B.t(L.basis(lp)), A.basis(a)));
}

TEST_CASE("mutation: broken counit is reported with its witness") {
    auto B = kz2_left();
    Matrix<Q> pi = B.pi;
    pi(0, 1) = Q::zero();
    Report r = verify_left(with_counit(B, pi));
    CHECK(r.has("counitality-left"));
    bool witnessed = false;
    for (const auto& v : r.items())
        if (v.axiom == "counitality-left" && v.witness == "t") witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("mutation: broken coproducts") {
    auto B = kz2_left();
    const Field f = QQ;
    Matrix<Q> g = B.gamma;
    g(0, 1) = Q::one();  // gamma(t) = t (x) t + 1 (x) 1, and gamma(t)^2 = 2 (1 (x) 1 + t (x) t)
    Report r = verify_left(with_gamma(B, g));
    CHECK(r.has("counitality"));
    CHECK(r.has("gamma-multiplicative"));

    Matrix<Q> g2 = B.gamma;
    g2(0, 0) = Q::from_int(2, f);  // gamma(1) = 2 (1 (x) 1)
    Report r2 = verify_left(with_gamma(B, g2));
    CHECK(r2.has("gamma-unit"));
}

TEST_CASE("mutation: non-commuting source and target") {
    auto fx = make_enveloping<Q>(upper_triangular2<Q>(QQ));
    const auto& B = fx.hopf.left;
    LeftBialgebroid<Q> bad(B.A, B.base, B.s, Morphism<Q>(B.base, B.A, B.s.map, Kind::AntiHom), B.gamma, B.pi);
    Report r = verify_left(bad);
    CHECK(r.has("st-commute"));
}

TEST_CASE("shape errors are thrown at construction") {
    auto B = kz2_left();
    Matrix<Q> pi(2, 2, QQ);
    CHECK_THROWS_AS(with_counit(B, pi), Error);
}

TEST_CASE("Takeuchi membership of coproduct classes") {
    auto fx = make_enveloping<Q>(upper_triangular2<Q>(QQ));
    const auto& B = fx.hopf.left;
    const auto& A = *B.A;
    for (std::size_t a = 0; a < A.dim(); ++a) CHECK(takeuchi_membership(B.Q(), B.gamma_class(A.basis(a)), B.s, B.t));
    // a pure tensor e (x) 1 with e not central in the base is outside the Takeuchi product
    bool some_outside = false;
    for (std::size_t a = 0; a < A.dim(); ++a)
        if (!takeuchi_membership(B.Q(), B.Q().project(tensor(A.basis(a), A.one())), B.s, B.t)) some_outside = true;
    CHECK(some_outside);
}

TEST_CASE("bialgebroid morphisms") {
    auto fx = make_enveloping<Q>(upper_triangular2<Q>(QQ));
    const auto& B = fx.hopf.left;
    BialgebroidMorphism<Q> id{Morphism<Q>::identity(B.A), Morphism<Q>::identity(B.base)};
    CHECK(check_bialgebroid_morphism(id, B, B).ok());
    CHECK(check_bialgebroid_morphism(id, opposite(B), opposite(B)).ok());

    // t -> -t is an algebra automorphism of kZ2 but moves the counit and the coproduct
    auto K2 = kz2_left();
    Matrix<Q> neg = Matrix<Q>::identity(2, QQ);
    neg(1, 1) = -Q::one();
    BialgebroidMorphism<Q> m{Morphism<Q>(K2.A, K2.A, neg, Kind::Hom), Morphism<Q>::identity(K2.base)};
    Report r = check_bialgebroid_morphism(m, K2, K2);
    CHECK(r.has("morphism-counit"));
    CHECK(r.has("morphism-coproduct"));
}

TEST_CASE("structural equality") {
    auto B = kz2_left();
    CHECK(structurally_equal<Q>(B, kz2_left()));
    CHECK(structurally_equal<Q>(B, coopposite(coopposite(B))));
    Matrix<Q> pi = B.pi;
    pi(0, 1) = Q::from_int(2);
    CHECK_FALSE(structurally_equal<Q>(B, with_counit(B, pi)));
}
