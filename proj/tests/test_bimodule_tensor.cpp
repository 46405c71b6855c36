#include "doctest.h"

#include <random>

#include "algd/tensor.hpp"

using namespace algd;
using Q = Rational;

namespace {

const Field QQ{};

AlgPtr<Q> m2() {
    return make_algebra(Algebra<Q>::from_rule(
        4,
        [](std::size_t a, std::size_t b) {
            Vec<Q> v = zeros<Q>(4, QQ);
            if (a % 2 == b / 2) v[(a / 2) * 2 + b % 2] = Q::one();
            return v;
        },
        Vec<Q>{Q::one(), Q::zero(), Q::zero(), Q::one()}, QQ, {"e11", "e12", "e21", "e22"}));
}

// diagonal subalgebra span{e11, e22}
AlgPtr<Q> diag2() {
    return make_algebra(Algebra<Q>::from_rule(
        2, [](std::size_t a, std::size_t b) { return a == b ? unit_vector<Q>(2, a, QQ) : zeros<Q>(2, QQ); }, Vec<Q>{Q::one(), Q::one()}, QQ,
        {"d1", "d2"}));
}

// A as a D-bimodule through an embedding given by images of the base basis.
BaseAction<Q> action_through(const AlgPtr<Q>& base, const Algebra<Q>& A, const std::vector<Vec<Q>>& images) {
    BaseAction<Q> act{base, {}, {}};
    for (const auto& x : images) {
        act.right_on_left.push_back(A.right_mult(x));
        act.left_on_right.push_back(A.left_mult(x));
    }
    return act;
}

// Relations of A (x)_D A (x)_D A written out in the plain cube.
SpanEchelon<Q> cube_relations(const Algebra<Q>& A, const std::vector<Vec<Q>>& images) {
    const std::size_t n = A.dim();
    SpanEchelon<Q> J(n * n * n, QQ);
    for (const auto& x : images)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    const Vec<Q> ea = A.basis(a), eb = A.basis(b), ec = A.basis(c);
                    J.add(tensor(tensor(A.mul(ea, x), eb), ec) - tensor(tensor(ea, A.mul(x, eb)), ec));
                    J.add(tensor(tensor(ea, A.mul(eb, x)), ec) - tensor(tensor(ea, eb), A.mul(x, ec)));
                }
    return J;
}

}  // namespace

TEST_CASE("tensor of basis vectors and leg flips") {
    Vec<Q> a{Q::one(), Q::from_int(2)}, b{Q::from_int(3), Q::zero(), Q::from_int(-1)};
    Vec<Q> ab = tensor(a, b);
    REQUIRE(ab.size() == 6);
    CHECK(ab[0 * 3 + 0] == Q::from_int(3));
    CHECK(ab[1 * 3 + 2] == Q::from_int(-2));
    CHECK(tensor_flip(tensor_flip(ab, 2, 3), 3, 2) == ab);
    CHECK(tensor_flip(ab, 2, 3) == tensor(b, a));
}

TEST_CASE("A (x)_A A has the dimension of A") {
    auto A = m2();
    std::vector<Vec<Q>> imgs;
    for (std::size_t k = 0; k < 4; ++k) imgs.push_back(A->basis(k));
    TensorQuotient<Q> T(4, 4, action_through(A, *A, imgs));
    CHECK(T.dim() == 4);
    // multiplication A (x)_A A -> A is well defined; check it kills the relations
    for (std::size_t i = 0; i < 16; ++i) {
        const Vec<Q> x = unit_vector<Q>(16, i, QQ);
        const Vec<Q> back = T.section(T.project(x));
        Vec<Q> m1 = A->mul(A->basis(i / 4), A->basis(i % 4));
        Vec<Q> m2v = A->zero();
        for (std::size_t k = 0; k < 16; ++k)
            if (!back[k].is_zero()) axpy(m2v, back[k], A->mul(A->basis(k / 4), A->basis(k % 4)));
        CHECK(m1 == m2v);
    }
}

TEST_CASE("M2 over the diagonal: block-count oracle") {
    auto A = m2();
    auto D = diag2();
    std::vector<Vec<Q>> imgs{A->basis(0), A->basis(3)};
    TensorQuotient<Q> T(4, 4, action_through(D, *A, imgs));
    // sum over idempotents e of dim(A e) * dim(e A) = 2*2 + 2*2
    CHECK(T.dim() == 8);
    CHECK(T.ambient_dim() == 16);
    for (std::size_t c = 0; c < T.dim(); ++c) CHECK(T.project(T.section(unit_vector<Q>(T.dim(), c, QQ))) == unit_vector<Q>(T.dim(), c, QQ));
}

TEST_CASE("generator relations agree with the full basis relations") {
    auto A = m2();
    auto D = diag2();
    std::vector<Vec<Q>> imgs{A->basis(0), A->basis(3)};
    TensorQuotient<Q> fast(4, 4, action_through(D, *A, imgs));
    SpanEchelon<Q> J(16, QQ);
    for (const auto& x : imgs)
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b) J.add(tensor(A->mul(A->basis(a), x), A->basis(b)) - tensor(A->basis(a), A->mul(x, A->basis(b))));
    TensorQuotient<Q> full(4, 4, J);
    REQUIRE(full.dim() == fast.dim());
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int t = 0; t < 40; ++t) {
        Vec<Q> x(16), y(16);
        for (auto& c : x) c = Q::from_int(d(rng));
        y = x;
        // add a random relation to y
        const std::size_t a = t % 4, b = (t / 4) % 4;
        const Vec<Q>& e = imgs[t % 2];
        y = y + tensor(A->mul(A->basis(a), e), A->basis(b)) - tensor(A->basis(a), A->mul(e, A->basis(b)));
        CHECK(fast.same_class(x, y));
        CHECK(full.same_class(x, y));
        CHECK(fast.in_relations(x) == full.in_relations(x));
    }
}

TEST_CASE("triple quotient matches the relations written in the cube") {
    auto A = m2();
    auto D = diag2();
    std::vector<Vec<Q>> imgs{A->basis(0), A->basis(3)};
    auto act = action_through(D, *A, imgs);
    TripleQuotient<Q> T(4, act, act);
    SpanEchelon<Q> J = cube_relations(*A, imgs);
    CHECK(T.dim() == 64 - J.rank());
    CHECK(T.dim() == 16);  // e_i A e_j (x) e_j A e_k (x) e_k A e_l, one dimension each

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-1, 1);
    for (int t = 0; t < 40; ++t) {
        Vec<Q> x(64);
        for (auto& c : x) c = Q::from_int(d(rng));
        CHECK(algd::is_zero(T.project(x)) == J.contains(x));
        // a single relation vector always projects to zero
        const std::size_t a = t % 4, b = (t / 4) % 4, c = (t / 16) % 4;
        const Vec<Q>& e = imgs[t % 2];
        Vec<Q> rel = tensor(tensor(A->basis(a), A->mul(A->basis(b), e)), A->basis(c)) - tensor(tensor(A->basis(a), A->basis(b)), A->mul(e, A->basis(c)));
        CHECK(algd::is_zero(T.project(rel)));
    }
}

TEST_CASE("leg maps on lifts") {
    auto A = m2();
    const std::size_t n = 4;
    // Delta(e_ij) = e_ij (x) e_ij as a lift matrix
    Matrix<Q> M(n * n, n, QQ);
    for (std::size_t a = 0; a < n; ++a) M(a * n + a, a) = Q::one();
    Vec<Q> x = tensor(A->basis(1), A->basis(2));
    CHECK(lift_first_leg(M, x, n) == tensor(tensor(A->basis(1), A->basis(1)), A->basis(2)));
    CHECK(lift_second_leg(M, x, n) == tensor(tensor(A->basis(1), A->basis(2)), A->basis(2)));
    Matrix<Q> P = A->left_mult(A->basis(1));
    CHECK(lift_second_leg_linear(P, x, n) == tensor(A->basis(1), A->mul(A->basis(1), A->basis(2))));
    CHECK(mul_leg(*A, x, 0, A->basis(2), MulSide::Right) == tensor(A->mul(A->basis(1), A->basis(2)), A->basis(2)));
    CHECK(mul_leg(*A, x, 1, A->basis(1), MulSide::Left) == tensor(A->basis(1), A->mul(A->basis(1), A->basis(2))));
    CHECK(tensor_mul(*A, *A, x, x) == tensor(A->mul(A->basis(1), A->basis(1)), A->mul(A->basis(2), A->basis(2))));
    CHECK(tensor_mul_ordered(*A, x, tensor(A->basis(2), A->basis(1)), true, false) ==
          tensor(A->mul(A->basis(2), A->basis(1)), A->mul(A->basis(2), A->basis(1))));
}

TEST_CASE("algebra generators generate") {
    auto A = m2();
    auto gens = algebra_generators(*A);
    SpanEchelon<Q> span(4, QQ);
    std::vector<Vec<Q>> words{A->one()};
    span.add(A->one());
    for (int round = 0; round < 4; ++round) {
        std::vector<Vec<Q>> next;
        for (const auto& w : words)
            for (const auto& g : gens) {
                Vec<Q> p = A->mul(w, g);
                if (span.add(p)) next.push_back(p);
            }
        words.insert(words.end(), next.begin(), next.end());
    }
    CHECK(span.rank() == 4);
}
