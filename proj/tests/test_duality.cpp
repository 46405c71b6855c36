#include "doctest.h"

#include <string>

#include "algd/duality.hpp"
#include "algd/fixtures.hpp"

using namespace algd;
using Q = Rational;

namespace {

const Field QQ{};

template <class K>
NondegenerateIntegral<K> first_nondegenerate(const HopfFixture<K>& fx) {
    auto T = symmetrize(fx.hopf);
    auto F = dual_frame(T);
    auto found = find_nondegenerate_integrals(T, F);
    REQUIRE_FALSE(found.empty());
    return check_nondegenerate(T, F, found.front());
}

template <class K>
void full_duality_run(const HopfFixture<K>& fx) {
    CAPTURE(fx.name);
    auto nd = first_nondegenerate(fx);
    const auto& F = *nd.frame;

    auto DS = dual_structures_from_integral(nd);
    Report v = verify_dual_structures(DS);
    CHECK_MESSAGE(v.ok(), v.text());
    CHECK(check_dual_basis(F.upper_right, DS.basis_ur).ok());
    CHECK(check_dual_basis(F.upper_left, DS.basis_ul).ok());
    CHECK(check_dual_basis(F.lower_right, DS.basis_lr).ok());
    CHECK(check_dual_basis(F.lower_left, DS.basis_ll).ok());
    // the dual bases read off from the integral give the same bialgebroids as solving for them
    Report cmp = compare_dual_structures(DS, dual_structures_generic(F));
    CHECK_MESSAGE(cmp.ok(), cmp.text());

    auto isos = dual_isomorphisms(nd, DS);
    Report ir = check_dual_isomorphisms(DS, isos);
    CHECK_MESSAGE(ir.ok(), ir.text());

    auto B = dual_hopf_algebroid(nd);
    Report br = check_dual_bundle(nd, B);
    CHECK_MESSAGE(br.ok(), br.text());
    CHECK(verify_left(B.T.left).ok());
    CHECK(verify_right(B.T.right).ok());
    CHECK(verify_symmetrized(B.T).ok());

    auto ndd = dual_integral(nd, B);
    CHECK(integral_characterizations(B.T, ndd.ell).integral());
    CHECK(two_sided_report(ndd).ok());

    auto cert = double_dual(nd, B, ndd);
    CHECK_MESSAGE(cert.report.ok(), cert.report.text());
    CHECK(cert.pulled_back == nd.xi.map);
}

}  // namespace

TEST_CASE("duality on kZ2") { full_duality_run(make_kz2<Q>(QQ)); }
TEST_CASE("duality on the pair groupoid") { full_duality_run(make_pair2<Q>(QQ)); }
TEST_CASE("duality on the truncated quantum tori") {
    full_duality_run(make_quantum_torus<Q>(2, -1, QQ));
    full_duality_run(make_quantum_torus<ModP>(3, 2, Field{7}));
}

TEST_CASE("kZ2: the dual is the function algebra and the double dual has the identity antipode") {
    auto fx = make_kz2<Q>(QQ);
    auto nd = first_nondegenerate(fx);
    auto B = dual_hopf_algebroid(nd);
    // functions on Z2 with (S phi)(g) = phi(g^-1) = phi(g)
    CHECK(B.T.left.A->is_commutative());
    CHECK(B.S_star == Matrix<Q>::identity(2, QQ));
    auto cert = double_dual(nd, B, dual_integral(nd, B));
    CHECK(cert.pulled_back == Matrix<Q>::identity(2, QQ));
    CHECK(cert.pulled_back != fx.hopf.S.map);
}

TEST_CASE("the dual antipode does not see the normalization of the integral") {
    auto fx = make_kz2<Q>(QQ);
    auto T = symmetrize(fx.hopf);
    auto F = dual_frame(T);
    const Vec<Q> ell{Q::one(), Q::one()};
    auto B1 = dual_hopf_algebroid(check_nondegenerate(T, F, ell));
    auto B2 = dual_hopf_algebroid(check_nondegenerate(T, F, Q::from_int(2) * ell));
    CHECK(B2.S_star == B1.S_star);

    auto pair = first_nondegenerate(make_pair2<Q>(QQ));
    auto P1 = dual_hopf_algebroid(pair);
    auto P2 = dual_hopf_algebroid(check_nondegenerate(pair.T, pair.frame, Q::from_int(2) * pair.ell));
    CHECK(P2.S_star == P1.S_star);
}

TEST_CASE("mutations of the dual bundle are caught") {
    auto nd = first_nondegenerate(make_pair2<Q>(QQ));
    auto B = dual_hopf_algebroid(nd);
    auto bad = B;
    bad.S_upper_right = Q::from_int(2) * bad.S_upper_right;
    Report r = check_dual_bundle(nd, bad);
    CHECK(r.has("intertwine"));

    auto bad2 = B;
    bad2.S_star = Matrix<Q>::identity(bad2.S_star.rows(), QQ);
    Report r2 = check_dual_bundle(nd, bad2);
    CHECK(r2.has("dual-antipode-arrow-form"));

    auto isos = B.isos;
    isos.bottom.phi.map = Matrix<Q>(isos.bottom.phi.map.rows(), isos.bottom.phi.map.cols(), QQ);
    CHECK_FALSE(check_dual_isomorphisms(B.structures, isos).ok());
}
