// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any line fails.
// Usage: acceptance <path to the algd executable>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "algd/duality.hpp"
#include "algd/frobenius.hpp"
#include "algd/integrals.hpp"
#include "algd/weak_hopf.hpp"

using namespace algd;
using Q = Rational;

namespace {

const Field QQ{};
const Field F7{7};

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
    void require(const Report& r, const std::string& what) {
        if (!r.ok()) {
            ok = false;
            notes.push_back(what + ": " + std::to_string(r.size()) + " violation(s), first " + r.items().front().axiom);
        }
    }
};

template <class K>
struct Named {
    std::string name;
    SymmetrizedHopfAlgebroid<K> T;
};

// Every Hopf algebroid shipped with the library, built once.
struct Shipped {
    std::vector<Named<Q>> rational;
    std::vector<Named<ModP>> mod7;
    D2HopfAlgebroid<Q> m2tr, kz2ext;

    Shipped()
        : m2tr(d2_hopf_algebroid(make_m2tr<Q>(QQ))),
          kz2ext(d2_hopf_algebroid(make_kz2ext<Q>(QQ))) {
        for (const auto& fx : {make_kz2<Q>(QQ), make_kz2<Q>(QQ, false), make_pair2<Q>(QQ), make_quantum_torus<Q>(2, -1, QQ), make_enveloping<Q>(upper_triangular2<Q>(QQ))})
            rational.push_back({fx.name, symmetrize(fx.hopf)});
        rational.push_back({"wha-pair2", wha_to_hopf_algebroid(make_wha_pair2<Q>(QQ))});
        rational.push_back({"m2tr-endo", m2tr.hopf});
        rational.push_back({"kz2ext-endo", kz2ext.hopf});
        auto qt3 = make_quantum_torus<ModP>(3, 2, F7);
        mod7.push_back({qt3.name, symmetrize(qt3.hopf)});
    }

    void each(const auto& fn) const {
        for (const auto& x : rational) fn(x);
        for (const auto& x : mod7) fn(x);
    }
};

template <class K>
std::optional<NondegenerateIntegral<K>> certified_integral(const SymmetrizedHopfAlgebroid<K>& T) {
    auto F = dual_frame(T);
    auto found = find_nondegenerate_integrals(T, F);
    if (found.empty()) return std::nullopt;
    return check_nondegenerate(T, F, found.front());
}

// ---- 1 ----

Outcome axiom_suites() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    auto check_all = [&](const std::string& name, const auto& T) {
        out.require(verify_left(T.left), name + " left");
        out.require(verify_right(T.right), name + " right");
        out.require(verify_hopf(T.hopf()), name + " hopf");
        out.require(verify_symmetrized(T), name + " symmetrized");
    };
    for (const auto& fx : {make_kz2<Q>(QQ), make_pair2<Q>(QQ), make_quantum_torus<Q>(2, -1, QQ)}) check_all(fx.name, symmetrize(fx.hopf));
    auto qt3 = make_quantum_torus<ModP>(3, 2, F7);
    check_all(qt3.name, symmetrize(qt3.hopf));
    check_all("wha-pair2", wha_to_hopf_algebroid(make_wha_pair2<Q>(QQ)));
    check_all("m2tr-endo", d2_hopf_algebroid(make_m2tr<Q>(QQ)).hopf);
    check_all("kz2ext-endo", d2_hopf_algebroid(make_kz2ext<Q>(QQ)).hopf);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream t;
    t << "runtime " << secs << " s";
    out.notes.push_back(t.str());
    out.require(secs < 10.0, "runtime is not below 10 s");
    return out;
}

// ---- 2 ----

Outcome lu_counterexample() {
    Outcome out;
    auto fx = make_kz2<Q>(QQ);
    const auto& A = *fx.hopf.left.A;
    auto [lhs, rhs] = lu_witness(fx.hopf, A.basis(1));
    out.require(lhs == Vec<Q>{Q::from_int(-1), Q::zero()}, "t_(1) S(t_(2)) is " + A.format(lhs) + ", expected -1");
    out.require(rhs == Vec<Q>{Q::one(), Q::zero()}, "eta eps(t) is " + A.format(rhs) + ", expected 1");
    out.require(verify_hopf(fx.hopf), "verify_hopf on kz2");
    return out;
}

// ---- 3 ----

struct Characterization {
    bool axioms = false, galois = false, translation = false, identities = false;
};

template <class K>
Characterization characterize(const SymmetrizedHopfAlgebroid<K>& T) {
    Characterization c;
    c.axioms = verify_symmetrized(T).ok() && verify_hopf(T.hopf()).ok();
    try {
        auto G = galois_maps(T.left, T.right);
        auto [ai, bi] = closed_form_inverses(G, T);
        c.galois = ai == G.alpha_inv && bi == G.beta_inv;
        c.identities = check_translation_identities(T, G, translation_maps(T.left, G)).ok();
        c.translation = antipode_from_translation(T.left, T.right).S.map == T.S.map;
    } catch (const Error&) {
    }
    return c;
}

Outcome galois_equivalence(const Shipped& S) {
    Outcome out;
    S.each([&](const auto& x) {
        auto c = characterize(x.T);
        out.require(c.axioms == c.galois && c.galois == c.translation, x.name + ": the three characterizations disagree");
        out.require(c.axioms && c.galois && c.translation, x.name + ": not a Hopf algebroid by any characterization");
        out.require(c.identities, x.name + ": translation identities");
    });
    // the same structure maps with the antipode of kZ2 replaced by the identity
    auto T = symmetrize(make_kz2<Q>(QQ).hopf);
    auto wrong = make_symmetrized(T.left, T.right, Morphism<Q>::identity(T.left.A));
    auto c = characterize(wrong);
    out.require(!c.axioms && !c.galois && !c.translation, "wrong antipode: the three characterizations do not all reject it");
    return out;
}

// ---- 4 ----

Outcome kz2_integrals() {
    Outcome out;
    auto T = symmetrize(make_kz2<Q>(QQ).hopf);
    auto F = dual_frame(T);
    const Vec<Q> ell{Q::one(), Q::one()};
    auto space = integral_space(T, Side::Left).basis;
    out.require(space.size() == 1 && rank(Matrix<Q>::from_columns({space[0], ell}, 2, QQ)) == 1, "left integral space is not span{1+t}");
    try {
        auto nd = check_nondegenerate(T, F, ell);
        Matrix<Q> coeff1(1, 2, QQ);
        coeff1(0, 0) = Q::one();
        out.require(F->upper_right.functional(nd.lambda_star) == coeff1, "lambda* is not the coefficient of 1");
        out.require(nd.xi.map == Matrix<Q>::identity(2, QQ), "xi is not the identity");
        out.require(nd.kappa.map == Matrix<Q>::identity(1, QQ), "kappa is not the identity");
        auto H = two_sided_antipode(nd);
        out.require(H.S.map == Matrix<Q>::identity(2, QQ), "two-sided antipode is not the identity");
        out.require(verify_hopf(H), "verify_hopf(id)");
    } catch (const Error& e) {
        out.require(false, std::string("1+t over Q: ") + e.what());
    }
    // over GF(2) the contract asks for Degenerate
    auto T2 = symmetrize(make_kz2<ModP>(Field{2}).hopf);
    const Vec<ModP> ell2 = T2.left.A->one() + T2.left.A->basis(1);
    try {
        auto nd2 = check_nondegenerate(T2, ell2);
        out.require(false, "GF(2): 1+t is certified non-degenerate (rank l_R = " + std::to_string(rank(nd2.ellR)) + " = dim A), expected Degenerate");
    } catch (const Error& e) {
        out.require(e.code() == ErrorCode::Degenerate, std::string("GF(2): unexpected error ") + e.what());
    }
    return out;
}

// ---- 5 ----

Outcome frobenius_systems_all(const Shipped& S) {
    Outcome out;
    std::size_t certified = 0;
    S.each([&](const auto& x) {
        auto nd = certified_integral(x.T);
        if (!nd) {
            out.notes.push_back(x.name + " has no certified integral, skipped");
            return;
        }
        ++certified;
        auto systems = frobenius_systems(*nd);
        out.require(systems.size() == 4, x.name + ": expected four Frobenius systems");
        for (const auto& fs : systems) out.require(check_frobenius_system(fs), x.name + " over " + fs.tag);
    });
    out.notes.push_back(std::to_string(certified) + " fixtures certified");
    out.require(certified > 0, "no fixture has a certified integral");
    return out;
}

// ---- 6 ----

const std::vector<std::string> kSuiteTags = {
    "characterizations",     "lambda-action-s",      "lambda-action-t",     "ellR-inverse-form",     "lambda-bimodule",
    "star-lambda-bimodule",  "xi-arrow-form",        "xi-inverse",          "xi-anti",               "arrow-relation-upper",
    "arrow-relation-lower",  "arrow-relation-right", "arrow-relation-left", "integral-reproduces-s", "integral-reproduces-t",
    "kappa-inverse",         "kappa-mult",           "ellL-twist",          "xi-inverse-form",       "integral-coproduct-left",
    "integral-coproduct-right", "ellL-twist-all",    "Lell-twist-all",      "xi-nondegenerate"};

Outcome identity_suite_coverage() {
    Outcome out;
    std::set<std::string> caught;
    for (const auto& fx : {make_kz2<Q>(QQ), make_pair2<Q>(QQ)}) {
        auto nd = certified_integral(symmetrize(fx.hopf));
        if (!nd) {
            out.require(false, fx.name + ": no certified integral");
            continue;
        }
        out.require(identity_suite(*nd), fx.name + " clean suite");
        for (Fault f : all_faults()) {
            Report r = identity_suite(inject_fault(*nd, f));
            out.require(!r.ok(), fx.name + ": fault " + fault_name(f) + " goes unnoticed");
            for (const auto& v : r.items()) caught.insert(v.axiom);
        }
    }
    for (const auto& tag : kSuiteTags) out.require(caught.count(tag) == 1, "no fault breaks " + tag);
    return out;
}

// ---- 7 ----

Outcome duality(const Shipped& S) {
    Outcome out;
    std::size_t done = 0;
    S.each([&](const auto& x) {
        // the endomorphism fixtures are covered by criterion 8
        if (x.name.find("-endo") != std::string::npos) return;
        auto nd = certified_integral(x.T);
        if (!nd) return;
        ++done;
        auto B = dual_hopf_algebroid(*nd);
        out.require(verify_left(B.T.left), x.name + " dual left");
        out.require(verify_right(B.T.right), x.name + " dual right");
        out.require(verify_hopf(B.T.hopf()), x.name + " dual hopf");
        out.require(verify_symmetrized(B.T), x.name + " dual symmetrized");
        out.require(check_dual_isomorphisms(B.structures, B.isos), x.name + " dual isomorphisms");
        out.require(check_dual_bundle(*nd, B), x.name + " dual bundle");
        auto ndd = dual_integral(*nd, B);
        out.require(two_sided_report(ndd), x.name + " dual integral two-sided");
        auto cert = double_dual(*nd, B, ndd);
        out.require(cert.report, x.name + " double dual");
        out.require(cert.pulled_back == nd->xi.map, x.name + ": double dual antipode is not xi");
        if (x.name == "kz2") {
            const std::size_t n = x.T.left.A->dim();
            out.require(cert.pulled_back == decltype(cert.pulled_back)::identity(n, x.T.left.A->field()), "kz2: double dual antipode is not the identity");
            out.require(cert.pulled_back != x.T.S.map, "kz2: double dual antipode equals S");
        }
    });
    out.notes.push_back(std::to_string(done) + " fixtures dualized");
    return out;
}

// ---- 8 ----

template <class K>
bool transposition_holds(const EndoRingData<K>& E) {
    const auto& M = E.Malg();
    for (std::size_t p = 0; p < E.A->dim(); ++p) {
        const Matrix<K> alpha = E.endo(E.A->basis(p));
        const Matrix<K> salpha = E.endo(E.S_A(E.A->basis(p)));
        for (std::size_t m = 0; m < M.dim(); ++m)
            for (std::size_t mp = 0; mp < M.dim(); ++mp)
                if (E.fe.psi.apply(M.mul(M.basis(m), salpha.apply(M.basis(mp)))) != E.fe.psi.apply(M.mul(alpha.apply(M.basis(m)), M.basis(mp)))) return false;
    }
    return true;
}

Outcome d2_pipeline(const Shipped& S) {
    Outcome out;
    for (const auto* D : {&S.m2tr, &S.kz2ext}) {
        const std::string name = D->endo.fe.name;
        out.require(transposition_holds(D->endo), name + ": transposition identity");
        out.require(check_d2_conditions(D->endo, D->qb), name + " D2 conditions");
        out.require(d2_identity_suite(*D), name + " identity suite");
        out.require(verify_symmetrized(D->hopf), name + " symmetrized");
    }
    out.require(!S.m2tr.hopf.left.base->is_commutative(), "m2tr: base ring is commutative");
    return out;
}

// ---- 9 ----

Outcome cross_checks(const Shipped& S) {
    Outcome out;
    out.require(structurally_equal(wha_to_hopf_algebroid(make_wha_pair2<Q>(QQ)), symmetrize(make_pair2<Q>(QQ).hopf)), "wha-pair2 differs from pair2");
    S.each([&](const auto& x) {
        auto nd = certified_integral(x.T);
        if (!nd) return;
        out.require(compare_dual_structures(dual_structures_from_integral(*nd), dual_structures_generic(*nd->frame)), x.name + ": dual structures");
    });
    auto T = symmetrize(make_kz2<Q>(QQ).hopf);
    auto F = dual_frame(T);
    const Vec<Q> ell{Q::one(), Q::one()};
    auto B1 = dual_hopf_algebroid(check_nondegenerate(T, F, ell));
    auto B2 = dual_hopf_algebroid(check_nondegenerate(T, F, Q::from_int(2) * ell));
    out.require(B1.S_star == B2.S_star, "kz2: S_star changes under l -> 2l");
    return out;
}

// ---- 10 ----

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& cmd) {
    Run r;
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

Outcome cli_round_trip(const std::string& cli) {
    Outcome out;
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("algd-acceptance-" + std::to_string(getpid()));
    fs::create_directories(dir);
    auto save = [&](const std::string& file, const std::string& text) {
        std::ofstream(dir / file, std::ios::binary) << text;
        return (dir / file).string();
    };
    // emit twice, verify the file twice: same bytes every time
    auto emitted_and_stable = [&](const std::string& label, const std::string& cmd) -> std::string {
        Run a = run(cmd), b = run(cmd);
        out.require(a.status == 0, label + ": emit exit " + std::to_string(a.status));
        out.require(a.out == b.out, label + ": emitted bytes differ between runs");
        const std::string path = save(label + ".json", a.out);
        Run v1 = run(quote(cli) + " verify " + quote(path)), v2 = run(quote(cli) + " verify " + quote(path) + " --report json");
        Run v3 = run(quote(cli) + " verify " + quote(path));
        out.require(v1.status == 0, label + ": verify exit " + std::to_string(v1.status));
        out.require(v2.status == 0, label + ": json verify exit " + std::to_string(v2.status));
        out.require(v1.out == v3.out, label + ": report bytes differ between runs");
        return path;
    };
    const std::vector<std::string> names{"kz2", "kz2-group", "pair2", "qt2", "qt3", "env", "wha-pair2", "m2tr", "kz2ext", "m2-weighted", "m2-diagonal"};
    std::vector<std::string> paths;
    for (const auto& n : names) paths.push_back(emitted_and_stable(n, quote(cli) + " example " + n + " --emit"));
    // derived bundles: duals of two Hopf algebroids and the endomorphism algebroid of two extensions
    emitted_and_stable("kz2-dual", quote(cli) + " dualize " + quote(paths[0]));
    emitted_and_stable("pair2-dual", quote(cli) + " dualize " + quote(paths[2]));
    emitted_and_stable("kz2ext-endo", quote(cli) + " d2 " + quote(paths[8]) + " --emit");
    emitted_and_stable("m2tr-endo", quote(cli) + " d2 " + quote(paths[7]) + " --emit");
    // a broken bundle is a failure, garbage is bad input
    Run bad = run(quote(cli) + " verify " + quote(save("bad.json", "{\"kind\": \"hopf\"")));
    out.require(bad.status == 2, "malformed JSON exit " + std::to_string(bad.status));
    fs::remove_all(dir);
    return out;
}

int report(int id, const std::string& title, const std::function<Outcome()>& fn) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
        o = fn();
    } catch (const std::exception& e) {
        o.ok = false;
        o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " [" << std::fixed << std::setprecision(2) << secs << " s]\n";
    std::cout.unsetf(std::ios::fixed);
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
    return o.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <algd executable>\n";
        return 2;
    }
    const std::string cli = argv[1];
    int failed = report(1, "axiom suites on the shipped fixtures", axiom_suites);
    failed += report(2, "kZ2 fails the Lu condition and is Hopf", lu_counterexample);
    const Shipped S;
    failed += report(3, "antipode, Galois maps and translation maps agree", [&] { return galois_equivalence(S); });
    failed += report(4, "integral pipeline on kZ2", kz2_integrals);
    failed += report(5, "Frobenius systems of certified integrals", [&] { return frobenius_systems_all(S); });
    failed += report(6, "integral identity suite and fault coverage", identity_suite_coverage);
    failed += report(7, "dual Hopf algebroids and the double dual", [&] { return duality(S); });
    failed += report(8, "endomorphism Hopf algebroid of depth two extensions", [&] { return d2_pipeline(S); });
    failed += report(9, "cross-checks between constructions", [&] { return cross_checks(S); });
    failed += report(10, "CLI round trip", [&] { return cli_round_trip(cli); });
    std::cout << (10 - failed) << "/10 criteria pass\n";
    return failed == 0 ? 0 : 1;
}
