#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algd/hopf.hpp"

namespace algd {

template <class K>
struct HopfFixture {
    std::string name;
    HopfAlgebroid<K> hopf;
    std::optional<Matrix<K>> delta;  // k-linear coproduct whose projection is gamma_L, when one exists
    std::vector<std::string> notes;
};

namespace detail {

template <class K>
K scalar(long long v, const Field& f) {
    return K::from_int(v, f);
}

// Algebra with a single basis element: the ground field.
template <class K>
AlgPtr<K> ground_field(const Field& f) {
    return make_algebra(Algebra<K>(1, {K::one(f)}, {K::one(f)}, f, {"1"}));
}

template <class K>
Matrix<K> column_matrix(const std::vector<Vec<K>>& cols, std::size_t rows, const Field& f) {
    return Matrix<K>::from_columns(cols, rows, f);
}

}  // namespace detail

// The group algebra of Z_2 over the base field, with the twisted antipode t -> -t.
template <class K>
HopfFixture<K> make_kz2(const Field& f, bool twisted = true, bool require_odd_characteristic = false) {
    if (require_odd_characteristic && f.p == 2) throw Error(ErrorCode::CharTwo, "kZ2 needs characteristic different from 2");
    const K o = K::one(f), z = K::zero(f);
    auto A = make_algebra(Algebra<K>::from_rule(
        2, [&](std::size_t i, std::size_t j) { return unit_vector<K>(2, (i + j) % 2, f); }, unit_vector<K>(2, 0, f), f, {"1", "t"}));
    auto L = detail::ground_field<K>(f);
    Matrix<K> eta(2, 1, f);
    eta(0, 0) = o;
    Morphism<K> s(L, A, eta, Kind::Hom), t(L, A, eta, Kind::AntiHom);
    Matrix<K> g(4, 2, f);
    g(0, 0) = o;  // 1 (x) 1
    g(3, 1) = o;  // t (x) t
    Matrix<K> pi(1, 2, f);
    pi(0, 0) = o;
    pi(0, 1) = o;
    LeftBialgebroid<K> B(A, L, s, t, g, pi);
    Matrix<K> S = Matrix<K>::identity(2, f);
    if (twisted) S(1, 1) = -o;
    (void)z;
    HopfFixture<K> fx{twisted ? "kz2" : "kz2-group", HopfAlgebroid<K>(B, Morphism<K>(A, A, S, Kind::AntiHom)), g, {}};
    fx.notes.push_back(twisted ? "antipode t -> -t" : "antipode t -> t");
    return fx;
}

// Finite groupoid given by a composition table. comp[g][h] is the index of g o h
// (first h, then g) or -1 when source(g) != target(h).
struct Groupoid {
    std::size_t objects = 0;
    std::vector<std::pair<std::size_t, std::size_t>> arrows;  // (source, target)
    std::vector<std::vector<int>> comp;
    std::vector<std::string> names;
};

inline Groupoid pair_groupoid2() {
    Groupoid G;
    G.objects = 2;
    G.arrows = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
    G.names = {"id0", "id1", "a", "b"};
    // a: 0 -> 1, b: 1 -> 0
    G.comp = {{0, -1, -1, 3}, {-1, 1, 2, -1}, {2, -1, -1, 1}, {-1, 3, 0, -1}};
    return G;
}

inline Groupoid cyclic_group2() {
    Groupoid G;
    G.objects = 1;
    G.arrows = {{0, 0}, {0, 0}};
    G.names = {"1", "t"};
    G.comp = {{0, 1}, {1, 0}};
    return G;
}

inline Groupoid two_trivial_groups() {
    Groupoid G;
    G.objects = 2;
    G.arrows = {{0, 0}, {1, 1}};
    G.names = {"id0", "id1"};
    G.comp = {{0, -1}, {-1, 1}};
    return G;
}

struct GroupoidStructure {
    std::vector<std::size_t> identity;  // per object
    std::vector<std::size_t> inverse;   // per arrow
};

inline GroupoidStructure check_groupoid(const Groupoid& G) {
    const std::size_t m = G.arrows.size();
    auto fail = [](const std::string& why) { throw Error(ErrorCode::NotAGroupoid, why); };
    if (G.comp.size() != m) fail("composition table has wrong size");
    for (const auto& row : G.comp)
        if (row.size() != m) fail("composition table has wrong size");
    for (const auto& [s, t] : G.arrows)
        if (s >= G.objects || t >= G.objects) fail("arrow with unknown object");
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t h = 0; h < m; ++h) {
            const bool composable = G.arrows[g].first == G.arrows[h].second;
            const int gh = G.comp[g][h];
            if (composable != (gh >= 0)) fail("composition defined exactly when source(g) = target(h)");
            if (gh >= 0 && (static_cast<std::size_t>(gh) >= m || G.arrows[gh].first != G.arrows[h].first || G.arrows[gh].second != G.arrows[g].second))
                fail("composite has wrong source or target");
        }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c) {
                const int ab = G.comp[a][b], bc = G.comp[b][c];
                if (ab >= 0 && bc >= 0 && G.comp[ab][c] != G.comp[a][bc]) fail("composition is not associative");
            }
    GroupoidStructure st;
    for (std::size_t o = 0; o < G.objects; ++o) {
        std::optional<std::size_t> id;
        for (std::size_t g = 0; g < m && !id; ++g) {
            if (G.arrows[g].first != o || G.arrows[g].second != o) continue;
            bool unit = true;
            for (std::size_t h = 0; h < m && unit; ++h) {
                if (G.arrows[h].second == o && G.comp[g][h] != static_cast<int>(h)) unit = false;
                if (G.arrows[h].first == o && G.comp[h][g] != static_cast<int>(h)) unit = false;
            }
            if (unit) id = g;
        }
        if (!id) fail("object without identity arrow");
        st.identity.push_back(*id);
    }
    for (std::size_t g = 0; g < m; ++g) {
        std::optional<std::size_t> inv;
        for (std::size_t h = 0; h < m && !inv; ++h)
            if (G.comp[g][h] >= 0 && G.comp[h][g] >= 0 && static_cast<std::size_t>(G.comp[g][h]) == st.identity[G.arrows[g].second] &&
                static_cast<std::size_t>(G.comp[h][g]) == st.identity[G.arrows[g].first])
                inv = h;
        if (!inv) fail("arrow without inverse");
        st.inverse.push_back(*inv);
    }
    return st;
}

template <class K>
AlgPtr<K> groupoid_algebra(const Groupoid& G, const GroupoidStructure& st, const Field& f) {
    const std::size_t m = G.arrows.size();
    Vec<K> unit = zeros<K>(m, f);
    for (auto id : st.identity) unit[id] = K::one(f);
    return make_algebra(Algebra<K>::from_rule(
        m, [&](std::size_t g, std::size_t h) { return G.comp[g][h] >= 0 ? unit_vector<K>(m, G.comp[g][h], f) : zeros<K>(m, f); }, unit, f, G.names));
}

// Groupoid algebra over the algebra of functions on the objects: s = t = embedding,
// gamma(g) = g (x) g, pi(g) = target(g), S(g) = g^-1.
template <class K>
HopfFixture<K> make_groupoid(const Groupoid& G, const Field& f, const std::string& name = "groupoid") {
    GroupoidStructure st = check_groupoid(G);
    const std::size_t m = G.arrows.size(), d = G.objects;
    auto A = groupoid_algebra<K>(G, st, f);
    std::vector<std::string> onames;
    for (std::size_t o = 0; o < d; ++o) onames.push_back(G.names[st.identity[o]]);
    auto L = make_algebra(Algebra<K>::from_rule(
        d, [&](std::size_t i, std::size_t j) { return i == j ? unit_vector<K>(d, i, f) : zeros<K>(d, f); }, Vec<K>(d, K::one(f)), f, onames));
    Matrix<K> emb(m, d, f), g(m * m, m, f), pi(d, m, f), S(m, m, f);
    for (std::size_t o = 0; o < d; ++o) emb(st.identity[o], o) = K::one(f);
    for (std::size_t a = 0; a < m; ++a) {
        g(a * m + a, a) = K::one(f);
        pi(G.arrows[a].second, a) = K::one(f);
        S(st.inverse[a], a) = K::one(f);
    }
    LeftBialgebroid<K> B(A, L, Morphism<K>(L, A, emb, Kind::Hom), Morphism<K>(L, A, emb, Kind::AntiHom), g, pi);
    HopfFixture<K> fx{name, HopfAlgebroid<K>(B, Morphism<K>(A, A, S, Kind::AntiHom)), g, {"antipode g -> g^-1"}};
    return fx;
}

template <class K>
HopfFixture<K> make_pair2(const Field& f) {
    return make_groupoid<K>(pair_groupoid2(), f, "pair2");
}

inline bool is_primitive_root(long long q, std::size_t N, const Field& f) {
    // exact integer check over Q only admits q = +-1
    auto pw = [&](long long x, std::size_t e) {
        long long r = 1;
        for (std::size_t i = 0; i < e; ++i) r = f.is_rational() ? r * x : (r * x) % static_cast<long long>(f.p);
        if (!f.is_rational()) r = ((r % static_cast<long long>(f.p)) + f.p) % f.p;
        return r;
    };
    if (N == 0) return false;
    if (pw(q, N) != 1) return false;
    for (std::size_t k = 1; k < N; ++k)
        if (pw(q, k) == 1) return false;
    return true;
}

// Root-of-unity truncation of the quantum torus: U^N = V^N = 1, UV = qVU, base L = span{U^n}.
// gamma(U^n V^m) = U^n V^m (x) V^m, pi(U^n V^m) = U^n, S(U^n V^m) = V^-m U^n.
template <class K>
HopfFixture<K> make_quantum_torus(std::size_t N, long long q, const Field& f) {
    if (!is_primitive_root(q, N, f)) throw Error(ErrorCode::NotPrimitiveRoot, std::to_string(q) + " is not a primitive " + std::to_string(N) + "-th root of unity in " + f.name());
    const std::size_t n = N * N;
    const K qk = K::from_int(q, f);
    auto qpow = [&](long long e) {
        e %= static_cast<long long>(N);
        if (e < 0) e += N;
        K r = K::one(f);
        for (long long i = 0; i < e; ++i) r = r * qk;
        return r;
    };
    auto idx = [&](std::size_t a, std::size_t b) { return (a % N) * N + (b % N); };
    std::vector<std::string> names;
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            std::string s;
            if (a) s += a == 1 ? "U" : "U^" + std::to_string(a);
            if (b) s += b == 1 ? "V" : "V^" + std::to_string(b);
            names.push_back(s.empty() ? "1" : s);
        }
    // U^a V^b U^c V^d = q^(-bc) U^(a+c) V^(b+d)
    auto A = make_algebra(Algebra<K>::from_rule(
        n,
        [&](std::size_t i, std::size_t j) {
            const std::size_t a = i / N, b = i % N, c = j / N, d = j % N;
            Vec<K> v = zeros<K>(n, f);
            v[idx(a + c, b + d)] = qpow(-static_cast<long long>(b * c));
            return v;
        },
        unit_vector<K>(n, 0, f), f, names));
    std::vector<std::string> lnames;
    for (std::size_t a = 0; a < N; ++a) lnames.push_back(names[a * N]);
    auto L = make_algebra(Algebra<K>::from_rule(
        N, [&](std::size_t i, std::size_t j) { return unit_vector<K>(N, (i + j) % N, f); }, unit_vector<K>(N, 0, f), f, lnames));
    Matrix<K> emb(n, N, f), g(n * n, n, f), pi(N, n, f), S(n, n, f);
    for (std::size_t a = 0; a < N; ++a) emb(a * N, a) = K::one(f);
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            const std::size_t i = idx(a, b);
            g(i * n + idx(0, b), i) = K::one(f);
            pi(a, i) = K::one(f);
            // V^-b U^a = q^(ab) U^a V^-b
            S(idx(a, N - b), i) = qpow(static_cast<long long>(a * b));
        }
    LeftBialgebroid<K> B(A, L, Morphism<K>(L, A, emb, Kind::Hom), Morphism<K>(L, A, emb, Kind::AntiHom), g, pi);
    HopfFixture<K> fx{"qt" + std::to_string(N), HopfAlgebroid<K>(B, Morphism<K>(A, A, S, Kind::AntiHom)), g,
                      {"finite truncation U^N = V^N = 1 of the quantum torus"}};
    return fx;
}

// The Lu-style section U^n V^m (x)_L U^k V^l -> U^(n+k) V^m (x) V^l of the truncated torus:
// checks that it is well defined on the quotient and is a section of the projection.
template <class K>
Report check_torus_section(const HopfFixture<K>& fx, std::size_t N) {
    Report rep;
    const auto& B = fx.hopf.left;
    const auto& A = *B.A;
    const auto& Q = B.Q();
    const std::size_t n = N * N;
    const Field f = A.field();
    auto idx = [&](std::size_t a, std::size_t b) { return (a % N) * N + (b % N); };
    auto xi_plain = [&](const Vec<K>& x) {
        Vec<K> out = zeros<K>(n * n, f);
        for_terms(x, n, [&](std::size_t i, std::size_t j, const K& c) {
            const std::size_t a = i / N, b = i % N, cc = j / N, d = j % N;
            out[idx(a + cc, b) * n + idx(0, d)] += c;
        });
        return out;
    };
    // well defined: kills the relations
    for (const auto& r : Q.relations().basis())
        if (!algd::is_zero(xi_plain(r))) rep.add("torus-section", "relation not killed");
    for (std::size_t c = 0; c < Q.dim(); ++c) {
        Vec<K> lift = Q.section(unit_vector<K>(Q.dim(), c, f));
        if (!Q.same_class(xi_plain(lift), lift)) rep.add("torus-section", "not a section at class " + std::to_string(c));
    }
    return rep;
}

// Upper triangular 2x2 matrices: basis e11, e12, e22.
template <class K>
AlgPtr<K> upper_triangular2(const Field& f) {
    // e11 e11 = e11, e11 e12 = e12, e12 e22 = e12, e22 e22 = e22
    return make_algebra(Algebra<K>::from_rule(
        3,
        [&](std::size_t i, std::size_t j) {
            Vec<K> v = zeros<K>(3, f);
            if (i == 0 && j == 0) v[0] = K::one(f);
            if (i == 0 && j == 1) v[1] = K::one(f);
            if (i == 1 && j == 2) v[1] = K::one(f);
            if (i == 2 && j == 2) v[2] = K::one(f);
            return v;
        },
        Vec<K>{K::one(f), K::zero(f), K::one(f)}, f, {"e11", "e12", "e22"}));
}

// The enveloping Hopf algebroid L (x) L^op over L: s(l) = l (x) 1, t(l) = 1 (x) l,
// gamma(l (x) l') = (l (x) 1) (x)_L (1 (x) l'), pi(l (x) l') = l l', S(l (x) l') = l' (x) l.
template <class K>
HopfFixture<K> make_enveloping(AlgPtr<K> L, const std::string& name = "env") {
    const auto& Lr = *L;
    const std::size_t d = Lr.dim(), n = d * d;
    const Field f = Lr.field();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) names.push_back(Lr.names()[i] + "|" + Lr.names()[j]);
    auto A = make_algebra(Algebra<K>::from_rule(
        n,
        [&](std::size_t x, std::size_t y) {
            const std::size_t i = x / d, j = x % d, k = y / d, l = y % d;
            return tensor(Lr.mul(Lr.basis(i), Lr.basis(k)), Lr.mul(Lr.basis(l), Lr.basis(j)));
        },
        tensor(Lr.one(), Lr.one()), f, names));
    Matrix<K> s(n, d, f), t(n, d, f), g(n * n, n, f), pi(d, n, f), S(n, n, f);
    for (std::size_t k = 0; k < d; ++k) {
        s.set_col(k, tensor(Lr.basis(k), Lr.one()));
        t.set_col(k, tensor(Lr.one(), Lr.basis(k)));
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const std::size_t x = i * d + j;
            g.set_col(x, tensor(tensor(Lr.basis(i), Lr.one()), tensor(Lr.one(), Lr.basis(j))));
            pi.set_col(x, Lr.mul(Lr.basis(i), Lr.basis(j)));
            S(j * d + i, x) = K::one(f);
        }
    LeftBialgebroid<K> B(A, L, Morphism<K>(L, A, s, Kind::Hom), Morphism<K>(L, A, t, Kind::AntiHom), g, pi);
    return HopfFixture<K>{name, HopfAlgebroid<K>(B, Morphism<K>(A, A, S, Kind::AntiHom)), std::nullopt, {"enveloping algebra of the base"}};
}

}  // namespace algd
