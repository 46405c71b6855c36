#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "algd/frobenius.hpp"
#include "algd/hopf.hpp"
#include "algd/weak_hopf.hpp"

namespace algd {

using Json = nlohmann::ordered_json;

// Bundle kinds as they appear in the "kind" field.
namespace bundle_kind {
inline constexpr const char* algebra = "algebra";
inline constexpr const char* left = "left-bialgebroid";
inline constexpr const char* right = "right-bialgebroid";
inline constexpr const char* hopf = "hopf";
inline constexpr const char* symmetrized = "symmetrized-hopf";
inline constexpr const char* frobenius = "frobenius-extension";
inline constexpr const char* wha = "wha";
}  // namespace bundle_kind

namespace json_detail {

[[noreturn]] inline void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

inline const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

template <class K>
K scalar(const Json& j, const Field& f) {
    if (j.is_string()) return K::parse(j.get<std::string>(), f);
    if (j.is_number_integer()) return K::from_int(j.get<long long>(), f);
    fail("scalar must be a string or an integer");
}

template <class K>
Vec<K> vec(const Json& j, std::size_t n, const Field& f, const std::string& what) {
    if (!j.is_array() || j.size() != n) fail(what + ": expected a list of " + std::to_string(n) + " scalars");
    Vec<K> v;
    v.reserve(n);
    for (const auto& x : j) v.push_back(scalar<K>(x, f));
    return v;
}

template <class K>
Matrix<K> matrix(const Json& j, std::size_t rows, std::size_t cols, const Field& f, const std::string& what) {
    if (!j.is_array() || j.size() != rows) fail(what + ": expected " + std::to_string(rows) + " rows");
    Matrix<K> m(rows, cols, f);
    for (std::size_t r = 0; r < rows; ++r) {
        Vec<K> row = vec<K>(j[r], cols, f, what);
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
}

}  // namespace json_detail

template <class K>
Json to_json(const Vec<K>& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(x.str());
    return j;
}

template <class K>
Json to_json(const Matrix<K>& m) {
    Json j = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(to_json(m.row(r)));
    return j;
}

template <class K>
Json to_json(const Algebra<K>& A) {
    const std::size_t n = A.dim();
    Json mul = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < n; ++j) row.push_back(to_json(A.mul(A.basis(i), A.basis(j))));
        mul.push_back(row);
    }
    return Json{{"dim", n}, {"field", A.field().name()}, {"names", A.names()}, {"mul", mul}, {"unit", to_json(A.one())}};
}

template <class K>
Json to_json(const Morphism<K>& m) {
    return Json{{"kind", kind_name(m.kind)}, {"matrix", to_json(m.map)}};
}

inline Field bundle_field(const Json& j) {
    return parse_field(json_detail::member(j, "field").get<std::string>());
}

template <class K>
AlgPtr<K> algebra_from_json(const Json& j, const Field& f) {
    using namespace json_detail;
    const Json& dj = member(j, "dim");
    if (!dj.is_number_unsigned() || dj.get<std::size_t>() == 0) fail("algebra dim must be a positive integer");
    const std::size_t n = dj.get<std::size_t>();
    if (j.contains("field") && parse_field(j.at("field").get<std::string>()) != f) fail("algebra field differs from bundle field");
    const Json& mul = member(j, "mul");
    if (!mul.is_array() || mul.size() != n) fail("mul: expected " + std::to_string(n) + " rows");
    std::vector<K> c(n * n * n, K::zero(f));
    for (std::size_t a = 0; a < n; ++a) {
        if (!mul[a].is_array() || mul[a].size() != n) fail("mul: ragged table");
        for (std::size_t b = 0; b < n; ++b) {
            Vec<K> v = vec<K>(mul[a][b], n, f, "mul entry");
            for (std::size_t k = 0; k < n; ++k) c[(a * n + b) * n + k] = v[k];
        }
    }
    std::vector<std::string> names;
    if (j.contains("names")) {
        if (!j.at("names").is_array() || j.at("names").size() != n) fail("names: wrong length");
        for (const auto& s : j.at("names")) names.push_back(s.get<std::string>());
    }
    return make_algebra(Algebra<K>(n, std::move(c), vec<K>(member(j, "unit"), n, f, "unit"), f, std::move(names)));
}

template <class K>
Morphism<K> morphism_from_json(const Json& j, AlgPtr<K> src, AlgPtr<K> tgt, Kind expected, const std::string& what) {
    using namespace json_detail;
    const Field f = tgt->field();
    Kind k = expected;
    if (j.is_object() && j.contains("kind")) {
        const std::string s = j.at("kind").get<std::string>();
        if (s != "hom" && s != "antihom") fail(what + ": kind must be hom or antihom");
        k = s == "hom" ? Kind::Hom : Kind::AntiHom;
        if (k != expected) fail(what + ": expected kind " + kind_name(expected));
    }
    const Json& mj = j.is_object() ? member(j, "matrix") : j;
    return Morphism<K>(src, tgt, matrix<K>(mj, tgt->dim(), src->dim(), f, what), k);
}

// ---- bundles ----

template <class K>
Json bundle_header(const char* kind, const std::string& name, const Field& f) {
    return Json{{"kind", kind}, {"name", name}, {"field", f.name()}};
}

template <class K>
Json algebra_bundle(const Algebra<K>& A, const std::string& name) {
    Json j = bundle_header<K>(bundle_kind::algebra, name, A.field());
    j["algebra"] = to_json(A);
    return j;
}

namespace json_detail {

template <class K>
Json bialgebroid_maps(const BialgebroidData<K>& B, const char* s, const char* t) {
    return Json{{s, to_json(B.s)}, {t, to_json(B.t)}, {"coproduct_lift", to_json(B.gamma)}, {"counit", to_json(B.pi)}};
}

template <class K>
LeftBialgebroid<K> left_maps(const Json& j, AlgPtr<K> A, AlgPtr<K> L) {
    const Field f = A->field();
    const std::size_t n = A->dim();
    return LeftBialgebroid<K>(A, L, morphism_from_json<K>(member(j, "sL"), L, A, Kind::Hom, "sL"), morphism_from_json<K>(member(j, "tL"), L, A, Kind::AntiHom, "tL"),
                              matrix<K>(member(j, "coproduct_lift"), n * n, n, f, "coproduct_lift"), matrix<K>(member(j, "counit"), L->dim(), n, f, "counit"));
}

template <class K>
RightBialgebroid<K> right_maps(const Json& j, AlgPtr<K> A, AlgPtr<K> R) {
    const Field f = A->field();
    const std::size_t n = A->dim();
    return RightBialgebroid<K>(A, R, morphism_from_json<K>(member(j, "sR"), R, A, Kind::Hom, "sR"), morphism_from_json<K>(member(j, "tR"), R, A, Kind::AntiHom, "tR"),
                               matrix<K>(member(j, "coproduct_lift"), n * n, n, f, "coproduct_lift"), matrix<K>(member(j, "counit"), R->dim(), n, f, "counit"));
}

inline void merge_into(Json& j, const Json& extra) {
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
}

}  // namespace json_detail

template <class K>
Json left_bundle(const LeftBialgebroid<K>& B, const std::string& name) {
    Json j = bundle_header<K>(bundle_kind::left, name, B.A->field());
    j["A"] = to_json(*B.A);
    j["L"] = to_json(*B.base);
    json_detail::merge_into(j, json_detail::bialgebroid_maps(B, "sL", "tL"));
    return j;
}

template <class K>
Json right_bundle(const RightBialgebroid<K>& B, const std::string& name) {
    Json j = bundle_header<K>(bundle_kind::right, name, B.A->field());
    j["A"] = to_json(*B.A);
    j["R"] = to_json(*B.base);
    json_detail::merge_into(j, json_detail::bialgebroid_maps(B, "sR", "tR"));
    return j;
}

template <class K>
Json hopf_bundle(const HopfAlgebroid<K>& H, const std::string& name) {
    Json j = left_bundle(H.left, name);
    j["kind"] = bundle_kind::hopf;
    j["S"] = to_json(H.S);
    return j;
}

template <class K>
Json symmetrized_bundle(const SymmetrizedHopfAlgebroid<K>& T, const std::string& name) {
    Json j = bundle_header<K>(bundle_kind::symmetrized, name, T.left.A->field());
    j["A"] = to_json(*T.left.A);
    j["L"] = to_json(*T.left.base);
    j["R"] = to_json(*T.right.base);
    j["left"] = json_detail::bialgebroid_maps(T.left, "sL", "tL");
    j["right"] = json_detail::bialgebroid_maps(T.right, "sR", "tR");
    j["S"] = to_json(T.S);
    return j;
}

template <class K>
Json frobenius_bundle(const FrobeniusExtension<K>& fe) {
    Json j = bundle_header<K>(bundle_kind::frobenius, fe.name, fe.M->field());
    j["N"] = to_json(*fe.N);
    j["M"] = to_json(*fe.M);
    j["inclusion"] = to_json(fe.inclusion);
    j["psi"] = to_json(fe.psi);
    j["quasibasis"] = to_json(fe.quasibasis);
    return j;
}

template <class K>
Json wha_bundle(const WeakHopfAlgebra<K>& w) {
    Json j = bundle_header<K>(bundle_kind::wha, w.name, w.H->field());
    j["H"] = to_json(*w.H);
    j["delta"] = to_json(w.delta);
    j["epsilon"] = to_json(w.epsilon);
    j["S"] = to_json(w.S);
    return j;
}

inline std::string bundle_name(const Json& j) {
    return j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "bundle";
}

template <class K>
AlgPtr<K> algebra_from_bundle(const Json& j) {
    return algebra_from_json<K>(json_detail::member(j, "algebra"), bundle_field(j));
}

template <class K>
LeftBialgebroid<K> left_from_bundle(const Json& j) {
    const Field f = bundle_field(j);
    auto A = algebra_from_json<K>(json_detail::member(j, "A"), f);
    auto L = algebra_from_json<K>(json_detail::member(j, "L"), f);
    return json_detail::left_maps<K>(j, A, L);
}

template <class K>
RightBialgebroid<K> right_from_bundle(const Json& j) {
    const Field f = bundle_field(j);
    auto A = algebra_from_json<K>(json_detail::member(j, "A"), f);
    auto R = algebra_from_json<K>(json_detail::member(j, "R"), f);
    return json_detail::right_maps<K>(j, A, R);
}

template <class K>
HopfAlgebroid<K> hopf_from_bundle(const Json& j) {
    auto B = left_from_bundle<K>(j);
    auto S = morphism_from_json<K>(json_detail::member(j, "S"), B.A, B.A, Kind::AntiHom, "S");
    return HopfAlgebroid<K>(std::move(B), std::move(S));
}

template <class K>
SymmetrizedHopfAlgebroid<K> symmetrized_from_bundle(const Json& j) {
    using namespace json_detail;
    const Field f = bundle_field(j);
    auto A = algebra_from_json<K>(member(j, "A"), f);
    auto L = algebra_from_json<K>(member(j, "L"), f);
    auto R = algebra_from_json<K>(member(j, "R"), f);
    auto left = left_maps<K>(member(j, "left"), A, L);
    auto right = right_maps<K>(member(j, "right"), A, R);
    auto S = morphism_from_json<K>(member(j, "S"), A, A, Kind::AntiHom, "S");
    if (rank(S.map) != A->dim()) fail("S is not invertible");
    const std::size_t d = L->dim();
    if (R->dim() != d) fail("L and R differ in dimension");
    Matrix<K> mu = right.pi * left.t.map;
    if (rank(mu) != d) fail("pi_R t_L is not invertible");
    return make_symmetrized(std::move(left), std::move(right), std::move(S));
}

template <class K>
FrobeniusExtension<K> frobenius_from_bundle(const Json& j) {
    using namespace json_detail;
    const Field f = bundle_field(j);
    auto N = algebra_from_json<K>(member(j, "N"), f);
    auto M = algebra_from_json<K>(member(j, "M"), f);
    auto inc = morphism_from_json<K>(member(j, "inclusion"), N, M, Kind::Hom, "inclusion");
    auto psi = matrix<K>(member(j, "psi"), N->dim(), M->dim(), f, "psi");
    auto qb = vec<K>(member(j, "quasibasis"), M->dim() * M->dim(), f, "quasibasis");
    return {bundle_name(j), N, M, std::move(inc), std::move(psi), std::move(qb)};
}

template <class K>
WeakHopfAlgebra<K> wha_from_bundle(const Json& j) {
    using namespace json_detail;
    const Field f = bundle_field(j);
    auto H = algebra_from_json<K>(member(j, "H"), f);
    const std::size_t n = H->dim();
    return {bundle_name(j), H, matrix<K>(member(j, "delta"), n * n, n, f, "delta"), matrix<K>(member(j, "epsilon"), 1, n, f, "epsilon"),
            morphism_from_json<K>(member(j, "S"), H, H, Kind::AntiHom, "S")};
}

inline Json report_json(const Report& r) {
    Json v = Json::array();
    for (const auto& x : r.items()) v.push_back(Json{{"axiom", x.axiom}, {"witness", x.witness}, {"lhs", x.lhs}, {"rhs", x.rhs}});
    return Json{{"ok", r.ok()}, {"violations", v}};
}

}  // namespace algd
