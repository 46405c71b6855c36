// algd: command-line front end for the algebroid library.
//
// Exit codes: 0 everything checked out, 1 an axiom or certificate failed,
// 2 the input could not be read or has the wrong shape.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "algd/duality.hpp"
#include "algd/fixtures.hpp"
#include "algd/frobenius.hpp"
#include "algd/integrals.hpp"
#include "algd/json_io.hpp"
#include "algd/weak_hopf.hpp"

using namespace algd;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kBadInput = 2;

int exit_code(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError:
        case ErrorCode::DimensionMismatch:
        case ErrorCode::AlgebraMismatch:
        case ErrorCode::Inconsistent:
            return kBadInput;
        default:
            return kFail;
    }
}

Json read_bundle(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorCode::ParseError, "malformed JSON in " + path);
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) throw Error(ErrorCode::ParseError, "bundle has no \"kind\"");
    return j;
}

std::string kind_of(const Json& j) { return j.at("kind").get<std::string>(); }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void print_report(const std::string& heading, const Report& rep, const std::string& format) {
    if (format == "json") {
        Json out = report_json(rep);
        out["subject"] = heading;
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::cout << heading << ": " << (rep.ok() ? "ok" : std::to_string(rep.size()) + " violation(s)") << "\n";
    if (!rep.ok()) std::cout << rep.text();
}

// Runs body<Rational> or body<ModP> according to the field.
template <template <class> class Body, class... Args>
int dispatch(const Field& f, Args&&... args) {
    if (f.p == 0) return Body<Rational>::run(f, std::forward<Args>(args)...);
    return Body<ModP>::run(f, std::forward<Args>(args)...);
}

// Any bundle that carries a Hopf algebroid, in symmetrized form.
template <class K>
SymmetrizedHopfAlgebroid<K> hopf_like(const Json& j) {
    const std::string k = kind_of(j);
    if (k == bundle_kind::symmetrized) return symmetrized_from_bundle<K>(j);
    if (k == bundle_kind::hopf) {
        HopfAlgebroid<K> H = hopf_from_bundle<K>(j);
        if (j.contains("R") && j.contains("mu")) {
            auto R = algebra_from_json<K>(j.at("R"), H.left.A->field());
            auto mu = morphism_from_json<K>(j.at("mu"), H.left.base, R, Kind::AntiHom, "mu");
            return symmetrize(H, R, mu);
        }
        return symmetrize(H);
    }
    if (k == bundle_kind::wha) return wha_to_hopf_algebroid(wha_from_bundle<K>(j));
    throw Error(ErrorCode::ParseError, "expected a hopf, symmetrized-hopf or wha bundle, got " + k);
}

template <class K>
Vec<K> parse_coefficients(const std::string& csv, std::size_t n, const Field& f) {
    Vec<K> v;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(K::parse(item, f));
    if (v.size() != n) throw Error(ErrorCode::ParseError, "integral needs " + std::to_string(n) + " coefficients, got " + std::to_string(v.size()));
    return v;
}

template <class K>
NondegenerateIntegral<K> pick_integral(const SymmetrizedHopfAlgebroid<K>& T, const std::string& coeffs) {
    auto frame = dual_frame(T);
    if (!coeffs.empty()) return check_nondegenerate(T, frame, parse_coefficients<K>(coeffs, T.left.n(), T.left.A->field()));
    auto found = find_nondegenerate_integrals(T, frame);
    if (found.empty()) throw Error(ErrorCode::Degenerate, "no non-degenerate integral found; pass --integral");
    return check_nondegenerate(T, frame, found.front());
}

// ---- verify ----

struct VerifyOpts {
    std::string path, kind, report = "text";
};

template <class K>
struct Verify {
    static int run(const Field&, const Json& j, const VerifyOpts& o) {
        const std::string k = kind_of(j);
        const std::string subject = k + " " + bundle_name(j) + " over " + bundle_field(j).name();
        Report rep;
        try {
            if (k == bundle_kind::algebra) {
                algebra_from_bundle<K>(j);
            } else if (k == bundle_kind::left) {
                rep = verify_left(left_from_bundle<K>(j));
            } else if (k == bundle_kind::right) {
                rep = verify_right(right_from_bundle<K>(j));
            } else if (k == bundle_kind::hopf) {
                HopfAlgebroid<K> H = hopf_from_bundle<K>(j);
                rep.merge(verify_left(H.left), "left");
                rep.merge(verify_hopf(H), "hopf");
            } else if (k == bundle_kind::symmetrized) {
                rep = verify_symmetrized(symmetrized_from_bundle<K>(j));
            } else if (k == bundle_kind::frobenius) {
                rep = check_frobenius(frobenius_from_bundle<K>(j));
            } else if (k == bundle_kind::wha) {
                rep = check_weak_hopf(wha_from_bundle<K>(j));
            } else {
                throw Error(ErrorCode::ParseError, "unknown bundle kind " + k);
            }
        } catch (const Error& e) {
            if (exit_code(e.code()) == kBadInput) throw;
            rep.add(error_name(e.code()), bundle_name(j), e.what());
        }
        print_report(subject, rep, o.report);
        return rep.ok() ? kOk : kFail;
    }
};

// ---- integrals ----

struct IntegralOpts {
    std::string path, side = "left";
    bool nondegenerate = false;
};

template <class K>
struct Integrals {
    static int run(const Field&, const Json& j, const IntegralOpts& o) {
        auto T = hopf_like<K>(j);
        const auto& A = *T.left.A;
        if (o.nondegenerate) {
            auto found = find_nondegenerate_integrals(T, dual_frame(T));
            std::cout << "non-degenerate left integrals found: " << found.size() << "\n";
            for (const auto& v : found) std::cout << "  " << A.format(v) << "\n";
            return found.empty() ? kFail : kOk;
        }
        auto space = integral_space(T, o.side == "right" ? Side::Right : Side::Left);
        std::cout << o.side << " integrals (dim " << space.basis.size() << "):\n";
        for (const auto& v : space.basis) std::cout << "  " << A.format(v) << "\n";
        return kOk;
    }
};

// ---- dualize ----

struct DualizeOpts {
    std::string path, integral;
};

template <class K>
struct Dualize {
    static int run(const Field&, const Json& j, const DualizeOpts& o) {
        auto T = hopf_like<K>(j);
        auto nd = pick_integral(T, o.integral);
        auto bundle = dual_hopf_algebroid(nd);
        Json out = symmetrized_bundle(bundle.T, bundle_name(j) + "-dual");
        Json ell = Json::array();
        for (const auto& c : nd.ell) ell.push_back(c.str());
        out["provenance"] = Json{{"operation", "dualize"}, {"source", bundle_name(j)}, {"integral", ell}, {"integral_text", nd.A().format(nd.ell)}};
        emit(out);
        return kOk;
    }
};

// ---- frobenius / two-sided ----

struct IntegralChoice {
    std::string path, integral;
};

template <class K>
struct Frobenius {
    static int run(const Field&, const Json& j, const IntegralChoice& o) {
        auto nd = pick_integral(hopf_like<K>(j), o.integral);
        std::cout << "integral " << nd.A().format(nd.ell) << "\n";
        bool ok = true;
        for (const auto& fs : frobenius_systems(nd)) {
            Report rep = check_frobenius_system(fs);
            ok = ok && rep.ok();
            print_report("frobenius system over " + fs.tag, rep, "text");
        }
        return ok ? kOk : kFail;
    }
};

template <class K>
struct TwoSided {
    static int run(const Field&, const Json& j, const IntegralChoice& o) {
        auto nd = pick_integral(hopf_like<K>(j), o.integral);
        const auto& A = nd.A();
        std::cout << "integral " << A.format(nd.ell) << "\n";
        for (std::size_t a = 0; a < A.dim(); ++a) std::cout << "  xi(" << A.names()[a] << ") = " << A.format(nd.xi(A.basis(a))) << "\n";
        Report rep = two_sided_report(nd);
        print_report("two-sided antipode", rep, "text");
        return rep.ok() ? kOk : kFail;
    }
};

// ---- d2 ----

struct D2Opts {
    std::string path;
    bool emit = false;
};

template <class K>
struct D2 {
    static int run(const Field&, const Json& j, const D2Opts& o) {
        auto fe = frobenius_from_bundle<K>(j);
        auto D = d2_hopf_algebroid(fe);
        Report rep = verify_d2(D);
        rep.merge(d2_identity_suite(D), "d2");
        if (o.emit) {
            if (!rep.ok()) {
                std::cerr << rep.text();
                return kFail;
            }
            Json out = symmetrized_bundle(D.hopf, fe.name + "-endo");
            out["provenance"] = Json{{"operation", "d2"}, {"source", fe.name}, {"quasibasis_length", D.qb.betas.size()}};
            emit(out);
            return kOk;
        }
        const auto& E = D.endo;
        std::cout << "extension " << fe.name << " over " << fe.M->field().name() << "\n";
        std::cout << "  dim A = " << E.A->dim() << ", dim B = " << E.B->dim() << ", dim C = " << E.C->dim() << "\n";
        std::cout << "  D2 quasibasis length " << D.qb.betas.size() << "\n";
        print_report("d2 hopf algebroid", rep, "text");
        return rep.ok() ? kOk : kFail;
    }
};

// ---- example ----

const std::vector<std::string>& example_names() {
    static const std::vector<std::string> names{"kz2", "kz2-group", "pair2", "qt2", "qt3", "env", "wha-pair2", "m2tr", "kz2ext", "m2-weighted", "m2-diagonal"};
    return names;
}

Field example_field(const std::string& name, const std::string& flag) {
    if (!flag.empty()) return parse_field(flag);
    if (const char* env = std::getenv("ALGD_FIELD"); env && *env) return parse_field(env);
    return name == "qt3" ? Field{7} : Field{0};
}

struct ExampleOpts {
    std::string name, field;
    long long q = 0;
    bool emit = false;
};

template <class K>
long long torus_root(std::size_t N, long long q, const Field& f) {
    if (q != 0) return q;
    if (N == 2) return -1;
    if (f.p != 0)
        for (long long c = 2; c < static_cast<long long>(f.p); ++c)
            if (is_primitive_root(c, N, f)) return c;
    throw Error(ErrorCode::NotPrimitiveRoot, "no primitive root of unity of order " + std::to_string(N) + " in " + f.name() + "; pass --q");
}

template <class K>
struct Example {
    static int run(const Field& f, const ExampleOpts& o) {
        const std::string& n = o.name;
        Json out;
        if (n == "kz2" || n == "kz2-group" || n == "pair2" || n == "qt2" || n == "qt3" || n == "env") {
            HopfFixture<K> fx = n == "kz2"         ? make_kz2<K>(f)
                                : n == "kz2-group" ? make_kz2<K>(f, false)
                                : n == "pair2"     ? make_pair2<K>(f)
                                : n == "env"       ? make_enveloping<K>(upper_triangular2<K>(f))
                                                   : make_quantum_torus<K>(n == "qt2" ? 2 : 3, torus_root<K>(n == "qt2" ? 2 : 3, o.q, f), f);
            out = hopf_bundle(fx.hopf, fx.name);
            for (const auto& note : fx.notes) out["notes"].push_back(note);
        } else if (n == "wha-pair2") {
            out = wha_bundle(make_wha_pair2<K>(f));
        } else if (n == "m2tr") {
            out = frobenius_bundle(make_m2tr<K>(f));
        } else if (n == "kz2ext") {
            out = frobenius_bundle(make_kz2ext<K>(f));
        } else if (n == "m2-weighted") {
            out = frobenius_bundle(make_weighted_trace<K>(f));
        } else if (n == "m2-diagonal") {
            out = frobenius_bundle(make_diagonal_m2<K>(f));
        } else {
            throw Error(ErrorCode::ParseError, "unknown example " + n);
        }
        out["provenance"] = Json{{"operation", "example"}, {"example", n}};
        if (o.emit) {
            emit(out);
            return kOk;
        }
        std::cout << n << ": " << kind_of(out) << " over " << f.name() << "\n";
        for (const char* key : {"A", "L", "R", "N", "M", "H"})
            if (out.contains(key)) std::cout << "  dim " << key << " = " << out[key]["dim"] << "\n";
        return kOk;
    }
};

template <template <class> class Body, class Opts>
int with_bundle(const Opts& o) {
    Json j = read_bundle(o.path);
    return dispatch<Body>(bundle_field(j), j, o);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with finite-dimensional Hopf algebroids"};
    app.require_subcommand(1);

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "Check the axioms of a bundle");
    verify->add_option("path", vo.path, "bundle file, - for stdin")->required();
    verify->add_option("--kind", vo.kind, "expected bundle kind");
    verify->add_option("--report", vo.report, "text or json")->check(CLI::IsMember({"text", "json"}));

    IntegralOpts io;
    auto* integrals = app.add_subcommand("integrals", "Integral space of a Hopf algebroid");
    integrals->add_option("path", io.path)->required();
    integrals->add_option("--side", io.side)->check(CLI::IsMember({"left", "right"}));
    integrals->add_flag("--nondegenerate", io.nondegenerate, "search for non-degenerate left integrals");

    DualizeOpts dz;
    auto* dualize = app.add_subcommand("dualize", "Dual Hopf algebroid from a non-degenerate integral");
    dualize->add_option("path", dz.path)->required();
    dualize->add_option("--integral", dz.integral, "comma separated coefficients");

    IntegralChoice fr, ts;
    auto* frob = app.add_subcommand("frobenius", "Frobenius systems of a non-degenerate integral");
    frob->add_option("path", fr.path)->required();
    frob->add_option("--integral", fr.integral);
    auto* two = app.add_subcommand("two-sided", "Antipode making an integral two-sided");
    two->add_option("path", ts.path)->required();
    two->add_option("--integral", ts.integral);

    ExampleOpts ex;
    auto* example = app.add_subcommand("example", "Built-in fixtures");
    example->add_option("name", ex.name)->required()->check(CLI::IsMember(example_names()));
    example->add_option("--field", ex.field, "Q or GF(p); overrides ALGD_FIELD");
    example->add_option("--q", ex.q, "root of unity for qt2/qt3");
    example->add_flag("--emit", ex.emit, "print the JSON bundle");

    D2Opts d2;
    auto* d2cmd = app.add_subcommand("d2", "Hopf algebroid of a depth two Frobenius extension");
    d2cmd->add_option("path", d2.path)->required();
    d2cmd->add_flag("--emit", d2.emit, "print the resulting symmetrized-hopf bundle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kBadInput;
    }

    try {
        if (*verify) {
            Json j = read_bundle(vo.path);
            if (!vo.kind.empty() && vo.kind != kind_of(j)) throw Error(ErrorCode::ParseError, "bundle kind is " + kind_of(j) + ", expected " + vo.kind);
            return dispatch<Verify>(bundle_field(j), j, vo);
        }
        if (*integrals) return with_bundle<Integrals>(io);
        if (*dualize) return with_bundle<Dualize>(dz);
        if (*frob) return with_bundle<Frobenius>(fr);
        if (*two) return with_bundle<TwoSided>(ts);
        if (*d2cmd) return with_bundle<D2>(d2);
        if (*example) return dispatch<Example>(example_field(ex.name, ex.field), ex);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code(e.code());
    } catch (const Json::exception& e) {
        std::cerr << "ParseError: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
