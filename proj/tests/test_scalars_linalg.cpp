#include "doctest.h"

#include <random>

#include "algd/matrix.hpp"

using namespace algd;

namespace {

using Q = Rational;

Q q(long long a, long long b = 1) { return Q::from_int(a) / Q::from_int(b); }

// Cofactor expansion, independent of the elimination code.
template <class K>
K det_oracle(const Matrix<K>& m) {
    const std::size_t n = m.rows();
    const Field f = m.field();
    if (n == 0) return K::one(f);
    if (n == 1) return m(0, 0);
    K d = K::zero(f);
    for (std::size_t j = 0; j < n; ++j) {
        Matrix<K> minor(n - 1, n - 1, f);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        K term = m(0, j) * det_oracle(minor);
        d = j % 2 == 0 ? d + term : d - term;
    }
    return d;
}

template <class K>
Matrix<K> random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, const Field& f, int spread = 3) {
    std::uniform_int_distribution<int> dist(-spread, spread);
    Matrix<K> m(r, c, f);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = K::from_int(dist(rng), f);
    return m;
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
    CHECK(q(1, 3) + q(1, 6) == q(1, 2));
    CHECK(q(2, 4) == q(1, 2));
    CHECK(q(-3, 9).str() == "-1/3");
    CHECK(q(10, 5).str() == "2");
    CHECK((q(7, 3) * q(3, 7)).is_one());
    CHECK(q(5, 7).inv() == q(7, 5));
    CHECK_THROWS_AS(q(0).inv(), Error);
}

TEST_CASE("rational parse and print round trip") {
    for (const char* s : {"0", "1", "-1", "3/4", "-22/7", "123456789012345678901234567891/2"}) CHECK(Q::parse(s).str() == s);
    CHECK(Q::parse("6/8").str() == "3/4");
    try {
        Q::parse("1/0");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
    CHECK_THROWS_AS(Q::parse("abc"), Error);
    CHECK_THROWS_AS(Q::parse(""), Error);
}

TEST_CASE("prime field arithmetic against integer residues") {
    const Field f{7};
    for (int a = -10; a <= 10; ++a)
        for (int b = -10; b <= 10; ++b) {
            const auto x = ModP::from_int(a, f), y = ModP::from_int(b, f);
            const int sum = ((a + b) % 7 + 7) % 7, prod = ((a * b) % 7 + 7) % 7;
            CHECK((x + y).value() == static_cast<unsigned>(sum));
            CHECK((x * y).value() == static_cast<unsigned>(prod));
            if (!y.is_zero()) CHECK((x / y) * y == x);
        }
    CHECK(ModP::from_int(3, f).str() == "3 mod 7");
    CHECK(ModP::parse("3 mod 7", f) == ModP::from_int(3, f));
    CHECK(ModP::parse("1/2", f) == ModP::from_int(4, f));
    CHECK(ModP::parse("-1", f) == ModP::from_int(6, f));
    CHECK_THROWS_AS(ModP::parse("3 mod 5", f), Error);
    CHECK_THROWS_AS(ModP::parse("1/7", f), Error);
}

TEST_CASE("field names") {
    CHECK(parse_field("Q") == Field{0});
    CHECK(parse_field("GF(5)") == Field{5});
    CHECK(Field{11}.name() == "GF(11)");
    CHECK_THROWS_AS(parse_field("GF(6)"), Error);
    CHECK_THROWS_AS(parse_field("R"), Error);
}

TEST_CASE("rank agrees with determinant on random square matrices") {
    std::mt19937 rng(1234);
    const Field f{};
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 5;
        auto m = random_matrix<Q>(rng, n, n, f, trial % 3 == 0 ? 1 : 3);
        const bool full = !det_oracle(m).is_zero();
        CHECK((rank(m) == n) == full);
        if (full) {
            auto inv = invert(m);
            CHECK(inv * m == Matrix<Q>::identity(n, f));
            CHECK(m * inv == Matrix<Q>::identity(n, f));
        } else {
            CHECK_THROWS_AS(invert(m), Error);
        }
    }
}

TEST_CASE("kernel basis spans the null space") {
    std::mt19937 rng(99);
    for (const Field f : {Field{0}, Field{5}}) {
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t r = 1 + trial % 4, c = 2 + trial % 5;
            auto run = [&](auto tag) {
                using K = decltype(tag);
                auto m = random_matrix<K>(rng, r, c, f, 2);
                auto ker = kernel_basis(m);
                CHECK(ker.size() + rank(m) == c);
                for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
                if (!ker.empty()) CHECK(rank(Matrix<K>::from_columns(ker, c, f)) == ker.size());
            };
            if (f.p == 0)
                run(Q{});
            else
                run(ModP::zero(f));
        }
    }
}

TEST_CASE("rref is deterministic and reduced") {
    const Field f{};
    Matrix<Q> m = Matrix<Q>::from_rows({{q(0), q(2), q(4)}, {q(1), q(1), q(1)}, {q(2), q(4), q(6)}}, 3, f);
    auto e = rref(m);
    REQUIRE(e.pivots == std::vector<std::size_t>{0, 1});
    CHECK(e.reduced.row(0) == Vec<Q>{q(1), q(0), q(-1)});
    CHECK(e.reduced.row(1) == Vec<Q>{q(0), q(1), q(2)});
    auto e2 = rref(m);
    CHECK(e2.reduced == e.reduced);
}

TEST_CASE("solve_linear finds a solution or reports inconsistency") {
    const Field f{};
    Matrix<Q> m = Matrix<Q>::from_rows({{q(1), q(2)}, {q(2), q(4)}}, 2, f);
    auto x = solve_linear(m, Vec<Q>{q(3), q(6)});
    CHECK(m.apply(x) == Vec<Q>{q(3), q(6)});
    try {
        solve_linear(m, Vec<Q>{q(1), q(0)});
        FAIL("expected Inconsistent");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Inconsistent);
    }
}

TEST_CASE("span echelon membership") {
    const Field f{3};
    SpanEchelon<ModP> s(3, f);
    auto v = [&](int a, int b, int c) { return Vec<ModP>{ModP::from_int(a, f), ModP::from_int(b, f), ModP::from_int(c, f)}; };
    CHECK(s.add(v(1, 1, 0)));
    CHECK(s.add(v(0, 1, 1)));
    CHECK_FALSE(s.add(v(1, 2, 1)));
    CHECK(s.contains(v(1, 0, 2)));  // (1,1,0) - (0,1,1) = (1,0,-1)
    CHECK_FALSE(s.contains(v(0, 0, 1)));
    CHECK(s.rank() == 2);
}

TEST_CASE("matrices over GF(2) behave as a field of characteristic two") {
    const Field f{2};
    Matrix<ModP> m = Matrix<ModP>::from_rows({{ModP::one(f), ModP::one(f)}, {ModP::one(f), ModP::one(f)}}, 2, f);
    CHECK(rank(m) == 1);
    CHECK((m * m).is_zero());
    CHECK(ModP::one(f) + ModP::one(f) == ModP::zero(f));
}
