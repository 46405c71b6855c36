#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "algd/error.hpp"

namespace algd {

// p == 0 means the rationals.
struct Field {
    std::uint32_t p = 0;

    bool is_rational() const { return p == 0; }
    std::string name() const { return p == 0 ? "Q" : "GF(" + std::to_string(p) + ")"; }
    friend bool operator==(const Field& a, const Field& b) { return a.p == b.p; }
    friend bool operator!=(const Field& a, const Field& b) { return a.p != b.p; }
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline Field parse_field(const std::string& s) {
    if (s == "Q") return Field{0};
    if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')') {
        std::uint64_t p = 0;
        try {
            p = std::stoull(s.substr(3, s.size() - 4));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad field: " + s);
        }
        if (!is_prime(p) || p > 0xFFFFFFFFull) throw Error(ErrorCode::ParseError, "field modulus is not a prime: " + s);
        return Field{static_cast<std::uint32_t>(p)};
    }
    throw Error(ErrorCode::ParseError, "bad field: " + s);
}

class Rational {
public:
    using value_type = mpq_class;

    Rational() = default;
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    static Rational from_int(long long n, const Field& = {}) {
        Rational r;
        r.v_ = mpq_class(static_cast<long>(n));
        return r;
    }
    static Rational zero(const Field& f = {}) { return from_int(0, f); }
    static Rational one(const Field& f = {}) { return from_int(1, f); }

    static Rational parse(const std::string& s, const Field& = {}) {
        mpq_class q;
        if (s.empty() || q.set_str(s, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational: '" + s + "'");
        if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + s + "'");
        q.canonicalize();
        return Rational(q);
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    Field field() const { return Field{0}; }
    const mpq_class& value() const { return v_; }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational inv() const {
        if (is_zero()) throw Error(ErrorCode::Singular, "division by zero");
        return Rational(mpq_class(1) / v_);
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error(ErrorCode::Singular, "division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

private:
    mpq_class v_;
};

class ModP {
public:
    ModP() = default;
    ModP(std::uint64_t v, std::uint32_t p) : v_(static_cast<std::uint32_t>(v % p)), p_(p) {}

    static ModP from_int(long long n, const Field& f) {
        if (f.p == 0) throw Error(ErrorCode::AlgebraMismatch, "ModP needs a prime modulus");
        long long m = n % static_cast<long long>(f.p);
        if (m < 0) m += f.p;
        return ModP(static_cast<std::uint64_t>(m), f.p);
    }
    static ModP zero(const Field& f) { return from_int(0, f); }
    static ModP one(const Field& f) { return from_int(1, f); }

    // Accepts "n mod p" (p must match) or a plain integer / fraction "a/b".
    static ModP parse(const std::string& s, const Field& f) {
        auto pos = s.find(" mod ");
        try {
            if (pos != std::string::npos) {
                std::uint64_t p = std::stoull(s.substr(pos + 5));
                if (p != f.p) throw Error(ErrorCode::ParseError, "modulus mismatch in '" + s + "'");
                return reduce(mpz_class(s.substr(0, pos)), f);
            }
            auto slash = s.find('/');
            if (slash != std::string::npos) {
                ModP num = reduce(mpz_class(s.substr(0, slash)), f);
                ModP den = reduce(mpz_class(s.substr(slash + 1)), f);
                if (den.is_zero()) throw Error(ErrorCode::ParseError, "denominator vanishes mod p: '" + s + "'");
                return num / den;
            }
            return reduce(mpz_class(s), f);
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad prime-field scalar: '" + s + "'");
        }
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    Field field() const { return Field{p_}; }
    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    std::string str() const { return std::to_string(v_) + " mod " + std::to_string(p_); }

    ModP inv() const {
        if (v_ == 0) throw Error(ErrorCode::Singular, "division by zero");
        // Fermat: v^(p-2)
        std::uint64_t r = 1, b = v_, e = p_ - 2;
        while (e) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return ModP(r, p_);
    }

    ModP& operator+=(const ModP& o) { v_ = static_cast<std::uint32_t>((std::uint64_t(v_) + o.v_) % p_); return *this; }
    ModP& operator-=(const ModP& o) { v_ = static_cast<std::uint32_t>((std::uint64_t(v_) + p_ - o.v_) % p_); return *this; }
    ModP& operator*=(const ModP& o) { v_ = static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % p_); return *this; }
    ModP& operator/=(const ModP& o) { return *this *= o.inv(); }
    friend ModP operator+(ModP a, const ModP& b) { return a += b; }
    friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
    friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
    friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
    ModP operator-() const { return ModP((p_ - v_) % p_, p_); }
    friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_; }
    friend bool operator!=(const ModP& a, const ModP& b) { return a.v_ != b.v_; }

private:
    static ModP reduce(const mpz_class& z, const Field& f) {
        mpz_class m = z % f.p;
        if (m < 0) m += f.p;
        return ModP(m.get_ui(), f.p);
    }

    std::uint32_t v_ = 0;
    std::uint32_t p_ = 2;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
inline std::ostream& operator<<(std::ostream& os, const ModP& r) { return os << r.str(); }

template <class K>
struct is_rational_scalar : std::false_type {};
template <>
struct is_rational_scalar<Rational> : std::true_type {};

}  // namespace algd
