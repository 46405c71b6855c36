#pragma once

#include <array>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "algd/algebra.hpp"

namespace algd {

// Plain tensor index convention: e_i (x) e_j  <->  i * n2 + j.
template <class K>
Vec<K> tensor(const Vec<K>& a, const Vec<K>& b) {
    const Field f = a.empty() ? (b.empty() ? Field{} : b[0].field()) : a[0].field();
    Vec<K> out = zeros<K>(a.size() * b.size(), f);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
    }
    return out;
}

// (A (x) B) x, for x in the plain tensor space of A.cols() x B.cols().
template <class K>
Vec<K> tensor_apply(const Matrix<K>& A, const Matrix<K>& B, const Vec<K>& x) {
    const std::size_t n1 = A.cols(), n2 = B.cols(), m1 = A.rows(), m2 = B.rows();
    if (x.size() != n1 * n2) throw Error(ErrorCode::DimensionMismatch, "tensor_apply");
    Vec<K> out = zeros<K>(m1 * m2, A.field());
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) {
            const K& c = x[i * n2 + j];
            if (c.is_zero()) continue;
            for (std::size_t p = 0; p < m1; ++p) {
                if (A(p, i).is_zero()) continue;
                K cp = c * A(p, i);
                for (std::size_t q = 0; q < m2; ++q)
                    if (!B(q, j).is_zero()) out[p * m2 + q] += cp * B(q, j);
            }
        }
    return out;
}

// Leg-wise product (a (x) b)(c (x) d) = ac (x) bd in the plain tensor square.
template <class K>
Vec<K> tensor_mul(const Algebra<K>& A, const Algebra<K>& B, const Vec<K>& x, const Vec<K>& y) {
    const std::size_t n1 = A.dim(), n2 = B.dim();
    Vec<K> out = zeros<K>(n1 * n2, A.field());
    for (std::size_t i = 0; i < n1 * n2; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n1 * n2; ++j) {
            if (y[j].is_zero()) continue;
            K c = x[i] * y[j];
            Vec<K> l = A.mul(A.basis(i / n2), A.basis(j / n2));
            Vec<K> r = B.mul(B.basis(i % n2), B.basis(j % n2));
            for (std::size_t p = 0; p < n1; ++p) {
                if (l[p].is_zero()) continue;
                K cl = c * l[p];
                for (std::size_t q = 0; q < n2; ++q)
                    if (!r[q].is_zero()) out[p * n2 + q] += cl * r[q];
            }
        }
    }
    return out;
}

// Swap the legs of a plain tensor: a (x) b -> b (x) a.
template <class K>
Vec<K> tensor_flip(const Vec<K>& x, std::size_t n1, std::size_t n2) {
    Vec<K> out(x.size(), x.empty() ? K() : K::zero(x[0].field()));
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) out[j * n1 + i] = x[i * n2 + j];
    return out;
}

// Generators of a unital algebra: greedy over the basis, keeping e_i whenever it is
// not in the subalgebra generated by the earlier choices.
template <class K>
std::vector<Vec<K>> algebra_generators(const Algebra<K>& L) {
    std::vector<Vec<K>> gens;
    auto closure = [&](const std::vector<Vec<K>>& g) {
        SpanEchelon<K> span(L.dim(), L.field());
        std::vector<Vec<K>> elems{L.one()};
        span.add(L.one());
        for (std::size_t at = 0; at < elems.size(); ++at)
            for (const auto& x : g) {
                Vec<K> y = L.mul(elems[at], x);
                if (span.add(y)) elems.push_back(y);
            }
        return span;
    };
    SpanEchelon<K> cur = closure(gens);
    for (std::size_t i = 0; i < L.dim() && cur.rank() < L.dim(); ++i) {
        if (cur.contains(L.basis(i))) continue;
        gens.push_back(L.basis(i));
        cur = closure(gens);
    }
    return gens;
}

// How a base algebra acts on the two factors of a tensor product: the right action
// on the left factor and the left action on the right factor, one matrix per basis
// element of the base.
template <class K>
struct BaseAction {
    AlgPtr<K> base;
    std::vector<Matrix<K>> right_on_left;
    std::vector<Matrix<K>> left_on_right;

    Matrix<K> on_left(const Vec<K>& l) const { return combine(right_on_left, l); }
    Matrix<K> on_right(const Vec<K>& l) const { return combine(left_on_right, l); }

    // The relations only need to be imposed for algebra generators when both leg
    // actions really are module actions; otherwise fall back to the whole basis.
    std::vector<std::pair<Matrix<K>, Matrix<K>>> relation_operators() const {
        std::vector<std::pair<Matrix<K>, Matrix<K>>> ops;
        const auto& L = *base;
        bool module = true;
        for (std::size_t i = 0; i < L.dim() && module; ++i)
            for (std::size_t j = 0; j < L.dim() && module; ++j) {
                Vec<K> ij = L.mul(L.basis(i), L.basis(j));
                // right action: a.(l l') = (a.l).l'  i.e. M(ll') = M(l') M(l)
                if (on_left(ij) != right_on_left[j] * right_on_left[i]) module = false;
                // left action: (l l').b = l.(l'.b)  i.e. N(ll') = N(l) N(l')
                if (on_right(ij) != left_on_right[i] * left_on_right[j]) module = false;
            }
        if (module && on_left(L.one()) == Matrix<K>::identity(right_on_left[0].rows(), L.field()) &&
            on_right(L.one()) == Matrix<K>::identity(left_on_right[0].rows(), L.field())) {
            for (const auto& g : algebra_generators(L)) ops.emplace_back(on_left(g), on_right(g));
        } else {
            for (std::size_t k = 0; k < L.dim(); ++k) ops.emplace_back(right_on_left[k], left_on_right[k]);
        }
        return ops;
    }

private:
    Matrix<K> combine(const std::vector<Matrix<K>>& ms, const Vec<K>& l) const {
        Matrix<K> m(ms[0].rows(), ms[0].cols(), base->field());
        for (std::size_t k = 0; k < ms.size(); ++k)
            if (!l[k].is_zero()) m = m + l[k] * ms[k];
        return m;
    }
};

// (A (x) B) / J with J spanned by (a.l) (x) b - a (x) (l.b).
template <class K>
class TensorQuotient {
public:
    TensorQuotient() = default;

    TensorQuotient(std::size_t n1, std::size_t n2, const BaseAction<K>& act) : n1_(n1), n2_(n2), J_(n1 * n2, act.base->field()) {
        if (act.base->dim() > 1) {
            for (const auto& [R, L] : act.relation_operators())
                for (std::size_t a = 0; a < n1; ++a)
                    for (std::size_t b = 0; b < n2; ++b) {
                        Vec<K> g = tensor(R.col(a), unit_vector<K>(n2, b, field())) - tensor(unit_vector<K>(n1, a, field()), L.col(b));
                        J_.add(g);
                    }
        }
        finish();
    }

    // Quotient by an explicitly given subspace.
    TensorQuotient(std::size_t n1, std::size_t n2, SpanEchelon<K> J) : n1_(n1), n2_(n2), J_(std::move(J)) { finish(); }

    std::size_t left_dim() const { return n1_; }
    std::size_t right_dim() const { return n2_; }
    std::size_t ambient_dim() const { return n1_ * n2_; }
    std::size_t dim() const { return free_.size(); }
    const Field& field() const { return J_.field(); }
    const SpanEchelon<K>& relations() const { return J_; }
    const std::vector<std::size_t>& pivot_representatives() const { return free_; }

    Vec<K> project(const Vec<K>& x) const {
        Vec<K> r = J_.reduce(x);
        Vec<K> q;
        q.reserve(free_.size());
        for (auto j : free_) q.push_back(r[j]);
        return q;
    }
    Vec<K> section(const Vec<K>& q) const {
        if (q.size() != free_.size()) throw Error(ErrorCode::DimensionMismatch, "section");
        Vec<K> x = zeros<K>(ambient_dim(), field());
        for (std::size_t i = 0; i < free_.size(); ++i) x[free_[i]] = q[i];
        return x;
    }
    bool in_relations(const Vec<K>& x) const { return J_.contains(x); }
    bool same_class(const Vec<K>& x, const Vec<K>& y) const { return J_.contains(x - y); }

    Matrix<K> projection_matrix() const {
        Matrix<K> P(dim(), ambient_dim(), field());
        for (std::size_t j = 0; j < ambient_dim(); ++j) P.set_col(j, project(unit_vector<K>(ambient_dim(), j, field())));
        return P;
    }
    Matrix<K> section_matrix() const {
        Matrix<K> S(ambient_dim(), dim(), field());
        for (std::size_t i = 0; i < dim(); ++i) S(free_[i], i) = K::one(field());
        return S;
    }

    // Pretty form of a class through its section lift.
    std::string format(const Vec<K>& q, const Algebra<K>& A, const Algebra<K>& B) const { return format_tensor(section(q), A, B); }

    static std::string format_tensor(const Vec<K>& x, const Algebra<K>& A, const Algebra<K>& B) {
        std::string s;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i].is_zero()) continue;
            std::string coef = x[i].str();
            bool neg = coef[0] == '-';
            if (neg) coef = coef.substr(1);
            s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            if (!(x[i].is_one() || (neg && (-x[i]).is_one()))) s += coef + "*";
            s += A.names()[i / B.dim()] + "(x)" + B.names()[i % B.dim()];
        }
        return s.empty() ? "0" : s;
    }

private:
    void finish() {
        free_ = J_.free_columns();
    }

    std::size_t n1_ = 0, n2_ = 0;
    SpanEchelon<K> J_;
    std::vector<std::size_t> free_;
};

template <class K>
using QuotPtr = std::shared_ptr<const TensorQuotient<K>>;

template <class K>
Vec<K> multiply_classes(const TensorQuotient<K>& Q, const Algebra<K>& A, const Algebra<K>& B, const Vec<K>& x, const Vec<K>& y) {
    return Q.project(tensor_mul(A, B, Q.section(x), Q.section(y)));
}

// Apply M1 (x) M2 to a class of src and land in dst.
template <class K>
Vec<K> apply_legs(const TensorQuotient<K>& src, const Matrix<K>& M1, const Matrix<K>& M2, const TensorQuotient<K>& dst, const Vec<K>& cls) {
    return dst.project(tensor_apply(M1, M2, src.section(cls)));
}

// Takeuchi condition: x(1) t(l) (x) x(2) = x(1) (x) x(2) s(l) for every base basis l.
template <class K>
bool takeuchi_membership(const TensorQuotient<K>& Q, const Vec<K>& x, const Morphism<K>& s, const Morphism<K>& t) {
    const auto& A = *s.tgt;
    const auto& L = *s.src;
    Matrix<K> I = Matrix<K>::identity(A.dim(), A.field());
    Vec<K> lift = Q.section(x);
    for (std::size_t k = 0; k < L.dim(); ++k) {
        Matrix<K> rt = A.right_mult(t.map.col(k));
        Matrix<K> rs = A.right_mult(s.map.col(k));
        if (!Q.in_relations(tensor_apply(rt, I, lift) - tensor_apply(I, rs, lift))) return false;
    }
    return true;
}

// A relation family between two legs of a tensor power: the relations are
// (M on leg i) x - (N on leg j) x for every pair (M, N) in ops and every basis tensor x.
template <class K>
struct LegFamily {
    int i = 0, j = 1;
    std::vector<std::pair<Matrix<K>, Matrix<K>>> ops;
};

template <class K>
LegFamily<K> leg_family(int i, int j, const BaseAction<K>& act) {
    LegFamily<K> fam{i, j, {}};
    if (act.base->dim() > 1) fam.ops = act.relation_operators();
    return fam;
}

// (id (x) M) x for x in A (x) A and a square matrix M.
template <class K>
Vec<K> lift_second_leg_linear(const Matrix<K>& M, const Vec<K>& x, std::size_t n) {
    Vec<K> out = zeros<K>(n * n, M.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const K& c = x[i * n + j];
            if (c.is_zero()) continue;
            for (std::size_t p = 0; p < n; ++p)
                if (!M(p, j).is_zero()) out[i * n + p] += c * M(p, j);
        }
    return out;
}

// Three-fold quotient (A (x) A (x) A) / (J_a + J_b) for two relation families on
// different leg pairs. The legs are permuted so the shared leg sits in the middle;
// the quotient is then built as a quotient of Q01 (x) A, so the full cube is never
// reduced directly.
template <class K>
class TripleQuotient {
public:
    TripleQuotient(std::size_t n, LegFamily<K> fa, LegFamily<K> fb, const Field& f) : n_(n) {
        int shared = -1;
        for (int x : {fa.i, fa.j})
            if (x == fb.i || x == fb.j) shared = x;
        if (shared < 0 || (fa.i == fb.i && fa.j == fb.j) || (fa.i == fb.j && fa.j == fb.i))
            throw Error(ErrorCode::DimensionMismatch, "triple quotient needs families on distinct leg pairs");
        int p = fa.i == shared ? fa.j : fa.i;
        int q = fb.i == shared ? fb.j : fb.i;
        order_ = {p, shared, q};
        // operators on new legs 0,1 (family a) and 1,2 (family b)
        std::vector<std::pair<Matrix<K>, Matrix<K>>> opsA, opsB;
        for (auto& [M, N] : fa.ops) opsA.push_back(fa.i == p ? std::make_pair(M, N) : std::make_pair(N, M));
        for (auto& [M, N] : fb.ops) opsB.push_back(fb.i == shared ? std::make_pair(M, N) : std::make_pair(N, M));

        SpanEchelon<K> J01(n * n, f);
        for (const auto& [M, N] : opsA)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    J01.add(tensor(M.col(a), unit_vector<K>(n, b, f)) - tensor(unit_vector<K>(n, a, f), N.col(b)));
        q01_ = std::make_shared<TensorQuotient<K>>(n, n, std::move(J01));
        const std::size_t m = q01_->dim();
        P_.resize(n * n);
        for (std::size_t i = 0; i < n * n; ++i) P_[i] = q01_->project(unit_vector<K>(n * n, i, f));

        // When every middle-leg operator of family b preserves J01, the relations only
        // need to be generated from the pivot representatives of Q01.
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        bool preserved = true;
        for (const auto& [R, L] : opsB) {
            for (const auto& g : J01.basis()) {
                if (!J01.contains(lift_second_leg_linear(R, g, n))) {
                    preserved = false;
                    break;
                }
            }
            if (!preserved) break;
        }
        if (preserved) {
            for (auto k : q01_->pivot_representatives()) pairs.emplace_back(k / n, k % n);
        } else {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) pairs.emplace_back(a, b);
        }

        J_ = SpanEchelon<K>(m * n, f);
        for (const auto& [R, L] : opsB)
            for (const auto& [a, b] : pairs)
                for (std::size_t c = 0; c < n; ++c) {
                    Vec<K> g = zeros<K>(m * n, f);
                    for (std::size_t y = 0; y < n; ++y) {
                        const K& r = R(y, b);
                        if (r.is_zero()) continue;
                        const Vec<K>& pv = P_[a * n + y];
                        for (std::size_t k = 0; k < m; ++k)
                            if (!pv[k].is_zero()) g[k * n + c] += r * pv[k];
                    }
                    const Vec<K>& pv = P_[a * n + b];
                    for (std::size_t z = 0; z < n; ++z) {
                        const K& l = L(z, c);
                        if (l.is_zero()) continue;
                        for (std::size_t k = 0; k < m; ++k)
                            if (!pv[k].is_zero()) g[k * n + z] -= l * pv[k];
                    }
                    if (!algd::is_zero(g)) J_.add(g);
                }
        free_ = J_.free_columns();
    }

    // Adjacent families: (legs 0,1) and (legs 1,2).
    TripleQuotient(std::size_t n, const BaseAction<K>& fam01, const BaseAction<K>& fam12)
        : TripleQuotient(n, leg_family(0, 1, fam01), leg_family(1, 2, fam12), fam01.base->field()) {}

    std::size_t dim() const { return free_.size(); }
    std::size_t ambient_dim() const { return n_ * n_ * n_; }

    // x in the plain triple tensor space, index (i*n + j)*n + k
    Vec<K> project(const Vec<K>& x) const {
        const std::size_t n = n_, m = q01_->dim();
        const Field f = q01_->field();
        Vec<K> y = zeros<K>(m * n, f);
        std::size_t idx[3];
        for (idx[0] = 0; idx[0] < n; ++idx[0])
            for (idx[1] = 0; idx[1] < n; ++idx[1])
                for (idx[2] = 0; idx[2] < n; ++idx[2]) {
                    const K& c = x[(idx[0] * n + idx[1]) * n + idx[2]];
                    if (c.is_zero()) continue;
                    const std::size_t u = idx[order_[0]], v = idx[order_[1]], w = idx[order_[2]];
                    const Vec<K>& pv = P_[u * n + v];
                    for (std::size_t k = 0; k < m; ++k)
                        if (!pv[k].is_zero()) y[k * n + w] += c * pv[k];
                }
        Vec<K> r = J_.reduce(y);
        Vec<K> out;
        out.reserve(free_.size());
        for (auto j : free_) out.push_back(r[j]);
        return out;
    }

    bool same_class(const Vec<K>& x, const Vec<K>& y) const { return algd::is_zero(project(x - y)); }

private:
    std::size_t n_;
    std::array<int, 3> order_{0, 1, 2};
    std::shared_ptr<TensorQuotient<K>> q01_;
    std::vector<Vec<K>> P_;
    SpanEchelon<K> J_;
    std::vector<std::size_t> free_;
};

// (M (x) id)(x) where M: A -> A (x) A is given by its lift matrix; x in A (x) A.
// Produces a vector in the plain triple space.
template <class K>
Vec<K> lift_first_leg(const Matrix<K>& M, const Vec<K>& x, std::size_t n) {
    const std::size_t nn = M.rows();
    Vec<K> out = zeros<K>(nn * n, M.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const K& c = x[i * n + j];
            if (c.is_zero()) continue;
            for (std::size_t p = 0; p < nn; ++p)
                if (!M(p, i).is_zero()) out[p * n + j] += c * M(p, i);
        }
    return out;
}

template <class K>
Vec<K> lift_second_leg(const Matrix<K>& M, const Vec<K>& x, std::size_t n) {
    const std::size_t nn = M.rows();
    Vec<K> out = zeros<K>(n * nn, M.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const K& c = x[i * n + j];
            if (c.is_zero()) continue;
            for (std::size_t p = 0; p < nn; ++p)
                if (!M(p, j).is_zero()) out[i * nn + p] += c * M(p, j);
        }
    return out;
}

// Multiply one leg of x in A (x) A by b, from the left or from the right.
enum class MulSide { Left, Right };

template <class K>
Vec<K> mul_leg(const Algebra<K>& A, const Vec<K>& x, int leg, const Vec<K>& b, MulSide side) {
    const std::size_t n = A.dim();
    std::vector<Vec<K>> prod(n);
    Vec<K> out = zeros<K>(n * n, A.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const K& c = x[i * n + j];
            if (c.is_zero()) continue;
            const std::size_t e = leg == 0 ? i : j;
            if (prod[e].empty()) prod[e] = side == MulSide::Left ? A.mul(b, A.basis(e)) : A.mul(A.basis(e), b);
            for (std::size_t k = 0; k < n; ++k) {
                if (prod[e][k].is_zero()) continue;
                if (leg == 0)
                    out[k * n + j] += c * prod[e][k];
                else
                    out[i * n + k] += c * prod[e][k];
            }
        }
    return out;
}

// Leg-wise product where each leg may multiply in the opposite order:
// (x1 (x) x2)(y1 (x) y2) -> (x1 y1 or y1 x1) (x) (x2 y2 or y2 x2).
template <class K>
Vec<K> tensor_mul_ordered(const Algebra<K>& A, const Vec<K>& x, const Vec<K>& y, bool flip0, bool flip1) {
    const std::size_t n = A.dim();
    Vec<K> out = zeros<K>(n * n, A.field());
    for (std::size_t i = 0; i < n * n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n * n; ++j) {
            if (y[j].is_zero()) continue;
            K c = x[i] * y[j];
            const std::size_t a0 = i / n, a1 = i % n, b0 = j / n, b1 = j % n;
            Vec<K> l = flip0 ? A.mul(A.basis(b0), A.basis(a0)) : A.mul(A.basis(a0), A.basis(b0));
            Vec<K> r = flip1 ? A.mul(A.basis(b1), A.basis(a1)) : A.mul(A.basis(a1), A.basis(b1));
            for (std::size_t p = 0; p < n; ++p) {
                if (l[p].is_zero()) continue;
                K cl = c * l[p];
                for (std::size_t q = 0; q < n; ++q)
                    if (!r[q].is_zero()) out[p * n + q] += cl * r[q];
            }
        }
    }
    return out;
}

}  // namespace algd
