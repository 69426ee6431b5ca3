#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "genus1/arith.hpp"

namespace genus1 {

// Rank-2 symplectic lattice with basis (mu, lambda) and pairing
//   v . w = p_v q_w - q_v p_w,   so mu . lambda = +1.
// Matrices act on column vectors (p, q). A factorization stores its factors
// in application order: factors[0] acts first.

template <class I>
struct Lattice2VectorT {
    I p{};
    I q{};

    bool operator==(const Lattice2VectorT&) const = default;
};

using Lattice2Vector = Lattice2VectorT<i64>;
using BigLattice2Vector = Lattice2VectorT<Big>;

template <class I>
Lattice2VectorT<I> mu_vec() {
    return {I(1), I(0)};
}
template <class I>
Lattice2VectorT<I> lambda_vec() {
    return {I(0), I(1)};
}

inline constexpr Lattice2Vector mu{1, 0};
inline constexpr Lattice2Vector lambda{0, 1};

template <class I>
bool is_coprime_curve(const Lattice2VectorT<I>& v) {
    if (v.p == I(0) && v.q == I(0)) return false;
    return gcd_v(abs_v(v.p), abs_v(v.q)) == I(1);
}

template <class I>
Lattice2VectorT<I> negate(const Lattice2VectorT<I>& v) {
    return {neg_ck(v.p), neg_ck(v.q)};
}

template <class I>
I intersection(const Lattice2VectorT<I>& v, const Lattice2VectorT<I>& w) {
    return sub_ck(mul_ck(v.p, w.q), mul_ck(v.q, w.p));
}

// tau_v^n(w) = w + n (v.w) v
template <class I>
Lattice2VectorT<I> transvection_apply(const Lattice2VectorT<I>& v, const I& n,
                                      const Lattice2VectorT<I>& w) {
    I c = mul_ck(n, intersection(v, w));
    return {add_ck(w.p, mul_ck(c, v.p)), add_ck(w.q, mul_ck(c, v.q))};
}

template <class I>
struct SL2MatrixT {
    I m00{1}, m01{0}, m10{0}, m11{1};

    bool operator==(const SL2MatrixT&) const = default;

    I det() const { return sub_ck(mul_ck(m00, m11), mul_ck(m01, m10)); }
    I trace() const { return add_ck(m00, m11); }

    Lattice2VectorT<I> apply(const Lattice2VectorT<I>& v) const {
        return {add_ck(mul_ck(m00, v.p), mul_ck(m01, v.q)),
                add_ck(mul_ck(m10, v.p), mul_ck(m11, v.q))};
    }

    SL2MatrixT operator*(const SL2MatrixT& o) const {
        return {add_ck(mul_ck(m00, o.m00), mul_ck(m01, o.m10)),
                add_ck(mul_ck(m00, o.m01), mul_ck(m01, o.m11)),
                add_ck(mul_ck(m10, o.m00), mul_ck(m11, o.m10)),
                add_ck(mul_ck(m10, o.m01), mul_ck(m11, o.m11))};
    }

    SL2MatrixT negated() const { return {neg_ck(m00), neg_ck(m01), neg_ck(m10), neg_ck(m11)}; }
};

using SL2Matrix = SL2MatrixT<i64>;
using BigSL2Matrix = SL2MatrixT<Big>;

// Matrix of tau_v^n. Columns are the images of mu and lambda.
template <class I>
SL2MatrixT<I> twist_matrix(const Lattice2VectorT<I>& v, const I& n) {
    I npq = mul_ck(n, mul_ck(v.p, v.q));
    return {sub_ck(I(1), npq), mul_ck(n, mul_ck(v.p, v.p)),
            neg_ck(mul_ck(n, mul_ck(v.q, v.q))), add_ck(I(1), npq)};
}

template <class I>
struct TwistFactorT {
    Lattice2VectorT<I> curve;
    int exponent{1};  // +1 or -1

    bool operator==(const TwistFactorT&) const = default;
};

using TwistFactor = TwistFactorT<i64>;

template <class I>
struct TwistFactorizationT {
    std::vector<TwistFactorT<I>> factors;  // factors[0] applied first

    bool operator==(const TwistFactorizationT&) const = default;
    std::size_t size() const { return factors.size(); }
};

using TwistFactorization = TwistFactorizationT<i64>;
using BigTwistFactorization = TwistFactorizationT<Big>;

template <class I>
TwistFactorizationT<Big> to_big(const TwistFactorizationT<I>& f) {
    TwistFactorizationT<Big> out;
    out.factors.reserve(f.factors.size());
    for (const auto& t : f.factors)
        out.factors.push_back({{to_big(t.curve.p), to_big(t.curve.q)}, t.exponent});
    return out;
}

// Ordered product of the twists, first factor applied first.
template <class I>
SL2MatrixT<I> monodromy(const TwistFactorizationT<I>& f) {
    SL2MatrixT<I> m{};
    for (const auto& t : f.factors) {
        if (!is_coprime_curve(t.curve)) throw invalid_curve_error("twist curve must be coprime");
        m = twist_matrix(t.curve, I(t.exponent)) * m;
    }
    return m;
}

// M = s * tau_lambda^k  iff  m01 = 0 and m00 = m11 = s in {+1, -1}; then
// k = -s * m10.
template <class I>
std::optional<std::pair<int, I>> recognize_lambda_power(const SL2MatrixT<I>& m) {
    if (m.m01 != I(0)) return std::nullopt;
    if (m.m00 != m.m11) return std::nullopt;
    if (m.m00 == I(1)) return std::make_pair(1, neg_ck(m.m10));
    if (m.m00 == I(-1)) return std::make_pair(-1, m.m10);
    return std::nullopt;
}

// (M lambda) . lambda = 0, i.e. M fixes the lambda axis up to sign.
template <class I>
bool closes_to_s3(const SL2MatrixT<I>& m) {
    Lattice2VectorT<I> image = m.apply(lambda_vec<I>());
    return intersection(image, lambda_vec<I>()) == I(0);
}

// Both sides of the transvection trace identity for Phi = tau_u^l tau_v^n tau_w^m:
//   nm(v.w)^2 + lm(u.w)^2 + ln(u.v)^2
//     = lmn (w.u)(w.v)(v.u) + 2 - tr(Phi).
template <class I>
std::pair<I, I> trace_formula_sides(const Lattice2VectorT<I>& u, const Lattice2VectorT<I>& v,
                                    const Lattice2VectorT<I>& w, const I& l, const I& n,
                                    const I& m) {
    I vw = intersection(v, w), uw = intersection(u, w), uv = intersection(u, v);
    I lhs = add_ck(add_ck(mul_ck(mul_ck(n, m), mul_ck(vw, vw)), mul_ck(mul_ck(l, m), mul_ck(uw, uw))),
                   mul_ck(mul_ck(l, n), mul_ck(uv, uv)));
    SL2MatrixT<I> phi = twist_matrix(u, l) * twist_matrix(v, n) * twist_matrix(w, m);
    I wu = neg_ck(uw), wv = neg_ck(vw), vu = neg_ck(uv);
    I rhs = add_ck(mul_ck(mul_ck(mul_ck(l, m), n), mul_ck(mul_ck(wu, wv), vu)),
                   sub_ck(I(2), phi.trace()));
    return {lhs, rhs};
}

}  // namespace genus1
