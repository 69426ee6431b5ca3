#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "genus1/diophantine.hpp"
#include "genus1/fibolucas.hpp"
#include "genus1/symplectic.hpp"

namespace genus1 {

// Recovery of curves p_i mu + q_i lambda from solution triples: the exact
// linear systems for the q_i, their residue classes, and bounded search for
// realizing curve triples.

template <class I>
struct CurveTripleT {
    std::array<Lattice2VectorT<I>, 3> gamma;
    SignTriple delta;
};

using CurveTriple = CurveTripleT<i64>;
using BigCurveTriple = CurveTripleT<Big>;

// (x1, x2, x3) = (g2.g3, g1.g3, g1.g2)
template <class I>
std::array<I, 3> x_of_curves(const CurveTripleT<I>& t) {
    for (const auto& g : t.gamma)
        if (!is_coprime_curve(g)) throw invalid_curve_error("curve coordinates must be coprime");
    return {intersection(t.gamma[1], t.gamma[2]), intersection(t.gamma[0], t.gamma[2]),
            intersection(t.gamma[0], t.gamma[1])};
}

// fr(gamma) = p q - delta
template <class I>
I framing(const Lattice2VectorT<I>& g, int delta) {
    if (!is_coprime_curve(g)) throw invalid_curve_error("framing: curve must be coprime");
    return sub_ck(mul_ck(g.p, g.q), I(delta));
}

struct ResidueClass {
    Big value{0};
    Big modulus{1};  // 0 = exact integer constraint, 1 = no constraint

    bool operator==(const ResidueClass&) const = default;
};

inline ResidueClass make_residue(const Big& v, const Big& m) {
    Big mm = abs_v(m);
    if (mm == 0) return {v, Big(0)};
    return {mod_norm(v, mm), mm};
}

struct QSolution {
    std::array<ResidueClass, 3> residues;
    std::array<Big, 3> witness{};
    int sign_choice{1};
};

// p-triple (y1, 3 y1 y3 - y2, y3) attached to an ordered Markov triple.
inline std::array<i64, 3> solve_p_f1(const std::array<i64, 3>& y) {
    if (!is_markov(y[0], y[1], y[2]))
        throw std::invalid_argument("solve_p_f1: input is not a Markov triple");
    return {y[0], sub_ck(mul_ck(3, mul_ck(y[0], y[2])), y[1]), y[2]};
}

// Exact solution of
//   y1 q2 - yh2 q1 = -s 3 y3,  y1 q3 - y3 q1 = -s 3 y2,  yh2 q3 - y3 q2 = -s 3 y1
// with s the public sign choice, so that q1 = s 3 y3 / yh2 (mod y1),
// q2 = s 3 y1 / y3 (mod yh2), q3 = -s 3 y1 / yh2 (mod y3).
inline QSolution solve_q_f1(i64 y1, i64 yh2, i64 y3, int sign) {
    i64 y2 = sub_ck(mul_ck(3, mul_ck(y1, y3)), yh2);
    if (!is_markov(y1, yh2, y3) || !is_markov(y1, y2, y3))
        throw inconsistent_system_error("solve_q_f1: (y1, yh2, y3) does not come from a Markov triple");
    if (gcd_v(y1, yh2) != 1 || gcd_v(y1, y3) != 1 || gcd_v(yh2, y3) != 1)
        throw inconsistent_system_error("solve_q_f1: moduli are not pairwise coprime");
    Big s(-sign);
    Big Y1 = to_big(y1), Yh2 = to_big(yh2), Y3 = to_big(y3), Y2 = to_big(y2);
    Big q1 = mod_div(Big(-s * 3 * Y3), Yh2, Y1);
    Big n2 = s * 3 * Y3 + Yh2 * q1;
    Big n3 = s * 3 * Y2 + Y3 * q1;
    if (n2 % Y1 != 0 || n3 % Y1 != 0)
        throw inconsistent_system_error("solve_q_f1: system has no integer solution");
    Big q2 = n2 / Y1, q3 = n3 / Y1;
    if (Yh2 * q3 - Y3 * q2 != s * 3 * Y1)
        throw inconsistent_system_error("solve_q_f1: third equation failed");
    QSolution out;
    out.sign_choice = sign;
    out.witness = {q1, q2, q3};
    out.residues = {make_residue(q1, Y1), make_residue(q2, Yh2), make_residue(q3, Y3)};
    return out;
}

// Exact solution of
//   x1 q2 + xh2 q1 = s x3,  x1 q3 + x3 q1 = s x2,  x3 q2 - xh2 q3 = s x1
// for the triple (x1, x2, x3) given in the normalization
// x1^2 + x1 x2 x3 = x2^2 + x3^2, where xh2 = x1 x3 - x2 and s = -sign.
inline QSolution solve_q_f2(i64 t1, i64 t2, i64 t3, int sign) {
    if (t1 == 0) throw std::invalid_argument("solve_q_f2: x1 must be nonzero");
    {
        i64 lhs = add_ck(mul_ck(t1, t1), mul_ck(t1, mul_ck(t2, t3)));
        i64 rhs = add_ck(mul_ck(t2, t2), mul_ck(t3, t3));
        if (lhs != rhs)
            throw std::invalid_argument("solve_q_f2: triple fails x1^2 + x1 x2 x3 = x2^2 + x3^2");
    }
    // internally work with the solution (x1, x2, -x3) of the signed equation
    i64 x1 = t1, x2 = t2, x3 = neg_ck(t3);
    i64 xh2 = sub_ck(neg_ck(mul_ck(x1, x3)), x2);
    if (xh2 == 0 && x3 == 0)
        throw degenerate_family_error("solve_q_f2: (xh2, x3) = (0, 0) is degenerate");
    if (gcd_v(abs_v(x1), abs_v(xh2)) != 1 || (x3 != 0 && gcd_v(abs_v(x1), abs_v(x3)) != 1) ||
        (x3 != 0 && gcd_v(abs_v(xh2), abs_v(x3)) != 1))
        throw inconsistent_system_error("solve_q_f2: moduli are not pairwise coprime");
    Big s(-sign);
    Big X1 = to_big(x1), X2 = to_big(x2), X3 = to_big(x3), Xh2 = to_big(xh2);
    Big q1 = mod_div(Big(s * X3), Xh2, abs_v(X1));
    Big n2 = s * X3 - Xh2 * q1;
    Big n3 = s * X2 - X3 * q1;
    if (n2 % X1 != 0 || n3 % X1 != 0)
        throw inconsistent_system_error("solve_q_f2: system has no integer solution");
    Big q2 = n2 / X1, q3 = n3 / X1;
    if (X3 * q2 - Xh2 * q3 != s * X1)
        throw inconsistent_system_error("solve_q_f2: third equation failed");
    QSolution out;
    out.sign_choice = sign;
    out.witness = {q1, q2, q3};
    out.residues = {make_residue(q1, X1), make_residue(q2, Xh2), make_residue(q3, X3)};
    return out;
}

// Exact solution of
//   F_a q2 - F_{b-ea} q1 = s L_b,
//   F_a q3 + e F_b q1 = -s e L_{a+eb},
//   F_{b-ea} q3 + e F_b q2 = s L_a
// with s = -sign, so that q1 = sign * L_b / F_{b-ea} (mod F_a).
inline QSolution solve_q_f3(i64 a, i64 b, int eps, int sign) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("solve_q_f3: eps must be +1 or -1");
    if (a % 2 == 0 || b % 2 == 0) throw std::invalid_argument("solve_q_f3: a and b must be odd");
    if (std::gcd(a, b) != 1) throw std::invalid_argument("solve_q_f3: a and b must be coprime");
    if (b == eps * a) throw degenerate_family_error("solve_q_f3: b = eps * a is degenerate");
    Big Fa = fib(a), Fba = fib(b - eps * a), Fb = fib(b);
    Big Lb = lucas(b), La = lucas(a), Lab = lucas(a + eps * b);
    Big s(-sign);
    Big q1 = mod_div(Big(-s * Lb), Fba, Fa);
    Big n2 = s * Lb + Fba * q1;
    if (n2 % Fa != 0) throw inconsistent_system_error("solve_q_f3: q2 not integral");
    Big q2 = n2 / Fa;
    Big n3 = s * La - eps * Fb * q2;
    if (n3 % Fba != 0) throw inconsistent_system_error("solve_q_f3: q3 not integral");
    Big q3 = n3 / Fba;
    if (Fa * q3 + eps * Fb * q1 != -s * eps * Lab)
        throw inconsistent_system_error("solve_q_f3: second equation failed");
    QSolution out;
    out.sign_choice = sign;
    out.witness = {q1, q2, q3};
    out.residues = {make_residue(q1, Fa), make_residue(q2, Fba), make_residue(q3, Fb)};
    return out;
}

// Seven-term closing condition on (delta, p, x).
template <class I>
bool verify_eq2(const SignTriple& delta, const std::array<I, 3>& p, const std::array<I, 3>& x) {
    const int d1 = delta.d[0], d2 = delta.d[1], d3 = delta.d[2];
    I acc{};
    acc = add_ck(acc, mul_ck(I(d1), mul_ck(p[0], p[0])));
    acc = add_ck(acc, mul_ck(I(d2), mul_ck(p[1], p[1])));
    acc = add_ck(acc, mul_ck(I(d3), mul_ck(p[2], p[2])));
    acc = sub_ck(acc, mul_ck(I(d1 * d2), mul_ck(mul_ck(p[0], p[1]), x[2])));
    acc = sub_ck(acc, mul_ck(I(d1 * d3), mul_ck(mul_ck(p[0], p[2]), x[1])));
    acc = sub_ck(acc, mul_ck(I(d2 * d3), mul_ck(mul_ck(p[1], p[2]), x[0])));
    acc = add_ck(acc, mul_ck(I(d1 * d2 * d3), mul_ck(mul_ck(p[0], p[2]), mul_ck(x[0], x[2]))));
    return acc == I(0);
}

enum class TableCase { A0, A4, B0, B4 };
// A0: delta (1,1,1),   a=0, k=-9:  -x1^2 = k p1^2, ...
// A4: delta (-1,-1,-1),a=4, k=3:   x1^2 - 4 = -3 p1^2, ... (p1 = 0 falls back
//     to the auxiliary 2 x1 - x2 x3 - x1 x3^2 = -3 p2 p3)
// B0: delta (1,-1,-1), a=0, k=-1:  x1^2 = p1^2, ...
// B4: delta (1,-1,1),  a=4, k=-5:  4 + x1^2 = 5 p1^2, ...
inline std::vector<std::array<i64, 3>> solve_p_table_case(TableCase row, const XTriple& x) {
    std::vector<std::array<i64, 3>> out;
    const i64 x1 = x[0], x2 = x[1], x3 = x[2];
    auto push_pair = [&out](i64 p1, i64 p2, i64 p3) {
        out.push_back({p1, p2, p3});
        out.push_back({neg_ck(p1), neg_ck(p2), neg_ck(p3)});
    };
    auto div_exact = [](i64 num, i64 den) -> std::optional<i64> {
        if (den == 0) return num == 0 ? std::optional<i64>(0) : std::nullopt;
        if (num % den != 0) return std::nullopt;
        return num / den;
    };
    switch (row) {
        case TableCase::A0: {
            i64 x1sq = mul_ck(x1, x1);  // = 9 p1^2
            if (x1sq % 9 != 0) return out;
            auto p1o = isqrt_exact(x1sq / 9);
            if (!p1o) return out;
            i64 p1 = *p1o;
            if (p1 == 0) {
                if (x1 == 0 && x2 == 0 && x3 == 0) out.push_back({0, 0, 0});
                return out;
            }
            i64 k = -9;
            auto p2 = div_exact(sub_ck(mul_ck(x1, x2), mul_ck(mul_ck(x1, x1), x3)), mul_ck(k, p1));
            auto p3 = div_exact(neg_ck(mul_ck(x1, x3)), mul_ck(k, p1));
            if (p2 && p3) push_pair(p1, *p2, *p3);
            return out;
        }
        case TableCase::A4: {
            i64 num = sub_ck(mul_ck(x1, x1), 4);  // = -3 p1^2
            if (num > 0 || num % 3 != 0) return out;
            auto p1o = isqrt_exact(-num / 3);
            if (!p1o) return out;
            i64 p1 = *p1o;
            if (p1 == 0) {
                // auxiliary relation: 2 x1 - x2 x3 - x1 x3^2 = -3 p2 p3
                i64 aux = sub_ck(sub_ck(mul_ck(2, x1), mul_ck(x2, x3)), mul_ck(x1, mul_ck(x3, x3)));
                if (aux % 3 != 0) return out;
                i64 prod = -aux / 3;
                if (prod == 0) return out;  // p2 p3 = 0 leaves the pair unbounded
                i64 ap = abs_v(prod);
                std::vector<i64> ds;
                for (i64 d = 1; d * d <= ap; ++d) {
                    if (ap % d != 0) continue;
                    ds.push_back(d);
                    if (d != ap / d) ds.push_back(ap / d);
                }
                for (i64 d : ds) push_pair(0, d, prod / d);
                std::sort(out.begin(), out.end());
                out.erase(std::unique(out.begin(), out.end()), out.end());
                return out;
            }
            auto p2 = div_exact(
                sub_ck(sub_ck(mul_ck(2, x3), mul_ck(x1, x2)), mul_ck(mul_ck(x1, x1), x3)),
                mul_ck(-3, p1));
            auto p3 = div_exact(add_ck(mul_ck(2, x2), mul_ck(x1, x3)), mul_ck(-3, p1));
            if (p2 && p3) push_pair(p1, *p2, *p3);
            return out;
        }
        case TableCase::B0: {
            i64 p1 = abs_v(x1);
            if (p1 == 0) {
                if (x2 == 0 && x3 == 0) out.push_back({0, 0, 0});
                return out;
            }
            auto p2 = div_exact(mul_ck(x1, add_ck(x2, mul_ck(x1, x3))), p1);
            auto p3 = div_exact(neg_ck(mul_ck(x1, x3)), p1);
            if (p2 && p3) push_pair(p1, *p2, *p3);
            return out;
        }
        case TableCase::B4: {
            i64 num = add_ck(4, mul_ck(x1, x1));
            if (num % 5 != 0) return out;
            auto p1o = isqrt_exact(num / 5);
            if (!p1o || *p1o == 0) return out;
            i64 p1 = *p1o;
            auto p2 = div_exact(
                add_ck(add_ck(mul_ck(2, x3), mul_ck(x1, x2)), mul_ck(mul_ck(x1, x1), x3)),
                mul_ck(5, p1));
            auto p3 = div_exact(add_ck(mul_ck(2, x2), mul_ck(x1, x3)), mul_ck(5, p1));
            if (p2 && p3) push_pair(p1, *p2, *p3);
            return out;
        }
    }
    return out;
}

// Canonical form of a curve triple modulo handle twists and global negation.
inline CurveTriple canonicalize_curve_triple(CurveTriple t) {
    // reduce by a handle twist chosen from the first curve with p != 0
    for (int i = 0; i < 3; ++i) {
        if (t.gamma[i].p != 0) {
            i64 p = t.gamma[i].p, q = t.gamma[i].q;
            i64 r = mod_norm(q, abs_v(p));
            i64 c = (r - q) / p;
            for (auto& g : t.gamma) g.q = add_ck(g.q, mul_ck(c, g.p));
            break;
        }
    }
    // global sign: first nonzero coordinate positive
    for (const auto& g : t.gamma) {
        if (g.p != 0 || g.q != 0) {
            if (g.p < 0 || (g.p == 0 && g.q < 0))
                for (auto& h : t.gamma) h = negate(h);
            break;
        }
    }
    return t;
}

inline bool curve_triple_less(const CurveTriple& a, const CurveTriple& b) {
    for (int i = 0; i < 3; ++i) {
        if (a.gamma[i].p != b.gamma[i].p) return a.gamma[i].p < b.gamma[i].p;
        if (a.gamma[i].q != b.gamma[i].q) return a.gamma[i].q < b.gamma[i].q;
    }
    return false;
}

// All coprime curve triples with |coordinates| <= bound realizing the given
// pairings, modulo handle twists and global negation.
inline std::vector<CurveTriple> realizability_oracle(const XTriple& x, i64 bound,
                                                     SignTriple delta = {}) {
    if (bound < 1) throw std::invalid_argument("realizability_oracle: bound must be >= 1");
    std::vector<CurveTriple> found;
    auto consider = [&](const Lattice2Vector& g1, const Lattice2Vector& g2,
                        const Lattice2Vector& g3) {
        if (abs_v(g3.p) > bound || abs_v(g3.q) > bound) return;
        if (!is_coprime_curve(g3)) return;
        CurveTriple t{{g1, g2, g3}, delta};
        if (x_of_curves(t) != std::array<i64, 3>{x[0], x[1], x[2]}) return;
        found.push_back(canonicalize_curve_triple(t));
    };
    for (i64 p1 = -bound; p1 <= bound; ++p1)
        for (i64 q1 = -bound; q1 <= bound; ++q1) {
            Lattice2Vector g1{p1, q1};
            if (!is_coprime_curve(g1)) continue;
            for (i64 p2 = -bound; p2 <= bound; ++p2)
                for (i64 q2 = -bound; q2 <= bound; ++q2) {
                    Lattice2Vector g2{p2, q2};
                    if (!is_coprime_curve(g2)) continue;
                    if (intersection(g1, g2) != x[2]) continue;
                    // g3 solves g2.g3 = x1, g1.g3 = x2; the system determinant
                    // is -x3, so x3 != 0 pins g3 uniquely over the rationals
                    if (x[2] != 0) {
                        i64 np = sub_ck(mul_ck(p2, x[1]), mul_ck(p1, x[0]));
                        i64 nq = sub_ck(mul_ck(q2, x[1]), mul_ck(q1, x[0]));
                        if (np % x[2] != 0 || nq % x[2] != 0) continue;
                        consider(g1, g2, {np / x[2], nq / x[2]});
                    } else {
                        for (i64 p3 = -bound; p3 <= bound; ++p3)
                            for (i64 q3 = -bound; q3 <= bound; ++q3)
                                consider(g1, g2, {p3, q3});
                    }
                }
        }
    std::sort(found.begin(), found.end(), curve_triple_less);
    found.erase(std::unique(found.begin(), found.end(),
                            [](const CurveTriple& a, const CurveTriple& b) {
                                return a.gamma == b.gamma;
                            }),
                found.end());
    return found;
}

}  // namespace genus1
