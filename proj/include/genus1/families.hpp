#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "genus1/curve_recovery.hpp"
#include "genus1/parallel.hpp"

namespace genus1 {

// The three families of rational balls B_{p,q} embedding in CP^2: Markov
// triples (F1), the negative quadric x1^2 + x1 x2 x3 = x2^2 + x3^2 (F2) and
// Fibonacci/Lucas parameters (a, b, eps) (F3).

struct RationalBall {
    bool zero_p{false};  // the p = 0 ball S^1 x D^3 # q CP^2, q = +-1
    i64 p{1};
    i64 qbar{0};  // 0 <= qbar < p for standard balls; q = +-1 for zero_p
    int orientation{1};

    bool operator==(const RationalBall&) const = default;
    auto operator<=>(const RationalBall&) const = default;
};

// B_{p,q} with p != 0 names B_{|p|, q mod |p|}; p = 0 forces q = +-1.
inline RationalBall normalize_ball(i64 p, i64 q, int orientation = 1) {
    RationalBall b;
    b.orientation = orientation;
    if (p == 0) {
        if (q != 1 && q != -1)
            throw std::invalid_argument("normalize_ball: p = 0 requires q = +-1");
        b.zero_p = true;
        b.p = 0;
        b.qbar = q;
        return b;
    }
    if (gcd_v(abs_v(p), abs_v(q)) != 1)
        throw std::invalid_argument("normalize_ball: p and q must be coprime");
    b.p = abs_v(p);
    b.qbar = b.p == 1 ? 0 : mod_norm(q, b.p);
    return b;
}

enum class FamilyTag { F1, F2, F3 };

inline const char* family_name(FamilyTag t) {
    switch (t) {
        case FamilyTag::F1: return "f1";
        case FamilyTag::F2: return "f2";
        case FamilyTag::F3: return "f3";
    }
    return "?";
}

struct FamilyWitness {
    FamilyTag tag{FamilyTag::F1};
    // f1: Markov arrangement (y1, y2, y3); f2: normalized triple (x1, x2, x3);
    // f3: (a, b, eps)
    std::array<i64, 3> params{};
    QSolution q;
    i64 search_bound{0};
};

struct BallTriple {
    std::array<RationalBall, 3> balls;
    FamilyTag tag{FamilyTag::F1};
    std::array<i64, 3> params{};
    std::array<ResidueClass, 3> q_residues;
    int sign{1};

    bool operator==(const BallTriple&) const = default;
    auto operator<=>(const BallTriple&) const = default;
};

namespace detail {

// Residue presentation of the ball coefficients: q_i = sign * metric_i
// (mod m_i), with the exact witness value carried through when the modulus
// degenerates to 0 or 1.
inline ResidueClass presented(const Big& metric_num, const Big& metric_den, const Big& modulus,
                              int sign, const Big& witness_value) {
    Big m = abs_v(modulus);
    if (m == 0) return ResidueClass{witness_value, Big(0)};
    if (m == 1) return ResidueClass{Big(0), Big(1)};
    Big v = mod_div(Big(sign * metric_num), metric_den, m);
    return ResidueClass{v, m};
}

struct F1Arrangement {
    i64 y1, y2, y3;   // ordered Markov triple
    i64 yh2;          // 3 y1 y3 - y2
};

inline std::array<ResidueClass, 3> f1_ball_residues(const F1Arrangement& ar, int sign,
                                                    const QSolution& qs) {
    Big Y1 = to_big(ar.y1), Yh2 = to_big(ar.yh2), Y3 = to_big(ar.y3);
    return {presented(Big(3) * Y3, Yh2, Y1, sign, qs.witness[0]),
            presented(Big(3) * Y1, Y3, Yh2, sign, qs.witness[1]),
            presented(Big(3) * Y1, Yh2, Y3, sign, qs.witness[2])};
}

inline std::array<ResidueClass, 3> f2_ball_residues(const std::array<i64, 3>& t, int sign,
                                                    const QSolution& qs) {
    // internal solution (x1, x2, -x3); metrics x3/xh2, x1/x3, x1/x2
    i64 x1 = t[0], x2 = t[1], x3 = -t[2];
    i64 xh2 = -x1 * x3 - x2;
    Big X1 = to_big(x1), X2 = to_big(x2), X3 = to_big(x3), Xh2 = to_big(xh2);
    ResidueClass r1 = abs_v(x1) <= 1
                          ? presented(Big(0), Big(1), X1, sign, qs.witness[0])
                          : presented(X3, Xh2, X1, sign, qs.witness[0]);
    ResidueClass r2 = abs_v(xh2) <= 1
                          ? presented(Big(0), Big(1), Xh2, sign, qs.witness[1])
                          : presented(X1, X3, Xh2, sign, qs.witness[1]);
    ResidueClass r3 = abs_v(x3) <= 1
                          ? presented(Big(0), Big(1), X3, sign, qs.witness[2])
                          : presented(X1, X2, X3, sign, qs.witness[2]);
    return {r1, r2, r3};
}

inline std::array<ResidueClass, 3> f3_ball_residues(i64 a, i64 b, int eps, int sign,
                                                    const QSolution& qs) {
    Big Fa = fib(a), Fba = fib(b - eps * a), Fb = fib(b);
    Big Lb = lucas(b), La = lucas(a);
    auto safe = [&](const Big& num, const Big& den, const Big& mod, const Big& wit) {
        Big m = abs_v(mod);
        if (m <= 1) return presented(Big(0), Big(1), mod, sign, wit);
        return presented(num, den, mod, sign, wit);
    };
    return {safe(Lb, Fba, Fa, qs.witness[0]), safe(Lb, Fa, Fba, qs.witness[1]),
            safe(La, Fba, Fb, qs.witness[2])};
}

inline RationalBall ball_from_residue(const ResidueClass& r, int orientation) {
    if (r.modulus == 0) return normalize_ball(0, to_i64(r.value), orientation);
    if (r.modulus == 1) return normalize_ball(1, 0, orientation);
    return normalize_ball(to_i64(r.modulus), to_i64(r.value), orientation);
}

// Solutions of the F2 quadric reachable from the seeds (-1,-1,0), (-1,0,-1)
// under mutations, sign changes and the swap of the last two slots, with all
// coordinates bounded.
inline std::vector<Solution> f2_orbit(i64 bound) {
    const SignTriple delta{{1, -1, -1}};
    std::set<XTriple> seen;
    std::vector<Solution> queue{Solution(delta, {-1, -1, 0}), Solution(delta, {-1, 0, -1})};
    for (auto& s : queue) seen.insert(s.x);
    std::vector<Solution> out;
    while (!queue.empty()) {
        Solution s = queue.back();
        queue.pop_back();
        out.push_back(s);
        std::vector<Solution> next;
        for (int i = 0; i < 3; ++i) next.push_back(mutate(s, i));
        for (int pr : {12, 13, 23}) next.push_back(sign_change(s, pr));
        next.push_back(permute(s, {0, 2, 1}));
        for (const auto& n : next) {
            if (abs_v(n.x[0]) > bound || abs_v(n.x[1]) > bound || abs_v(n.x[2]) > bound) continue;
            if (seen.insert(n.x).second) queue.push_back(n);
        }
    }
    return out;
}

// Fibonacci index of p among odd indices, if any.
inline std::optional<i64> odd_fib_index(i64 p) {
    if (p == 1) return 1;
    i64 idx = 0;
    Big f(0), g(1);
    Big target = to_big(p);
    while (f < target) {
        Big t = f + g;
        f = g;
        g = t;
        ++idx;
    }
    if (f == target && idx % 2 == 1) return idx;
    return std::nullopt;
}

}  // namespace detail

// I(b, eps) = L_b / F_{b - eps a} mod F_a, as a residue in [0, F_a).
inline ResidueClass compute_I(i64 b, int eps, i64 a) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("compute_I: eps must be +-1");
    if (a % 2 == 0 || b % 2 == 0) throw std::invalid_argument("compute_I: a and b must be odd");
    if (std::gcd(a, b) != 1) throw std::invalid_argument("compute_I: a and b must be coprime");
    if (b == eps * a) throw degenerate_family_error("compute_I: b = eps * a");
    Big Fa = fib(a);
    return ResidueClass{mod_div(lucas(b), fib(b - eps * a), Fa), Fa};
}

// Whether I(b,-1) = +- I(b',-1) mod F_a, computed from the residues.
// Equivalent to b = +- b' mod a.
inline bool I_equivalent(i64 a, i64 b, i64 bp) {
    Big Fa = fib(a);
    Big vb = compute_I(b, -1, a).value;
    Big vbp = compute_I(bp, -1, a).value;
    return vb == vbp || mod_norm(Big(vb + vbp), Fa) == 0;
}

// Number of distinct balls B_{F_a, q} in the Fibonacci/Lucas family; equals
// phi(a) / 2 for odd a > 3.
inline i64 psi(i64 a) {
    if (a <= 3 || a % 2 == 0) throw std::invalid_argument("psi: a must be odd and > 3");
    Big Fa = fib(a);
    std::set<Big> classes;
    for (i64 b = 1; b < 2 * a; b += 2) {
        if (std::gcd(a, b) != 1) continue;
        Big v = compute_I(b, -1, a).value;
        Big w = mod_norm(Big(-v), Fa);
        classes.insert(v < w ? v : w);
    }
    return static_cast<i64>(classes.size());
}

// {q^2 mod F_a : B_{F_a, q} in F3}; has exactly psi(a) elements.
inline std::set<Big> s_p_set(i64 a) {
    if (a <= 3 || a % 2 == 0) throw std::invalid_argument("s_p_set: a must be odd and > 3");
    Big Fa = fib(a);
    std::set<Big> squares;
    for (i64 b = 1; b < 2 * a; b += 2) {
        if (std::gcd(a, b) != 1) continue;
        Big v = compute_I(b, -1, a).value;
        squares.insert(mod_norm(Big(v * v), Fa));
    }
    return squares;
}

inline std::optional<FamilyWitness> membership_f1(i64 p, i64 q, i64 bound) {
    if (p <= 1) throw std::invalid_argument("membership_f1: p must be > 1");
    if (gcd_v(abs_v(p), abs_v(q)) != 1) throw std::invalid_argument("membership_f1: gcd(p,q) != 1");
    Big P = to_big(p), Q = to_big(q);
    if (mod_norm(Big(Q * Q + 9), P) != 0) return std::nullopt;  // q^2 = -9 mod p
    for (const auto& t : enumerate_markov(bound)) {
        if (t.y[0] != p && t.y[1] != p && t.y[2] != p) continue;
        std::array<std::array<i64, 3>, 6> arr{{{t.y[0], t.y[1], t.y[2]},
                                               {t.y[0], t.y[2], t.y[1]},
                                               {t.y[1], t.y[0], t.y[2]},
                                               {t.y[1], t.y[2], t.y[0]},
                                               {t.y[2], t.y[0], t.y[1]},
                                               {t.y[2], t.y[1], t.y[0]}}};
        for (const auto& y : arr) {
            if (y[0] != p) continue;
            i64 yh2 = 3 * y[0] * y[2] - y[1];
            for (int sign : {1, -1}) {
                Big r = mod_div(Big(sign * 3 * to_big(y[2])), to_big(yh2), P);
                if (mod_norm(Q, P) != r) continue;
                FamilyWitness w;
                w.tag = FamilyTag::F1;
                w.params = y;
                w.q = solve_q_f1(y[0], yh2, y[2], sign);
                w.search_bound = bound;
                return w;
            }
        }
    }
    return std::nullopt;
}

inline std::optional<FamilyWitness> membership_f2(i64 p, i64 q, i64 bound) {
    if (p <= 1) throw std::invalid_argument("membership_f2: p must be > 1");
    if (gcd_v(abs_v(p), abs_v(q)) != 1) throw std::invalid_argument("membership_f2: gcd(p,q) != 1");
    Big P = to_big(p), Q = to_big(q);
    if (mod_norm(Big(Q * Q + 1), P) != 0) return std::nullopt;  // q^2 = -1 mod p
    for (const auto& s : detail::f2_orbit(bound)) {
        if (abs_v(s.x[0]) != p) continue;
        Solution n = s.x[0] > 0 ? s : sign_change(s, 12);
        std::array<i64, 3> t{n.x[0], n.x[1], -n.x[2]};
        for (int sign : {1, -1}) {
            QSolution qs;
            try {
                qs = solve_q_f2(t[0], t[1], t[2], sign);
            } catch (const degenerate_family_error&) {
                continue;
            }
            if (qs.residues[0].modulus > 1 && mod_norm(Q, P) != qs.residues[0].value) continue;
            FamilyWitness w;
            w.tag = FamilyTag::F2;
            w.params = t;
            w.q = qs;
            w.search_bound = bound;
            return w;
        }
    }
    return std::nullopt;
}

inline std::optional<FamilyWitness> membership_f3(i64 p, i64 q, i64 a_bound) {
    if (p <= 1) throw std::invalid_argument("membership_f3: p must be > 1");
    if (gcd_v(abs_v(p), abs_v(q)) != 1) throw std::invalid_argument("membership_f3: gcd(p,q) != 1");
    auto a_opt = detail::odd_fib_index(p);
    if (!a_opt || *a_opt > a_bound) return std::nullopt;
    i64 a = *a_opt;
    Big P = to_big(p), Q = to_big(q);
    for (i64 b = 1; b < 2 * a; b += 2) {
        if (std::gcd(a, b) != 1) continue;
        Big v = compute_I(b, -1, a).value;
        int sign = 0;
        if (mod_norm(Q, P) == v) sign = 1;
        else if (mod_norm(Big(Q + v), P) == 0) sign = -1;
        if (sign == 0) continue;
        FamilyWitness w;
        w.tag = FamilyTag::F3;
        w.params = {a, b, -1};
        w.q = solve_q_f3(a, b, -1, sign);
        w.search_bound = a_bound;
        return w;
    }
    return std::nullopt;
}

// q^2 = -9 mod p, the almost-complex criterion; the family witness is the
// hypothesis that B_{p,q} arises from a decomposition at all.
inline bool almost_complex_embeddable(i64 p, i64 q, const std::optional<FamilyWitness>& witness) {
    if (p <= 1) throw std::invalid_argument("almost_complex_embeddable: p must be > 1");
    if (!witness)
        throw hypothesis_error("almost_complex_embeddable: no family witness supplied");
    Big P = to_big(p), Q = to_big(q);
    return mod_norm(Big(Q * Q + 9), P) == 0;
}

inline std::vector<BallTriple> enumerate_family(FamilyTag tag, i64 bound, int jobs = 1) {
    if (bound < 1) throw std::invalid_argument("enumerate_family: bound must be >= 1");
    auto make = [](FamilyTag t, const std::array<i64, 3>& params, int sign,
                   const std::array<ResidueClass, 3>& res, const std::array<int, 3>& ori) {
        BallTriple bt;
        bt.tag = t;
        bt.params = params;
        bt.sign = sign;
        bt.q_residues = res;
        for (int i = 0; i < 3; ++i) bt.balls[i] = detail::ball_from_residue(res[i], ori[i]);
        return bt;
    };
    // gather the parameter tuples first, then solve the q-systems per tuple,
    // optionally in parallel blocks
    std::vector<std::array<i64, 3>> items;
    std::vector<BallTriple> out;
    if (tag == FamilyTag::F1) {
        for (const auto& t : enumerate_markov(bound)) {
            std::array<std::array<i64, 3>, 6> arr{{{t.y[0], t.y[1], t.y[2]},
                                                   {t.y[0], t.y[2], t.y[1]},
                                                   {t.y[1], t.y[0], t.y[2]},
                                                   {t.y[1], t.y[2], t.y[0]},
                                                   {t.y[2], t.y[0], t.y[1]},
                                                   {t.y[2], t.y[1], t.y[0]}}};
            for (const auto& y : arr)
                if (3 * y[0] * y[2] - y[1] <= bound) items.push_back(y);
        }
        out = map_blocks(items, jobs, [&](const std::array<i64, 3>& y) {
            std::vector<BallTriple> part;
            i64 yh2 = 3 * y[0] * y[2] - y[1];
            detail::F1Arrangement ar{y[0], y[1], y[2], yh2};
            for (int sign : {1, -1}) {
                QSolution qs = solve_q_f1(y[0], yh2, y[2], sign);
                part.push_back(
                    make(FamilyTag::F1, y, sign, detail::f1_ball_residues(ar, sign, qs), {1, 1, 1}));
            }
            return part;
        });
    } else if (tag == FamilyTag::F2) {
        for (const auto& s : detail::f2_orbit(bound)) {
            if (s.x[0] == 0) continue;
            Solution n = s.x[0] > 0 ? s : sign_change(s, 12);
            i64 xh2 = sub_ck(neg_ck(mul_ck(n.x[0], n.x[2])), n.x[1]);
            if (abs_v(xh2) > bound) continue;
            items.push_back({n.x[0], n.x[1], -n.x[2]});
        }
        out = map_blocks(items, jobs, [&](const std::array<i64, 3>& t) {
            std::vector<BallTriple> part;
            for (int sign : {1, -1}) {
                QSolution qs;
                try {
                    qs = solve_q_f2(t[0], t[1], t[2], sign);
                } catch (const degenerate_family_error&) {
                    continue;
                } catch (const inconsistent_system_error&) {
                    continue;
                }
                part.push_back(
                    make(FamilyTag::F2, t, sign, detail::f2_ball_residues(t, sign, qs), {1, -1, -1}));
            }
            return part;
        });
    } else {
        i64 max_idx = 2;
        while (fib(max_idx + 1) <= bound) ++max_idx;
        for (i64 a = 1; a <= max_idx; a += 2)
            for (i64 b = 1; b <= max_idx; b += 2) {
                if (std::gcd(a, b) != 1) continue;
                for (i64 eps : {1, -1}) {
                    if (b == eps * a) continue;
                    if (abs_v(fib(b - eps * a)) > bound) continue;
                    items.push_back({a, b, eps});
                }
            }
        out = map_blocks(items, jobs, [&](const std::array<i64, 3>& abe) {
            std::vector<BallTriple> part;
            int eps = static_cast<int>(abe[2]);
            for (int sign : {1, -1}) {
                QSolution qs = solve_q_f3(abe[0], abe[1], eps, sign);
                part.push_back(make(FamilyTag::F3, abe, sign,
                                    detail::f3_ball_residues(abe[0], abe[1], eps, sign, qs),
                                    {1, -1, 1}));
            }
            return part;
        });
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace genus1
