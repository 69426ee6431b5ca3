#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <vector>

#include "genus1/arith.hpp"

namespace genus1 {

// Solutions (delta, x) of
//   d1 x1^2 + d2 x2^2 + d3 x3^2 - x1 x2 x3 = d1 d2 d3 a,
// their mutations x_i -> d_i x_j x_k - x_i, sign changes and permutations.

struct SignTriple {
    std::array<int, 3> d{1, 1, 1};  // entries +1 / -1

    bool operator==(const SignTriple&) const = default;
    auto operator<=>(const SignTriple&) const = default;
    int product() const { return d[0] * d[1] * d[2]; }
};

using XTriple = std::array<i64, 3>;

inline i64 eval_a(const SignTriple& delta, const XTriple& x) {
    i64 s = 0;
    for (int i = 0; i < 3; ++i) s = add_ck(s, mul_ck(delta.d[i], mul_ck(x[i], x[i])));
    s = sub_ck(s, mul_ck(x[0], mul_ck(x[1], x[2])));
    return mul_ck(delta.product(), s);
}

struct Solution {
    SignTriple delta;
    XTriple x{0, 0, 0};
    i64 a{0};

    Solution() = default;
    Solution(SignTriple d, XTriple xs) : delta(d), x(xs), a(eval_a(d, xs)) {}

    bool operator==(const Solution&) const = default;
    auto operator<=>(const Solution&) const = default;
};

// Vieta partner of x_i: d_i x_j x_k - x_i.
inline i64 mutated_coordinate(const Solution& s, int i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    return sub_ck(mul_ck(s.delta.d[i], mul_ck(s.x[j], s.x[k])), s.x[i]);
}

inline Solution mutate(const Solution& s, int i) {
    Solution r = s;
    r.x[i] = mutated_coordinate(s, i);
    return r;
}

// Negates the two selected coordinates; delta and eval_a are unchanged.
// pair is one of 12, 13, 23.
inline Solution sign_change(const Solution& s, int pair) {
    Solution r = s;
    switch (pair) {
        case 12: r.x[0] = neg_ck(r.x[0]); r.x[1] = neg_ck(r.x[1]); break;
        case 13: r.x[0] = neg_ck(r.x[0]); r.x[2] = neg_ck(r.x[2]); break;
        case 23: r.x[1] = neg_ck(r.x[1]); r.x[2] = neg_ck(r.x[2]); break;
        default: throw std::invalid_argument("sign_change: pair must be 12, 13 or 23");
    }
    return r;
}

// Simultaneous permutation of delta and x: result slot i holds input slot perm[i].
inline Solution permute(const Solution& s, const std::array<int, 3>& perm) {
    Solution r = s;
    for (int i = 0; i < 3; ++i) {
        r.delta.d[i] = s.delta.d[perm[i]];
        r.x[i] = s.x[perm[i]];
    }
    return r;
}

inline bool is_weakly_minimal(const Solution& s) {
    for (int i = 0; i < 3; ++i)
        if (abs_v(s.x[i]) > abs_v(mutated_coordinate(s, i))) return false;
    return true;
}

inline bool is_minimal(const Solution& s) {
    for (int i = 0; i < 3; ++i)
        if (abs_v(s.x[i]) >= abs_v(mutated_coordinate(s, i))) return false;
    return true;
}

struct DescentResult {
    Solution terminal;
    std::vector<int> steps;  // mutation indices, 1-based
};

// Mutates at the smallest index with a strict |x_i| decrease until weakly
// minimal. Every step strictly decreases |x1|+|x2|+|x3|.
inline DescentResult descend(Solution s) {
    DescentResult out;
    for (;;) {
        int pick = -1;
        for (int i = 0; i < 3; ++i) {
            if (abs_v(mutated_coordinate(s, i)) < abs_v(s.x[i])) {
                pick = i;
                break;
            }
        }
        if (pick < 0) break;
        s = mutate(s, pick);
        out.steps.push_back(pick + 1);
    }
    out.terminal = s;
    return out;
}

// The four Hurwitz-move actions on solutions: (23)∘mu3, (23)∘mu2, (12)∘mu1,
// (12)∘mu2, in that order (move = 1..4). Moves 1,2 are mutually inverse, as
// are moves 3,4.
inline Solution hurwitz_on_solution(const Solution& s, int move) {
    switch (move) {
        case 1: return permute(mutate(s, 2), {0, 2, 1});
        case 2: return permute(mutate(s, 1), {0, 2, 1});
        case 3: return permute(mutate(s, 0), {1, 0, 2});
        case 4: return permute(mutate(s, 1), {1, 0, 2});
        default: throw std::invalid_argument("hurwitz_on_solution: move must be 1..4");
    }
}

// All solutions with max |x_i| <= bound, sorted lexicographically.
inline std::vector<Solution> enumerate_solutions(const SignTriple& delta, i64 a, i64 bound) {
    if (bound < 0) throw std::invalid_argument("enumerate_solutions: bound must be >= 0");
    std::vector<Solution> out;
    for (i64 x1 = -bound; x1 <= bound; ++x1)
        for (i64 x2 = -bound; x2 <= bound; ++x2) {
            // remaining equation in x3: d3 x3^2 - (x1 x2) x3 + c0 = 0
            i64 c0 = sub_ck(add_ck(mul_ck(delta.d[0], mul_ck(x1, x1)),
                                   mul_ck(delta.d[1], mul_ck(x2, x2))),
                            mul_ck(delta.product(), a));
            i64 b = mul_ck(x1, x2);
            // d3 in {1,-1}: x3^2 - d3 b x3 + d3 c0 = 0
            i64 disc = sub_ck(mul_ck(b, b), mul_ck(4 * delta.d[2], c0));
            auto r = isqrt_exact(disc);
            if (!r) continue;
            i64 db = mul_ck(delta.d[2], b);
            for (i64 root : {add_ck(db, *r), sub_ck(db, *r)}) {
                if (root % 2 != 0) continue;
                i64 x3 = root / 2;
                if (abs_v(x3) > bound) continue;
                Solution s(delta, {x1, x2, x3});
                if (s.a == a) out.push_back(s);
            }
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Orbit of s under sign changes, and under coordinate permutations when all
// delta entries coincide.
inline std::vector<Solution> orbit_class(const Solution& s) {
    bool perms = s.delta.d[0] == s.delta.d[1] && s.delta.d[1] == s.delta.d[2];
    static const std::array<std::array<int, 3>, 6> all_perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    std::vector<Solution> members;
    auto push_signs = [&members](const Solution& t) {
        members.push_back(t);
        members.push_back(sign_change(t, 12));
        members.push_back(sign_change(t, 13));
        members.push_back(sign_change(t, 23));
    };
    if (perms) {
        for (const auto& p : all_perms) push_signs(permute(s, p));
    } else {
        push_signs(s);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

// Representative with the most nonnegative entries, ties broken by
// lexicographic order.
inline Solution canonical_class_rep(const Solution& s) {
    auto members = orbit_class(s);
    auto nonneg = [](const Solution& t) {
        int c = 0;
        for (i64 v : t.x) c += (v >= 0);
        return c;
    };
    const Solution* best = &members.front();
    for (const auto& m : members) {
        if (nonneg(m) > nonneg(*best) || (nonneg(m) == nonneg(*best) && m < *best)) best = &m;
    }
    return *best;
}

// Canonical representatives of the weakly minimal solutions within the bound.
inline std::vector<Solution> weakly_minimal_classes(const SignTriple& delta, i64 a, i64 bound) {
    std::vector<Solution> reps;
    for (const auto& s : enumerate_solutions(delta, a, bound)) {
        if (!is_weakly_minimal(s)) continue;
        Solution rep = canonical_class_rep(s);
        reps.push_back(rep);
    }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return reps;
}

struct MarkovTriple {
    std::array<i64, 3> y{1, 1, 1};  // stored descending

    bool operator==(const MarkovTriple&) const = default;
    auto operator<=>(const MarkovTriple&) const = default;
};

inline bool is_markov(i64 y1, i64 y2, i64 y3) {
    if (y1 < 1 || y2 < 1 || y3 < 1) return false;
    return add_ck(add_ck(mul_ck(y1, y1), mul_ck(y2, y2)), mul_ck(y3, y3)) ==
           mul_ck(3, mul_ck(y1, mul_ck(y2, y3)));
}

// Tree walk from (1,1,1) by y_i -> 3 y_j y_k - y_i; all triples with max
// component <= limit, each stored descending, sorted.
inline std::vector<MarkovTriple> enumerate_markov(i64 limit) {
    if (limit < 1) throw std::invalid_argument("enumerate_markov: limit must be >= 1");
    std::set<MarkovTriple> seen;
    std::deque<MarkovTriple> queue;
    auto norm = [](i64 a, i64 b, i64 c) {
        std::array<i64, 3> v{a, b, c};
        std::sort(v.begin(), v.end(), std::greater<i64>());
        return MarkovTriple{v};
    };
    queue.push_back(norm(1, 1, 1));
    seen.insert(queue.front());
    while (!queue.empty()) {
        MarkovTriple t = queue.front();
        queue.pop_front();
        const auto& y = t.y;
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            i64 yi = sub_ck(mul_ck(3, mul_ck(y[j], y[k])), y[i]);
            if (yi > limit) continue;
            MarkovTriple nt = norm(yi, y[j], y[k]);
            if (seen.insert(nt).second) queue.push_back(nt);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace genus1
