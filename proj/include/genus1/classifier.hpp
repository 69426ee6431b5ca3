#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "genus1/curve_recovery.hpp"
#include "genus1/diophantine.hpp"
#include "genus1/symplectic.hpp"

namespace genus1 {

// Closed 4-manifold labels for genus-1 horizontal decompositions with
// h2 <= 3, decided by Hurwitz-move descent on the twist factorization.

struct out_of_scope_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct non_closing_error : std::runtime_error {
    std::string pairing;
    explicit non_closing_error(std::string value)
        : std::runtime_error("monodromy does not fix the lambda axis (pairing " + value + ")"),
          pairing(std::move(value)) {}
};

// Connected sum over the S^4 baseline. Everything empty means S^4 itself.
struct ManifoldLabel {
    int cp2_plus{0};
    int cp2_minus{0};
    int s1xs3{0};
    std::vector<std::pair<i64, i64>> doubles;  // (p, qbar), canonical, sorted

    bool operator==(const ManifoldLabel&) const = default;

    bool is_s4() const { return cp2_plus == 0 && cp2_minus == 0 && s1xs3 == 0 && doubles.empty(); }

    i64 euler() const { return 2 + cp2_plus + cp2_minus - 2 * static_cast<i64>(s1xs3); }

    ManifoldLabel mirrored() const {
        ManifoldLabel m = *this;
        std::swap(m.cp2_plus, m.cp2_minus);
        return m;
    }

    std::string to_string() const {
        if (is_s4()) return "S4";
        std::vector<std::string> parts;
        for (int i = 0; i < cp2_plus; ++i) parts.push_back("CP2(+1)");
        for (int i = 0; i < cp2_minus; ++i) parts.push_back("CP2(-1)");
        for (const auto& [p, q] : doubles)
            parts.push_back("Double(" + std::to_string(p) + "," + std::to_string(q) + ")");
        for (int i = 0; i < s1xs3; ++i) parts.push_back("S1xS3");
        std::string out;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += " # ";
            out += parts[i];
        }
        return out;
    }
};

struct DecompositionInput {
    int h1{1};  // 0 or 1
    TwistFactorization factorization;
};

// (p, q) -> (p, -q) on every curve, with all exponents negated.
template <class I>
TwistFactorizationT<I> mirror(const TwistFactorizationT<I>& f) {
    TwistFactorizationT<I> out = f;
    for (auto& t : out.factors) {
        t.curve.q = neg_ck(t.curve.q);
        t.exponent = -t.exponent;
    }
    return out;
}

// Twists the 1-handle: every curve (p, q) -> (p, q + c p).
template <class I>
TwistFactorizationT<I> handle_twist(const TwistFactorizationT<I>& f, const I& c) {
    TwistFactorizationT<I> out = f;
    for (auto& t : out.factors) t.curve.q = add_ck(t.curve.q, mul_ck(c, t.curve.p));
    return out;
}

namespace detail {

template <class I>
Lattice2VectorT<I> canonical_sign(Lattice2VectorT<I> v) {
    if (v.p < I(0) || (v.p == I(0) && v.q < I(0))) return negate(v);
    return v;
}

}  // namespace detail

enum class HurwitzDir { Left, Right };

// Exchanges the factors applied at positions i and i+1 (1-based, application
// order), conjugating one past the other. The monodromy is unchanged.
template <class I>
TwistFactorizationT<I> hurwitz_move(const TwistFactorizationT<I>& f, std::size_t i,
                                    HurwitzDir dir) {
    if (i < 1 || i >= f.size()) throw std::out_of_range("hurwitz_move: position out of range");
    TwistFactorizationT<I> out = f;
    auto& a = out.factors[i - 1];  // applied first
    auto& b = out.factors[i];      // applied second
    if (dir == HurwitzDir::Left) {
        // (a, b) -> (b, b a b^-1)
        Lattice2VectorT<I> moved =
            detail::canonical_sign(transvection_apply(b.curve, I(b.exponent), a.curve));
        TwistFactorT<I> conj{moved, a.exponent};
        a = b;
        b = conj;
    } else {
        // (a, b) -> (a^-1 b a, a)
        Lattice2VectorT<I> moved =
            detail::canonical_sign(transvection_apply(a.curve, I(-a.exponent), b.curve));
        TwistFactorT<I> conj{moved, b.exponent};
        b = a;
        a = conj;
    }
    return out;
}

enum class TwoTwistBranch { BothLambda, NZero, NTwo };

template <class I>
struct TwoTwistInvariantsT {
    I x{};
    I y{};
    I n{};
    TwoTwistBranch branch{TwoTwistBranch::BothLambda};
};

using TwoTwistInvariants = TwoTwistInvariantsT<i64>;

// x = g1.lambda, y = g2.lambda, n = g2.g1, with orientations chosen so that
// n >= 0. Requires a closing two-factor monodromy.
template <class I>
TwoTwistInvariantsT<I> two_twist_invariants(const TwistFactorizationT<I>& f) {
    if (f.size() != 2) throw std::invalid_argument("two_twist_invariants: need 2 factors");
    const auto& g1 = f.factors[0].curve;
    const auto& g2 = f.factors[1].curve;
    const int d1 = f.factors[0].exponent, d2 = f.factors[1].exponent;
    I x = intersection(g1, lambda_vec<I>());
    I y = intersection(g2, lambda_vec<I>());
    I n = intersection(g2, g1);
    if (n < I(0)) {  // reverse g1
        x = neg_ck(x);
        n = neg_ck(n);
    }
    I quad = add_ck(add_ck(mul_ck(I(d2), mul_ck(x, x)), mul_ck(I(d1), mul_ck(y, y))),
                    mul_ck(n, mul_ck(x, y)));
    if (quad != I(0))
        throw inconsistent_system_error("two_twist_invariants: quadratic constraint violated");
    TwoTwistInvariantsT<I> out{x, y, n, TwoTwistBranch::NTwo};
    if (x == I(0) && y == I(0)) out.branch = TwoTwistBranch::BothLambda;
    else if (n == I(0)) out.branch = TwoTwistBranch::NZero;
    else if (n == I(2)) out.branch = TwoTwistBranch::NTwo;
    else throw classification_gap_error("two_twist_invariants: n outside {0, 2}");
    return out;
}

namespace detail {

inline std::pair<i64, i64> canonical_double(i64 p, i64 q) {
    if (p < 0) {
        p = -p;
        q = -q;
    }
    i64 qb = mod_norm(q, p);
    i64 alt = (p - qb) % p;
    return {p, std::min(qb, alt)};
}

template <class I>
SignTriple delta_of(const TwistFactorizationT<I>& f) {
    SignTriple d;
    for (int i = 0; i < 3; ++i) d.d[i] = f.factors[i].exponent;
    return d;
}

template <class I>
std::array<I, 3> x_of(const TwistFactorizationT<I>& f) {
    CurveTripleT<I> t{{f.factors[0].curve, f.factors[1].curve, f.factors[2].curve},
                      delta_of(f)};
    return x_of_curves(t);
}

template <class I>
I eval_a_generic(const SignTriple& delta, const std::array<I, 3>& x) {
    I s{};
    for (int i = 0; i < 3; ++i) s = add_ck(s, mul_ck(I(delta.d[i]), mul_ck(x[i], x[i])));
    s = sub_ck(s, mul_ck(x[0], mul_ck(x[1], x[2])));
    return mul_ck(I(delta.product()), s);
}

// Cyclic permutation (delta, x) -> shifted left by one, as two Hurwitz moves.
template <class I>
TwistFactorizationT<I> cycle_once(const TwistFactorizationT<I>& f) {
    return hurwitz_move(hurwitz_move(f, 1, HurwitzDir::Right), 2, HurwitzDir::Right);
}

template <class I>
ManifoldLabel identify3(TwistFactorizationT<I> f) {
    bool mirrored = false;
    int minus = 0;
    for (const auto& t : f.factors) minus += (t.exponent < 0);
    if (minus >= 2) {
        f = mirror(f);
        mirrored = true;
        minus = 3 - minus;
    }
    for (int tries = 0; minus == 1 && f.factors[0].exponent != -1; ++tries) {
        if (tries > 2) throw classification_gap_error("identify: delta canonicalization failed");
        f = cycle_once(f);
    }

    // descent via the Hurwitz moves that realize the mutations
    auto partner = [](const SignTriple& d, const std::array<I, 3>& x, int i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        return sub_ck(mul_ck(I(d.d[i]), mul_ck(x[j], x[k])), x[i]);
    };
    for (;;) {
        SignTriple d = delta_of(f);
        std::array<I, 3> x = x_of(f);
        int pick = -1;
        for (int i = 0; i < 3; ++i) {
            if (abs_v(partner(d, x, i)) < abs_v(x[i])) {
                pick = i;
                break;
            }
        }
        if (pick < 0) break;
        if (pick == 0) f = hurwitz_move(f, 1, HurwitzDir::Right);
        else if (pick == 1) f = hurwitz_move(f, 1, HurwitzDir::Left);
        else f = hurwitz_move(f, 2, HurwitzDir::Left);
        for (int tries = 0; minus == 1 && f.factors[0].exponent != -1; ++tries) {
            if (tries > 2) throw classification_gap_error("identify: delta canonicalization failed");
            f = cycle_once(f);
        }
    }

    SignTriple delta = delta_of(f);
    std::array<I, 3> x = x_of(f);
    I a = eval_a_generic(delta, x);
    std::array<I, 3> ax{abs_v(x[0]), abs_v(x[1]), abs_v(x[2])};
    std::array<I, 3> sorted_ax = ax;
    std::sort(sorted_ax.begin(), sorted_ax.end());
    const std::array<I, 3> zero3{I(0), I(0), I(0)};

    ManifoldLabel label;
    if (minus == 0) {
        if (a == I(0)) {
            if (x == zero3) {
                label.cp2_minus = 3;
                label.s1xs3 = 1;
            } else if (ax == std::array<I, 3>{I(3), I(3), I(3)}) {
                label.cp2_plus = 1;
            } else {
                throw classification_gap_error("identify: unexpected terminal for delta=(1,1,1), a=0");
            }
        } else if (a == I(4)) {
            if (sorted_ax == std::array<I, 3>{I(1), I(1), I(1)}) {
                label.cp2_minus = 1;
            } else {
                throw classification_gap_error("identify: unrealizable terminal for delta=(1,1,1), a=4");
            }
        } else {
            throw classification_gap_error("identify: a outside {0, 4}");
        }
    } else {
        if (a == I(0)) {
            if (x == zero3) {
                label.cp2_plus = 1;
                label.cp2_minus = 2;
                label.s1xs3 = 1;
            } else {
                int zero_slot = -1;
                for (int i = 0; i < 3; ++i)
                    if (x[i] == I(0)) zero_slot = i;
                if (zero_slot < 1 || ax[(zero_slot + 1) % 3] != ax[(zero_slot + 2) % 3])
                    throw classification_gap_error(
                        "identify: unexpected terminal for delta=(-1,1,1), a=0");
                // the pair of slots whose mutual pairing vanished carries the
                // repeated curve
                int i = 0, j = zero_slot == 2 ? 1 : 2;
                const auto& gi = f.factors[i].curve;
                const auto& gj = f.factors[j].curve;
                if (!(gi == gj || gi == negate(gj)))
                    throw classification_gap_error("identify: repeated curve expected");
                if (f.factors[i].exponent == f.factors[j].exponent)
                    throw classification_gap_error("identify: opposite exponents expected");
                if (abs_v(gi.p) != ax[(zero_slot + 1) % 3])
                    throw classification_gap_error("identify: double parameter mismatch");
                auto [p, qb] = canonical_double(to_i64(to_big(gi.p)), to_i64(to_big(gi.q)));
                label.cp2_minus = 1;
                if (p > 1) label.doubles.push_back({p, qb});
            }
        } else if (a == I(4)) {
            if (sorted_ax == std::array<I, 3>{I(1), I(1), I(2)}) {
                label.cp2_plus = 1;
            } else {
                throw classification_gap_error(
                    "identify: unrealizable terminal for delta=(-1,1,1), a=4");
            }
        } else {
            throw classification_gap_error("identify: a outside {0, 4}");
        }
    }
    return mirrored ? label.mirrored() : label;
}

namespace detail {

template <class I>
std::string to_str(const I& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

template <class I>
ManifoldLabel identify_impl(const TwistFactorizationT<I>& f) {
    if (f.size() > 0) {
        SL2MatrixT<I> m = monodromy(f);
        if (!closes_to_s3(m)) {
            I v = intersection(m.apply(lambda_vec<I>()), lambda_vec<I>());
            throw non_closing_error(to_str(v));
        }
    }
    ManifoldLabel label;
    switch (f.size()) {
        case 0:
            label.s1xs3 = 1;
            return label;
        case 1: {
            // a closing single twist is a twist about lambda
            if (f.factors[0].exponent > 0) label.cp2_minus = 1;
            else label.cp2_plus = 1;
            label.s1xs3 = 1;
            return label;
        }
        case 2: {
            auto inv = two_twist_invariants(f);
            switch (inv.branch) {
                case TwoTwistBranch::BothLambda:
                    if (f.factors[0].exponent > 0) ++label.cp2_minus;
                    else ++label.cp2_plus;
                    if (f.factors[1].exponent > 0) ++label.cp2_minus;
                    else ++label.cp2_plus;
                    label.s1xs3 = 1;
                    return label;
                case TwoTwistBranch::NZero: {
                    const auto& g2 = f.factors[1].curve;
                    auto [p, qb] =
                        canonical_double(to_i64(to_big(g2.p)), to_i64(to_big(g2.q)));
                    if (p > 1) label.doubles.push_back({p, qb});
                    return label;  // p = 1 gives S4
                }
                case TwoTwistBranch::NTwo:
                    return label;  // S4
            }
            return label;
        }
        case 3:
            return identify3(f);
    }
    throw classification_gap_error("identify: unreachable");
}

}  // namespace detail

inline ManifoldLabel identify(const DecompositionInput& input) {
    if (input.h1 != 0 && input.h1 != 1)
        throw std::invalid_argument("identify: h1 must be 0 or 1");
    if (input.h1 == 0)
        throw out_of_scope_error("identify: h1 = 0 decompositions are reduced elsewhere");
    if (input.factorization.size() > 3) throw out_of_scope_error("identify: h2 >= 4 not handled");
    try {
        return detail::identify_impl(input.factorization);
    } catch (const overflow_error&) {
        return detail::identify_impl(to_big(input.factorization));
    }
}

// chi of the label and of the handle count data 1 - h1 + h2.
inline std::pair<i64, i64> euler_characteristic(const ManifoldLabel& label,
                                                const DecompositionInput& input) {
    return {label.euler(), 1 - input.h1 + static_cast<i64>(input.factorization.size())};
}

}  // namespace genus1
