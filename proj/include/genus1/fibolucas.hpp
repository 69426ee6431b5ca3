#pragma once

#include <optional>
#include <utility>

#include "genus1/arith.hpp"

namespace genus1 {

// Fibonacci and Lucas numbers over unbounded integers, with negative indices
// via F_{-n} = (-1)^{n+1} F_n and L_{-n} = (-1)^n L_n.

namespace detail {

// (F_n, F_{n+1}) for n >= 0 by fast doubling.
inline std::pair<Big, Big> fib_pair(u64 n) {
    if (n == 0) return {Big(0), Big(1)};
    auto [a, b] = fib_pair(n >> 1);  // a = F(k), b = F(k+1)
    Big c = a * (2 * b - a);         // F(2k)
    Big d = a * a + b * b;           // F(2k+1)
    if (n & 1) return {d, Big(c + d)};
    return {c, d};
}

// Same, reduced mod m >= 1.
inline std::pair<Big, Big> fib_pair_mod(u64 n, const Big& m) {
    if (n == 0) return {mod_norm(Big(0), m), mod_norm(Big(1), m)};
    auto [a, b] = fib_pair_mod(n >> 1, m);
    Big c = mod_norm(Big(a * (2 * b - a)), m);
    Big d = mod_norm(Big(a * a + b * b), m);
    if (n & 1) return {d, mod_norm(Big(c + d), m)};
    return {c, d};
}

}  // namespace detail

inline Big fib(i64 n) {
    u64 k = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
    Big f = detail::fib_pair(k).first;
    if (n < 0 && k % 2 == 0) return Big(-f);
    return f;
}

inline Big lucas(i64 n) {
    u64 k = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
    auto [a, b] = detail::fib_pair(k);  // F(k), F(k+1)
    Big l = 2 * b - a;                  // L(k)
    if (n < 0 && k % 2 == 1) return Big(-l);
    return l;
}

inline Big fib_mod(i64 n, const Big& m) {
    if (m < 1) throw std::invalid_argument("fib_mod: modulus must be >= 1");
    u64 k = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
    Big f = detail::fib_pair_mod(k, m).first;
    if (n < 0 && k % 2 == 0) return mod_norm(Big(-f), m);
    return f;
}

inline Big lucas_mod(i64 n, const Big& m) {
    if (m < 1) throw std::invalid_argument("lucas_mod: modulus must be >= 1");
    u64 k = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
    auto [a, b] = detail::fib_pair_mod(k, m);
    Big l = mod_norm(Big(2 * b - a), m);
    if (n < 0 && k % 2 == 1) return mod_norm(Big(-l), m);
    return l;
}

inline i64 fib_mod(i64 n, i64 m) { return to_i64(fib_mod(n, to_big(m))); }
inline i64 lucas_mod(i64 n, i64 m) { return to_i64(lucas_mod(n, to_big(m))); }

enum class FLIdentity { I1 = 1, I2, I3, I4, I5, I6, I7, I8, I9 };

inline int pow_m1(i64 n) { return (n % 2 == 0) ? 1 : -1; }

// Checks one of the identities
//   I1: L_n = F_{n-1} + F_{n+1}
//   I2: L_{-n} = (-1)^n L_n  and  F_{-n} = (-1)^{n+1} F_n
//   I3: L_m L_n = L_{m+n} + (-1)^n L_{m-n}
//   I4: 5 F_m F_n = L_{m+n} - (-1)^n L_{m-n}
//   I5: L_m F_n = F_{m+n} - (-1)^n F_{m-n}
//   I6: L_n^2 = 5 F_n^2 + 4(-1)^n = L_{2n} + 2(-1)^n
//   I7: gcd(F_m, F_n) = F_{gcd(m,n)}
//   I8: F_{m+n} = F_{m+1} F_n + F_m F_{n-1}
//   I9: F_n^2 = F_{n+r} F_{n-r} + (-1)^{n-r} F_r^2   (n >= r > 0)
// on the given indices. I1, I2, I6 take one index; the others take two.
inline bool identity_check(FLIdentity id, i64 m, i64 n = 0) {
    switch (id) {
        case FLIdentity::I1:
            return lucas(m) == fib(m - 1) + fib(m + 1);
        case FLIdentity::I2:
            return lucas(-m) == pow_m1(m) * lucas(m) && fib(-m) == -pow_m1(m) * fib(m);
        case FLIdentity::I3:
            return lucas(m) * lucas(n) == lucas(m + n) + pow_m1(n) * lucas(m - n);
        case FLIdentity::I4:
            return 5 * fib(m) * fib(n) == lucas(m + n) - pow_m1(n) * lucas(m - n);
        case FLIdentity::I5:
            return lucas(m) * fib(n) == fib(m + n) - pow_m1(n) * fib(m - n);
        case FLIdentity::I6: {
            Big l = lucas(m), f = fib(m);
            return l * l == 5 * f * f + 4 * pow_m1(m) && l * l == lucas(2 * m) + 2 * pow_m1(m);
        }
        case FLIdentity::I7:
            return gcd_v(abs_v(fib(m)), abs_v(fib(n))) == fib(std::gcd(m, n));
        case FLIdentity::I8:
            return fib(m + n) == fib(m + 1) * fib(n) + fib(m) * fib(n - 1);
        case FLIdentity::I9:
            if (!(n > 0 && m >= n)) throw std::domain_error("I9 requires n >= r > 0");
            return fib(m) * fib(m) == fib(m + n) * fib(m - n) + pow_m1(m - n) * fib(n) * fib(n);
        default:
            throw std::invalid_argument("unknown identity");
    }
}

// Least k >= 1 with p | F_k. Uses the fact that the rank divides
// p - (5|p) for p != 2, 5, so only divisors of that index are probed.
inline Big rank_of_apparition(const Big& p) {
    if (!is_prime(p)) throw std::invalid_argument("rank_of_apparition: input must be prime");
    if (p == 2) return Big(3);
    if (p == 5) return Big(5);
    int leg = mpz_kronecker(Big(5).get_mpz_t(), p.get_mpz_t());
    Big m = p - leg;
    for (const Big& d : divisors_of(m)) {
        if (!d.fits_slong_p()) continue;
        if (fib_mod(to_i64(d), p) == 0) return d;
    }
    throw inconsistent_system_error("rank_of_apparition: no rank found");
}

inline i64 rank_of_apparition(i64 p) { return to_i64(rank_of_apparition(to_big(p))); }

// Smallest prime p | F_n whose rank of apparition equals n; empty exactly
// for n in {1, 2, 6, 12}.
inline std::optional<Big> primitive_factor(i64 n) {
    if (n < 1) throw std::invalid_argument("primitive_factor: n must be >= 1");
    if (n == 1 || n == 2 || n == 6 || n == 12) return std::nullopt;
    std::vector<Big> primes = factorize(fib(n));
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    std::vector<i64> proper;
    for (i64 d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        proper.push_back(d);
        if (d != n / d) proper.push_back(n / d);
    }
    std::sort(proper.begin(), proper.end());
    proper.pop_back();  // drop n itself
    for (const Big& p : primes) {
        bool primitive = true;
        for (i64 d : proper) {
            if (fib_mod(d, p) == 0) {
                primitive = false;
                break;
            }
        }
        if (primitive) return p;
    }
    return std::nullopt;
}

}  // namespace genus1
