#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace genus1 {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using Big = mpz_class;

struct overflow_error : std::overflow_error {
    using std::overflow_error::overflow_error;
};

struct invalid_curve_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct modular_division_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct degenerate_family_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct inconsistent_system_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct hypothesis_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct classification_gap_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Checked machine-width arithmetic. Throws instead of wrapping; callers that
// expect large values instantiate the templated types with Big instead.
inline i64 add_ck(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("int64 add overflow");
    return r;
}
inline i64 sub_ck(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("int64 sub overflow");
    return r;
}
inline i64 mul_ck(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("int64 mul overflow");
    return r;
}
inline i64 neg_ck(i64 a) { return sub_ck(0, a); }

inline Big add_ck(const Big& a, const Big& b) { return Big(a + b); }
inline Big sub_ck(const Big& a, const Big& b) { return Big(a - b); }
inline Big mul_ck(const Big& a, const Big& b) { return Big(a * b); }
inline Big neg_ck(const Big& a) { return Big(-a); }

inline i64 abs_v(i64 a) { return a < 0 ? neg_ck(a) : a; }
inline Big abs_v(const Big& a) { return Big(abs(a)); }

inline i64 gcd_v(i64 a, i64 b) { return std::gcd(a, b); }
inline Big gcd_v(const Big& a, const Big& b) {
    Big r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline int sign_of(i64 a) { return a > 0 ? 1 : a < 0 ? -1 : 0; }
inline int sign_of(const Big& a) { return sgn(a); }

inline Big to_big(i64 a) { return Big(std::to_string(a)); }
inline Big to_big(const Big& a) { return a; }

inline i64 to_i64(const Big& a) {
    if (!a.fits_slong_p()) throw overflow_error("Big value does not fit int64");
    return static_cast<i64>(a.get_si());
}

// Value of a mod m normalized to [0, m), m >= 1.
inline i64 mod_norm(i64 a, i64 m) {
    if (m < 1) throw std::invalid_argument("mod_norm: modulus must be >= 1");
    i64 r = a % m;
    return r < 0 ? r + m : r;
}
inline Big mod_norm(const Big& a, const Big& m) {
    if (m < 1) throw std::invalid_argument("mod_norm: modulus must be >= 1");
    Big r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Inverse of a mod m; defined only when gcd(a, m) = 1.
inline Big mod_inv(const Big& a, const Big& m) {
    if (m < 1) throw std::invalid_argument("mod_inv: modulus must be >= 1");
    if (m == 1) return Big(0);
    Big r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw modular_division_error("mod_inv: residue not invertible");
    return r;
}
inline i64 mod_inv(i64 a, i64 m) { return to_i64(mod_inv(Big(a), Big(m))); }

// Modular quotient r/s mod m, an error when gcd(s, m) > 1.
inline Big mod_div(const Big& r, const Big& s, const Big& m) {
    return mod_norm(Big(mod_norm(r, m) * mod_inv(s, m)), m);
}

inline i64 isqrt_floor(i64 n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative value");
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Exact integer square root: nullopt when n is not a perfect square.
inline std::optional<i64> isqrt_exact(i64 n) {
    if (n < 0) return std::nullopt;
    i64 r = isqrt_floor(n);
    if (r * r != n) return std::nullopt;
    return r;
}

inline bool is_prime(const Big& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}
inline bool is_prime(i64 n) { return is_prime(Big(n)); }

// Deterministically seeded Pollard rho; n must be composite, odd, > 1.
inline Big pollard_rho(const Big& n) {
    for (unsigned c = 1;; ++c) {
        Big x(2 + c), y = x, d(1);
        while (d == 1) {
            x = mod_norm(Big(x * x + c), n);
            y = mod_norm(Big(y * y + c), n);
            y = mod_norm(Big(y * y + c), n);
            d = gcd_v(Big(x - y), n);
        }
        if (d != n) return d;
    }
}

// Prime factorization with multiplicity, ascending. Trial division first,
// rho fallback for what survives.
inline std::vector<Big> factorize(Big n) {
    std::vector<Big> out;
    if (n < 0) n = -n;
    if (n < 2) return out;
    for (Big p(2); p * p <= n && p < 1000000; p = (p == 2 ? Big(3) : Big(p + 2))) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    std::vector<Big> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        Big m = stack.back();
        stack.pop_back();
        if (is_prime(m)) {
            out.push_back(m);
            continue;
        }
        Big d = pollard_rho(m);
        stack.push_back(d);
        stack.push_back(Big(m / d));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Big> divisors_of(const Big& n) {
    std::vector<Big> ds{Big(1)};
    Big cur = n;
    auto fs = factorize(cur);
    std::size_t i = 0;
    while (i < fs.size()) {
        std::size_t j = i;
        while (j < fs.size() && fs[j] == fs[i]) ++j;
        std::size_t mult = j - i;
        std::size_t base = ds.size();
        Big pk(1);
        for (std::size_t e = 1; e <= mult; ++e) {
            pk *= fs[i];
            for (std::size_t k = 0; k < base; ++k) ds.push_back(Big(ds[k] * pk));
        }
        i = j;
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline i64 euler_phi(i64 n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    i64 result = n;
    i64 m = n;
    for (i64 p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

}  // namespace genus1
