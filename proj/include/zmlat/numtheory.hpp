#pragma once

// Exact integer and modular arithmetic primitives.
// All routines work on 64-bit signed integers; moduli are bounded by
// 2^31 so intermediate products never overflow.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace zmlat {

using i64 = std::int64_t;

// Largest modulus (and group order) the word-size arithmetic supports.
inline constexpr i64 kMaxModulus = i64{1} << 31;

struct PrimePower {
    i64 p;  // prime base
    i64 e;  // exponent >= 1
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

inline void require_positive(i64 n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

/// All divisors of n in strictly increasing order.
inline std::vector<i64> divisors(i64 n) {
    require_positive(n, "divisors: n");
    std::vector<i64> small, large;
    for (i64 d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Number of divisors of n.
inline i64 tau(i64 n) {
    return static_cast<i64>(divisors(n).size());
}

/// base^exp mod modulus by square-and-multiply.
inline i64 pow_mod(i64 base, i64 exp, i64 modulus) {
    require_positive(modulus, "pow_mod: modulus");
    if (modulus > kMaxModulus) throw std::overflow_error("pow_mod: modulus exceeds word-size bound");
    if (exp < 0) throw std::invalid_argument("pow_mod: negative exponent");
    i64 b = base % modulus;
    if (b < 0) b += modulus;
    i64 acc = 1 % modulus;
    while (exp > 0) {
        if (exp & 1) acc = acc * b % modulus;
        b = b * b % modulus;
        exp >>= 1;
    }
    return acc;
}

/// Smallest d >= 1 with r^d == 1 (mod m). Requires gcd(r, m) = 1.
inline i64 mult_order(i64 r, i64 m) {
    require_positive(m, "mult_order: m");
    i64 rm = r % m;
    if (rm < 0) rm += m;
    if (std::gcd(rm, m) != 1) throw std::invalid_argument("mult_order: gcd(r, m) != 1");
    if (m == 1) return 1;
    i64 acc = rm % m;
    i64 d = 1;
    while (acc != 1) {
        acc = acc * rm % m;
        ++d;
    }
    return d;
}

/// Sum_{j=0}^{k-1} r^{jx} mod modulus, evaluated by iterated addition.
/// Never uses modular division: the step r^x need not be invertible.
inline i64 geometric_sum_mod(i64 r, i64 x, i64 k, i64 modulus) {
    require_positive(modulus, "geometric_sum_mod: modulus");
    if (k < 0) throw std::invalid_argument("geometric_sum_mod: negative k");
    const i64 step = pow_mod(r, x, modulus);
    i64 sum = 0;
    i64 term = 1 % modulus;
    for (i64 j = 0; j < k; ++j) {
        sum = (sum + term) % modulus;
        term = term * step % modulus;
    }
    return sum;
}

/// (p, e) with n = p^e if n is a prime power; absent for n = 1 and
/// for n with more than one prime factor.
inline std::optional<PrimePower> is_prime_power(i64 n) {
    require_positive(n, "is_prime_power: n");
    if (n == 1) return std::nullopt;
    i64 p = 0;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return PrimePower{n, 1};  // n itself is prime
    i64 e = 0;
    i64 rest = n;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) return std::nullopt;
    return PrimePower{p, e};
}

/// True iff n is prime.
inline bool is_prime(i64 n) {
    if (n < 2) return false;
    auto pp = is_prime_power(n);
    return pp && pp->e == 1;
}

}  // namespace zmlat
