#pragma once

// Parameter validation and element arithmetic for the metacyclic group
//   ZM(m, n, r) = < a, b | a^m = b^n = 1, b^-1 a b = a^r >
// with gcd(m, n) = gcd(m, r-1) = 1 and r^n == 1 (mod m).
// Elements are written in the normal form b^x a^y.

#include <numeric>
#include <stdexcept>
#include <string>

#include "zmlat/numtheory.hpp"

namespace zmlat {

enum class TripleFault {
    non_positive_m,
    non_positive_n,
    gcd_m_n,       // gcd(m, n) != 1
    gcd_m_r1,      // gcd(m, r - 1) != 1
    r_pow_n,       // r^n != 1 (mod m)
    order_bound,   // mn exceeds the word-size bound
};

class triple_error : public std::invalid_argument {
public:
    triple_error(TripleFault fault, const std::string& msg)
        : std::invalid_argument(msg), fault_(fault) {}
    TripleFault fault() const { return fault_; }

private:
    TripleFault fault_;
};

/// Validated parameters (m, n, r) with the multiplicative order d of
/// r mod m cached. Construct via validate_triple.
struct ZmTriple {
    i64 m;  // order of <a>
    i64 n;  // order of <b>
    i64 r;  // canonical residue in [0, m)
    i64 d;  // multiplicative order of r modulo m

    i64 order() const { return m * n; }
    friend bool operator==(const ZmTriple&, const ZmTriple&) = default;
};

/// One of the mn elements b^x a^y, 0 <= x < n, 0 <= y < m.
struct GroupElement {
    i64 x;
    i64 y;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

inline constexpr GroupElement identity_element{0, 0};

/// Checks the defining conditions and canonicalizes r into [0, m).
/// Throws triple_error naming the first violated condition.
inline ZmTriple validate_triple(i64 m, i64 n, i64 r) {
    if (m < 1) throw triple_error(TripleFault::non_positive_m, "m must be >= 1");
    if (n < 1) throw triple_error(TripleFault::non_positive_n, "n must be >= 1");
    if (m > kMaxModulus / n)
        throw triple_error(TripleFault::order_bound, "group order mn exceeds 2^31");
    i64 rc = r % m;
    if (rc < 0) rc += m;
    if (std::gcd(m, n) != 1)
        throw triple_error(TripleFault::gcd_m_n, "gcd(m, n) != 1");
    // gcd(m, r - 1) evaluated mod m; gcd(m, 0) = m covers r == 1.
    if (std::gcd(m, (rc + m - 1) % m) != 1)
        throw triple_error(TripleFault::gcd_m_r1, "gcd(m, r - 1) != 1");
    if (pow_mod(rc, n, m) != 1 % m)
        throw triple_error(TripleFault::r_pow_n, "r^n != 1 (mod m)");
    return ZmTriple{m, n, rc, mult_order(rc, m)};
}

/// b^x1 a^y1 * b^x2 a^y2 = b^(x1+x2) a^(r^x2 y1 + y2).
inline GroupElement elem_mul(const ZmTriple& t, GroupElement g, GroupElement h) {
    return {(g.x + h.x) % t.n, (pow_mod(t.r, h.x, t.m) * g.y + h.y) % t.m};
}

/// (b^x a^y)^-1 = b^-x a^(-r^-x y), with r^-x realized as r^(n-x).
inline GroupElement elem_inv(const ZmTriple& t, GroupElement g) {
    i64 xinv = (t.n - g.x) % t.n;
    i64 yinv = (t.m - pow_mod(t.r, xinv, t.m) * g.y % t.m) % t.m;
    return {xinv, yinv};
}

/// k-th power via the closed form (b^x a^y)^k = b^kx a^(y (r^kx - 1)/(r^x - 1)),
/// the quotient evaluated as the geometric sum 1 + r^x + ... + r^((k-1)x).
/// Negative k routes through the inverse.
inline GroupElement elem_pow(const ZmTriple& t, GroupElement g, i64 k) {
    if (k < 0) return elem_pow(t, elem_inv(t, g), -k);
    k %= t.order();  // element orders divide mn
    return {k * g.x % t.n, g.y * geometric_sum_mod(t.r, g.x, k, t.m) % t.m};
}

/// h^-1 g h.
inline GroupElement conjugate(const ZmTriple& t, GroupElement g, GroupElement h) {
    return elem_mul(t, elem_mul(t, elem_inv(t, h), g), h);
}

}  // namespace zmlat
