#pragma once

// Normal subgroup structure of ZM(m, n, r): the criterion
//   H_(m1,n1,s) normal  <=>  s = 0 and m1 | gcd(m, r^n1 - 1),
// the counting formulas
//   |N| = sum_{n1|n} tau(gcd(m, r^n1 - 1))          (general)
//   |N| = tau(n) + tau(n/d)                         (m prime)
//   |N| = tau(m) + 1                                (n prime)
// and the chain characterization: N is a chain iff m = 1 and n is a
// prime power, or m and n are both prime powers and gcd(m, r^k - 1) = 1
// for all 1 <= k < n.

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "zmlat/lattice.hpp"
#include "zmlat/numtheory.hpp"
#include "zmlat/zm.hpp"

namespace zmlat {

/// gcd(m, r^e - 1) computed mod m, with gcd(m, 0) = m.
inline i64 gcd_m_rpow_minus_1(const ZmTriple& t, i64 e) {
    return std::gcd(t.m, (pow_mod(t.r, e, t.m) + t.m - 1) % t.m);
}

/// Normality criterion: s = 0 and m1 | gcd(m, r^n1 - 1).
inline bool is_normal_criterion(const ZmTriple& t, const SubgroupTriple& st) {
    if (!in_L(t, st)) throw std::invalid_argument("is_normal_criterion: triple not in L");
    return st.s == 0 && gcd_m_rpow_minus_1(t, st.n1) % st.m1 == 0;
}

/// All of L' = { (m1, n1, 0) | m1 | gcd(m, r^n1 - 1), n1 | n }, ordered
/// by subgroup order ascending, then (m1, n1).
inline std::vector<SubgroupTriple> enumerate_normal(const ZmTriple& t) {
    std::vector<SubgroupTriple> out;
    for (i64 n1 : divisors(t.n))
        for (i64 m1 : divisors(gcd_m_rpow_minus_1(t, n1)))
            out.push_back({m1, n1, 0});
    std::sort(out.begin(), out.end(),
              [&](const SubgroupTriple& a, const SubgroupTriple& b) {
                  return detail::triple_order_less(t, a, b);
              });
    for (const auto& st : out)
        if (!in_L(t, st)) throw std::logic_error("enumerate_normal: L' escaped L");
    return out;
}

/// |N(ZM(m,n,r))| = sum over n1 | n of tau(gcd(m, r^n1 - 1)).
inline i64 count_eq1(const ZmTriple& t) {
    i64 total = 0;
    for (i64 n1 : divisors(t.n)) total += tau(gcd_m_rpow_minus_1(t, n1));
    return total;
}

/// |N| = tau(n) + tau(n/d) for prime m, d the order of r mod m.
inline i64 count_eq2(const ZmTriple& t) {
    if (!is_prime(t.m)) throw std::invalid_argument("count_eq2: m is not prime");
    if (t.n % t.d != 0) throw std::logic_error("count_eq2: d does not divide n");
    return tau(t.n) + tau(t.n / t.d);
}

/// |N| = tau(m) + 1 for prime n.
inline i64 count_eq3(const ZmTriple& t) {
    if (!is_prime(t.n)) throw std::invalid_argument("count_eq3: n is not prime");
    return tau(t.m) + 1;
}

/// Normal subgroup count of the dihedral group D_2m, m odd: tau(m) + 1.
/// Equals count_eq1(validate_triple(m, 2, m - 1)).
inline i64 dihedral_normal_count(i64 m) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("dihedral_normal_count: m must be odd and >= 3");
    return tau(m) + 1;
}

/// Condition (4): m1 | s (r^x - 1) - y (r^n1 - 1), evaluated mod m1.
/// Holds for all (x, y) exactly when H_(m1,n1,s) is normal.
inline bool condition_4_holds(const ZmTriple& t, const SubgroupTriple& st, i64 x, i64 y) {
    const i64 m1 = st.m1;
    const i64 lhs = st.s % m1 * ((pow_mod(t.r, x, m1) + m1 - 1) % m1) % m1;
    const i64 rhs = y % m1 * ((pow_mod(t.r, st.n1, m1) + m1 - 1) % m1) % m1;
    return (lhs + m1 - rhs) % m1 == 0;
}

struct ChainResult {
    bool is_chain = false;
    // Present iff is_chain: the full normal family as an ascending chain.
    std::optional<std::vector<SubgroupTriple>> chain;
};

/// Chain characterization, with the explicit chain as witness.
inline ChainResult is_chain(const ZmTriple& t) {
    if (t.n == 1) return {true, std::vector<SubgroupTriple>{{1, 1, 0}}};  // trivial group
    if (t.m == 1) {
        auto pp = is_prime_power(t.n);
        if (!pp) return {};
        std::vector<SubgroupTriple> chain;
        for (i64 n1 = t.n; n1 >= 1; n1 /= pp->p) chain.push_back({1, n1, 0});
        return {true, chain};
    }
    auto pm = is_prime_power(t.m);
    auto pn = is_prime_power(t.n);
    if (!pm || !pn) return {};
    for (i64 k = 1; k < t.n; ++k)
        if (gcd_m_rpow_minus_1(t, k) != 1) return {};
    // H_(p^u, q^v, 0) < ... < H_(1, q^v, 0) < H_(1, q^(v-1), 0) < ... < H_(1, 1, 0)
    std::vector<SubgroupTriple> chain;
    for (i64 m1 = t.m; m1 >= 1; m1 /= pm->p) chain.push_back({m1, t.n, 0});
    for (i64 n1 = t.n / pn->p; n1 >= 1; n1 /= pn->p) chain.push_back({1, n1, 0});
    return {true, chain};
}

/// Full normal-lattice report for one triple.
struct NormalLatticeReport {
    std::vector<SubgroupTriple> normal_triples;  // all with s = 0, order ascending
    i64 count_eq1 = 0;
    std::optional<i64> count_eq2;  // present iff m is prime
    std::optional<i64> count_eq3;  // present iff n is prime
    bool is_chain = false;
    std::optional<std::vector<SubgroupTriple>> chain;
    std::vector<std::pair<std::size_t, std::size_t>> hasse;  // indices into normal_triples
};

inline NormalLatticeReport normal_lattice_report(const ZmTriple& t) {
    NormalLatticeReport rep;
    rep.normal_triples = enumerate_normal(t);
    rep.count_eq1 = count_eq1(t);
    if (is_prime(t.m)) rep.count_eq2 = count_eq2(t);
    if (is_prime(t.n)) rep.count_eq3 = count_eq3(t);
    auto cr = is_chain(t);
    rep.is_chain = cr.is_chain;
    rep.chain = cr.chain;
    std::vector<MaterializedSubgroup> subs;
    subs.reserve(rep.normal_triples.size());
    for (const auto& st : rep.normal_triples) subs.push_back(materialize(t, st));
    rep.hasse = hasse_edges(subs);
    return rep;
}

}  // namespace zmlat
