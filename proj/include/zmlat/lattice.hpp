#pragma once

// The subgroup lattice of ZM(m, n, r) via the index set
//   L = { (m1, n1, s) | m1|m, n1|n, s < m1, m1 | s (r^n - 1)/(r^n1 - 1) },
// each triple naming the subgroup H = < a^m1, b^n1 a^s > of order mn/(m1 n1).

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zmlat/numtheory.hpp"
#include "zmlat/order.hpp"
#include "zmlat/zm.hpp"

namespace zmlat {

/// An index (m1, n1, s) into the subgroup lattice.
struct SubgroupTriple {
    i64 m1;
    i64 n1;
    i64 s;
    friend auto operator<=>(const SubgroupTriple&, const SubgroupTriple&) = default;
};

inline i64 subgroup_order(const ZmTriple& t, const SubgroupTriple& st) {
    return t.order() / (st.m1 * st.n1);
}

/// Membership of (m1, n1, s) in L. The divisor (r^n - 1)/(r^n1 - 1) is
/// evaluated as the geometric sum 1 + r^n1 + ... + r^(n - n1) mod m1,
/// never as an integer quotient.
inline bool in_L(const ZmTriple& t, const SubgroupTriple& st) {
    if (st.m1 < 1 || st.n1 < 1 || t.m % st.m1 != 0 || t.n % st.n1 != 0) return false;
    if (st.s < 0 || st.s >= st.m1) return false;
    return st.s * geometric_sum_mod(t.r, st.n1, t.n / st.n1, st.m1) % st.m1 == 0;
}

namespace detail {
// Enumeration order: subgroup order ascending, then (m1, n1, s).
inline bool triple_order_less(const ZmTriple& t, const SubgroupTriple& a, const SubgroupTriple& b) {
    i64 oa = subgroup_order(t, a), ob = subgroup_order(t, b);
    if (oa != ob) return oa < ob;
    return a < b;
}
}  // namespace detail

/// All triples of L, ordered by subgroup order ascending, then (m1, n1, s).
inline std::vector<SubgroupTriple> enumerate_L(const ZmTriple& t) {
    std::vector<SubgroupTriple> out;
    for (i64 m1 : divisors(t.m)) {
        for (i64 n1 : divisors(t.n)) {
            const i64 gs = geometric_sum_mod(t.r, n1, t.n / n1, m1);
            for (i64 s = 0; s < m1; ++s)
                if (s * gs % m1 == 0) out.push_back({m1, n1, s});
        }
    }
    std::sort(out.begin(), out.end(),
              [&](const SubgroupTriple& a, const SubgroupTriple& b) {
                  return detail::triple_order_less(t, a, b);
              });
    return out;
}

/// One subgroup as its explicit, canonically sorted element set.
struct MaterializedSubgroup {
    ZmTriple group;
    SubgroupTriple index;
    std::vector<GroupElement> elements;  // sorted by (x, y)

    bool contains(GroupElement g) const {
        return std::binary_search(elements.begin(), elements.end(), g);
    }
};

/// Builds H_(m1,n1,s) as the union of cosets (b^n1 a^s)^k <a^m1>,
/// k = 1 .. n/n1, and asserts the cardinality mn/(m1 n1).
inline MaterializedSubgroup materialize(const ZmTriple& t, const SubgroupTriple& st) {
    if (!in_L(t, st)) throw std::invalid_argument("materialize: triple not in L");
    const GroupElement gen{st.n1 % t.n, st.s};
    std::set<GroupElement> elems;
    for (i64 k = 1; k <= t.n / st.n1; ++k) {
        const GroupElement pk = elem_pow(t, gen, k);
        for (i64 j = 0; j < t.m / st.m1; ++j)
            elems.insert(elem_mul(t, pk, {0, j * st.m1 % t.m}));
    }
    MaterializedSubgroup sub{t, st, {elems.begin(), elems.end()}};
    if (static_cast<i64>(sub.elements.size()) != subgroup_order(t, st))
        throw std::logic_error("materialize: cardinality differs from mn/(m1 n1)");
    return sub;
}

/// True iff b is a subset of a. Both must live in the same group.
inline bool includes(const MaterializedSubgroup& a, const MaterializedSubgroup& b) {
    if (a.group != b.group)
        throw std::invalid_argument("includes: subgroups of different groups");
    return std::includes(a.elements.begin(), a.elements.end(),
                         b.elements.begin(), b.elements.end());
}

inline LeqMatrix inclusion_matrix(const std::vector<MaterializedSubgroup>& subs) {
    const std::size_t k = subs.size();
    LeqMatrix leq(k, std::vector<char>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            leq[i][j] = includes(subs[j], subs[i]);
    return leq;
}

/// Covering pairs (i, j) of the inclusion order: subs[i] strictly below
/// subs[j] with no subgroup in between.
inline std::vector<std::pair<std::size_t, std::size_t>>
hasse_edges(const std::vector<MaterializedSubgroup>& subs) {
    auto covers = covering_pairs(inclusion_matrix(subs));
    std::sort(covers.begin(), covers.end());
    return covers;
}

}  // namespace zmlat
