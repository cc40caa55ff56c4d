#pragma once

// Exhaustive verification over every valid triple (m, n, r) with
// mn <= B: the counting formulas against each other and against the
// brute-force oracle, the chain characterization against order
// totality, and the structural lattice invariants.

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "zmlat/lattice.hpp"
#include "zmlat/normal.hpp"
#include "zmlat/oracle.hpp"
#include "zmlat/order.hpp"

namespace zmlat {

enum class CheckKind { counts, chains, all };

inline const char* check_kind_name(CheckKind k) {
    switch (k) {
        case CheckKind::counts: return "counts";
        case CheckKind::chains: return "chains";
        case CheckKind::all: return "all";
    }
    return "?";
}

/// Every valid triple with mn <= max_order, in (m, n, r) order.
/// For each coprime (m, n) all canonical r in [0, m) that pass
/// validation appear exactly once.
inline std::vector<ZmTriple> valid_triples_up_to(i64 max_order) {
    std::vector<ZmTriple> out;
    for (i64 m = 1; m <= max_order; ++m) {
        for (i64 n = 1; m * n <= max_order; ++n) {
            for (i64 r = 0; r < std::max<i64>(m, 1); ++r) {
                try {
                    out.push_back(validate_triple(m, n, r));
                } catch (const triple_error&) {
                }
            }
        }
    }
    return out;
}

/// Outcome of checking one triple; one CSV row.
struct TripleCheckResult {
    ZmTriple t;
    i64 n_subgroups = 0;
    i64 n_normal = 0;
    bool eq2_applicable = false;
    bool eq3_applicable = false;
    bool chain = false;
    bool passed = true;
    std::string failure;  // first failed check, empty when passed
};

namespace detail {

inline void fail(TripleCheckResult& res, const std::string& what) {
    if (res.passed) {
        res.passed = false;
        res.failure = what;
    }
}

inline std::string elem_set_str(const std::vector<GroupElement>& sub) {
    std::ostringstream os;
    os << "{";
    for (const auto& g : sub) os << " (" << g.x << "," << g.y << ")";
    os << " }";
    return os.str();
}

}  // namespace detail

inline TripleCheckResult check_triple(const ZmTriple& t, CheckKind kind,
                                      i64 oracle_bound = kDefaultOracleBound) {
    TripleCheckResult res;
    res.t = t;

    const auto L = enumerate_L(t);
    const auto normal = enumerate_normal(t);
    res.n_subgroups = static_cast<i64>(L.size());
    res.n_normal = static_cast<i64>(normal.size());
    res.eq2_applicable = is_prime(t.m);
    res.eq3_applicable = is_prime(t.n);
    const auto chain = is_chain(t);
    res.chain = chain.is_chain;

    const bool do_counts = kind == CheckKind::counts || kind == CheckKind::all;
    const bool do_chains = kind == CheckKind::chains || kind == CheckKind::all;
    const bool do_oracle = kind == CheckKind::all;

    if (do_counts) {
        if (count_eq1(t) != res.n_normal) detail::fail(res, "eq1 != |enumerate_normal|");
        if (res.eq2_applicable && count_eq2(t) != count_eq1(t))
            detail::fail(res, "eq2 != eq1");
        if (res.eq3_applicable && count_eq3(t) != count_eq1(t))
            detail::fail(res, "eq3 != eq1");
        std::set<i64> orders;
        for (const auto& st : normal)
            if (!orders.insert(subgroup_order(t, st)).second)
                detail::fail(res, "repeated normal subgroup order");
    }

    // Materialized normal family and its inclusion order.
    std::vector<MaterializedSubgroup> normal_subs;
    normal_subs.reserve(normal.size());
    for (const auto& st : normal) normal_subs.push_back(materialize(t, st));
    const LeqMatrix leq = inclusion_matrix(normal_subs);

    if (do_chains) {
        if (chain.is_chain != is_total_order(leq))
            detail::fail(res, "chain predicate disagrees with order totality");
        if (chain.is_chain && *chain.chain != normal)
            detail::fail(res, "constructed chain differs from the normal family");
    }

    if (do_oracle) {
        // Derived inclusion criterion on normal subgroups:
        // H_(m1,n1,0) <= H_(m2,n2,0) iff m2 | m1 and n2 | n1.
        for (std::size_t i = 0; i < normal.size(); ++i)
            for (std::size_t j = 0; j < normal.size(); ++j) {
                const bool div = normal[j].m1 % normal[i].m1 == 0 &&
                                 normal[j].n1 % normal[i].n1 == 0;
                if (div != static_cast<bool>(leq[j][i]))
                    detail::fail(res, "divisibility inclusion criterion disagrees");
            }

        // Sublattice L1 = { H_(1,n1,0) } is present and ordered like the
        // divisor lattice of n.
        std::map<i64, std::size_t> l1;
        for (std::size_t i = 0; i < normal.size(); ++i)
            if (normal[i].m1 == 1) l1[normal[i].n1] = i;
        for (i64 n1 : divisors(t.n))
            if (!l1.count(n1)) detail::fail(res, "L1 member missing from normal family");
        for (const auto& [na, ia] : l1)
            for (const auto& [nb, ib] : l1)
                if ((nb % na == 0) != static_cast<bool>(leq[ib][ia]))
                    detail::fail(res, "L1 order is not the divisor lattice of n");

        // N(ZM) is distributive: no M3 or N5 sublattice.
        if (has_m3_or_n5(leq)) detail::fail(res, "normal lattice not distributive");

        // Bijection between L and the oracle's subgroup family.
        const auto oracle_subs = all_subgroups_bruteforce(t, oracle_bound);
        std::set<std::vector<GroupElement>> from_L;
        std::vector<MaterializedSubgroup> mats;
        for (const auto& st : L) {
            auto mat = materialize(t, st);
            if (!from_L.insert(mat.elements).second)
                detail::fail(res, "two L triples materialize the same subgroup");
            mats.push_back(std::move(mat));
        }
        std::set<std::vector<GroupElement>> from_oracle(oracle_subs.begin(),
                                                        oracle_subs.end());
        if (from_L != from_oracle)
            detail::fail(res, "L does not match the brute-force subgroup family");

        // Theorem 1 criterion against conjugation normality, and the
        // normal count against the oracle.
        i64 oracle_normal = 0;
        for (const auto& mat : mats) {
            const bool brute = is_normal_bruteforce(t, mat.elements);
            if (brute) ++oracle_normal;
            if (brute != is_normal_criterion(t, mat.index))
                detail::fail(res, "normality criterion disagrees with conjugation");
        }
        if (oracle_normal != count_eq1(t))
            detail::fail(res, "eq1 differs from brute-force normal count");
    }

    return res;
}

/// One CSV row per triple, header included; deterministic order.
inline std::string scan_csv_header() {
    return "m,n,r,d,order,n_subgroups,n_normal,eq2_applicable,eq3_applicable,"
           "is_chain,checks_passed";
}

inline std::string scan_csv_row(const TripleCheckResult& res) {
    std::ostringstream os;
    os << res.t.m << ',' << res.t.n << ',' << res.t.r << ',' << res.t.d << ','
       << res.t.order() << ',' << res.n_subgroups << ',' << res.n_normal << ','
       << (res.eq2_applicable ? 1 : 0) << ',' << (res.eq3_applicable ? 1 : 0) << ','
       << (res.chain ? 1 : 0) << ',' << (res.passed ? 1 : 0);
    return os.str();
}

}  // namespace zmlat
