#pragma once

// Brute-force ground truth, independent of the lattice formulas: the
// whole group is materialized, subgroups are found by generator-pair
// closure, and normality is tested by explicit conjugation. Used only
// for verification.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "zmlat/zm.hpp"

namespace zmlat {

inline constexpr i64 kDefaultOracleBound = 500;

inline void check_oracle_bound(const ZmTriple& t, i64 bound) {
    if (t.order() > bound)
        throw std::invalid_argument("oracle: group order " + std::to_string(t.order()) +
                                    " exceeds bound " + std::to_string(bound));
}

/// All mn elements, sorted by (x, y).
inline std::vector<GroupElement> all_elements(const ZmTriple& t,
                                              i64 bound = kDefaultOracleBound) {
    check_oracle_bound(t, bound);
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(t.order()));
    for (i64 x = 0; x < t.n; ++x)
        for (i64 y = 0; y < t.m; ++y) out.push_back({x, y});
    return out;
}

namespace detail {
inline std::size_t elem_index(const ZmTriple& t, GroupElement g) {
    return static_cast<std::size_t>(g.x * t.m + g.y);
}
}  // namespace detail

/// Subgroup generated by gens: worklist saturation under left
/// multiplication by the generators, starting from the identity.
/// Asserts that the resulting size divides mn (Lagrange).
inline std::vector<GroupElement> closure(const ZmTriple& t,
                                         const std::vector<GroupElement>& gens) {
    if (gens.empty()) throw std::invalid_argument("closure: no generators");
    const std::size_t order = static_cast<std::size_t>(t.order());
    std::vector<char> member(order, 0);
    std::vector<GroupElement> work{identity_element};
    member[detail::elem_index(t, identity_element)] = 1;
    while (!work.empty()) {
        const GroupElement g = work.back();
        work.pop_back();
        for (const GroupElement& h : gens) {
            const GroupElement p = elem_mul(t, h, g);
            std::size_t idx = detail::elem_index(t, p);
            if (!member[idx]) {
                member[idx] = 1;
                work.push_back(p);
            }
        }
    }
    std::vector<GroupElement> out;
    for (i64 x = 0; x < t.n; ++x)
        for (i64 y = 0; y < t.m; ++y)
            if (member[detail::elem_index(t, {x, y})]) out.push_back({x, y});
    if (t.order() % static_cast<i64>(out.size()) != 0)
        throw std::logic_error("closure: size does not divide the group order");
    return out;
}

/// Every subgroup, as a sorted element set, found as the closures of all
/// generator pairs. Complete because every subgroup of a ZM-group is
/// generated by two elements. Family sorted by (size, elements).
inline std::vector<std::vector<GroupElement>>
all_subgroups_bruteforce(const ZmTriple& t, i64 bound = kDefaultOracleBound) {
    check_oracle_bound(t, bound);
    const auto elems = all_elements(t, bound);
    std::unordered_set<std::string> seen;
    std::vector<std::vector<GroupElement>> out;
    auto add = [&](std::vector<GroupElement>&& sub) {
        std::string key;
        key.reserve(sub.size() * 2);
        for (const auto& g : sub) {
            const std::size_t idx = detail::elem_index(t, g);
            key.push_back(static_cast<char>(idx & 0xff));
            key.push_back(static_cast<char>((idx >> 8) & 0xff));
        }
        if (seen.insert(key).second) out.push_back(std::move(sub));
    };
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i; j < elems.size(); ++j)
            add(closure(t, {elems[i], elems[j]}));
    std::sort(out.begin(), out.end(),
              [](const std::vector<GroupElement>& a, const std::vector<GroupElement>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    return out;
}

/// Definitional normality: h^-1 g h stays inside for every g in the
/// subgroup and every conjugator h. Conjugation by the two generators
/// a and b suffices; all_conjugators checks every h instead.
inline bool is_normal_bruteforce(const ZmTriple& t, const std::vector<GroupElement>& sub,
                                 bool all_conjugators = false) {
    std::vector<char> member(static_cast<std::size_t>(t.order()), 0);
    for (const auto& g : sub) member[detail::elem_index(t, g)] = 1;
    std::vector<GroupElement> conjugators;
    if (all_conjugators) {
        conjugators = all_elements(t, t.order());
    } else {
        conjugators = {GroupElement{0, 1 % t.m}, GroupElement{1 % t.n, 0}};
    }
    for (const auto& g : sub)
        for (const auto& h : conjugators)
            if (!member[detail::elem_index(t, conjugate(t, g, h))]) return false;
    return true;
}

}  // namespace zmlat
