#include <doctest.h>

#include <set>
#include <utility>
#include <vector>

#include "zmlat/lattice.hpp"
#include "zmlat/oracle.hpp"
#include "zmlat/scan.hpp"

using namespace zmlat;

namespace {

// Independent transitive reduction: keep edge i -> j of the strict order
// iff it is not implied through any intermediate chain, computed from
// the reachability closure rather than the covering test.
std::vector<std::pair<std::size_t, std::size_t>>
generic_transitive_reduction(const LeqMatrix& leq) {
    const std::size_t k = leq.size();
    std::vector<std::vector<char>> strict(k, std::vector<char>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            strict[i][j] = leq[i][j] && !leq[j][i];
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (!strict[i][j]) continue;
            bool implied = false;
            for (std::size_t c = 0; c < k && !implied; ++c)
                implied = strict[i][c] && strict[c][j];
            if (!implied) edges.emplace_back(i, j);
        }
    return edges;
}

std::vector<MaterializedSubgroup> materialize_all(const ZmTriple& t) {
    std::vector<MaterializedSubgroup> subs;
    for (const auto& st : enumerate_L(t)) subs.push_back(materialize(t, st));
    return subs;
}

}  // namespace

TEST_CASE("enumerate_L: counts on named groups") {
    CHECK(enumerate_L(validate_triple(7, 3, 2)).size() == 10);
    CHECK(enumerate_L(validate_triple(5, 4, 2)).size() == 14);
    for (i64 q : {2, 3, 5, 7, 11})
        CHECK(enumerate_L(validate_triple(1, q, 0)).size() == 2);
}

TEST_CASE("enumerate_L: bounds and ordering") {
    for (const auto& t : valid_triples_up_to(100)) {
        const auto L = enumerate_L(t);
        REQUIRE(!L.empty());
        // trivial subgroup first, whole group last
        CHECK(L.front() == SubgroupTriple{t.m, t.n, 0});
        CHECK(L.back() == SubgroupTriple{1, 1, 0});
        for (std::size_t i = 1; i < L.size(); ++i) {
            const i64 oa = subgroup_order(t, L[i - 1]), ob = subgroup_order(t, L[i]);
            CHECK((oa < ob || (oa == ob && L[i - 1] < L[i])));
        }
        for (const auto& st : L) CHECK(in_L(t, st));
    }
}

TEST_CASE("materialize: named subgroups of ZM(7,3,2)") {
    const auto t = validate_triple(7, 3, 2);

    // <a> = derived subgroup, all alpha(0, y)
    const auto a_sub = materialize(t, {1, 3, 0});
    REQUIRE(a_sub.elements.size() == 7);
    for (i64 y = 0; y < 7; ++y) CHECK(a_sub.contains({0, y}));

    // trivial subgroup
    const auto trivial = materialize(t, {7, 3, 0});
    CHECK(trivial.elements == std::vector<GroupElement>{identity_element});

    // <b>
    const auto b_sub = materialize(t, {7, 1, 0});
    CHECK(b_sub.elements == std::vector<GroupElement>{{0, 0}, {1, 0}, {2, 0}});

    CHECK_THROWS_AS(materialize(t, {7, 3, 1}), std::invalid_argument);  // not in L
}

TEST_CASE("includes") {
    const auto t = validate_triple(7, 3, 2);
    const auto whole = materialize(t, {1, 1, 0});
    const auto trivial = materialize(t, {7, 3, 0});
    const auto a_sub = materialize(t, {1, 3, 0});
    const auto b_sub = materialize(t, {7, 1, 0});

    CHECK(includes(whole, a_sub));
    CHECK(includes(whole, b_sub));
    CHECK(includes(a_sub, trivial));
    CHECK(!includes(trivial, a_sub));
    CHECK(!includes(a_sub, b_sub));

    const auto other = materialize(validate_triple(5, 4, 2), {1, 1, 0});
    CHECK_THROWS_AS(includes(whole, other), std::invalid_argument);
}

TEST_CASE("hasse_edges: small shapes") {
    const auto t = validate_triple(1, 8, 0);  // Z_8: chain of 4 subgroups
    const auto subs = materialize_all(t);
    REQUIRE(subs.size() == 4);
    CHECK(hasse_edges(subs).size() == 3);

    const auto single = std::vector<MaterializedSubgroup>{subs[0]};
    CHECK(hasse_edges(single).empty());
}

TEST_CASE("hasse_edges equals a generic transitive reduction") {
    for (const auto& t : valid_triples_up_to(100)) {
        const auto subs = materialize_all(t);
        auto expected = generic_transitive_reduction(inclusion_matrix(subs));
        std::sort(expected.begin(), expected.end());
        CHECK(hasse_edges(subs) == expected);
    }
}

TEST_CASE("bijection with the brute-force subgroup family, mn <= 100") {
    // mn <= 200 is covered by the acceptance suite; keep the unit run fast.
    for (const auto& t : valid_triples_up_to(100)) {
        std::set<std::vector<GroupElement>> from_L;
        for (const auto& st : enumerate_L(t)) {
            const auto mat = materialize(t, st);
            CHECK(static_cast<i64>(mat.elements.size()) == subgroup_order(t, st));
            CHECK(from_L.insert(mat.elements).second);  // pairwise distinct
        }
        const auto oracle = all_subgroups_bruteforce(t);
        const std::set<std::vector<GroupElement>> from_oracle(oracle.begin(), oracle.end());
        CHECK(from_L == from_oracle);
    }
}

TEST_CASE("triples outside L generate strictly larger closures, mn <= 60") {
    for (const auto& t : valid_triples_up_to(60)) {
        for (i64 m1 : divisors(t.m))
            for (i64 n1 : divisors(t.n))
                for (i64 s = 0; s < m1; ++s) {
                    const SubgroupTriple st{m1, n1, s};
                    if (in_L(t, st)) continue;
                    const auto gen = closure(
                        t, {GroupElement{0, m1 % t.m}, GroupElement{n1 % t.n, s}});
                    CHECK(static_cast<i64>(gen.size()) > subgroup_order(t, st));
                }
    }
}
