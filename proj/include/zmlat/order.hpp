#pragma once

// Small finite-poset helpers over an explicit "leq" relation matrix.
// leq[i][j] == true means element i is below or equal to element j.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zmlat {

using LeqMatrix = std::vector<std::vector<char>>;

/// Covering pairs (i, j): i < j strictly with nothing in between.
/// This is the transitive reduction of the order.
inline std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(const LeqMatrix& leq) {
    const std::size_t k = leq.size();
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j || !leq[i][j] || leq[j][i]) continue;
            bool direct = true;
            for (std::size_t c = 0; c < k; ++c) {
                if (c == i || c == j) continue;
                if (leq[i][c] && leq[c][j] && !leq[c][i] && !leq[j][c]) {
                    direct = false;
                    break;
                }
            }
            if (direct) covers.emplace_back(i, j);
        }
    }
    return covers;
}

/// True iff every pair of elements is comparable.
inline bool is_total_order(const LeqMatrix& leq) {
    const std::size_t k = leq.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (!leq[i][j] && !leq[j][i]) return false;
    return true;
}

namespace detail {

// Greatest lower bound of i and j, or -1 if it does not exist.
inline int glb(const LeqMatrix& leq, std::size_t i, std::size_t j) {
    const std::size_t k = leq.size();
    int best = -1;
    for (std::size_t c = 0; c < k; ++c) {
        if (!leq[c][i] || !leq[c][j]) continue;
        if (best < 0 || leq[static_cast<std::size_t>(best)][c]) best = static_cast<int>(c);
    }
    if (best < 0) return -1;
    for (std::size_t c = 0; c < k; ++c)
        if (leq[c][i] && leq[c][j] && !leq[c][static_cast<std::size_t>(best)]) return -1;
    return best;
}

inline int lub(const LeqMatrix& leq, std::size_t i, std::size_t j) {
    const std::size_t k = leq.size();
    int best = -1;
    for (std::size_t c = 0; c < k; ++c) {
        if (!leq[i][c] || !leq[j][c]) continue;
        if (best < 0 || leq[c][static_cast<std::size_t>(best)]) best = static_cast<int>(c);
    }
    if (best < 0) return -1;
    for (std::size_t c = 0; c < k; ++c)
        if (leq[i][c] && leq[j][c] && !leq[static_cast<std::size_t>(best)][c]) return -1;
    return best;
}

}  // namespace detail

/// True iff the lattice contains a five-element sublattice isomorphic
/// to the diamond M3 or the pentagon N5 (i.e. iff it is NOT distributive).
/// Throws if some pair lacks a meet or a join (the input is not a lattice).
inline bool has_m3_or_n5(const LeqMatrix& leq) {
    const std::size_t k = leq.size();
    std::vector<std::vector<int>> meet(k, std::vector<int>(k)), join(k, std::vector<int>(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            meet[i][j] = detail::glb(leq, i, j);
            join[i][j] = detail::lub(leq, i, j);
            if (meet[i][j] < 0 || join[i][j] < 0)
                throw std::invalid_argument("has_m3_or_n5: order is not a lattice");
        }
    }
    auto incomparable = [&](std::size_t i, std::size_t j) { return !leq[i][j] && !leq[j][i]; };
    // M3: three pairwise-incomparable elements with a common pairwise
    // meet p and a common pairwise join q; {p, x, y, z, q} is the diamond.
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = x + 1; y < k; ++y) {
            if (!incomparable(x, y)) continue;
            for (std::size_t z = y + 1; z < k; ++z) {
                if (!incomparable(x, z) || !incomparable(y, z)) continue;
                if (meet[x][y] == meet[y][z] && meet[y][z] == meet[x][z] &&
                    join[x][y] == join[y][z] && join[y][z] == join[x][z])
                    return true;
            }
        }
    // N5: a < c both incomparable to b, with meet(a,b) = meet(c,b) and
    // join(a,b) = join(c,b); {meet, a, c, b, join} is the pentagon.
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t c = 0; c < k; ++c) {
            if (a == c || !leq[a][c] || leq[c][a]) continue;
            for (std::size_t b = 0; b < k; ++b) {
                if (!incomparable(a, b) || !incomparable(c, b)) continue;
                if (meet[a][b] == meet[c][b] && join[a][b] == join[c][b]) return true;
            }
        }
    return false;
}

}  // namespace zmlat
