#pragma once

// Stable machine-readable renderings of a lattice: JSON (fixed key
// order) and DOT (Hasse diagram). Byte-identical output for identical
// inputs.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zmlat/lattice.hpp"
#include "zmlat/normal.hpp"

namespace zmlat {

enum class LatticeKind { full, normal };

/// Rows of the subgroups table, in enumeration order.
struct LatticeReport {
    ZmTriple t;
    LatticeKind kind;
    std::vector<SubgroupTriple> triples;
    std::vector<char> normal_flags;
    i64 count_eq1 = 0;
    std::optional<i64> count_eq2;
    std::optional<i64> count_eq3;
    bool chain = false;
    std::vector<std::pair<std::size_t, std::size_t>> hasse;
};

inline LatticeReport build_report(const ZmTriple& t, LatticeKind kind) {
    LatticeReport rep;
    rep.t = t;
    rep.kind = kind;
    rep.triples = kind == LatticeKind::full ? enumerate_L(t) : enumerate_normal(t);
    rep.normal_flags.reserve(rep.triples.size());
    std::vector<MaterializedSubgroup> subs;
    subs.reserve(rep.triples.size());
    for (const auto& st : rep.triples) {
        rep.normal_flags.push_back(is_normal_criterion(t, st));
        subs.push_back(materialize(t, st));
    }
    rep.count_eq1 = count_eq1(t);
    if (is_prime(t.m)) rep.count_eq2 = count_eq2(t);
    if (is_prime(t.n)) rep.count_eq3 = count_eq3(t);
    rep.chain = is_chain(t).is_chain;
    rep.hasse = hasse_edges(subs);
    return rep;
}

inline std::string to_json(const LatticeReport& rep) {
    nlohmann::ordered_json doc;
    doc["m"] = rep.t.m;
    doc["n"] = rep.t.n;
    doc["r"] = rep.t.r;
    doc["d"] = rep.t.d;
    doc["order"] = rep.t.order();
    auto subs = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rep.triples.size(); ++i) {
        const auto& st = rep.triples[i];
        subs.push_back({{"m1", st.m1},
                        {"n1", st.n1},
                        {"s", st.s},
                        {"order", subgroup_order(rep.t, st)},
                        {"normal", static_cast<bool>(rep.normal_flags[i])}});
    }
    doc["subgroups"] = std::move(subs);
    doc["normal_count_eq1"] = rep.count_eq1;
    doc["normal_count_eq2"] = rep.count_eq2 ? nlohmann::ordered_json(*rep.count_eq2)
                                            : nlohmann::ordered_json(nullptr);
    doc["normal_count_eq3"] = rep.count_eq3 ? nlohmann::ordered_json(*rep.count_eq3)
                                            : nlohmann::ordered_json(nullptr);
    doc["is_chain"] = rep.chain;
    auto hasse = nlohmann::ordered_json::array();
    for (const auto& [i, j] : rep.hasse) hasse.push_back({i, j});
    doc["hasse"] = std::move(hasse);
    return doc.dump(2) + "\n";
}

/// DOT digraph of the Hasse covering edges, smaller subgroup pointing
/// at the larger one. Normal nodes are drawn with a double border.
inline std::string to_dot(const LatticeReport& rep) {
    std::string out = "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < rep.triples.size(); ++i) {
        const auto& st = rep.triples[i];
        out += "  s" + std::to_string(i) + " [label=\"(" + std::to_string(st.m1) + "," +
               std::to_string(st.n1) + "," + std::to_string(st.s) +
               ") |H|=" + std::to_string(subgroup_order(rep.t, st)) + "\"";
        if (rep.normal_flags[i]) out += ", peripheries=2";
        out += "];\n";
    }
    for (const auto& [i, j] : rep.hasse)
        out += "  s" + std::to_string(i) + " -> s" + std::to_string(j) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace zmlat
