// zmlat: subgroup and normal-subgroup lattices of ZM(m, n, r).
//
// Subcommands:
//   validate m n r              check the defining conditions
//   subgroups m n r             list the full subgroup lattice
//   normal m n r                list the normal subgroups and counts
//   export m n r [--lattice full|normal] [--format dot|json] [--out PATH]
//   scan --max-order B [--check all|counts|chains] [--out PATH]
//
// Exit codes: 0 success, 1 usage error, 2 invalid triple,
// 3 verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zmlat/export.hpp"
#include "zmlat/normal.hpp"
#include "zmlat/scan.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInvalidTriple = 2;
constexpr int kExitVerification = 3;

zmlat::ZmTriple validate_or_exit(zmlat::i64 m, zmlat::i64 n, zmlat::i64 r) {
    try {
        return zmlat::validate_triple(m, n, r);
    } catch (const zmlat::triple_error& e) {
        std::cerr << "invalid triple (" << m << ", " << n << ", " << r << "): " << e.what()
                  << "\n";
        std::exit(kExitInvalidTriple);
    }
}

void write_output(const std::string& body, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open " << out_path << " for writing\n";
        std::exit(kExitUsage);
    }
    out << body;
    if (!out) {
        std::cerr << "write failed: " << out_path << "\n";
        std::exit(kExitUsage);
    }
}

void print_table(const zmlat::LatticeReport& rep) {
    std::cout << "ZM(" << rep.t.m << "," << rep.t.n << "," << rep.t.r << ")  order "
              << rep.t.order() << "  d=" << rep.t.d << "\n";
    std::cout << "  m1  n1   s  |H|  normal\n";
    for (std::size_t i = 0; i < rep.triples.size(); ++i) {
        const auto& st = rep.triples[i];
        std::printf("%4lld%4lld%4lld%5lld  %s\n", static_cast<long long>(st.m1),
                    static_cast<long long>(st.n1), static_cast<long long>(st.s),
                    static_cast<long long>(zmlat::subgroup_order(rep.t, st)),
                    rep.normal_flags[i] ? "yes" : "no");
    }
}

void print_counts(const zmlat::LatticeReport& rep) {
    std::cout << "normal count (eq1): " << rep.count_eq1 << "\n";
    if (rep.count_eq2)
        std::cout << "normal count (eq2, m prime): " << *rep.count_eq2 << "\n";
    if (rep.count_eq3)
        std::cout << "normal count (eq3, n prime): " << *rep.count_eq3 << "\n";
    std::cout << "chain: " << (rep.chain ? "true" : "false") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subgroup lattices of Zassenhaus metacyclic groups ZM(m,n,r)"};
    app.require_subcommand(1);

    zmlat::i64 m = 0, n = 0, r = 0;
    std::string format = "table";
    std::string lattice = "full";
    std::string out_path;
    zmlat::i64 max_order = 60;
    std::string check = "all";
    zmlat::i64 oracle_bound = zmlat::kDefaultOracleBound;

    auto add_triple_args = [&](CLI::App* cmd) {
        cmd->add_option("m", m, "order of <a>")->required();
        cmd->add_option("n", n, "order of <b>")->required();
        cmd->add_option("r", r, "conjugation exponent")->required();
    };

    auto* cmd_validate = app.add_subcommand("validate", "check the ZM triple conditions");
    add_triple_args(cmd_validate);

    auto* cmd_subgroups = app.add_subcommand("subgroups", "list the full subgroup lattice");
    add_triple_args(cmd_subgroups);
    cmd_subgroups->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    auto* cmd_normal = app.add_subcommand("normal", "list normal subgroups and counts");
    add_triple_args(cmd_normal);
    cmd_normal->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    auto* cmd_export = app.add_subcommand("export", "export a lattice as DOT or JSON");
    add_triple_args(cmd_export);
    std::string export_format = "dot";
    cmd_export->add_option("--lattice", lattice)->check(CLI::IsMember({"full", "normal"}));
    cmd_export->add_option("--format", export_format)->check(CLI::IsMember({"dot", "json"}));
    cmd_export->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_scan = app.add_subcommand("scan", "verify invariants over all triples");
    cmd_scan->add_option("--max-order", max_order, "largest group order mn")->required();
    cmd_scan->add_option("--check", check)->check(CLI::IsMember({"all", "counts", "chains"}));
    cmd_scan->add_option("--out", out_path, "CSV output file (default stdout)");
    cmd_scan->add_option("--oracle-bound", oracle_bound, "largest order the oracle accepts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (cmd_validate->parsed()) {
        try {
            const auto t = zmlat::validate_triple(m, n, r);
            std::cout << "valid: ZM(" << t.m << "," << t.n << "," << t.r << ")  order "
                      << t.order() << "  d=" << t.d << "\n";
            return 0;
        } catch (const zmlat::triple_error& e) {
            std::cout << "invalid: " << e.what() << "\n";
            return kExitInvalidTriple;
        }
    }

    if (cmd_subgroups->parsed() || cmd_normal->parsed()) {
        const auto t = validate_or_exit(m, n, r);
        const auto kind =
            cmd_normal->parsed() ? zmlat::LatticeKind::normal : zmlat::LatticeKind::full;
        const auto rep = zmlat::build_report(t, kind);
        if (format == "json") {
            std::cout << zmlat::to_json(rep);
        } else {
            print_table(rep);
            if (cmd_normal->parsed()) print_counts(rep);
        }
        return 0;
    }

    if (cmd_export->parsed()) {
        const auto t = validate_or_exit(m, n, r);
        const auto kind =
            lattice == "normal" ? zmlat::LatticeKind::normal : zmlat::LatticeKind::full;
        const auto rep = zmlat::build_report(t, kind);
        write_output(export_format == "json" ? zmlat::to_json(rep) : zmlat::to_dot(rep),
                     out_path);
        return 0;
    }

    if (cmd_scan->parsed()) {
        zmlat::CheckKind kind = zmlat::CheckKind::all;
        if (check == "counts") kind = zmlat::CheckKind::counts;
        if (check == "chains") kind = zmlat::CheckKind::chains;
        if (kind == zmlat::CheckKind::all && max_order > oracle_bound) {
            std::cerr << "scan --check all needs --max-order within the oracle bound ("
                      << oracle_bound << ")\n";
            return kExitUsage;
        }
        std::string csv = zmlat::scan_csv_header() + "\n";
        zmlat::i64 failures = 0;
        std::string first_failure;
        const auto triples = zmlat::valid_triples_up_to(max_order);
        for (const auto& t : triples) {
            const auto res = zmlat::check_triple(t, kind, oracle_bound);
            csv += zmlat::scan_csv_row(res) + "\n";
            if (!res.passed && failures++ == 0)
                first_failure = "ZM(" + std::to_string(t.m) + "," + std::to_string(t.n) +
                                "," + std::to_string(t.r) + "): " + res.failure;
        }
        write_output(csv, out_path);
        std::cerr << "scanned " << triples.size() << " triples (check=" << check
                  << "), failures: " << failures << "\n";
        if (failures > 0) {
            std::cerr << "first counterexample: " << first_failure << "\n";
            return kExitVerification;
        }
        return 0;
    }

    return kExitUsage;
}
