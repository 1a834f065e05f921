// Command-line driver: runs named check suites over exact doublings of group
// Hopf algebras and emits machine-readable reports.

#include "qsgd/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

struct Output {
    std::string out_path;
    bool timing = false;
};

int finish(const qsgd::Report& report, const Output& output) {
    if (!output.out_path.empty()) {
        std::ofstream os(output.out_path);
        if (!os) {
            std::cerr << "cannot open " << output.out_path << "\n";
            return 2;
        }
        os << report.to_json(output.timing).dump(2) << "\n";
    } else {
        std::cout << report.text();
    }
    return report.any_fail() ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checks for doubled group Hopf algebras and their towers"};
    app.require_subcommand(1);

    Output output;
    app.add_option("--out", output.out_path, "write the JSON report to this file")
        ->configurable(false);
    app.add_flag("--timing", output.timing, "include elapsed_ms in the JSON report");
    long long max_dim = 0;
    app.add_option("--max-dim", max_dim,
                   "raise the soft carrier-dimension guard (hard cap 1440)");

    std::string group, theta, parity = "odd", manifest_path, dump_path;
    int p = 3, stages = 3, l = 5, n = 4, max_n = 5;
    bool use_default_manifest = false;

    auto* axioms = app.add_subcommand("axioms", "Hopf axiom report for C[G] or a doubling");
    axioms->add_option("--group", group, "Z<l> or S<n>")->required();
    axioms->add_option("--double", theta, "double by this automorphism (inverse|flip|id)");

    auto* dbl = app.add_subcommand("double", "full verification of one doubling");
    dbl->add_option("--group", group, "Z<l> or S<n>")->required();
    dbl->add_option("--theta", theta, "inverse|flip|id")->required();

    auto* padic = app.add_subcommand("padic", "finite stages of the p-adic tower");
    padic->add_option("--p", p, "prime in {2,3,5,7}")->required();
    padic->add_option("--stages", stages, "number of stages, p^stages <= 400")->required();

    auto* finsym = app.add_subcommand("finsym", "cyclic quantum symmetry formula reproduction");
    finsym->add_option("--l", l, "cycle length >= 3")->required();

    auto* symtower = app.add_subcommand("symtower", "finite stages of a symmetric tower");
    symtower->add_option("--parity", parity, "odd|even")->required();
    symtower->add_option("--max-n", max_n, "largest stage, <= 6")->required();

    auto* nonex = app.add_subcommand("nonexistence", "binomial group-like scan at an even stage");
    nonex->add_option("--n", n, "even, 4 <= n <= 6")->required();

    auto* partitions = app.add_subcommand("partitions", "two-index partitions at a truncation");
    partitions->add_option("--n", n, "truncation, <= 3")->required();
    partitions->add_option("--dump", dump_path, "also write the partition blocks as JSON");

    auto* faithful = app.add_subcommand("faithful", "generated slice-algebra dimensions");
    faithful->add_option("--group", group, "Z<l> or S<n>")->required();
    faithful->add_option("--theta", theta, "inverse|flip|id")->required();

    auto* obstruction = app.add_subcommand("obstruction", "reflection fixed-point obstruction");
    obstruction->add_option("--n", n, "truncation >= 1")->required();

    auto* manifest = app.add_subcommand("manifest", "run a JSON manifest of suites");
    manifest->add_option("--file", manifest_path, "manifest JSON document");
    manifest->add_flag("--default", use_default_manifest, "run the built-in full manifest");

    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (max_dim > 0) setenv("QSGD_MAX_DIM", std::to_string(max_dim).c_str(), 1);

    try {
        qsgd::Report report;
        if (axioms->parsed()) report = qsgd::run_axioms_suite(group, theta);
        else if (dbl->parsed()) report = qsgd::run_double_suite(group, theta);
        else if (padic->parsed()) report = qsgd::run_padic_suite(p, stages);
        else if (finsym->parsed()) report = qsgd::run_finsym_suite(l);
        else if (symtower->parsed()) report = qsgd::run_symtower_suite(parity, max_n);
        else if (nonex->parsed()) report = qsgd::run_nonexistence_suite(n);
        else if (partitions->parsed()) {
            report = qsgd::run_partitions_suite(n);
            if (!dump_path.empty()) {
                nlohmann::json blocks;
                blocks["odd"] = qsgd::partition_json(qsgd::sinfty_partition(qsgd::GroundMode::Odd, n));
                blocks["even"] =
                    qsgd::partition_json(qsgd::sinfty_partition(qsgd::GroundMode::Even, n));
                std::ofstream os(dump_path);
                if (!os) {
                    std::cerr << "cannot open " << dump_path << "\n";
                    return 2;
                }
                os << blocks.dump(2) << "\n";
            }
        }
        else if (faithful->parsed()) report = qsgd::run_faithful_suite(group, theta);
        else if (obstruction->parsed()) report = qsgd::run_obstruction_suite(n);
        else if (manifest->parsed()) {
            nlohmann::json doc;
            if (use_default_manifest) {
                doc = qsgd::default_manifest();
            } else if (!manifest_path.empty()) {
                std::ifstream is(manifest_path);
                if (!is) {
                    std::cerr << "cannot open " << manifest_path << "\n";
                    return 2;
                }
                is >> doc;
            } else {
                std::cerr << "manifest: need --file or --default\n";
                return 2;
            }
            report = qsgd::run_manifest(doc);
        }
        return finish(report, output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
