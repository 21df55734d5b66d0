// Command-line front end: classify curvature data, verify the engine's
// identity claims, reproduce the classification table, solve Phi kernels.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "spinorss/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact 2-spinor semi-symmetry classifier"};
    app.require_subcommand(1);

    spinorss::ClassifyOptions classify_opts;
    auto* classify = app.add_subcommand("classify", "classify a curvature input file");
    classify->add_option("file", classify_opts.file, "input document")->required();
    classify->add_flag("--machine", classify_opts.machine, "machine-readable output");

    auto* verify = app.add_subcommand("verify-identities",
                                      "check the symbolic identity and rank claims");

    spinorss::TableOptions table_opts;
    std::string golden;
    auto* table = app.add_subcommand("table", "reproduce the classification table");
    table->add_option("--golden", golden, "compare against a golden grid file");
    table->add_flag("--machine", table_opts.machine, "machine-readable output");

    spinorss::KernelOptions kernel_opts;
    std::string petrov = "D";
    std::string which = "both";
    auto* kernel = app.add_subcommand("kernel", "solve the linear Phi conditions in a standard frame");
    kernel->add_option("--petrov", petrov, "Petrov type: I|II|III|D|N|O")->required();
    kernel->add_option("--which", which, "condition set: S1|mixed|both");
    kernel->add_flag("--machine", kernel_opts.machine, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    if (classify->parsed()) return spinorss::run_classify(classify_opts, std::cout, std::cerr);
    if (verify->parsed()) return spinorss::run_verify_identities(std::cout);
    if (table->parsed()) {
        if (!golden.empty()) table_opts.golden = golden;
        return spinorss::run_table(table_opts, std::cout, std::cerr);
    }
    if (kernel->parsed()) {
        auto t = spinorss::parse_petrov(petrov);
        if (!t) {
            std::cerr << "bad --petrov '" << petrov << "'\n";
            return 2;
        }
        kernel_opts.petrov = *t;
        if (which == "S1" || which == "s1") kernel_opts.which = spinorss::KernelWhich::S1;
        else if (which == "mixed") kernel_opts.which = spinorss::KernelWhich::Mixed5;
        else if (which == "both") kernel_opts.which = spinorss::KernelWhich::Both;
        else {
            std::cerr << "bad --which '" << which << "'\n";
            return 2;
        }
        return spinorss::run_kernel(kernel_opts, std::cout, std::cerr);
    }
    return 2;
}
