#include "pspec/commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Spectral analysis and synthesis of strictly passive LTI systems"};
    app.require_subcommand(1);

    double tol = pspec::kDefaultTol;
    if (const char* env = std::getenv("PASSIVE_SPECTRA_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0) tol = v;
    }

    std::string path;
    std::string form = "pr";
    int foster_form = 1;
    int digits = 2;
    std::vector<double> etas;
    std::vector<double> bisect;
    std::string d0_path;
    std::string netlist_path;

    auto* analyze = app.add_subcommand("analyze", "Poles, zeros, spectral zeros, storage extremes");
    analyze->add_option("system", path, "system JSON file")->required();
    analyze->add_option("--tol", tol, "numerical tolerance");

    auto* balance = app.add_subcommand("balance", "Positive-real (quasi-)balanced realization");
    balance->add_option("system", path, "system JSON file")->required();
    balance->add_option("--form", form, "pr | quasi1 | quasi2")->capture_default_str();

    auto* interlace = app.add_subcommand("interlace", "Pole/zero/spectral-zero interlacing check");
    interlace->add_option("system", path, "system JSON file")->required();

    auto* scan = app.add_subcommand("scan-eta", "Interlacing onset scan over scaled feedthrough");
    scan->add_option("system", path, "system JSON file")->required();
    scan->add_option("--etas", etas, "explicit scale factors");
    scan->add_option("--bisect", bisect, "lo hi bracket for the onset")->expected(2);
    scan->add_option("--digits", digits, "table rounding digits")->capture_default_str();
    scan->add_option("--d0", d0_path, "JSON file holding the base feedthrough D0");

    auto* synth = app.add_subcommand("synth", "Foster canonical network synthesis");
    synth->add_option("system", path, "system JSON file")->required();
    synth->add_option("--foster", foster_form, "1 (RC) | 2 (RL)")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    synth->add_option("--netlist", netlist_path, "write a netlist to this file");

    auto* oracle = app.add_subcommand("oracle-check",
                                      "Polynomial spectral-zero oracle vs Hamiltonian");
    oracle->add_option("system", path, "system JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : pspec::kExitValidation;
    }

    if (analyze->parsed()) return pspec::cmd_analyze(path, tol, std::cout);
    if (balance->parsed()) return pspec::cmd_balance(path, form, std::cout);
    if (interlace->parsed()) return pspec::cmd_interlace(path, std::cout);
    if (scan->parsed()) {
        pspec::ScanOptions opts;
        opts.etas = etas;
        if (!bisect.empty()) opts.bisect = {bisect[0], bisect[1]};
        opts.digits = digits;
        if (!d0_path.empty()) opts.d0_path = d0_path;
        return pspec::cmd_scan_eta(path, opts, std::cout);
    }
    if (synth->parsed()) {
        std::optional<std::string> nl;
        if (!netlist_path.empty()) nl = netlist_path;
        return pspec::cmd_synth(path, foster_form, nl, std::cout);
    }
    return pspec::cmd_oracle(path, std::cout);
}
