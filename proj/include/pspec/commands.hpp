#pragma once

#include "pspec/io.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace pspec {

// Exit codes shared by every subcommand.
constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct ScanOptions {
    std::vector<double> etas;                 // explicit scan points
    std::optional<std::pair<double, double>> bisect;  // lo, hi
    int digits = 2;
    std::optional<std::string> d0_path;       // JSON file with a "D0" matrix
};

int cmd_analyze(const std::string& path, double tol, std::ostream& out);
int cmd_balance(const std::string& path, const std::string& form, std::ostream& out);
int cmd_interlace(const std::string& path, std::ostream& out);
int cmd_scan_eta(const std::string& path, const ScanOptions& opts, std::ostream& out);
int cmd_synth(const std::string& path, int foster_form,
              const std::optional<std::string>& netlist_path, std::ostream& out);
int cmd_oracle(const std::string& path, std::ostream& out);

}  // namespace pspec
