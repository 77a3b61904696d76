#pragma once

#include "pspec/types.hpp"

namespace pspec {

// One-port Foster network: a top resistor (the g_inf element) plus one
// branch per pole. RC Foster-I branches are parallel R||C in a series chain;
// RL Foster-II branches are series R-L legs in parallel.
struct FosterNetwork {
    enum class Kind { RC_FosterI, RL_FosterII };

    Kind kind;
    double top_resistor = 0;  // series R (Foster-I) or shunt R (Foster-II)
    struct Branch {
        double resistance = 0;
        double storage = 0;  // capacitance (F) or inductance (H)
    };
    std::vector<Branch> branches;
};

PoleResidue pole_residue_from_rational(const RationalFunction& f);

RationalFunction rational_from_pole_residue(const PoleResidue& pr);

// Diagonal symmetric realization A = diag(p), B^T = (|g_k|^{1/2}),
// C = sign * B^T, D = g_inf.
Realization symmetric_from_pole_residue(const PoleResidue& pr);

FosterNetwork foster1_rc(const PoleResidue& pr);
FosterNetwork foster2_rl(const PoleResidue& pr);

// Two-terminal SPICE-like netlist between nodes "in" and "0".
std::string netlist(const FosterNetwork& net);

}  // namespace pspec
