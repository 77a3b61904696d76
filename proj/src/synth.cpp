#include "pspec/synth.hpp"

#include "pspec/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace pspec {

PoleResidue pole_residue_from_rational(const RationalFunction& f) {
    const auto n = f.degree();
    const double g_inf = f.num(0);  // den is monic

    const std::vector<Complex> proots = poly_roots(f.den);
    const double scale = 1.0;
    std::vector<double> poles;
    for (const auto& r : proots) {
        if (std::abs(r.imag()) > 1e-8 * std::max(scale, std::abs(r)))
            throw ValidationError("pole_residue_from_rational: nonreal poles");
        poles.push_back(r.real());
    }
    std::sort(poles.begin(), poles.end());
    for (size_t i = 0; i < poles.size(); ++i) {
        if (poles[i] >= 0)
            throw ValidationError("pole_residue_from_rational: nonnegative pole");
        if (i > 0 && poles[i] - poles[i - 1] <=
                         1e-8 * std::max(1.0, std::abs(poles[i])))
            throw ValidationError("pole_residue_from_rational: repeated poles");
    }

    // Strictly proper remainder r(s) = num - g_inf * den; g_k = r(p_k)/den'(p_k).
    const Vector rem = f.num - g_inf * f.den;
    const Vector dden = poly_derivative(f.den);
    Vector residues(n);
    for (Eigen::Index k = 0; k < n; ++k)
        residues(k) = poly_eval(rem, poles[k]) / poly_eval(dden, poles[k]);

    Vector pv = Eigen::Map<const Vector>(poles.data(), poles.size());
    return PoleResidue(g_inf, pv, residues);  // constructor enforces sign rules
}

RationalFunction rational_from_pole_residue(const PoleResidue& pr) {
    const auto n = pr.poles.size();
    Vector den(1);
    den << 1.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        Vector factor(2);
        factor << 1.0, -pr.poles(k);
        den = poly_mul(den, factor);
    }
    Vector num = pr.g_inf * den;
    for (Eigen::Index k = 0; k < n; ++k) {
        Vector term(1);
        term << pr.residues(k);
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j == k) continue;
            Vector factor(2);
            factor << 1.0, -pr.poles(j);
            term = poly_mul(term, factor);
        }
        Vector padded = Vector::Zero(num.size());
        padded.tail(term.size()) = term;
        num += padded;
    }
    return RationalFunction(num, den);
}

Realization symmetric_from_pole_residue(const PoleResidue& pr) {
    const auto n = pr.poles.size();
    Matrix A = pr.poles.asDiagonal();
    Matrix B(n, 1);
    for (Eigen::Index i = 0; i < n; ++i) B(i, 0) = std::sqrt(std::abs(pr.residues(i)));
    Matrix C = static_cast<double>(pr.sign) * B.transpose();
    Matrix D(1, 1);
    D << pr.g_inf;
    return Realization(A, B, C, D);
}

FosterNetwork foster1_rc(const PoleResidue& pr) {
    if (pr.sign < 0 && pr.poles.size() > 0)
        throw ValidationError("foster1_rc: residues must be positive (RC impedance)");
    FosterNetwork net;
    net.kind = FosterNetwork::Kind::RC_FosterI;
    net.top_resistor = pr.g_inf;
    for (Eigen::Index k = 0; k < pr.poles.size(); ++k) {
        // Branch impedance g_k / (s - p_k): C = 1/g_k, R = g_k / (-p_k).
        net.branches.push_back({pr.residues(k) / (-pr.poles(k)), 1.0 / pr.residues(k)});
    }
    return net;
}

FosterNetwork foster2_rl(const PoleResidue& pr) {
    if (pr.sign < 0 && pr.poles.size() > 0)
        throw ValidationError("foster2_rl: residues must be positive (RL admittance)");
    FosterNetwork net;
    net.kind = FosterNetwork::Kind::RL_FosterII;
    net.top_resistor = 1.0 / pr.g_inf;
    for (Eigen::Index k = 0; k < pr.poles.size(); ++k) {
        // Branch admittance g_k / (s - p_k): L = 1/g_k, R = -p_k / g_k.
        net.branches.push_back({-pr.poles(k) / pr.residues(k), 1.0 / pr.residues(k)});
    }
    return net;
}

std::string netlist(const FosterNetwork& net) {
    auto fmt = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.12g", v);
        return std::string(buf);
    };
    std::string out;
    const bool rc = net.kind == FosterNetwork::Kind::RC_FosterI;
    if (rc) {
        // Series chain: R0 then parallel R||C sections down to ground.
        std::string node = "in";
        std::string next = net.branches.empty() ? "0" : "n1";
        out += "R0 " + node + " " + next + " " + fmt(net.top_resistor) + "\n";
        for (size_t k = 0; k < net.branches.size(); ++k) {
            node = next;
            next = k + 1 == net.branches.size() ? "0" : "n" + std::to_string(k + 2);
            out += "R" + std::to_string(k + 1) + " " + node + " " + next + " " +
                   fmt(net.branches[k].resistance) + "\n";
            out += "C" + std::to_string(k + 1) + " " + node + " " + next + " " +
                   fmt(net.branches[k].storage) + "\n";
        }
    } else {
        // Parallel legs between "in" and ground; each leg R in series with L.
        out += "R0 in 0 " + fmt(net.top_resistor) + "\n";
        for (size_t k = 0; k < net.branches.size(); ++k) {
            const std::string mid = "n" + std::to_string(k + 1);
            out += "R" + std::to_string(k + 1) + " in " + mid + " " +
                   fmt(net.branches[k].resistance) + "\n";
            out += "L" + std::to_string(k + 1) + " " + mid + " 0 " +
                   fmt(net.branches[k].storage) + "\n";
        }
    }
    return out;
}

}  // namespace pspec
