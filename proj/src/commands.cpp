#include "pspec/commands.hpp"

#include "pspec/balancing.hpp"
#include "pspec/interlace.hpp"
#include "pspec/oracle.hpp"
#include "pspec/poly.hpp"
#include "pspec/synth.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace pspec {

using nlohmann::json;

namespace {

template <typename Fn>
int guarded(std::ostream& out, Fn&& fn) {
    try {
        return fn();
    } catch (const ValidationError& e) {
        out << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const NumericalError& e) {
        out << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

std::string fixed_digits(double v, int digits) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    std::string s = os.str();
    if (s == "-0." + std::string(digits, '0')) s.erase(0, 1);  // avoid "-0.00"
    return s;
}

std::string row_cells(const Vector& v, int digits) {
    std::string out;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out += fixed_digits(v(i), digits);
        if (i + 1 < v.size()) out += " | ";
    }
    return out;
}

}  // namespace

int cmd_analyze(const std::string& path, double tol, std::ostream& out) {
    return guarded(out, [&] {
        const SystemFile file = load_system_file(path);
        const Realization R = file.realize();

        json rep;
        rep["name"] = file.name;
        rep["n"] = R.n();
        rep["m"] = R.m();
        rep["poles"] = spectrum_to_json(general_eig(R.A));
        rep["zeros"] = spectrum_to_json(system_zeros(R));
        rep["spectral_zeros"] = spectrum_to_json(spectral_zeros(R));

        const SymmetryCertificate cert = validate_realization(R, tol);
        rep["symmetric"] = cert.is_symmetric;
        rep["symmetry_sign"] = cert.sign;
        rep["symmetry_defect"] = round12(cert.defect);

        const PassivityReport pass = is_strictly_passive(R);
        rep["strictly_passive"] = pass.strictly_passive;
        if (!pass.strictly_passive) rep["reason"] = pass.reason;

        if (pass.strictly_passive) {
            const StoragePair pair = extremal_solutions(R);
            rep["K_min"] = matrix_to_json(pair.K_min);
            rep["K_max"] = matrix_to_json(pair.K_max);
            rep["residuals"] = {round12(pair.residual_min), round12(pair.residual_max)};
            const double prod_defect =
                (pair.K_max * pair.K_min - Matrix::Identity(R.n(), R.n())).norm();
            rep["kmax_kmin_product_identity"] = prod_defect <= 1e-8 * pair.K_max.norm();
        }
        out << rep.dump(2) << "\n";
        return kExitOk;
    });
}

int cmd_balance(const std::string& path, const std::string& form, std::ostream& out) {
    return guarded(out, [&] {
        const SystemFile file = load_system_file(path);
        const Realization R = file.realize();

        BalancedRealization bal = [&] {
            if (form == "pr") return pr_balance(R);
            if (form == "quasi1") return quasi_balance_form1(R);
            if (form == "quasi2") return quasi_balance_form2(R);
            throw ValidationError("unknown form: " + form + " (expected pr|quasi1|quasi2)");
        }();

        json rep;
        rep["name"] = file.name;
        rep["form"] = form;
        rep["sigma"] = vector_to_json(bal.sigma);
        rep["A"] = matrix_to_json(bal.realization.A);
        rep["B"] = matrix_to_json(bal.realization.B);
        rep["C"] = matrix_to_json(bal.realization.C);
        rep["D"] = matrix_to_json(bal.realization.D);
        rep["T"] = matrix_to_json(bal.T);
        out << rep.dump(2) << "\n";
        return kExitOk;
    });
}

int cmd_interlace(const std::string& path, std::ostream& out) {
    return guarded(out, [&] {
        const SystemFile file = load_system_file(path);
        const Realization R = file.realize();
        const InterlacingReport rep = spectral_interlace_check(R);

        out << "index | zero | spectral | pole | sandwich | margin\n";
        for (Eigen::Index i = 0; i < rep.poles.values.size(); ++i) {
            out << i + 1 << " | " << fixed_digits(rep.zeros.values(i), 4) << " | "
                << fixed_digits(rep.stable_spectral.values(i), 4) << " | "
                << fixed_digits(rep.poles.values(i), 4) << " | "
                << (rep.sandwich[i] ? "yes" : "NO") << " | "
                << fixed_digits(rep.margins[i], 6) << "\n";
        }
        out << "orientation: "
            << (rep.orientation == ZipOrientation::ZerosBeforePoles ? "zeros-before-poles"
                : rep.orientation == ZipOrientation::PolesBeforeZeros ? "poles-before-zeros"
                                                                      : "none")
            << "\n";
        out << "zip: " << (rep.zip ? "yes" : "no") << "\n";
        out << "full chain (with spectral zeros): " << (rep.full_chain ? "yes" : "no")
            << "\n";
        return kExitOk;
    });
}

int cmd_scan_eta(const std::string& path, const ScanOptions& opts, std::ostream& out) {
    return guarded(out, [&] {
        const SystemFile file = load_system_file(path);
        const Realization R = file.realize();

        Matrix D0 = R.D;
        if (opts.d0_path) {
            std::ifstream in(*opts.d0_path);
            if (!in) throw ValidationError("cannot open " + *opts.d0_path);
            json j;
            try {
                in >> j;
            } catch (const json::parse_error& e) {
                throw ValidationError(std::string("malformed JSON: ") + e.what());
            }
            D0 = matrix_from_json(j.contains("D0") ? j["D0"] : j);
        }

        std::vector<double> etas = opts.etas;
        if (opts.bisect) {
            etas.push_back(opts.bisect->first);
            etas.push_back(opts.bisect->second);
        }
        if (etas.empty()) throw ValidationError("no eta values given");

        const EtaScanResult scan = eta_scan(R, D0, etas, true);

        out << "eta | quantity | values | remark\n";
        for (const auto& row : scan.rows) {
            out << row.eta << " | system-zeros | " << row_cells(row.zeros.values, opts.digits)
                << " | " << row.remark << "\n";
            out << row.eta << " | spectral-zeros | "
                << row_cells(row.stable_spectral.values, opts.digits) << " |\n";
            out << row.eta << " | system-poles | " << row_cells(row.poles.values, opts.digits)
                << " |\n";
        }
        if (scan.eta_star)
            out << "eta* = " << fixed_digits(*scan.eta_star, 4) << "\n";
        return kExitOk;
    });
}

int cmd_synth(const std::string& path, int foster_form,
              const std::optional<std::string>& netlist_path, std::ostream& out) {
    return guarded(out, [&] {
        const SystemFile file = load_system_file(path);

        PoleResidue pr = [&] {
            if (file.pole_residue) return *file.pole_residue;
            if (file.rational) return pole_residue_from_rational(*file.rational);
            throw ValidationError("synthesis needs a rational or pole-residue description");
        }();

        const FosterNetwork net = foster_form == 1 ? foster1_rc(pr) : foster2_rl(pr);
        const bool rc = net.kind == FosterNetwork::Kind::RC_FosterI;

        out << (rc ? "Foster-I RC impedance network\n" : "Foster-II RL admittance network\n");
        out << (rc ? "series" : "shunt") << " R0 = " << net.top_resistor << "\n";
        for (size_t k = 0; k < net.branches.size(); ++k) {
            out << "branch " << k + 1 << ": R = " << net.branches[k].resistance
                << (rc ? ", C = " : ", L = ") << net.branches[k].storage << "\n";
        }

        if (netlist_path) {
            std::ofstream nf(*netlist_path);
            if (!nf) throw ValidationError("cannot write " + *netlist_path);
            nf << netlist(net);
            out << "netlist written to " << *netlist_path << "\n";
        }
        return kExitOk;
    });
}

int cmd_oracle(const std::string& path, std::ostream& out) {
    return guarded(out, [&] {
        const SystemFile file = load_system_file(path);
        if (!file.is_siso())
            throw ValidationError("oracle-check is SISO only");

        RationalFunction f = [&] {
            if (file.rational) return *file.rational;
            if (file.pole_residue) return rational_from_pole_residue(*file.pole_residue);
            throw ValidationError("oracle-check needs a rational or pole-residue description");
        }();

        const EvenPolynomial szp = szp_polynomial(f);
        const Spectrum oracle_mu = szp_roots(szp);
        const Spectrum hamiltonian_mu = spectral_zeros(file.realize());

        double max_err = 0;
        for (size_t i = 0; i < oracle_mu.values.size(); ++i) {
            const double scale = std::max(1.0, std::abs(oracle_mu.values[i]));
            max_err = std::max(
                max_err, std::abs(oracle_mu.values[i] - hamiltonian_mu.values[i]) / scale);
        }

        json rep;
        rep["name"] = file.name;
        rep["szp_coefficients"] = vector_to_json(szp.coeffs);
        rep["szp_roots"] = spectrum_to_json(oracle_mu);
        rep["hamiltonian_spectral_zeros"] = spectrum_to_json(hamiltonian_mu);
        rep["max_relative_deviation"] = round12(max_err);
        rep["match"] = max_err <= 1e-6;

        try {
            const VietaReport v = vieta_checks(f);
            rep["vieta"] = {{"product_lhs", round12(v.product_lhs)},
                            {"product_rhs", round12(v.product_rhs)},
                            {"sum_sq_lhs", round12(v.sum_sq_lhs)},
                            {"sum_sq_rhs", round12(v.sum_sq_rhs)},
                            {"pass", v.pass}};
        } catch (const ValidationError&) {
            rep["vieta"] = nullptr;  // needs real negative poles/zeros
        }
        out << rep.dump(2) << "\n";
        return kExitOk;
    });
}

}  // namespace pspec
