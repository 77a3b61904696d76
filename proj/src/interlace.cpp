#include "pspec/interlace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pspec {

Realization inverse_system(const Realization& R) {
    Eigen::FullPivLU<Matrix> lu(R.D);
    if (!lu.isInvertible())
        throw NumericalError("inverse_system: D is singular");
    const Matrix Dinv = lu.inverse();
    return Realization(R.A - R.B * Dinv * R.C, R.B * Dinv, -Dinv * R.C, Dinv);
}

Spectrum system_zeros(const Realization& R) {
    Eigen::FullPivLU<Matrix> lu(R.D);
    if (!lu.isInvertible())
        throw NumericalError("system_zeros: D is singular");
    return general_eig(R.A - R.B * lu.inverse() * R.C);
}

namespace {

// Slack of the strict chain first(1) < second(1) < first(2) < ... Negative
// entries mark violations.
std::vector<double> chain_margins(const Vector& first, const Vector& second) {
    std::vector<double> margins;
    for (Eigen::Index i = 0; i < first.size(); ++i) {
        double slack = second(i) - first(i);
        if (i + 1 < first.size())
            slack = std::min(slack, first(i + 1) - second(i));
        margins.push_back(slack);
    }
    return margins;
}

bool all_positive(const std::vector<double>& xs) {
    return std::all_of(xs.begin(), xs.end(), [](double x) { return x > 0; });
}

}  // namespace

InterlacingReport zip_check(const OrderedReals& poles, const OrderedReals& zeros) {
    if (poles.values.size() != zeros.values.size())
        throw ValidationError("zip_check: pole/zero count mismatch");

    InterlacingReport rep;
    rep.poles = poles;
    rep.zeros = zeros;

    const auto zp = chain_margins(zeros.values, poles.values);  // z_i < p_i < z_{i+1}
    const auto pz = chain_margins(poles.values, zeros.values);  // p_i < z_i < p_{i+1}
    const double best_zp = *std::min_element(zp.begin(), zp.end());
    const double best_pz = *std::min_element(pz.begin(), pz.end());

    if (all_positive(zp)) {
        rep.orientation = ZipOrientation::ZerosBeforePoles;
        rep.margins = zp;
    } else if (all_positive(pz)) {
        rep.orientation = ZipOrientation::PolesBeforeZeros;
        rep.margins = pz;
    } else {
        rep.orientation = ZipOrientation::None;
        rep.margins = best_zp >= best_pz ? zp : pz;
    }
    rep.zip = rep.orientation != ZipOrientation::None;
    rep.strict = rep.zip;
    return rep;
}

InterlacingReport spectral_interlace_check(const Realization& R) {
    const SymmetryCertificate cert = validate_realization(R);
    if (!cert.is_symmetric)
        throw ValidationError("spectral_interlace_check: realization is not symmetric");

    const Spectrum mu = spectral_zeros(R);
    if (!mu.all_real())
        throw NumericalError(
            "nonreal spectral zeros on a symmetric realization: numerical anomaly");
    const Spectrum zs = system_zeros(R);
    if (!zs.all_real())
        throw NumericalError("nonreal system zeros on a symmetric realization");

    const OrderedReals poles =
        order_reals(Vector(sym_eig(0.5 * (R.A + R.A.transpose())).eigenvalues));
    Vector zvals(zs.values.size());
    for (size_t i = 0; i < zs.values.size(); ++i) zvals(i) = zs.values[i].real();
    const OrderedReals zeros = order_reals(zvals);
    const OrderedReals spec = order_reals(mu.stable_reals());

    InterlacingReport rep = zip_check(poles, zeros);
    rep.stable_spectral = spec;

    // Sandwich z_i <= mu_i <= p_i for B = C^T, reversed for B = -C^T.
    const Vector& lo = cert.sign > 0 ? zeros.values : poles.values;
    const Vector& hi = cert.sign > 0 ? poles.values : zeros.values;
    rep.sandwich.clear();
    std::vector<double> slack;
    for (Eigen::Index i = 0; i < spec.values.size(); ++i) {
        const double s = std::min(spec.values(i) - lo(i), hi(i) - spec.values(i));
        slack.push_back(s);
        rep.sandwich.push_back(s >= -1e-8 * std::max(1.0, std::abs(hi(i))));
    }
    rep.margins = slack;
    rep.strict = all_positive(slack);
    rep.full_chain = rep.zip && rep.strict;
    return rep;
}

ZipConditionReport zip_sufficient_condition(const Realization& R) {
    const SymmetryCertificate cert = validate_realization(R);
    if (!cert.is_symmetric)
        throw ValidationError("zip_sufficient_condition: realization is not symmetric");

    const EigenSym ea = sym_eig(0.5 * (R.A + R.A.transpose()));
    const OrderedReals poles = order_reals(ea.eigenvalues);
    const double pole_tol = 1e-8 * std::max(1.0, R.A.norm());
    if (poles.has_diffs && poles.nu_min < pole_tol)
        throw NumericalError("repeated system poles: the gap condition does not apply");

    Eigen::FullPivLU<Matrix> lu(R.D);
    if (!lu.isInvertible())
        throw NumericalError("zip_sufficient_condition: D is singular");
    const Matrix M = R.B * lu.inverse() * R.B.transpose();

    ZipConditionReport rep;
    rep.nu_min = poles.has_diffs ? poles.nu_min : 0.0;
    rep.lambda_max = sym_eig(0.5 * (M + M.transpose())).eigenvalues.maxCoeff();
    rep.condition = poles.has_diffs ? rep.nu_min > rep.lambda_max : true;
    rep.sign = cert.sign;

    // PBH controllability: B^T x != 0 for every eigenvector x of A.
    rep.pbh_margin = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < R.n(); ++i)
        rep.pbh_margin =
            std::min(rep.pbh_margin, (R.B.transpose() * ea.eigenvectors.col(i)).norm());
    rep.pbh_controllable = rep.pbh_margin > 1e-8 * std::max(1.0, R.B.norm());
    return rep;
}

EtaScanRow eta_scan_row(const Realization& R, const Matrix& D0, double eta) {
    if (!is_spd(D0)) throw ValidationError("eta_scan: D0 must be SPD");
    if (eta <= 0) throw ValidationError("eta_scan: eta must be positive");
    const Realization scaled(R.A, R.B, R.C, eta * D0);

    EtaScanRow row;
    row.eta = eta;
    row.poles = order_reals(Vector(sym_eig(0.5 * (R.A + R.A.transpose())).eigenvalues));
    const Spectrum zs = system_zeros(scaled);
    Vector zvals(zs.values.size());
    for (size_t i = 0; i < zs.values.size(); ++i) zvals(i) = zs.values[i].real();
    row.zeros = order_reals(zvals);
    row.stable_spectral = order_reals(spectral_zeros(scaled).stable_reals());

    const InterlacingReport zip = zip_check(row.poles, row.zeros);
    row.zip = zip.zip;
    const InterlacingReport full = spectral_interlace_check(scaled);
    row.full_interlace = full.full_chain;

    // "Verge": some pole coincides with some zero within band.
    const double scale = std::max(1.0, row.poles.values.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < row.poles.values.size() && !row.verge; ++i)
        for (Eigen::Index j = 0; j < row.zeros.values.size() && !row.verge; ++j)
            if (std::abs(row.poles.values(i) - row.zeros.values(j)) <= 1e-6 * scale)
                row.verge = true;

    row.remark = row.verge ? "verge-of interlaced"
                           : (row.zip ? "after interlaced" : "not interlaced");
    return row;
}

EtaScanResult eta_scan(const Realization& R, const Matrix& D0,
                       const std::vector<double>& etas, bool refine_threshold) {
    if (etas.empty()) throw ValidationError("eta_scan: empty eta list");
    const SymmetryCertificate cert = validate_realization(R);
    if (!cert.is_symmetric)
        throw ValidationError("eta_scan: realization is not symmetric");

    std::vector<double> sorted = etas;
    std::sort(sorted.begin(), sorted.end());

    EtaScanResult result;
    for (double eta : sorted) result.rows.push_back(eta_scan_row(R, D0, eta));

    // Smallest scanned eta with strict ZIP; bisect against the largest
    // failing eta below it when both are present.
    double lo = 0, hi = 0;
    bool have_lo = false, have_hi = false;
    for (const auto& row : result.rows) {
        if (row.zip && !row.verge) {
            hi = row.eta;
            have_hi = true;
            break;
        }
        lo = row.eta;
        have_lo = true;
    }
    if (have_hi) {
        if (have_lo && refine_threshold) {
            while ((hi - lo) / hi > 1e-3) {
                const double mid = 0.5 * (lo + hi);
                const EtaScanRow row = eta_scan_row(R, D0, mid);
                (row.zip && !row.verge ? hi : lo) = mid;
            }
        }
        result.eta_star = hi;
    }
    return result;
}

WeylReport weyl_interlace_bounds(const Matrix& P, const Matrix& M) {
    const EigenSym ep = sym_eig(P);
    const EigenSym em = sym_eig(M);
    const auto n = P.rows();
    if (em.eigenvalues.minCoeff() < -1e-10 * std::max(1.0, M.norm()))
        throw ValidationError("weyl_interlace_bounds: M must be positive semidefinite");
    const double rank_tol = 1e-10 * std::max(1.0, M.norm());
    if (em.eigenvalues.minCoeff() > rank_tol)
        throw ValidationError("weyl_interlace_bounds: M must be singular (rank < n)");
    const OrderedReals op = order_reals(ep.eigenvalues);
    if (op.has_diffs && op.nu_min <= 1e-12 * std::max(1.0, P.norm()))
        throw ValidationError("weyl_interlace_bounds: P must have distinct eigenvalues");

    WeylReport rep;
    rep.lambda_p = ep.eigenvalues;
    rep.lambda_pm = sym_eig(P + M).eigenvalues;
    rep.gap_condition =
        !op.has_diffs || em.eigenvalues.maxCoeff() <= op.nu_min;

    rep.interlaced = true;
    rep.strict = true;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double tol = 1e-10 * std::max(1.0, P.norm() + M.norm());
        if (rep.lambda_pm(i) < rep.lambda_p(i) - tol) rep.interlaced = false;
        if (i + 1 < n && rep.lambda_pm(i) > rep.lambda_p(i + 1) + tol)
            rep.interlaced = false;
        if (rep.lambda_pm(i) <= rep.lambda_p(i) + tol) rep.strict = false;
        if (i + 1 < n && rep.lambda_pm(i) >= rep.lambda_p(i + 1) - tol)
            rep.strict = false;
    }
    return rep;
}

}  // namespace pspec
